"""
Exact moments of the inversion count about its mean.

Two independent routes are provided.  The direct route sums powers of
(k - mu) against the coefficient vector.  The recurrence route, for two
letter classes (a, b), builds the binomial moments A_r = E[C(X - mu, r)] by
adding one copy of the first letter at a time: the shifted generating
function picks up the factor

    P(a, b, z) = a (1 - (1+z)^(a+b)) / ((1+z)^(b/2) (a+b) (1 - (1+z)^a))

at every step, so A_r(a, b) = sum_{s=0..r} A_{r-s}(a-1, b) p_s(a, b) where
p_s are the Taylor coefficients of P.  Central moments follow from binomial
moments through Stirling numbers of the second kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidArgument
from .mahonian import Composition, MahonianDistribution


def generalized_binomial(x: Fraction | int, r: int) -> Fraction:
    """C(x, r) = x (x-1) ... (x-r+1) / r! for rational x."""
    out = Fraction(1)
    for i in range(r):
        out *= Fraction(x) - i
    return out / math.factorial(r)


@dataclass(frozen=True)
class RationalSeries:
    """Power series in z truncated after z**order."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order) + 1
        a, b = self.coeffs, other.coeffs
        return RationalSeries(tuple(
            sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n)))

    def reciprocal(self) -> "RationalSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv = [1 / a[0]]
        for k in range(1, len(a)):
            s = sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0))
            inv.append(-s / a[0])
        return RationalSeries(tuple(inv))

    def __truediv__(self, other: "RationalSeries") -> "RationalSeries":
        return self * other.reciprocal()

    def scale(self, c) -> "RationalSeries":
        return RationalSeries(tuple(c * x for x in self.coeffs))


def binomial_power_series(exponent: Fraction | int, order: int) -> RationalSeries:
    """(1+z)^exponent, for any rational exponent."""
    return RationalSeries(tuple(generalized_binomial(exponent, k) for k in range(order + 1)))


@lru_cache(maxsize=None)
def p_series(a: int, b: int, smax: int) -> RationalSeries:
    """Taylor coefficients p_0..p_smax of the one-step ratio P(a, b, z)."""
    if a < 1 or b < 1:
        raise InvalidArgument(f"a and b must be positive, got ({a}, {b})")
    if smax < 1:
        raise InvalidArgument(f"smax must be at least 1, got {smax}")
    # (1 - (1+z)^n) / z = -sum_{k>=0} C(n, k+1) z^k
    top = RationalSeries(tuple(Fraction(-math.comb(a + b, k + 1)) for k in range(smax + 1)))
    bottom = RationalSeries(tuple(Fraction(-math.comb(a, k + 1)) for k in range(smax + 1)))
    half_power = binomial_power_series(Fraction(-b, 2), smax)
    return (top / bottom * half_power).scale(Fraction(a, a + b))


def binomial_moments_recurrence(a: int, b: int, R: int) -> tuple[Fraction, ...]:
    """A_0..A_R for the two-letter composition (a, b), built up from (0, b)."""
    if a < 1 or b < 1:
        raise InvalidArgument(f"a and b must be positive, got ({a}, {b})")
    if R < 1:
        raise InvalidArgument(f"R must be positive, got {R}")
    A = [Fraction(1)] + [Fraction(0)] * R
    for step in range(1, a + 1):
        p = p_series(step, b, R).coeffs
        A = [sum((A[r - s] * p[s] for s in range(r + 1)), Fraction(0)) for r in range(R + 1)]
    return tuple(A)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def central_from_binomial(binomial: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """mu_n = sum_k S(n, k) k! A_k, from x^n = sum_k S(n, k) (x)_k."""
    return tuple(
        sum((stirling2(n, k) * math.factorial(k) * Fraction(binomial[k]) for k in range(n + 1)),
            Fraction(0))
        for n in range(len(binomial)))


def exact_central_moments(d: MahonianDistribution, R: int) -> tuple[Fraction, ...]:
    """mu_0..mu_R straight from the coefficient vector.

    Works with 2(k - mu) = 2k - e2 so that every partial sum is an integer.
    """
    e2 = d.support_max
    dev = [2 * k - e2 for k in range(e2 + 1)]
    coeffs = d.coeffs.coeffs
    out = []
    weights = list(coeffs)
    for r in range(R + 1):
        out.append(Fraction(sum(weights), d.total * 2 ** r))
        weights = [w * x for w, x in zip(weights, dev)]
    return tuple(out)


def exact_binomial_moments(d: MahonianDistribution, R: int) -> tuple[Fraction, ...]:
    """A_r = sum_k pmf(k) C(k - mu, r), again straight from the coefficients."""
    out = [Fraction(0)] * (R + 1)
    for k, c in enumerate(d.coeffs.coeffs):
        if not c:
            continue
        x = k - d.mu
        term = Fraction(c)
        for r in range(R + 1):
            out[r] += term
            term = term * (x - r) / (r + 1)
    return tuple(v / d.total for v in out)


@dataclass(frozen=True)
class MomentTable:
    comp: Composition
    order: int
    binomial: tuple[Fraction, ...]
    central: tuple[Fraction, ...]

    @property
    def variance(self) -> Fraction:
        return self.central[2]


def moment_table(d: MahonianDistribution, R: int, method: str = "exact") -> MomentTable:
    """Binomial and central moments up to order R.

    ``method="recurrence"`` is only defined for two letter classes.
    """
    if R < 1:
        raise InvalidArgument(f"order must be positive, got {R}")
    if method == "exact":
        binomial = exact_binomial_moments(d, R)
        central = exact_central_moments(d, R)
    elif method == "recurrence":
        if d.comp.m != 2:
            raise InvalidArgument(
                f"the recurrence needs exactly two letter classes, got {d.comp.parts}")
        a, b = d.comp.parts
        binomial = binomial_moments_recurrence(a, b, R)
        central = central_from_binomial(binomial)
    else:
        raise InvalidArgument(f"unknown method {method!r}")
    return MomentTable(comp=d.comp, order=R, binomial=binomial, central=central)


def standardized_moment(d: MahonianDistribution, r: int) -> Fraction:
    """alpha_{2r} = mu_{2r} / mu_2^r."""
    mu = exact_central_moments(d, 2 * r)
    return mu[2 * r] / mu[2] ** r


def alpha_asymptotic(r: int, a: int, b: int, t: int) -> float:
    """Two-term large-t expansion of alpha_{2r} for the composition (a t, b t)."""
    if r < 1:
        raise InvalidArgument(f"r must be positive, got {r}")
    gaussian = math.factorial(2 * r) / (2 ** r * math.factorial(r))
    correction = r * (r - 1) * (b * b + a * b + a * a) / (5 * a * b * (a + b))
    return gaussian * (1 - correction / t)
