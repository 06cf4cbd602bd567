"""
The inversion-count distribution on words with prescribed letter multiplicities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import accumulate
from typing import Sequence

from .errors import InvalidArgument
from .qpoly import ExactPolynomial, q_multinomial


def elementary_symmetric(values: Sequence[int], k: int) -> int:
    """e_k of the values, via the coefficients of prod(1 + v x)."""
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += v * e[j - 1]
    return e[k]


@dataclass(frozen=True)
class Composition:
    """Letter multiplicities (a_1, ..., a_m), every a_j >= 1."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise InvalidArgument("a composition needs at least one part")
        for a in parts:
            if isinstance(a, bool) or int(a) != a or a < 1:
                raise InvalidArgument(f"parts must be positive integers, got {parts}")
        object.__setattr__(self, "parts", tuple(int(a) for a in parts))

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def N(self) -> int:
        return sum(self.parts)

    e1 = N

    @property
    def amax(self) -> int:
        return max(self.parts)

    @property
    def abar(self) -> int:
        """N minus the largest multiplicity."""
        return self.N - self.amax

    @property
    def e2(self) -> int:
        return elementary_symmetric(self.parts, 2)

    @property
    def e3(self) -> int:
        return elementary_symmetric(self.parts, 3)

    def multinomial(self) -> int:
        total, n = 1, 0
        for a in self.parts:
            n += a
            total *= math.comb(n, a)
        return total


def canonicalize(parts: Sequence[int]) -> Composition:
    """Drop zero parts and sort decreasingly; the distribution is unchanged by either."""
    kept = sorted((int(a) for a in parts if a != 0), reverse=True)
    return Composition(tuple(kept))


def _as_composition(parts) -> Composition:
    if isinstance(parts, Composition):
        return parts
    return Composition(tuple(parts))


@dataclass(frozen=True)
class MahonianDistribution:
    comp: Composition
    coeffs: ExactPolynomial = field(repr=False)
    total: int
    mu: Fraction
    sigma2: Fraction

    @property
    def support_max(self) -> int:
        return self.coeffs.degree

    @cached_property
    def _cumulative(self) -> tuple[int, ...]:
        return tuple(accumulate(self.coeffs.coeffs))

    def count(self, k: int) -> int:
        return self.coeffs[k]

    def pmf(self, k: int) -> Fraction:
        return Fraction(self.coeffs[k], self.total)

    def cdf(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k >= self.support_max:
            return Fraction(1)
        return Fraction(self._cumulative[k], self.total)

    def pmf_float(self, k: int) -> float:
        return self.coeffs[k] / self.total

    def cdf_float(self, k: int) -> float:
        if k < 0:
            return 0.0
        if k >= self.support_max:
            return 1.0
        return self._cumulative[k] / self.total

    def pmf_vector(self) -> list[float]:
        """Probabilities c_k / total for k = 0..e2, each correctly rounded."""
        return [c / self.total for c in self.coeffs.coeffs]

    def cdf_vector(self) -> list[float]:
        return [c / self.total for c in self._cumulative]


def mean_closed_form(comp: Composition) -> Fraction:
    return Fraction(comp.e2, 2)


def variance_closed_form(comp: Composition) -> Fraction:
    return Fraction((comp.e1 + 1) * comp.e2 - comp.e3, 12)


def build(parts) -> MahonianDistribution:
    comp = _as_composition(parts)
    coeffs = q_multinomial(comp.parts)
    if not coeffs.is_nonnegative():
        raise ArithmeticError(f"negative count in q-multinomial for {comp.parts}")
    total = comp.multinomial()
    return MahonianDistribution(
        comp=comp,
        coeffs=coeffs,
        total=total,
        mu=mean_closed_form(comp),
        sigma2=variance_closed_form(comp),
    )


def pmf(d: MahonianDistribution, k: int) -> Fraction:
    return d.pmf(k)


def cdf(d: MahonianDistribution, k: int) -> Fraction:
    return d.cdf(k)


def netto_coeffs(n: int) -> ExactPolynomial:
    """Inversion counts of the permutations of n letters, prod_{i<=n} [i]_q."""
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    return q_multinomial((1,) * n)


def sigma_bounds(comp) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds N^2*abar/36 and (N+1)*N*abar/12 on the variance."""
    comp = _as_composition(comp)
    n, abar = comp.N, comp.abar
    return Fraction(n * n * abar, 36), Fraction((n + 1) * n * abar, 12)


def is_unimodal(seq: Sequence[int]) -> bool:
    i, n = 0, len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i >= n - 1
