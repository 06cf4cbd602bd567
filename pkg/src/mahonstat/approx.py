"""
Normal and Edgeworth approximations to the inversion-count distribution,
together with the error diagnostics built on them: local-limit and
Kolmogorov distances, log-concavity of the coefficients, and the
Irwin-Hall limit when all but one letter class stays bounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from numpy.polynomial import hermite_e

from .errors import DegenerateDistribution, InvalidArgument
from .mahonian import Composition, MahonianDistribution, build
from .moments import exact_central_moments
from .qpoly import _horner_unit_circle

FLOOR_TOL = 1e-12


def _check_spread(d: MahonianDistribution) -> None:
    if d.sigma2 == 0:
        raise DegenerateDistribution(
            f"composition {d.comp.parts} has zero variance; no normal approximation")


def normal_cdf(x):
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def gaussian_pmf(d: MahonianDistribution, k):
    """Normal density with the distribution's mean and variance, at k (scalar or array)."""
    _check_spread(d)
    mu, sigma = float(d.mu), math.sqrt(d.sigma2)
    x = (np.asarray(k, dtype=float) - mu) / sigma
    out = np.exp(-0.5 * x * x) / (math.sqrt(2 * math.pi) * sigma)
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class EdgeworthTerms:
    sigma2: Fraction
    kappa4: Fraction
    kappa6: Fraction


def edgeworth_terms(d: MahonianDistribution) -> EdgeworthTerms:
    """Exact fourth and sixth cumulants; odd cumulants vanish by symmetry."""
    _check_spread(d)
    mu = exact_central_moments(d, 6)
    s2 = mu[2]
    k4 = mu[4] - 3 * s2 ** 2
    k6 = mu[6] - 15 * mu[4] * s2 + 30 * s2 ** 3
    return EdgeworthTerms(sigma2=s2, kappa4=k4, kappa6=k6)


def edgeworth_pmf(d: MahonianDistribution, k, terms: Optional[EdgeworthTerms] = None):
    """Symmetric Edgeworth density through the sixth cumulant and kappa4**2.

    phi(x)/sigma * (1 + k4/(24 s^4) He4 + k6/(720 s^6) He6 + k4^2/(1152 s^8) He8)
    """
    if terms is None:
        terms = edgeworth_terms(d)
    s2 = terms.sigma2
    sigma = math.sqrt(s2)
    c4 = float(terms.kappa4 / (24 * s2 ** 2))
    c6 = float(terms.kappa6 / (720 * s2 ** 3))
    c8 = float(terms.kappa4 ** 2 / (1152 * s2 ** 4))
    x = (np.asarray(k, dtype=float) - float(d.mu)) / sigma
    series = hermite_e.hermeval(x, [1, 0, 0, 0, c4, 0, c6, 0, c8])
    out = np.exp(-0.5 * x * x) / (math.sqrt(2 * math.pi) * sigma) * series
    return float(out) if np.ndim(out) == 0 else out


@dataclass
class ApproxReport:
    comp: Composition
    sup_abs_error: float
    scaled_llt_error: float
    kolmogorov: float
    per_k: Optional[list[tuple[int, float, float]]] = None


def _floor(x: float) -> float:
    return 0.0 if x < FLOOR_TOL else x


def kolmogorov_distance(d: MahonianDistribution, continuity: bool = False) -> float:
    """max_k |P(X <= k) - Phi((k - mu)/sigma)| over the support.

    ``continuity=True`` shifts the normal argument to k + 1/2.
    """
    _check_spread(d)
    mu, sigma = float(d.mu), math.sqrt(d.sigma2)
    shift = 0.5 if continuity else 0.0
    cdf = d.cdf_vector()
    worst = max(abs(c - normal_cdf((k + shift - mu) / sigma)) for k, c in enumerate(cdf))
    return _floor(worst)


def local_limit_report(d: MahonianDistribution, per_k: bool = False,
                       continuity: bool = False) -> ApproxReport:
    _check_spread(d)
    ks = np.arange(d.support_max + 1)
    exact = np.array(d.pmf_vector())
    approx = gaussian_pmf(d, ks)
    sup = _floor(float(np.max(np.abs(exact - approx))))
    sigma = math.sqrt(d.sigma2)
    table = None
    if per_k:
        table = [(int(k), float(e), float(g)) for k, e, g in zip(ks, exact, approx)]
    return ApproxReport(
        comp=d.comp,
        sup_abs_error=sup,
        scaled_llt_error=math.sqrt(2 * math.pi) * sigma * d.comp.abar * sup,
        kolmogorov=kolmogorov_distance(d, continuity=continuity),
        per_k=table,
    )


def sup_error_window(d: MahonianDistribution, width: float = 3.0) -> tuple[float, float]:
    """Sup error of the normal and Edgeworth densities over |k - mu| <= width*sigma."""
    mu, sigma = float(d.mu), math.sqrt(d.sigma2)
    lo = max(0, math.ceil(mu - width * sigma))
    hi = min(d.support_max, math.floor(mu + width * sigma))
    ks = np.arange(lo, hi + 1)
    exact = np.array([d.pmf_float(int(k)) for k in ks])
    g = np.max(np.abs(exact - gaussian_pmf(d, ks)))
    e = np.max(np.abs(exact - edgeworth_pmf(d, ks)))
    return _floor(float(g)), _floor(float(e))


@dataclass(frozen=True)
class LogConcavityRecord:
    """Gap c_j^2 - c_{j-1} c_{j+1}; ``n`` is set only for square compositions (n, n)."""

    n: Optional[int]
    j: int
    delta: int


def logconcavity_scan(d: MahonianDistribution, jlo: int, jhi: int) -> list[LogConcavityRecord]:
    """c_j^2 - c_{j-1} c_{j+1} for jlo <= j <= jhi, as exact integers."""
    if not 1 <= jlo <= jhi <= d.support_max - 1:
        raise InvalidArgument(
            f"need 1 <= jlo <= jhi <= {d.support_max - 1}, got ({jlo}, {jhi})")
    c = d.coeffs
    parts = d.comp.parts
    n = parts[0] if len(parts) == 2 and parts[0] == parts[1] else None
    return [LogConcavityRecord(n=n, j=j, delta=c[j] ** 2 - c[j - 1] * c[j + 1])
            for j in range(jlo, jhi + 1)]


def paper_table(nmax: int) -> list[LogConcavityRecord]:
    """One record per even n <= nmax: the composition (n, n) at j = n^2/2 - 1."""
    if nmax < 2 or nmax % 2:
        raise InvalidArgument(f"nmax must be an even integer >= 2, got {nmax}")
    rows = []
    for n in range(2, nmax + 1, 2):
        j = n * n // 2 - 1
        rows.extend(logconcavity_scan(build((n, n)), j, j))
    return rows


def logconcavity_asymptotic(n: int) -> float:
    """Leading-order size of the central log-concavity gap for (n, n)."""
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    return 18 / math.pi ** 2 * n ** -7 * 2.0 ** (4 * n)


def irwin_hall_cdf(x, n: int) -> Fraction:
    """CDF of a sum of n independent Uniform[0, 1] variables, exact for rational x."""
    x = Fraction(x)
    if x <= 0:
        return Fraction(0)
    if x >= n:
        return Fraction(1)
    s = sum((-1) ** j * math.comb(n, j) * (x - j) ** n for j in range(math.floor(x) + 1))
    return min(max(s / math.factorial(n), Fraction(0)), Fraction(1))


def irwin_hall_compare(d: MahonianDistribution, half_step: bool = False) -> float:
    """sup_k |P(X <= k) - IH((k+1)/amax; abar)|.

    The comparison point is (k + 1/2)/amax with ``half_step``.
    """
    amax, abar = d.comp.amax, d.comp.abar
    if abar == 0:
        raise DegenerateDistribution("a single letter class has no Irwin-Hall limit")
    offset = Fraction(1, 2) if half_step else 1
    worst = Fraction(0)
    for k in range(d.support_max + 1):
        gap = abs(d.cdf(k) - irwin_hall_cdf((k + offset) / amax, abar))
        worst = max(worst, gap)
    return float(worst)


def characteristic_modulus(d: MahonianDistribution, theta: float) -> float:
    """|F(e^{i theta})| / total, i.e. the modulus of the characteristic function."""
    return abs(_horner_unit_circle(d.pmf_vector(), theta))
