"""
Property suites run by ``mahonstat verify``.

Each check returns a ``Check`` with a pass flag and a one-line detail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .approx import (irwin_hall_compare, local_limit_report, logconcavity_asymptotic,
                     logconcavity_scan, paper_table)
from .mahonian import Composition, build, is_unimodal, sigma_bounds
from .moments import (alpha_asymptotic, binomial_moments_recurrence, central_from_binomial,
                      exact_binomial_moments, exact_central_moments, p_series,
                      standardized_moment)
from .oracle import enumerate_inversions, partitions_in_box
from .qpoly import gaussian_binomial, q_multinomial

# central log-concavity gaps c_j^2 - c_{j-1} c_{j+1} at j = n^2/2 - 1 for (n, n)
PAPER_TABLE = {
    2: -1,
    4: -7,
    6: -165,
    8: -1529,
    10: 44160,
    12: 7715737,
    14: 905559058,
    16: 101507214165,
    18: 11955335854893,
    20: 1501943866215277,
}


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All ordered compositions of n into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def all_compositions(nmax: int) -> Iterator[tuple[int, ...]]:
    for n in range(1, nmax + 1):
        yield from compositions(n)


def check_oracle_multinomial(nmax: int = 10) -> Check:
    bad = [c for c in all_compositions(nmax) if q_multinomial(c) != enumerate_inversions(c)]
    count = 2 ** nmax - 1
    return Check(f"q-multinomial == word enumeration, N <= {nmax}", not bad,
                 f"{count} compositions" if not bad else f"first mismatch {bad[0]}")


def check_oracle_box(amax: int = 25) -> Check:
    bad = [(a, b) for a in range(amax + 1) for b in range(amax + 1)
           if gaussian_binomial(a, b) != partitions_in_box(a, b)]
    return Check(f"q-binomial == partitions in a box, a, b <= {amax}", not bad,
                 f"first mismatch {bad[0]}" if bad else "")


def check_closed_forms(nmax: int = 10) -> Check:
    for c in all_compositions(nmax):
        d = build(c)
        mu = exact_central_moments(d, 2)
        mean = sum(k * v for k, v in enumerate(d.coeffs)) / Fraction(d.total)
        if mean != d.mu or mu[2] != d.sigma2 or mu[1] != 0:
            return Check(f"closed-form mean and variance, N <= {nmax}", False, f"{c}")
    return Check(f"closed-form mean and variance, N <= {nmax}", True)


def check_permutation_variance(nmax: int = 8) -> Check:
    for n in range(1, nmax + 1):
        d = build((1,) * n)
        if d.mu != Fraction(n * (n - 1), 4) or exact_central_moments(d, 2)[2] != Fraction(
                n * (n - 1) * (2 * n + 5), 72):
            return Check("permutation mean/variance", False, f"n={n}")
    return Check(f"permutation mean n(n-1)/4, variance n(n-1)(2n+5)/72, n <= {nmax}", True)


def check_recurrence(total: int = 10, order: int = 8) -> Check:
    name = f"binomial-moment recurrence == direct, a+b <= {total}, R <= {order}"
    for a in range(1, total):
        for b in range(1, total - a + 1):
            d = build((a, b))
            rec = binomial_moments_recurrence(a, b, order)
            if rec != exact_binomial_moments(d, order):
                return Check(name, False, f"binomial ({a},{b})")
            if central_from_binomial(rec) != exact_central_moments(d, order):
                return Check(name, False, f"central ({a},{b})")
    return Check(name, True)


def check_p_series(amax: int = 6) -> Check:
    for a in range(1, amax + 1):
        for b in range(1, amax + 1):
            p = p_series(a, b, 3)
            want = Fraction((2 * a + b) * b, 24)
            if p[0] != 1 or p[1] != 0 or p[2] != want or p[3] != -want:
                return Check("series coefficients p2, p3", False, f"({a},{b})")
    return Check(f"p2 = (2a+b)b/24, p3 = -p2, a, b <= {amax}", True)


def check_alpha_decay() -> Check:
    err = {t: abs(float(standardized_moment(build((t, t)), 2)) - alpha_asymptotic(2, 1, 1, t))
           for t in (100, 200)}
    ratio = err[100] / err[200]
    return Check("alpha_4 remainder ratio err(100)/err(200) in [3, 5]", 3.0 <= ratio <= 5.0,
                 f"ratio={ratio:.6g}")


def check_table(nmax: int = 20) -> Check:
    rows = paper_table(nmax)
    bad = [r.n for r in rows if PAPER_TABLE.get(r.n) != r.delta]
    return Check(f"log-concavity table n <= {nmax}", not bad,
                 f"mismatch at n={bad}" if bad else f"{len(rows)} rows")


def check_asymptotic_constant(n: int = 20) -> Check:
    ratio = logconcavity_asymptotic(n) / PAPER_TABLE[n]
    return Check(f"asymptotic gap within factor 1.5 at n={n}", 1 / 1.5 <= ratio <= 1.5,
                 f"ratio={ratio:.6g}")


def check_sigma_bounds(nmax: int = 12, nn: int = 50) -> Check:
    comps = list(all_compositions(nmax)) + [(n, n) for n in range(1, nn + 1)]
    for c in comps:
        comp = Composition(c)
        lo, hi = sigma_bounds(comp)
        s2 = build(c).sigma2
        if not lo <= s2 <= hi <= Fraction(comp.N ** 2 * comp.abar, 6):
            return Check("variance bounds", False, f"{c}")
    return Check(f"N^2 abar/36 <= sigma^2 <= (N+1)N abar/12 <= N^2 abar/6, N <= {nmax}", True)


def check_unimodal(nmax: int = 12, nn: int = 30) -> Check:
    comps = list(all_compositions(nmax)) + [(n, n) for n in range(1, nn + 1)]
    bad = [c for c in comps if not is_unimodal(q_multinomial(c).coeffs)]
    return Check(f"unimodal coefficients, N <= {nmax} and (n, n) n <= {nn}", not bad,
                 f"{bad[:3]}" if bad else "")


def check_clt(ns=(10, 20, 40), gate: float = 0.05) -> Check:
    ks = [local_limit_report(build((n, n))).kolmogorov for n in ns]
    ok = all(x > y for x, y in zip(ks, ks[1:])) and ks[-1] < gate
    return Check("Kolmogorov distance decreasing along (n, n)", ok,
                 ", ".join(f"n={n}: {k:.4g}" for n, k in zip(ns, ks)))


def check_llt(ns=(10, 20, 40)) -> Check:
    vals = [local_limit_report(build((n, n))).scaled_llt_error for n in ns]
    ratio = max(vals) / min(vals)
    return Check("scaled local-limit error varies by < 3x", ratio < 3,
                 ", ".join(f"n={n}: {v:.4g}" for n, v in zip(ns, vals)))


def check_central_logconcavity(ns=range(12, 21, 2)) -> Check:
    for n in ns:
        d = build((n, n))
        sigma = math.sqrt(d.sigma2)
        lo, hi = math.ceil(d.mu - sigma), math.floor(d.mu + sigma)
        if any(r.delta <= 0 for r in logconcavity_scan(d, lo, hi)):
            return Check("central log-concavity", False, f"n={n}")
    return Check("log-concave for |j - mu| <= sigma, (n, n) n = 12..20", True)


def check_irwin_hall() -> Check:
    uniform = irwin_hall_compare(build((200, 1)))
    two = irwin_hall_compare(build((200, 1, 1)))
    ok = uniform <= 1 / 200 + 1e-12 and two <= 0.05
    return Check("Irwin-Hall regime (200,1) and (200,1,1)", ok,
                 f"{uniform:.4g}, {two:.4g}")


SUITES: dict[str, list[Callable[[], Check]]] = {
    "oracle": [check_oracle_multinomial, check_oracle_box],
    "moments": [check_closed_forms, check_permutation_variance, check_p_series,
                check_recurrence],
    "table": [check_table],
}
SUITES["all"] = SUITES["oracle"] + SUITES["moments"] + SUITES["table"] + [
    check_alpha_decay, check_sigma_bounds, check_unimodal, check_clt, check_llt,
    check_central_logconcavity, check_asymptotic_constant, check_irwin_hall,
]


def run(scope: str) -> list[Check]:
    return [f() for f in SUITES[scope]]
