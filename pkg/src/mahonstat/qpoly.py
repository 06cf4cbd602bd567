"""
Dense polynomials in q with arbitrary-precision integer coefficients.

Only what the q-binomial / q-multinomial construction needs: convolution,
multiplication and exact division by (1 - q^k), and floating evaluation on
the unit circle.  Coefficients are plain Python ints, stored low degree first.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import accumulate, repeat
from operator import add, mul as _imul, sub
from typing import Iterable, Sequence

from .errors import InvalidArgument, NotDivisible


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True, eq=True)
class ExactPolynomial:
    """Polynomial sum_i coeffs[i] * q**i, kept in trimmed form.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    @classmethod
    def one(cls) -> "ExactPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return mul(self, other)

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        a[: len(b)] = map(add, a[: len(b)], b)
        return ExactPolynomial(a)

    def __repr__(self) -> str:
        if len(self.coeffs) > 12:
            head = ", ".join(map(str, self.coeffs[:6]))
            return f"ExactPolynomial([{head}, ...], degree={self.degree})"
        return f"ExactPolynomial({list(self.coeffs)})"

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)


def _convolve(p: Sequence[int], r: Sequence[int]) -> list[int]:
    if not p or not r:
        return []
    if len(p) > len(r):
        p, r = r, p
    m = len(r)
    out = [0] * (len(p) + m - 1)
    for i, c in enumerate(p):
        if c:
            out[i:i + m] = map(add, out[i:i + m], map(_imul, repeat(c), r))
    return out


def _mul_one_minus_qk(c: list[int], k: int) -> list[int]:
    # (1 - q^k) * c, length grows by k
    out = c + [0] * k
    out[k:] = map(sub, out[k:], c)
    return out


def _div_one_minus_qk(c: list[int], k: int) -> list[int]:
    # quotient by (1 - q^k): r_i = c_i + r_{i-k}, then the top k terms must vanish
    out = list(c)
    for start in range(min(k, len(c))):
        out[start::k] = accumulate(c[start::k])
    if any(out[len(out) - k:]) if len(out) >= k else any(out):
        raise NotDivisible(f"polynomial is not divisible by 1 - q^{k}")
    return out[: max(len(out) - k, 0)]


def mul(p: ExactPolynomial, r: ExactPolynomial) -> ExactPolynomial:
    return ExactPolynomial(_convolve(p.coeffs, r.coeffs))


def mul_one_minus_qk(p: ExactPolynomial, k: int) -> ExactPolynomial:
    if k < 1:
        raise InvalidArgument(f"k must be positive, got {k}")
    return ExactPolynomial(_mul_one_minus_qk(list(p.coeffs), k))


def exact_div_one_minus_qk(p: ExactPolynomial, k: int) -> ExactPolynomial:
    """Divide by (1 - q^k), raising :class:`NotDivisible` on a nonzero remainder."""
    if k < 1:
        raise InvalidArgument(f"k must be positive, got {k}")
    return ExactPolynomial(_div_one_minus_qk(list(p.coeffs), k))


def _times_qbinomial(c: list[int], a: int, b: int) -> list[int]:
    # c * [a+b choose b]_q via b multiply/divide pairs; every intermediate is
    # c * [a+j choose j]_q, so divisibility never fails for integer c.
    for j in range(1, b + 1):
        c = _div_one_minus_qk(_mul_one_minus_qk(c, a + j), j)
    return c


def gaussian_binomial(a: int, b: int) -> ExactPolynomial:
    """The q-binomial coefficient [a+b choose a]_q, of degree a*b."""
    if a < 0 or b < 0:
        raise InvalidArgument(f"a and b must be nonnegative, got ({a}, {b})")
    # fewer passes when the loop runs over the smaller side
    a, b = max(a, b), min(a, b)
    return ExactPolynomial(_times_qbinomial([1], a, b))


def _check_parts(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if not parts:
        raise InvalidArgument("composition must have at least one part")
    for x in parts:
        if int(x) != x or x < 1:
            raise InvalidArgument(f"composition parts must be positive integers, got {parts}")
    return tuple(int(x) for x in parts)


def q_multinomial(parts: Sequence[int]) -> ExactPolynomial:
    """q-multinomial coefficient [N; a_1, ..., a_m]_q.

    Equal to the product over j >= 2 of [A_{j-1} + a_j choose a_j]_q with A_j
    the partial sums.  Each factor is folded straight into the running product
    with the multiply/divide schedule, so no separate convolution is needed.
    """
    parts = _check_parts(getattr(parts, "parts", parts))
    c = [1]
    prefix = parts[0]
    for aj in parts[1:]:
        c = _times_qbinomial(c, prefix, aj)
        prefix += aj
    return ExactPolynomial(c)


def q_integer(n: int) -> ExactPolynomial:
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise InvalidArgument(f"n must be nonnegative, got {n}")
    return ExactPolynomial([1] * n)


def _horner_unit_circle(values: Sequence[float], theta: float) -> complex:
    z = cmath.exp(1j * theta)
    acc = 0j
    for v in reversed(values):
        acc = acc * z + v
    return acc


def eval_unit_circle(p: ExactPolynomial, theta: float) -> complex:
    """Evaluate p(e^{i theta}) in floating point, Horner style.

    Each coefficient is converted to a double once; callers wanting the
    characteristic function should normalize first rather than pass counts
    whose size exceeds the double range.
    """
    return _horner_unit_circle([float(c) for c in p.coeffs], theta)
