"""
Brute-force ground truth for small instances.

Nothing here touches the multiply/divide machinery in :mod:`mahonstat.qpoly`;
results are returned as ExactPolynomial only so they compare directly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from operator import add
from typing import Iterator, Sequence

from .errors import InvalidArgument, SizeLimitExceeded
from .qpoly import ExactPolynomial

MAX_LETTERS = 12


def multiset_words(counts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield every distinct word with ``counts[x]`` copies of letter x, in lexicographic order."""
    counts = list(counts)
    n = sum(counts)
    word = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(word)
            return
        for x, left in enumerate(counts):
            if left:
                counts[x] -= 1
                word[pos] = x
                yield from rec(pos + 1)
                counts[x] += 1

    yield from rec(0)


def count_inversions(word: Sequence[int]) -> int:
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


@lru_cache(maxsize=4096)
def _histogram(counts: tuple[int, ...]) -> tuple[int, ...]:
    hist: list[int] = []
    for w in multiset_words(counts):
        k = count_inversions(w)
        if k >= len(hist):
            hist.extend([0] * (k + 1 - len(hist)))
        hist[k] += 1
    return tuple(hist) or (0,)


def _validate(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if not parts or any(int(a) != a or a < 1 for a in parts):
        raise InvalidArgument(f"parts must be positive integers, got {parts}")
    if sum(parts) > MAX_LETTERS:
        raise SizeLimitExceeded(
            f"enumeration is limited to words of length <= {MAX_LETTERS}, got {sum(parts)}")
    return parts


def enumerate_inversions(parts: Sequence[int], *, split: bool = True) -> ExactPolynomial:
    """Histogram of inversion counts over all words with the given multiplicities.

    With ``split=False`` every word is generated and its inversions counted
    pair by pair.  The default splits each word into a left half of length
    ceil(N/2) and a right half; every word is exactly one (left, right) pair
    and its inversion count is inv(left) + inv(right) + cross(left, right),
    where the cross term depends only on the two letter multisets.  The halves
    are still enumerated word by word, so the count stays a direct one, it
    just avoids visiting N!/prod(a_j!) leaves one at a time.
    """
    parts = _validate(parts)
    if not split:
        return ExactPolynomial(_histogram(parts))

    n = sum(parts)
    left_len = (n + 1) // 2
    total = [0] * (sum(parts[i] * parts[j]
                       for i in range(len(parts)) for j in range(i + 1, len(parts))) + 1)
    for left in product(*(range(a + 1) for a in parts)):
        if sum(left) != left_len:
            continue
        right = tuple(a - l for a, l in zip(parts, left))
        # every left copy of x against every right copy of a smaller letter
        cross = sum(left[x] * right[y] for x in range(len(parts)) for y in range(x))
        hl, hr = _histogram(left), _histogram(right)
        for i, u in enumerate(hl):
            if not u:
                continue
            for j, v in enumerate(hr):
                total[cross + i + j] += u * v
    return ExactPolynomial(total)


def partitions_in_box(a: int, b: int) -> ExactPolynomial:
    """Count partitions of each n with at most b parts, every part <= a.

    Knapsack over part sizes 1..a, tracking the number of parts used.
    """
    if a < 0 or b < 0:
        raise InvalidArgument(f"box sides must be nonnegative, got ({a}, {b})")
    size = a * b + 1
    # by_parts[c][n]: partitions of n into exactly c parts, sizes seen so far
    by_parts = [[0] * size for _ in range(b + 1)]
    by_parts[0][0] = 1
    for s in range(1, a + 1):
        for c in range(1, b + 1):
            row, prev = by_parts[c], by_parts[c - 1]
            row[s:] = map(add, row[s:], prev[:size - s])
    return ExactPolynomial([sum(col) for col in zip(*by_parts)])
