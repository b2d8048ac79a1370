"""Brute-force abelian scans over finite words.

These are the reference implementations the closed forms are checked
against. They work on plain strings over {a, b} and use numpy prefix sums
so that the Parikh vector of any slice costs O(1).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from sturmian.exceptions import PreconditionError


@dataclass(frozen=True, order=True)
class ParikhVector:
    """Letter counts (|w|_a, |w|_b) of a binary word."""
    count_a: int
    count_b: int

    def __post_init__(self):
        if self.count_a < 0 or self.count_b < 0:
            raise ValueError("letter counts must be nonnegative")

    @classmethod
    def of(cls, word: str) -> "ParikhVector":
        count_a = word.count("a")
        return cls(count_a, len(word) - count_a)

    @property
    def norm(self) -> int:
        return self.count_a + self.count_b

    def contained_in(self, other: "ParikhVector") -> bool:
        return parikh_contained(self, other)


def parikh_contained(p: ParikhVector, q: ParikhVector) -> bool:
    """True iff |P| < |Q| and P is componentwise at most Q."""
    return p.norm < q.norm and p.count_a <= q.count_a and p.count_b <= q.count_b


@dataclass(frozen=True)
class AbelianDecomposition:
    """Factorization head . block^block_count . tail of w[start:start+length].

    All blocks have length ``period`` and the same Parikh vector; head and
    tail Parikh vectors are contained in it.
    """
    period: int
    head_len: int
    block_count: int
    tail_len: int
    start: int = 0

    @property
    def length(self) -> int:
        return self.head_len + self.block_count * self.period + self.tail_len

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)


class ParikhIndex:
    """Prefix sums of the letter a over a word.

    Args:
        word (str): Word over the alphabet {a, b}

    Raises:
        PreconditionError: If the word contains other letters
    """

    def __init__(self, word: str):
        if set(word) - {"a", "b"}:
            raise PreconditionError("words must be over the alphabet {a, b}")
        self.word = word
        flags = np.frombuffer(word.encode("ascii"), dtype=np.uint8) == ord("a")
        self.prefix = np.concatenate(([0], np.cumsum(flags, dtype=np.int64)))

    def __len__(self):
        return len(self.word)

    def count_a(self, i: int, j: int) -> int:
        return int(self.prefix[j] - self.prefix[i])

    def parikh(self, i: int, j: int) -> ParikhVector:
        count_a = self.count_a(i, j)
        return ParikhVector(count_a, j - i - count_a)

    def window_counts(self, m: int) -> np.ndarray:
        """Count of a in every window of length m, indexed by start position."""
        return self.prefix[m:] - self.prefix[:-m]

    def fits(self, i: int, j: int, block_a: int, m: int) -> bool:
        # Parikh of w[i:j], j - i < m, is contained in the block vector (block_a, m - block_a)
        count_a = self.count_a(i, j)
        return count_a <= block_a and (j - i - count_a) <= m - block_a


def _decompose(index: ParikhIndex, windows: np.ndarray, m: int, start: int, end: int) -> Optional[AbelianDecomposition]:
    length = end - start
    for head in range(min(m - 1, length - m) + 1):
        block_count = (length - head) // m
        first = start + head
        blocks = windows[first:first + block_count * m:m]
        block_a = int(blocks[0])
        if (blocks != block_a).any():
            continue
        tail_start = first + block_count * m
        if index.fits(start, first, block_a, m) and index.fits(tail_start, end, block_a, m):
            return AbelianDecomposition(m, head, block_count, end - tail_start, start)
    return None


def abelian_decomposition(w: str, m: int) -> Optional[AbelianDecomposition]:
    """Decomposition of w with period m and at least one full block, smallest head first."""
    if m < 1:
        raise PreconditionError("period must be positive")
    if m > len(w):
        return None
    index = ParikhIndex(w)
    return _decompose(index, index.window_counts(m), m, 0, len(w))


def has_abelian_period(w: str, m: int) -> bool:
    return abelian_decomposition(w, m) is not None


def min_abelian_period(w: str) -> int:
    """Minimum abelian period of a nonempty word.

    Raises:
        PreconditionError: If w is empty
    """
    if not w:
        raise PreconditionError("the empty word has no abelian period")
    index = ParikhIndex(w)
    for m in range(1, len(w) + 1):
        if _decompose(index, index.window_counts(m), m, 0, len(w)) is not None:
            return m
    return len(w)


def abelian_exponent(w: str) -> Fraction:
    """|w| divided by its minimum abelian period."""
    return Fraction(len(w), min_abelian_period(w))


def max_power_at(w: str, pos: int, m: int) -> int:
    """Largest k such that k consecutive length-m blocks from pos are Parikh-equal.

    Returns 0 when not even one block fits.
    """
    if m < 1:
        raise PreconditionError("period must be positive")
    if pos < 0 or pos + m > len(w):
        return 0
    first = w.count("a", pos, pos + m)
    k, p = 1, pos + m
    while p + m <= len(w) and w.count("a", p, p + m) == first:
        k += 1
        p += m
    return k


def _true_runs(flags: np.ndarray) -> np.ndarray:
    # result[i] = number of consecutive True values starting at i
    n = len(flags)
    positions = np.arange(n)
    stops = np.where(flags, n, positions)
    next_stop = np.minimum.accumulate(stops[::-1])[::-1]
    return next_stop - positions


def power_exponents(w: str, m: int) -> np.ndarray:
    """max_power_at for every position where a block fits, as one vector."""
    if m < 1:
        raise PreconditionError("period must be positive")
    windows = ParikhIndex(w).window_counts(m)
    result = np.zeros(len(windows), dtype=np.int64)
    for residue in range(min(m, len(windows))):
        series = windows[residue::m]
        runs = _true_runs(series[:-1] == series[1:])
        result[residue::m] = 1 + np.concatenate((runs, [0]))
    return result


def max_power_exponent(w: str, m: int) -> int:
    """Maximum exponent of an abelian power of period m anywhere in w."""
    exponents = power_exponents(w, m)
    return int(exponents.max()) if len(exponents) else 0


def longest_prefix_decomposition(w: str, m: int) -> Optional[AbelianDecomposition]:
    """Longest prefix of w that is an abelian repetition of period m.

    The repetition has at least two full blocks and head and tail shorter
    than m. Ties go to the smallest head.
    """
    if len(w) < 2 * m:
        return None
    index = ParikhIndex(w)
    exponents = power_exponents(w, m)
    windows = index.window_counts(m)
    best = None
    for head in range(min(m, len(exponents))):
        blocks = int(exponents[head])
        block_a = int(windows[head])
        if blocks < 2 or not index.fits(0, head, block_a, m):
            continue
        tail_start = head + blocks * m
        tail = min(m - 1, len(w) - tail_start)
        while tail > 0 and not index.fits(tail_start, tail_start + tail, block_a, m):
            tail -= 1
        candidate = AbelianDecomposition(m, head, blocks, tail)
        if best is None or candidate.length > best.length:
            best = candidate
    return best


def longest_prefix_repetition(w: str, m: int) -> int:
    """Length of the longest abelian-repetition prefix of period m, or 0."""
    decomposition = longest_prefix_decomposition(w, m)
    return decomposition.length if decomposition else 0


def longest_repetition(w: str, m: int) -> Optional[AbelianDecomposition]:
    """Longest abelian repetition of period m anywhere in w, leftmost on ties."""
    index = ParikhIndex(w)
    exponents = power_exponents(w, m)
    windows = index.window_counts(m)
    best = None
    for first in range(len(exponents)):
        blocks = int(exponents[first])
        if blocks < 2:
            continue
        block_a = int(windows[first])
        # a run that extends one block to the left is covered from there
        if first >= m and int(windows[first - m]) == block_a:
            continue
        head = min(m - 1, first)
        while head > 0 and not index.fits(first - head, first, block_a, m):
            head -= 1
        tail_start = first + blocks * m
        tail = min(m - 1, len(w) - tail_start)
        while tail > 0 and not index.fits(tail_start, tail_start + tail, block_a, m):
            tail -= 1
        candidate = AbelianDecomposition(m, head, blocks, tail, first - head)
        if best is None or candidate.length > best.length:
            best = candidate
    return best
