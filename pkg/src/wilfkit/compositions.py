"""Integer compositions and the dominance order on them.

``b`` dominates ``a`` when some subsequence of ``b`` (of the length of
``a``) is termwise at least ``a``. ``b`` h-dominates ``a`` when it dominates
``a`` but dropping its last part breaks that.

Counts come in two flavours: exhaustive filters over all compositions of
``n`` (the reference) and a DP over the greedy matching automaton.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

Composition = tuple[int, ...]

COUNT_LIMIT = 2**64


class CountOverflow(OverflowError):
    pass


def _checked(x: int) -> int:
    if x >= COUNT_LIMIT:
        raise CountOverflow(f"count {x} does not fit in 64 bits")
    return x


def composition(parts: Iterable[int]) -> Composition:
    """Validate ``parts`` as a non-empty sequence of positive integers."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("the empty composition is not allowed")
    for x in parts:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"{parts!r}: parts must be positive integers")
    return parts


def parse_composition(text: str) -> Composition:
    """Parse ``"3,2,5"``; errors name the offending token."""
    tokens = text.strip().split(",")
    parts = []
    for tok in tokens:
        if not tok.isdigit() or int(tok) < 1:
            raise ValueError(f"bad composition literal {text!r}: offending token {tok!r}")
        parts.append(int(tok))
    return tuple(parts)


def format_composition(a: Sequence[int]) -> str:
    return ",".join(map(str, a))


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """Yield the ``2**(n-1)`` compositions of ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")

    def rec(rest: int) -> Iterator[Composition]:
        for first in range(1, rest):
            for tail in rec(rest - first):
                yield (first,) + tail
        yield (rest,)

    return rec(n)


@lru_cache(maxsize=32)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """Cached tuple of ``enumerate_compositions(n)``."""
    return tuple(enumerate_compositions(n))


def _greedy_end(b: Sequence[int], a: Sequence[int]) -> int:
    """Index in ``b`` where greedy matching of ``a`` completes, or -1."""
    m = len(a)
    j = 0
    for i, x in enumerate(b):
        if x >= a[j]:
            j += 1
            if j == m:
                return i
    return -1


def dominates(b: Sequence[int], a: Sequence[int]) -> bool:
    """True if ``b`` has a subsequence termwise ``>= a``.

    Matching each part of ``a`` to the earliest usable part of ``b`` is
    optimal, so one left-to-right pass decides it.
    """
    return _greedy_end(b, a) >= 0


def leftmost_occurrence(b: Sequence[int], a: Sequence[int]) -> Optional[tuple[int, ...]]:
    """0-based indices of the greedy (index-wise smallest) occurrence of ``a`` in ``b``."""
    m = len(a)
    idx = []
    for i, x in enumerate(b):
        if len(idx) < m and x >= a[len(idx)]:
            idx.append(i)
    return tuple(idx) if len(idx) == m else None


def occurrences(b: Sequence[int], a: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Every occurrence of ``a`` in ``b`` as 0-based index tuples, lexicographically."""
    m, k = len(a), len(b)

    def rec(j: int, start: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if j == m:
            yield acc
            return
        for i in range(start, k - (m - j) + 1):
            if b[i] >= a[j]:
                yield from rec(j + 1, i + 1, acc + (i,))

    return rec(0, 0, ())


def occurrence_is_unique(b: Sequence[int], a: Sequence[int]) -> bool:
    """True if ``a`` occurs in ``b`` exactly once. Requires ``dominates(b, a)``."""
    found = 0
    for _ in occurrences(b, a):
        found += 1
        if found > 1:
            return False
    if not found:
        raise ValueError(f"{tuple(b)} does not dominate {tuple(a)}")
    return True


def h_dominates(b: Sequence[int], a: Sequence[int]) -> bool:
    # the greedy match finishes on the last part iff no proper prefix dominates
    return _greedy_end(b, a) == len(b) - 1


@lru_cache(maxsize=None)
def _count_dominating(n: int, a: Composition) -> int:
    if n < sum(a):
        return 0
    return _checked(sum(1 for b in compositions_of(n) if dominates(b, a)))


def count_dominating(n: int, a: Sequence[int]) -> int:
    """``|D_n(a)|`` by filtering all compositions of ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return _count_dominating(n, composition(a))


def count_dominating_dp(n: int, a: Sequence[int]) -> int:
    """``|D_n(a)|`` by DP over (remaining weight, greedily matched prefix length).

    A part ``p`` advances the matched prefix ``j`` iff ``p >= a[j]``. Once
    all of ``a`` is matched the remaining weight ``r`` can be split freely,
    giving ``2**(r-1)`` completions (1 when ``r == 0``).
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = composition(a)
    m = len(a)

    @lru_cache(maxsize=None)
    def ways(r: int, j: int) -> int:
        if j == m:
            return 1 if r == 0 else 1 << (r - 1)
        if r == 0:
            return 0
        need = a[j]
        total = 0
        for p in range(1, r + 1):
            total += ways(r - p, j + 1 if p >= need else j)
        return total

    return _checked(ways(n, 0))


@lru_cache(maxsize=None)
def _count_h_dominating(n: int, a: Composition) -> int:
    if n < sum(a):
        return 0
    return _checked(sum(1 for b in compositions_of(n) if h_dominates(b, a)))


def count_h_dominating(n: int, a: Sequence[int]) -> int:
    """``|D^h_n(a)|`` by filtering all compositions of ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return _count_h_dominating(n, composition(a))


def is_restricted(c: Sequence[int], s: int) -> bool:
    """All parts but the last are ``< s`` and the last is ``>= s``."""
    return c[-1] >= s and all(x < s for x in c[:-1])


@lru_cache(maxsize=None)
def count_restricted(k: int, s: int) -> int:
    """Number of compositions of ``k`` whose parts are ``< s`` except a last part ``>= s``."""
    if k < 1 or s < 1:
        raise ValueError("k and s must be positive")
    return sum(1 for c in compositions_of(k) if is_restricted(c, s))
