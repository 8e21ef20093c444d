"""Set partitions as restricted growth functions (RGFs).

A partition of ``[n]`` with blocks ordered by their minima is stored as a
tuple of block labels ``(a_1, ..., a_n)`` where ``a_i = j`` iff ``i`` lies in
the ``j``-th block. Labels start at 1 and every label is at most one more
than the largest label before it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_SIZE = 64

Rgf = tuple[int, ...]


def rgf(labels: Iterable[int]) -> Rgf:
    """Validate ``labels`` as a restricted growth function and return it as a tuple."""
    labels = tuple(labels)
    if not labels:
        raise ValueError("a set partition needs at least one element")
    if len(labels) > MAX_SIZE:
        raise ValueError(f"partitions of more than {MAX_SIZE} elements are not supported")
    top = 0
    for i, x in enumerate(labels):
        if not isinstance(x, int) or x < 1 or x > top + 1:
            raise ValueError(
                f"{labels!r} is not a restricted growth function (position {i + 1})"
            )
        top = max(top, x)
    return labels


def num_blocks(p: Sequence[int]) -> int:
    return max(p)


def from_blocks(blocks: Iterable[Iterable[int]]) -> Rgf:
    """Encode a partition given as blocks of ``{1, ..., n}``.

    The blocks may be given in any order; they are relabelled by increasing
    minimum. Overlapping blocks, empty blocks and gaps raise ``ValueError``.
    """
    blocks = [sorted(set(b)) for b in blocks]
    if not blocks:
        raise ValueError("a set partition needs at least one block")
    if any(not b for b in blocks):
        raise ValueError("empty block")
    n = sum(len(b) for b in blocks)
    labels = [0] * n
    for j, b in enumerate(sorted(blocks, key=lambda b: b[0]), start=1):
        for x in b:
            if not 1 <= x <= n:
                raise ValueError(f"element {x} outside 1..{n}")
            if labels[x - 1]:
                raise ValueError(f"element {x} appears in two blocks")
            labels[x - 1] = j
    return rgf(labels)


def to_blocks(p: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    blocks: list[list[int]] = [[] for _ in range(max(p))]
    for i, x in enumerate(p, start=1):
        blocks[x - 1].append(i)
    return tuple(tuple(b) for b in blocks)


def enumerate_partitions(n: int) -> Iterator[Rgf]:
    """Yield every RGF of length ``n`` once, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_SIZE:
        raise ValueError(f"n > {MAX_SIZE} is not supported")
    a = [1] * n
    # prefix_max[i] = max(a[:i])
    prefix_max = [1] * n
    prefix_max[0] = 0
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == prefix_max[i] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(prefix_max[i], a[i])
        for j in range(i + 1, n):
            a[j] = 1
            prefix_max[j] = top


def bell_numbers(n_max: int) -> list[int]:
    """Bell numbers ``B_0 .. B_n_max`` from the Bell triangle."""
    bells = [1]
    row = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        bells.append(nxt[0])
        row = nxt
    return bells[: n_max + 1]


def contains(sigma: Sequence[int], pi: Sequence[int]) -> bool:
    """True if the partition ``sigma`` contains the pattern ``pi``.

    Backtracks over the host label assigned to each new block of the
    pattern. Once a block's label is fixed, its later elements are matched
    at the earliest possible position, which loses no embeddings.
    """
    m, n = len(pi), len(sigma)
    if m > n or max(pi) > max(sigma):
        return False

    mapping: list[int] = []

    def search(i: int, pos: int) -> bool:
        if i == m:
            return True
        if n - pos < m - i:
            return False
        v = pi[i]
        if v <= len(mapping):
            target = mapping[v - 1]
            for j in range(pos, n):
                if sigma[j] == target:
                    return search(i + 1, j + 1)
            return False
        floor = mapping[-1] if mapping else 0
        tried = set()
        for j in range(pos, n - (m - i) + 1):
            label = sigma[j]
            if label > floor and label not in tried:
                tried.add(label)
                mapping.append(label)
                if search(i + 1, j + 1):
                    return True
                mapping.pop()
        return False

    return search(0, 0)


def avoids(sigma: Sequence[int], pi: Sequence[int]) -> bool:
    return not contains(sigma, pi)


@lru_cache(maxsize=None)
def _single_avoiders(n: int, pattern: Rgf) -> tuple[Rgf, ...]:
    return tuple(p for p in enumerate_partitions(n) if not contains(p, pattern))


def avoiders(n: int, patterns: Iterable[Sequence[int]]) -> list[Rgf]:
    """All RGFs of length ``n`` avoiding every pattern, in lexicographic order.

    The filtered host list for the shortest pattern is memoized, so
    repeated queries sharing a pattern (e.g. all pairs ``{121, tau}``) only
    enumerate the Bell(n) hosts once.
    """
    pats = sorted({rgf(p) for p in patterns}, key=lambda p: (len(p), p))
    if not pats:
        raise ValueError("at least one pattern is required")
    first, rest = pats[0], pats[1:]
    return [p for p in _single_avoiders(n, first) if all(not contains(p, q) for q in rest)]


def count_avoiders(n: int, patterns: Iterable[Sequence[int]]) -> int:
    """``p_n(T)``: the number of partitions of ``[n]`` avoiding all of ``patterns``."""
    return len(avoiders(n, patterns))


def tau_121(a: Sequence[int]) -> Rgf:
    """The unique 121-avoider whose i-th block has ``a[i]`` elements: ``1^a1 2^a2 ...``."""
    out: list[int] = []
    for label, size in enumerate(a, start=1):
        out.extend([label] * size)
    return tuple(out)


def tau_112(a: Sequence[int]) -> Rgf:
    """The 112-avoider ``1 2 ... m m^(a_m - 1) ... 2^(a_2 - 1) 1^(a_1 - 1)``."""
    m = len(a)
    out = list(range(1, m + 1))
    for label in range(m, 0, -1):
        out.extend([label] * (a[label - 1] - 1))
    return tuple(out)


def parse_rgf(text: str) -> Rgf:
    """Parse ``"12113233"`` or ``"1,2,10,..."`` into a validated RGF."""
    text = text.strip()
    if "," in text:
        tokens = text.split(",")
    else:
        tokens = list(text)
    try:
        return rgf(int(t) for t in tokens)
    except ValueError as exc:
        raise ValueError(f"bad partition literal {text!r}: {exc}") from None


def format_rgf(p: Sequence[int]) -> str:
    if max(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))
