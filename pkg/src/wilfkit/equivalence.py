"""Dominating equivalence of compositions.

Two compositions are dominating equivalent when ``|D_n(a)| == |D_n(a')|``
for every ``n``. Sorting the parts into decreasing order and splitting
every 2 into 1, 1 gives a 2-free integer partition; two compositions are
equivalent exactly when these normal forms agree.
"""

from __future__ import annotations

import threading
from importlib import resources
from typing import Iterator, Optional, Sequence

from .compositions import (
    Composition,
    composition,
    compositions_of,
    count_dominating,
    count_dominating_dp,
    enumerate_compositions,
)

TwoFreePartition = tuple[int, ...]


class InconsistencyError(RuntimeError):
    """Raised when a computation contradicts a result that is known to hold."""


def normal_form(a: Sequence[int]) -> TwoFreePartition:
    parts = []
    for x in sorted(composition(a), reverse=True):
        if x == 2:
            parts += [1, 1]
        else:
            parts.append(x)
    return tuple(parts)


def is_two_free_partition(p: Sequence[int]) -> bool:
    return all(x >= 1 and x != 2 for x in p) and all(
        p[i] >= p[i + 1] for i in range(len(p) - 1)
    )


def dom_equivalent(a: Sequence[int], a2: Sequence[int]) -> bool:
    return normal_form(a) == normal_form(a2)


def dominating_counts(a: Sequence[int], n_max: int, method: str = "dp") -> list[int]:
    """``[|D_1(a)|, ..., |D_n_max(a)|]``; ``method`` is ``"dp"`` or ``"enum"``."""
    count = {"dp": count_dominating_dp, "enum": count_dominating}[method]
    return [count(n, a) for n in range(1, n_max + 1)]


def oracle_equivalent(
    a: Sequence[int], a2: Sequence[int], n_max: int, method: str = "enum"
) -> bool:
    """Compare ``|D_n|`` directly for every ``n <= n_max``.

    Only a finite check: ``False`` is conclusive, ``True`` is evidence.
    """
    if n_max < max(sum(a), sum(a2)):
        raise ValueError("n_max must be at least the larger weight")
    return dominating_counts(a, n_max, method) == dominating_counts(a2, n_max, method)


def separation_bound(a: Sequence[int], a2: Sequence[int]) -> int:
    return 2 * max(sum(a), sum(a2))


def separation_witness(
    a: Sequence[int], a2: Sequence[int], bound: Optional[int] = None
) -> Optional[int]:
    """Smallest ``n`` with ``|D_n(a)| != |D_n(a2)|``, or ``None`` if equivalent.

    Non-equivalent compositions always separate by ``2 * max(weight)``
    (the default ``bound``); failing to find a witness there raises
    ``InconsistencyError`` rather than reporting equivalence.
    """
    if dom_equivalent(a, a2):
        return None
    if bound is None:
        bound = separation_bound(a, a2)
    for n in range(1, bound + 1):
        if count_dominating_dp(n, a) != count_dominating_dp(n, a2):
            return n
    raise InconsistencyError(
        f"{tuple(a)} and {tuple(a2)} have different normal forms but equal "
        f"dominating counts up to n={bound}"
    )


_p_lock = threading.Lock()
_p_table = [1]


def partition_count(n: int) -> int:
    """Number of integer partitions ``p(n)`` via the pentagonal number recurrence."""
    if n < 0:
        return 0
    if n < len(_p_table):
        return _p_table[n]
    with _p_lock:
        table = list(_p_table)
        for m in range(len(table), n + 1):
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > m:
                    break
                sign = 1 if k % 2 else -1
                total += sign * table[m - g1]
                g2 = g1 + k
                if g2 <= m:
                    total += sign * table[m - g2]
                k += 1
            table.append(total)
        # publish in one step so readers never see a partial table
        _p_table[len(_p_table):] = table[len(_p_table):]
    return _p_table[n]


def xi(k: int) -> int:
    """Number of dominating-equivalence classes of compositions of ``k``: ``p(k) - p(k-2)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return partition_count(k) - partition_count(k - 2)


def integer_partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, by direct recursion."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def two_free_partitions(n: int) -> Iterator[tuple[int, ...]]:
    return (p for p in integer_partitions(n) if 2 not in p)


def enumerate_classes(k: int) -> dict[TwoFreePartition, list[Composition]]:
    """Group the compositions of ``k`` by normal form.

    Keys appear in order of first occurrence in the lexicographic
    enumeration; each class lists its members lexicographically.
    """
    table: dict[TwoFreePartition, list[Composition]] = {}
    source = compositions_of(k) if k <= 20 else enumerate_compositions(k)
    for a in source:
        table.setdefault(normal_form(a), []).append(a)
    return table


def load_a027336() -> list[int]:
    """The bundled prefix of OEIS A027336 (offset 0)."""
    text = resources.files("wilfkit").joinpath("data/A027336.txt").read_text()
    return [int(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]
