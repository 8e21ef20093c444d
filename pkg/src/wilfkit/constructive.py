"""Constructive pairs: growing a composition by distributing extra weight.

A constructive pair ``(c, P)`` takes a composition ``c = (c_1, ..., c_l)``
and a placement ``P``: a left-to-right sequence of ``m`` boxes (one per
part of a base composition) with the numbers ``1..l`` interleaved in
increasing order, each either standing alone or sitting inside a box
(at most one per box). Applying it to a base ``b`` of length ``m``
replaces a bare number ``i`` by a new part ``c_i``, an empty box ``j`` by
``b_j`` and a box ``j`` holding ``i`` by ``b_j + c_i``.

Placements are tuples of :class:`Slot`. Occurrences are 0-based index
tuples, as everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

from .compositions import (
    Composition,
    composition,
    compositions_of,
    count_dominating_dp,
    dominates,
    enumerate_compositions,
)


class Slot(NamedTuple):
    boxed: bool
    number: Optional[int]

    def __str__(self):
        if not self.boxed:
            return str(self.number)
        return "[" + ("" if self.number is None else str(self.number)) + "]"


def bare(i: int) -> Slot:
    return Slot(False, i)


def box(i: Optional[int] = None) -> Slot:
    return Slot(True, i)


def box_count(placement: Sequence[Slot]) -> int:
    return sum(1 for slot in placement if slot.boxed)


def _check_placement(placement: Sequence[Slot], l: int) -> None:
    numbers = [slot.number for slot in placement if slot.number is not None]
    if numbers != list(range(1, l + 1)):
        raise ValueError(
            f"placement must contain the numbers 1..{l} in order, got {numbers}"
        )
    for slot in placement:
        if not slot.boxed and slot.number is None:
            raise ValueError("a bare slot must carry a number")


@dataclass(frozen=True)
class ConstructivePair:
    c: Composition
    placement: tuple[Slot, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", composition(self.c))
        object.__setattr__(self, "placement", tuple(Slot(*s) for s in self.placement))
        _check_placement(self.placement, len(self.c))

    @property
    def s(self) -> int:
        return sum(self.c)

    @property
    def m(self) -> int:
        return box_count(self.placement)

    def __str__(self):
        return f"c=({','.join(map(str, self.c))}) P={' '.join(map(str, self.placement))}"


def apply(base: Sequence[int], pair: ConstructivePair) -> Composition:
    """The composition ``base(c, P)``."""
    if pair.m != len(base):
        raise ValueError(
            f"placement has {pair.m} boxes but the base has {len(base)} parts"
        )
    out = []
    j = 0
    for slot in pair.placement:
        if slot.boxed:
            extra = 0 if slot.number is None else pair.c[slot.number - 1]
            out.append(base[j] + extra)
            j += 1
        else:
            out.append(pair.c[slot.number - 1])
    return tuple(out)


def placements(m: int, l: int) -> Iterator[tuple[Slot, ...]]:
    """All placements of the numbers ``1..l`` among ``m`` boxes.

    Slots are chosen left to right, trying a bare number, then a box
    holding the number, then an empty box.
    """

    def rec(i: int, j: int, acc: tuple[Slot, ...]) -> Iterator[tuple[Slot, ...]]:
        if i > l and j == m:
            yield acc
            return
        if i <= l:
            yield from rec(i + 1, j, acc + (bare(i),))
            if j < m:
                yield from rec(i + 1, j + 1, acc + (box(i),))
        if j < m:
            yield from rec(i, j + 1, acc + (box(),))

    return rec(1, 0, ())


def enumerate_pairs(m: int, s: int) -> Iterator[ConstructivePair]:
    """All constructive pairs with ``m`` boxes and ``c`` a composition of ``s``."""
    if m < 1 or s < 1:
        raise ValueError("m and s must be positive")
    for c in enumerate_compositions(s):
        for p in placements(m, len(c)):
            yield ConstructivePair(c, p)


def extract(
    base: Sequence[int], host: Sequence[int], occ: Sequence[int]
) -> ConstructivePair:
    """Recover the pair that builds ``host`` from ``base`` along the occurrence ``occ``.

    Parts of ``host`` outside ``occ`` become bare numbers. A matched part
    becomes an empty box if it equals the base part and a box holding a
    number if it is larger. Numbers are assigned left to right.
    """
    occ = tuple(occ)
    if len(occ) != len(base):
        raise ValueError("occurrence length differs from the base length")
    if any(x >= y for x, y in zip(occ, occ[1:])) or (occ and (occ[0] < 0 or occ[-1] >= len(host))):
        raise ValueError(f"{occ} is not an increasing index sequence into the host")
    if any(host[i] < b for i, b in zip(occ, base)):
        raise ValueError(f"{occ} is not an occurrence of {tuple(base)} in {tuple(host)}")
    if sum(host) <= sum(base):
        raise ValueError("the host must be strictly heavier than the base")

    matched = {i: j for j, i in enumerate(occ)}
    c: list[int] = []
    slots: list[Slot] = []
    for i, x in enumerate(host):
        j = matched.get(i)
        if j is None:
            c.append(x)
            slots.append(bare(len(c)))
        elif x == base[j]:
            slots.append(box())
        else:
            c.append(x - base[j])
            slots.append(box(len(c)))
    return ConstructivePair(tuple(c), tuple(slots))


def canonical_occurrence(pair: ConstructivePair) -> tuple[int, ...]:
    """Positions of the boxes in ``apply(base, pair)``, i.e. where the base copy sits."""
    return tuple(i for i, slot in enumerate(pair.placement) if slot.boxed)


def bijection_check(b: Sequence[int], s: int, enumerate_limit: int = 16) -> bool:
    """Check that ``apply(b, .)`` maps the pairs for ``(len(b), s)`` bijectively onto ``D_{|b|+s}(b)``.

    Needs ``b`` weakly decreasing with every part ``> s``. Up to weight
    ``enumerate_limit`` the image is compared with the exhaustive set of
    dominating compositions; above it, injectivity plus image inside
    ``D_n(b)`` plus ``|image| == |D_n(b)|`` (from the DP count) is used.
    """
    b = composition(b)
    if list(b) != sorted(b, reverse=True):
        raise ValueError(f"{b} is not weakly decreasing")
    if min(b) <= s:
        raise ValueError(f"every part of {b} must exceed s={s}")
    n = sum(b) + s
    images = [apply(b, pair) for pair in enumerate_pairs(len(b), s)]
    image_set = set(images)
    if len(image_set) != len(images):
        return False
    if n <= enumerate_limit:
        return image_set == {x for x in compositions_of(n) if dominates(x, b)}
    return all(sum(x) == n and dominates(x, b) for x in images) and len(
        images
    ) == count_dominating_dp(n, b)


def collision_placements(m: int) -> tuple[tuple[Slot, ...], tuple[Slot, ...]]:
    """Bare 1 between boxes ``m-1`` and ``m``, and bare 1 after box ``m``."""
    before_last = (box(),) * (m - 1) + (bare(1), box())
    after_last = (box(),) * m + (bare(1),)
    return before_last, after_last


def collision_check(a: Sequence[int]) -> bool:
    """True if appending ``a_m`` just before or just after the last part gives the same composition."""
    a = composition(a)
    p1, p2 = collision_placements(len(a))
    c = (a[-1],)
    return apply(a, ConstructivePair(c, p1)) == apply(a, ConstructivePair(c, p2))

