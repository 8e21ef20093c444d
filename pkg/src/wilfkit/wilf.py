"""Wilf classes of (3,k)-pairs ``{sigma, tau}``.

``sigma`` is one of the size-3 patterns with at least two blocks and
``tau`` has size ``k``. Pairs are kept reduced (``tau`` avoids ``sigma``).
Two pairs are Wilf-equivalent when their avoider counts ``p_n`` agree for
every ``n``; here that is checked up to ``n_max`` and cross-validated
against the class structure predicted from dominating equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

from .equivalence import enumerate_classes, xi
from .setpartitions import (
    Rgf,
    avoiders,
    contains,
    count_avoiders,
    enumerate_partitions,
    format_rgf,
    tau_112,
    tau_121,
)

SIGMAS: tuple[Rgf, ...] = ((1, 1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3))


class PatternPair(NamedTuple):
    sigma: Rgf
    tau: Rgf

    def __str__(self):
        return "{%s,%s}" % (format_rgf(self.sigma), format_rgf(self.tau))


def enumerate_pattern_pairs(k: int, reduced: bool = True) -> Iterator[PatternPair]:
    """(3,k)-pairs grouped by ``sigma`` in ``SIGMAS`` order, ``tau`` lexicographic.

    With ``reduced=False`` every ``tau`` of size ``k`` is paired with every
    ``sigma``; that is only meant for cardinality checks.
    """
    if k < 3:
        raise ValueError("(3,k)-pairs need k >= 3")
    for sigma in SIGMAS:
        if reduced:
            taus = avoiders(k, [sigma])
        else:
            taus = enumerate_partitions(k)
        for tau in taus:
            yield PatternPair(sigma, tau)


def avoider_sequence(pair: PatternPair, n_max: int) -> tuple[int, ...]:
    """``(p_1({sigma, tau}), ..., p_n_max({sigma, tau}))``."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    return tuple(count_avoiders(n, pair) for n in range(1, n_max + 1))


class PredictedClass(NamedTuple):
    # normal form of the dominating-equivalence class, or None for {123, 1^k}
    normal_form: Optional[tuple[int, ...]]
    pairs: frozenset


def predicted_classes(k: int) -> list[PredictedClass]:
    """One class per dominating-equivalence class of compositions of ``k``, plus ``{123, 1^k}``.

    Every class holds ``{121, tau_121(a)}`` and ``{112, tau_112(a)}`` for
    ``a`` in it. The class of ``(1, ..., 1)`` also holds every reduced
    ``{122, tau}`` and every reduced ``{123, tau}`` except ``tau = 1^k``.
    """
    if k < 3:
        raise ValueError("(3,k)-pairs need k >= 3")
    ones = (1,) * k
    out = []
    for nf, members in enumerate_classes(k).items():
        pairs = set()
        for a in members:
            pairs.add(PatternPair((1, 2, 1), tau_121(a)))
            pairs.add(PatternPair((1, 1, 2), tau_112(a)))
        if nf == ones:
            pairs.update(PatternPair((1, 2, 2), t) for t in avoiders(k, [(1, 2, 2)]))
            pairs.update(
                PatternPair((1, 2, 3), t) for t in avoiders(k, [(1, 2, 3)]) if t != ones
            )
        out.append(PredictedClass(nf, frozenset(pairs)))
    out.append(PredictedClass(None, frozenset({PatternPair((1, 2, 3), ones)})))
    return out


class WilfClass(NamedTuple):
    sequence: tuple[int, ...]
    pairs: tuple[PatternPair, ...]


@dataclass
class WilfClassReport:
    k: int
    n_max: int
    classes: list[WilfClass]
    predicted: list[PredictedClass]
    verdict: bool = False
    problems: list[str] = field(default_factory=list)

    @property
    def expected_count(self) -> int:
        return 1 + xi(self.k)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n_max": self.n_max,
            "class_count": len(self.classes),
            "expected_class_count": self.expected_count,
            "verdict": "OK" if self.verdict else "FAIL",
            "problems": list(self.problems),
            "classes": [
                {
                    "sequence": list(c.sequence),
                    "size": len(c.pairs),
                    "pairs": [str(p) for p in c.pairs],
                }
                for c in self.classes
            ],
        }


def group_pairs(k: int, n_max: Optional[int] = None) -> WilfClassReport:
    """Group the reduced (3,k)-pairs by avoider sequence and compare with the prediction.

    Equal sequence prefixes cannot prove equivalence, so a computed class
    straddling two predicted classes is a failure that asks for a larger
    ``n_max``; a predicted class split by the computation contradicts the
    theory outright.
    """
    if n_max is None:
        n_max = 2 * k
    if n_max < 2 * k:
        raise ValueError("n_max must be at least 2k")
    groups: dict[tuple[int, ...], list[PatternPair]] = {}
    for pair in enumerate_pattern_pairs(k):
        groups.setdefault(avoider_sequence(pair, n_max), []).append(pair)
    classes = [WilfClass(seq, tuple(ps)) for seq, ps in sorted(groups.items())]
    predicted = predicted_classes(k)
    report = WilfClassReport(k, n_max, classes, predicted)

    owner = {}
    for idx, pc in enumerate(predicted):
        for pair in pc.pairs:
            owner[pair] = idx
    for c in classes:
        hit = {owner.get(p) for p in c.pairs}
        if None in hit:
            report.problems.append(f"pairs {[str(p) for p in c.pairs if p not in owner]} not predicted")
        if len(hit - {None}) > 1:
            report.problems.append(
                f"sequence {list(c.sequence)} merges predicted classes; increase n_max"
            )
    computed = {frozenset(c.pairs) for c in classes}
    for pc in predicted:
        if pc.pairs not in computed and not any(pc.pairs < s for s in computed):
            report.problems.append(
                f"predicted class {pc.normal_form} is split by the avoider sequences"
            )
    if len(classes) != report.expected_count:
        report.problems.append(
            f"{len(classes)} classes, expected 1 + xi({k}) = {report.expected_count}"
        )
    report.verdict = not report.problems and computed == {pc.pairs for pc in predicted}
    return report


def is_reduced(pair: PatternPair) -> bool:
    return not contains(pair.tau, pair.sigma)
