"""Exhaustive desk-scale checks of the theory, one function per criterion.

Each check returns ``(ok, detail)``. ``level="quick"`` uses the standard
ranges; ``"full"`` widens some of them.
"""

from __future__ import annotations

import time
from itertools import product
from typing import Callable, NamedTuple

from .compositions import (
    compositions_of,
    count_dominating,
    count_dominating_dp,
    count_h_dominating,
    count_restricted,
)
from .constructive import bijection_check, enumerate_pairs
from .equivalence import (
    dominating_counts,
    enumerate_classes,
    integer_partitions,
    load_a027336,
    normal_form,
    partition_count,
    separation_witness,
    xi,
)
from .setpartitions import bell_numbers, count_avoiders, enumerate_partitions
from .wilf import SIGMAS, PatternPair, group_pairs


def _compositions_up_to(w: int):
    for n in range(1, w + 1):
        yield from compositions_of(n)


def _sorted_compositions_up_to(w: int):
    for n in range(1, w + 1):
        yield from integer_partitions(n)


def check_singleton_avoiders(level="quick"):
    n_max = 10 if level == "quick" else 11
    for sigma, n in product(SIGMAS, range(1, n_max + 1)):
        got = count_avoiders(n, [sigma])
        if got != 2 ** (n - 1):
            return False, f"p_{n}({sigma}) = {got}"
    return True, f"4 patterns, n <= {n_max}"


def check_bell(level="quick"):
    n_max = 12
    bells = bell_numbers(n_max)
    for n in range(1, n_max + 1):
        got = sum(1 for _ in enumerate_partitions(n))
        if got != bells[n]:
            return False, f"n={n}: enumerated {got}, Bell {bells[n]}"
    return True, f"n <= {n_max}"


def check_recurrences(level="quick"):
    w_max, s_max, n_max = 6, 4, 12
    size = {j: len(compositions_of(j)) for j in range(1, n_max + s_max + 1)}
    checked = 0
    for a in _compositions_up_to(w_max):
        dh = {i: count_h_dominating(i, a) for i in range(1, n_max + s_max + 1)}
        for n in range(1, n_max + 1):
            rhs = dh[n] + sum(dh[i] * size[n - i] for i in range(1, n))
            if count_dominating(n, a) != rhs:
                return False, f"decomposition by first dominating prefix fails for a={a}, n={n}"
            checked += 1
        for s in range(1, s_max + 1):
            a_s = a + (s,)
            for n in range(1, n_max + 1):
                rhs = sum(dh[i] * count_restricted(n - i, s) for i in range(1, n))
                if count_h_dominating(n, a_s) != rhs:
                    return False, f"h-decomposition fails for a={a}, s={s}, n={n}"
                lhs = count_h_dominating(n + s, a_s)
                rhs = dh[n] + sum(
                    dh[n + s - i] * count_restricted(i, s) for i in range(s + 1, n + s)
                )
                if lhs != rhs:
                    return False, f"shifted h-count fails for a={a}, s={s}, n={n}"
                checked += 2
    return True, f"{checked} identities (weight <= {w_max}, s <= {s_max}, n <= {n_max})"


def check_theorem(level="quick"):
    k_max = 7 if level == "quick" else 9
    pairs = 0
    for k in range(1, k_max + 1):
        comps = compositions_of(k)
        counts = {a: dominating_counts(a, 2 * k) for a in comps}
        for a, a2 in product(comps, repeat=2):
            pairs += 1
            if normal_form(a) == normal_form(a2):
                if counts[a] != counts[a2]:
                    return False, f"{a} ~ {a2} by normal form but counts differ"
            else:
                w = separation_witness(a, a2)
                if w is None or w > 2 * k:
                    return False, f"{a}, {a2}: no separation by n={2 * k}"
    return True, f"{pairs} ordered pairs, k <= {k_max}, n <= 2k"


def check_class_counts(level="quick"):
    k_max = 12 if level == "quick" else 16
    for k in range(1, k_max + 1):
        classes = len(enumerate_classes(k))
        two_free = sum(1 for p in integer_partitions(k) if 2 not in p)
        if not classes == xi(k) == two_free == partition_count(k) - partition_count(k - 2):
            return False, f"k={k}: {classes} classes, xi={xi(k)}, 2-free={two_free}"
    bundled = load_a027336()
    ours = [xi(k) for k in range(len(bundled))]
    if len(bundled) < 31 or ours != bundled:
        return False, f"xi prefix {ours} differs from bundled A027336"
    return True, f"k <= {k_max}; {len(bundled)} terms of A027336"


def check_wilf(level="quick"):
    ks = (3, 4, 5) if level == "quick" else (3, 4, 5, 6)
    details = []
    for k in ks:
        report = group_pairs(k, 2 * k)
        singleton = (PatternPair((1, 2, 3), (1,) * k),)
        if not report.verdict or len(report.classes) != 1 + xi(k):
            return False, f"k={k}: {report.problems}"
        if not any(c.pairs == singleton for c in report.classes):
            return False, f"k={k}: {{123,1^k}} is not a singleton class"
        details.append(f"k={k}: {len(report.classes)} classes")
    return True, "; ".join(details)


def check_local_formulas(level="quick"):
    w_max = 10
    checked = 0
    for a in _sorted_compositions_up_to(w_max):
        m, n = len(a), sum(a)
        if a[-1] >= 2:
            expected = 2 * m + 1
        elif m == 1 or a[-2] >= 2:
            expected = 2 * m
        else:
            continue
        got = count_dominating(n + 1, a)
        if got != expected:
            return False, f"|D_{n + 1}({a})| = {got}, expected {expected}"
        checked += 1
    return True, f"{checked} sorted compositions of weight <= {w_max}"


def check_constructive(level="quick"):
    w_max = 10
    bijections = 0
    for b in _sorted_compositions_up_to(w_max):
        for s in range(1, min(b)):
            n_pairs = sum(1 for _ in enumerate_pairs(len(b), s))
            if n_pairs != count_dominating_dp(sum(b) + s, b):
                return False, f"{n_pairs} pairs but |D| differs for b={b}, s={s}"
            if not bijection_check(b, s, enumerate_limit=20):
                return False, f"apply is not a bijection for b={b}, s={s}"
            bijections += 1
    strict = 0
    for w in range(1, 10):
        parts = list(integer_partitions(w))
        for a, b in product(parts, repeat=2):
            s = a[-1]
            if len(a) != len(b) or min(b) <= s:
                continue
            if not count_dominating_dp(w + s, a) < count_dominating_dp(w + s, b):
                return False, f"strict inequality fails for a={a}, b={b}"
            strict += 1
    return True, f"{bijections} bijections (weight <= {w_max}), {strict} strict inequalities"


def check_dp(level="quick"):
    w_max, n_max = 6, 14
    for a in _compositions_up_to(w_max):
        for n in range(1, n_max + 1):
            if count_dominating_dp(n, a) != count_dominating(n, a):
                return False, f"DP and enumeration differ for a={a}, n={n}"
    return True, f"weight <= {w_max}, n <= {n_max}"


class Criterion(NamedTuple):
    number: int
    name: str
    check: Callable


CRITERIA = [
    Criterion(1, "singleton avoidance counts 2^(n-1)", check_singleton_avoiders),
    Criterion(2, "RGF enumeration matches Bell triangle", check_bell),
    Criterion(3, "dominating / h-dominating recurrence identities", check_recurrences),
    Criterion(4, "normal form decides dominating equivalence", check_theorem),
    Criterion(5, "class counts p(k)-p(k-2) and A027336 prefix", check_class_counts),
    Criterion(6, "Wilf classes of (3,k)-pairs", check_wilf),
    Criterion(7, "|D_{n+1}(a)| local formulas", check_local_formulas),
    Criterion(8, "constructive-pair bijection and strictness", check_constructive),
    Criterion(9, "DP count equals enumeration", check_dp),
]


def run_all(level="quick", log=print):
    """Run every criterion; returns a list of result dicts."""
    results = []
    for crit in CRITERIA:
        start = time.perf_counter()
        try:
            ok, detail = crit.check(level)
        except Exception as exc:  # a crash is a failed criterion, not an aborted run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        results.append(
            {
                "criterion": crit.number,
                "name": crit.name,
                "ok": ok,
                "detail": detail,
                "seconds": round(elapsed, 2),
            }
        )
        if log:
            log(f"[{'PASS' if ok else 'FAIL'}] {crit.number}. {crit.name}: {detail} ({elapsed:.1f}s)")
    return results
