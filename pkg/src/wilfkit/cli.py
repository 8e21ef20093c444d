"""Command line interface: ``wilfkit <command> ...``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .cache import ResultCache, make_key
from .compositions import (
    count_dominating,
    count_dominating_dp,
    dominates,
    enumerate_compositions,
    format_composition,
    leftmost_occurrence,
    parse_composition,
)
from .equivalence import (
    dom_equivalent,
    enumerate_classes,
    normal_form,
    oracle_equivalent,
    separation_witness,
    xi,
)
from .setpartitions import (
    avoiders,
    enumerate_partitions,
    format_rgf,
    parse_rgf,
)
from .verify import run_all
from .wilf import group_pairs

CACHE_ENV = "WILFKIT_CACHE"


class UsageError(Exception):
    pass


def _comp(text):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _rgf_list(values):
    pats = []
    for value in values:
        for tok in value.split(","):
            try:
                pats.append(parse_rgf(tok))
            except ValueError:
                raise UsageError(f"bad partition literal: offending token {tok!r}") from None
    return sorted(set(pats), key=lambda p: (len(p), p))


def _positive(name, n):
    if n < 1:
        raise UsageError(f"{name} must be positive, got {n}")
    return n


# Each command returns (cache_args or None, compute) where compute() gives a
# JSON-native payload. cache_args is the canonical argument encoding.


def cmd_partitions(args):
    n = _positive("n", args.n)

    def compute():
        items = [format_rgf(p) for p in enumerate_partitions(n)]
        out = {"n": n, "count": len(items)}
        if not args.count:
            out["partitions"] = items
        return out

    return None, compute


def cmd_avoiders(args):
    n = _positive("n", args.n)
    pats = _rgf_list(args.patterns)
    canon = {"n": n, "patterns": [format_rgf(p) for p in pats], "list": args.list}

    def compute():
        found = avoiders(n, pats)
        out = {"n": n, "patterns": canon["patterns"], "count": len(found)}
        if args.list:
            out["avoiders"] = [format_rgf(p) for p in found]
        return out

    return canon, compute


def cmd_compositions(args):
    n = _positive("n", args.n)

    def compute():
        items = [format_composition(a) for a in enumerate_compositions(n)]
        return {"n": n, "count": len(items), "compositions": items}

    return None, compute


def cmd_dominates(args):
    b, a = _comp(args.b), _comp(args.a)
    canon = {"b": format_composition(b), "a": format_composition(a)}

    def compute():
        occ = leftmost_occurrence(b, a)
        return {
            **canon,
            "dominates": dominates(b, a),
            "occurrence": None if occ is None else list(occ),
        }

    return canon, compute


def cmd_count_dom(args):
    n = _positive("n", args.n)
    a = _comp(args.a)
    method = "dp" if args.dp else "enum"
    canon = {"n": n, "a": format_composition(a), "method": method}

    def compute():
        count = count_dominating_dp(n, a) if args.dp else count_dominating(n, a)
        return {**canon, "count": count}

    return canon, compute


def cmd_normal_form(args):
    a = _comp(args.a)
    canon = {"a": format_composition(a)}

    def compute():
        return {**canon, "normal_form": format_composition(normal_form(a))}

    return canon, compute


def cmd_equiv(args):
    a, a2 = _comp(args.a), _comp(args.a2)
    n_max = args.nmax if args.nmax is not None else 2 * max(sum(a), sum(a2))
    if args.oracle and n_max < max(sum(a), sum(a2)):
        raise UsageError("--nmax must be at least the larger weight")
    canon = {
        "a": format_composition(a),
        "a2": format_composition(a2),
        "oracle": args.oracle,
        "n_max": n_max if args.oracle else None,
    }

    def compute():
        out = {
            "a": canon["a"],
            "a2": canon["a2"],
            "normal_forms": [
                format_composition(normal_form(a)),
                format_composition(normal_form(a2)),
            ],
            "equivalent": dom_equivalent(a, a2),
            "witness": separation_witness(a, a2),
        }
        if args.oracle:
            out["oracle_n_max"] = n_max
            out["oracle_equivalent"] = oracle_equivalent(a, a2, n_max)
        return out

    return canon, compute


def cmd_classes(args):
    k = _positive("k", args.k)
    canon = {"k": k}

    def compute():
        table = enumerate_classes(k)
        return {
            "k": k,
            "class_count": len(table),
            "classes": [
                {
                    "normal_form": format_composition(nf),
                    "members": [format_composition(a) for a in members],
                }
                for nf, members in table.items()
            ],
        }

    return canon, compute


def cmd_xi(args):
    k = _positive("k", args.k)
    return {"k": k}, lambda: {"k": k, "xi": xi(k)}


def cmd_wilf(args):
    k = args.k
    if k < 3:
        raise UsageError("wilf needs k >= 3")
    n_max = args.nmax if args.nmax is not None else 2 * k
    if n_max < 2 * k:
        raise UsageError("--nmax must be at least 2k")
    canon = {"k": k, "n_max": n_max}
    return canon, lambda: group_pairs(k, n_max).to_dict()


def cmd_verify(args):
    def compute():
        log = (lambda line: print(line, file=sys.stderr)) if args.progress else None
        results = run_all(args.level, log=log)
        for r in results:
            r.pop("seconds")
        return {
            "level": args.level,
            "ok": all(r["ok"] for r in results),
            "results": results,
        }

    return None, compute


def _plain(command, payload):
    if command in ("partitions", "compositions"):
        key = command if command in payload else None
        if key:
            return "\n".join(payload[key])
        return str(payload["count"])
    if command == "avoiders":
        if "avoiders" in payload:
            return "\n".join(payload["avoiders"] + [f"count {payload['count']}"])
        return str(payload["count"])
    if command == "dominates":
        return "true" if payload["dominates"] else "false"
    if command == "count-dom":
        return str(payload["count"])
    if command == "normal-form":
        return payload["normal_form"]
    if command == "equiv":
        lines = ["true" if payload["equivalent"] else "false"]
        lines.append("normal forms: " + " | ".join(payload["normal_forms"]))
        if payload["witness"] is not None:
            lines.append(f"witness n = {payload['witness']}")
        if "oracle_equivalent" in payload:
            lines.append(
                f"oracle (n <= {payload['oracle_n_max']}): "
                + ("true" if payload["oracle_equivalent"] else "false")
            )
        return "\n".join(lines)
    if command == "classes":
        return "\n".join(
            f"{c['normal_form']}: {' '.join(c['members'])}" for c in payload["classes"]
        )
    if command == "xi":
        return str(payload["xi"])
    if command == "wilf":
        lines = [
            f"k={payload['k']} n_max={payload['n_max']} classes={payload['class_count']} "
            f"expected={payload['expected_class_count']} verdict={payload['verdict']}"
        ]
        for c in payload["classes"]:
            seq = ",".join(map(str, c["sequence"]))
            lines.append(f"[{seq}] ({c['size']}) " + " ".join(c["pairs"]))
        lines.extend("problem: " + p for p in payload["problems"])
        return "\n".join(lines)
    if command == "verify":
        lines = [
            f"[{'PASS' if r['ok'] else 'FAIL'}] {r['criterion']}. {r['name']}: {r['detail']}"
            for r in payload["results"]
        ]
        lines.append("OK" if payload["ok"] else "FAILED")
        return "\n".join(lines)
    raise AssertionError(command)


def _csv_rows(command, payload):
    if command in ("partitions", "compositions"):
        if command not in payload:
            return ["n", "count"], [[payload["n"], payload["count"]]]
        return [command[:-1]], [[x] for x in payload[command]]
    if command == "avoiders":
        if "avoiders" in payload:
            return ["avoider"], [[x] for x in payload["avoiders"]]
        return ["n", "patterns", "count"], [[payload["n"], " ".join(payload["patterns"]), payload["count"]]]
    if command == "dominates":
        occ = payload["occurrence"]
        return ["b", "a", "dominates", "occurrence"], [
            [payload["b"], payload["a"], payload["dominates"], "" if occ is None else " ".join(map(str, occ))]
        ]
    if command == "count-dom":
        return ["n", "a", "method", "count"], [[payload[k] for k in ("n", "a", "method", "count")]]
    if command == "normal-form":
        return ["composition", "normal_form"], [[payload["a"], payload["normal_form"]]]
    if command == "equiv":
        return ["a", "a2", "equivalent", "witness"], [
            [payload["a"], payload["a2"], payload["equivalent"], payload["witness"] or ""]
        ]
    if command == "classes":
        return ["normal_form", "composition"], [
            [c["normal_form"], m] for c in payload["classes"] for m in c["members"]
        ]
    if command == "xi":
        return ["k", "xi"], [[payload["k"], payload["xi"]]]
    if command == "wilf":
        return ["class", "sequence", "size", "pairs"], [
            [i, " ".join(map(str, c["sequence"])), c["size"], " ".join(c["pairs"])]
            for i, c in enumerate(payload["classes"], start=1)
        ]
    if command == "verify":
        return ["criterion", "name", "ok", "detail"], [
            [r["criterion"], r["name"], r["ok"], r["detail"]] for r in payload["results"]
        ]
    raise AssertionError(command)


def render(command, payload, fmt):
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2)
    if fmt == "csv":
        header, rows = _csv_rows(command, payload)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return _plain(command, payload)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    common.add_argument("--cache", metavar="PATH", help=f"result cache file (env {CACHE_ENV} overrides)")

    parser = argparse.ArgumentParser(
        prog="wilfkit",
        description="Pattern avoidance in set partitions and dominating compositions.",
    )
    parser.add_argument("--version", action="version", version=f"wilfkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("partitions", cmd_partitions, "list set partitions of [n] as RGFs")
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true", help="only print the count")

    p = add("avoiders", cmd_avoiders, "count partitions of [n] avoiding patterns")
    p.add_argument("n", type=int)
    p.add_argument("--patterns", action="append", required=True, help="comma-separated RGFs, e.g. 121,1123")
    p.add_argument("--list", action="store_true", help="also list the avoiders")

    p = add("compositions", cmd_compositions, "list compositions of n")
    p.add_argument("n", type=int)

    p = add("dominates", cmd_dominates, "does composition b dominate a")
    p.add_argument("b")
    p.add_argument("a")

    p = add("count-dom", cmd_count_dom, "|D_n(a)|")
    p.add_argument("n", type=int)
    p.add_argument("a")
    p.add_argument("--dp", action="store_true", help="use the DP counter")

    p = add("normal-form", cmd_normal_form, "2-free partition of a composition")
    p.add_argument("a")

    p = add("equiv", cmd_equiv, "dominating equivalence of two compositions")
    p.add_argument("a")
    p.add_argument("a2")
    p.add_argument("--oracle", action="store_true", help="also compare counts directly")
    p.add_argument("--nmax", type=int)

    p = add("classes", cmd_classes, "dominating-equivalence classes of compositions of k")
    p.add_argument("k", type=int)

    p = add("xi", cmd_xi, "number of classes p(k) - p(k-2)")
    p.add_argument("k", type=int)

    p = add("wilf", cmd_wilf, "Wilf classes of (3,k)-pairs")
    p.add_argument("k", type=int)
    p.add_argument("--nmax", type=int)

    p = add("verify", cmd_verify, "run the verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--progress", action="store_true", help="log each criterion to stderr")
    return parser


def run(argv=None, out=None):
    """Run the CLI; returns the exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cache_args, compute = args.func(args)
    except UsageError as exc:
        print(f"wilfkit {args.command}: error: {exc}", file=sys.stderr)
        return 2

    cache_path = os.environ.get(CACHE_ENV) or args.cache
    cache = ResultCache(cache_path) if cache_path and cache_args is not None else None
    payload = None
    if cache is not None:
        key = make_key(args.command, cache_args)
        payload = cache.get(key)
    if payload is None:
        # round-trip so cold and cached runs render from identical data
        payload = json.loads(json.dumps(compute()))
        if cache is not None:
            cache.put(key, payload)

    print(render(args.command, payload, args.format), file=out)
    if args.command == "verify" and not payload["ok"]:
        return 1
    if args.command == "wilf" and payload["verdict"] != "OK":
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
