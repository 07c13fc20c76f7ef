"""Command-line front door with stable JSON output.

Exit codes: 0 success, 2 input validation failure, 3 internal-invariant
failure (an engine dead end, reported with its recursion trace).
Result payloads are deterministic; run metadata lives under "meta".
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import io
from .classify import verdict
from .enumeration import (
    KERNEL,
    brute_force_extend,
    enumerate_disk_triangulations,
    safety_probe,
)
from .errors import InternalInvariantError, ValidationError
from .extend import theorem_main_extend
from .gadgets import gadget_for


def _emit(obj) -> None:
    sys.stdout.write(io.dumps(obj))


def _load_json(path: str | None, inline: str | None, what: str) -> dict:
    if (path is None) == (inline is None):
        raise ValidationError("cli-args", f"pass exactly one of --{what} or --{what}-json")
    try:
        if path is not None:
            with open(path) as fh:
                return json.load(fh)
        return json.loads(inline)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError("cli-args", f"cannot read {what}: {exc}")


def _cmd_classify(args) -> int:
    c = io.colouring_from_json(_load_json(args.colouring, args.colouring_json, "colouring"))
    kind, witness = verdict(c)
    _emit(io.verdict_to_json(kind, witness))
    return 0


def _cmd_witness(args) -> int:
    from .classify import is_bad

    c = io.colouring_from_json(_load_json(args.colouring, args.colouring_json, "colouring"))
    w = is_bad(c)
    if w is None:
        _emit({"refusal": "not-bad"})
        return 2
    gadget = gadget_for(c, w)
    extension = brute_force_extend(c, gadget.graph)
    _emit(
        {
            "witness": {"condition": w.condition, "indices": list(w.indices)},
            "kind": gadget.kind,
            "gadget": io.graph_to_json(gadget.graph, k=c.k),
            "oracle_extension": None
            if extension is None
            else io.colouring_map_to_json(extension),
        }
    )
    return 0


def _cmd_extend(args) -> int:
    c = io.colouring_from_json(_load_json(args.colouring, args.colouring_json, "colouring"))
    g = io.graph_from_json(_load_json(args.graph, args.graph_json, "graph"))
    try:
        col = theorem_main_extend(c, g)
    except ValidationError as exc:
        if exc.code in ("not-good", "not-chordless"):
            _emit({"refusal": exc.code})
            return 2
        raise
    _emit({"k": c.k, "colouring": io.colouring_map_to_json(col)})
    return 0


def _cmd_probe(args) -> int:
    c = io.colouring_from_json(_load_json(args.colouring, args.colouring_json, "colouring"))
    t0 = time.monotonic()
    v = safety_probe(c, args.nmax, jobs=args.jobs)
    result = {
        "outcome": v.outcome,
        "n_max": v.n_max,
        "counterexample": None
        if v.counterexample is None
        else io.graph_to_json(v.counterexample, k=c.k),
        "meta": {"scanned": v.scanned, "wall_time": round(time.monotonic() - t0, 3)},
    }
    _emit(result)
    return 0


def _cmd_enumerate(args) -> int:
    for g in enumerate_disk_triangulations(args.l, args.n, chordless_only=args.chordless):
        _emit(io.graph_to_json(g, k=args.k))
    return 0


def _cmd_selftest(args) -> int:
    from .selftest import run_criteria

    only = None
    if args.only:
        only = {int(x) for x in args.only.split(",")}
    results = []
    all_ok = True
    for number, name, ok, detail in run_criteria(only):
        all_ok &= ok
        results.append({"criterion": number, "name": name, "passed": ok, "detail": detail})
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} ({detail})", file=sys.stderr)
    _emit({"kernel": KERNEL, "criteria": results, "passed": all_ok})
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="safecycle",
        description="Classify cycle precolourings, build unsafety witnesses, "
        "extend good colourings, and probe safety by exhaustive search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_colouring(p):
        p.add_argument("--colouring", help="path to a colouring JSON file")
        p.add_argument("--colouring-json", help="inline colouring JSON")

    p = sub.add_parser("classify", help="bad / good / neither verdict")
    add_colouring(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("witness", help="unsafety gadget for a bad colouring")
    add_colouring(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("extend", help="extend a good colouring over a chordless graph")
    add_colouring(p)
    p.add_argument("--graph", help="path to a graph JSON file")
    p.add_argument("--graph-json", help="inline graph JSON")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("probe", help="search for a non-extendable triangulation")
    add_colouring(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("enumerate", help="stream disk triangulations as JSON lines")
    p.add_argument("--l", type=int, required=True, help="boundary length")
    p.add_argument("--n", type=int, required=True, help="internal vertex count")
    p.add_argument("--chordless", action="store_true")
    p.add_argument("--k", type=int, help="palette size to stamp on each graph")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        _emit({"error": {"code": exc.code, "detail": exc.detail}})
        return 2
    except InternalInvariantError as exc:
        _emit({"error": {"code": "internal-invariant", **exc.trace_json()}})
        return 3


if __name__ == "__main__":
    sys.exit(main())
