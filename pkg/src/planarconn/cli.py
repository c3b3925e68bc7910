"""Command line entry point: check, gen, run, fuzz, bench.

Exit codes: 0 success, 1 mismatch or invalid input, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from . import generators as gens
from .errors import BadParams, PlanarConnError
from .formats import dumps_graph, dumps_script, load_graph, loads_script
from .session import MODES, ScriptError, Session, fuzz, run_script


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planarconn", description="Connectivity oracles for plane graphs under failures.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="validate a graph file")
    c.add_argument("graph")

    g = sub.add_parser("gen", help="write a seeded random graph")
    g.add_argument("--model", required=True, choices=gens.MODELS)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")

    r = sub.add_parser("run", help="replay a script and print query answers")
    r.add_argument("--mode", required=True, choices=MODES)
    r.add_argument("--graph", required=True)
    r.add_argument("--script", required=True)
    r.add_argument("--verify", action="store_true", help="shadow every answer with brute force")

    f = sub.add_parser("fuzz", help="randomized differential testing against brute force")
    f.add_argument("--mode", required=True, choices=MODES)
    f.add_argument("--trials", type=int, default=100)
    f.add_argument("--n", type=int, default=32)
    f.add_argument("--dmax", type=int, default=8)
    f.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("bench", help="per-operation wall time as CSV")
    b.add_argument("--mode", required=True, choices=MODES)
    b.add_argument("--graph", required=True)
    b.add_argument("--script", required=True)
    b.add_argument("--csv", required=True)
    return p


def _load(args):
    g = load_graph(args.graph)
    with open(args.script) as fh:
        ops = loads_script(fh.read())
    return g, ops


def _check(args) -> int:
    g = load_graph(args.graph)
    print(f"ok: n={g.n} m={g.m} faces={g.num_faces}")
    return 0


def _gen(args) -> int:
    if args.n < 3:
        raise BadParams("n must be at least 3")
    text = dumps_graph(gens.gen(args.model, args.n, args.seed))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _run(args) -> int:
    g, ops = _load(args)
    answers, bad = run_script(args.mode, g, ops, verify=args.verify)
    for a in answers:
        print(a)
    if bad is not None:
        i, got, want = bad
        print(f"mismatch at command {i + 1} ({dumps_script([ops[i]]).strip()}): got {got}, expected {want}",
              file=sys.stderr)
        return 1
    return 0


def _fuzz(args) -> int:
    rep = fuzz(args.mode, args.trials, args.n, args.dmax, args.seed)
    if rep.failure is None:
        print(f"ok: {rep.trials} trials, {rep.queries} queries, mode {args.mode}")
        return 0
    t, g, ops = rep.failure
    print(f"mismatch in trial {t}; reproducer follows", file=sys.stderr)
    print("# graph")
    sys.stdout.write(dumps_graph(g))
    print("# script")
    sys.stdout.write(dumps_script(ops))
    return 1


def _bench(args) -> int:
    g, ops = _load(args)
    s = Session(args.mode, g)
    clock = time.perf_counter_ns
    with open(args.csv, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["op", "index", "nanos"])
        for i, op in enumerate(ops):
            t0 = clock()
            s.execute(op)
            w.writerow([op.kind, i, clock() - t0])
    return 0


COMMANDS = {"check": _check, "gen": _gen, "run": _run, "fuzz": _fuzz, "bench": _bench}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except (ScriptError, BadParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PlanarConnError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
