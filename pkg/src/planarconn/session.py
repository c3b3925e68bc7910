"""Script replay over any oracle, plus randomized differential fuzzing.

Batch modes (``edge``, ``tri``, ``general-d``) re-run their update with the
whole current failure set after every failure command; ``BATCH`` replaces
the set.  Incremental modes (``decremental``, ``general-dyn``) apply each
failure as it comes; ``RESET`` rebuilds them.  A query naming a failed
vertex answers ``0`` in every mode.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import generators as gens
from .brute import brute_connected
from .decremental import DecrementalOracle
from .dynamic_reduction import DynamicOracle
from .edge_oracle import EdgeFailureOracle
from .errors import BadParams
from .formats import Op
from .planar_core import RotationGraph
from .reduction_d import GeneralOracle
from .tri_oracle import TriOracle

MODES = ("edge", "tri", "decremental", "general-d", "general-dyn", "brute")
BATCH_MODES = {"edge": EdgeFailureOracle, "tri": TriOracle, "general-d": GeneralOracle}
INCREMENTAL_MODES = {"decremental": DecrementalOracle, "general-dyn": DynamicOracle}


class ScriptError(BadParams):
    """A script command the chosen mode cannot execute."""


@dataclass
class Session:
    mode: str
    g: RotationGraph
    fv: set[int] = field(default_factory=set)
    fe: set[int] = field(default_factory=set)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise BadParams(f"unknown mode {self.mode!r}")
        self.oracle = self._fresh()

    def _fresh(self):
        if self.mode in BATCH_MODES:
            return BATCH_MODES[self.mode](self.g)
        if self.mode in INCREMENTAL_MODES:
            return INCREMENTAL_MODES[self.mode](self.g)
        return None

    def _check_items(self, items) -> None:
        for kind, x in items:
            limit = self.g.n if kind == "v" else self.g.m
            if not 0 <= x < limit:
                raise ScriptError(f"{'vertex' if kind == 'v' else 'edge'} {x} does not exist")
            if kind == "v" and self.mode == "edge":
                raise ScriptError("edge mode accepts edge failures only")

    def _fail(self, items) -> None:
        self._check_items(items)
        if self.mode in INCREMENTAL_MODES:
            for kind, x in items:
                if x in (self.fv if kind == "v" else self.fe):
                    continue
                (self.oracle.fail_vertex if kind == "v" else self.oracle.fail_edge)(x)
        for kind, x in items:
            (self.fv if kind == "v" else self.fe).add(x)
        self._push()

    def _push(self) -> None:
        if self.mode == "edge":
            self.oracle.update(self.fe)
        elif self.mode in BATCH_MODES:
            self.oracle.update(vertices=self.fv, edges=self.fe)

    def execute(self, op: Op) -> str | None:
        """Run one command; queries return ``"1"`` or ``"0"``."""
        if op.kind == "FAILV":
            self._fail([("v", op.args[0])])
        elif op.kind == "FAILE":
            self._fail([("e", op.args[0])])
        elif op.kind == "BATCH":
            if self.mode in INCREMENTAL_MODES:
                self._fail(op.args)
            else:
                self._check_items(op.args)
                self.fv = {x for k, x in op.args if k == "v"}
                self.fe = {x for k, x in op.args if k == "e"}
                self._push()
        elif op.kind == "RESET":
            self.fv, self.fe = set(), set()
            if self.mode in INCREMENTAL_MODES:
                self.oracle = self._fresh()
            else:
                self._push()
        elif op.kind == "Q":
            u, v = op.args
            for x in (u, v):
                if not 0 <= x < self.g.n:
                    raise ScriptError(f"vertex {x} does not exist")
            return "1" if self.connected(u, v) else "0"
        return None

    def connected(self, u: int, v: int) -> bool:
        if u in self.fv or v in self.fv:
            return False
        if self.oracle is None:
            return brute_connected(self.g, self.fv, self.fe, u, v)
        return self.oracle.connected(u, v)


def run_script(mode: str, g: RotationGraph, ops: list[Op], verify: bool = False):
    """Replay ``ops``; returns the answers and, with ``verify``, the first
    ``(op index, got, expected)`` disagreement with brute force (or None)."""
    s = Session(mode, g)
    shadow = Session("brute", g) if verify else None
    answers = []
    for i, op in enumerate(ops):
        out = s.execute(op)
        if shadow is not None:
            ref = shadow.execute(op)
            if out != ref:
                return answers, (i, out, ref)
        if out is not None:
            answers.append(out)
    return answers, None


# -- fuzzing -----------------------------------------------------------------
def fuzz_graph(mode: str, n: int, rng: random.Random) -> RotationGraph:
    if mode in ("tri", "decremental"):
        pick = rng.random()
        if pick < 0.1:
            return gens.wheel(max(n, 4))
        if pick < 0.15:
            return gens.cube()
        return gens.triangulation(max(n, 4), rng)
    if mode == "general-dyn" and rng.random() < 0.5:
        return gens.nested_biconnected(max(n, 3), rng)
    return gens.planar_general(max(n, 3), rng)


def fuzz_script(mode: str, g: RotationGraph, dmax: int, rng: random.Random, queries: int = 10) -> list[Op]:
    kinds = "e" if mode == "edge" else "ve"
    items = [(k, x) for k in kinds for x in range(g.n if k == "v" else g.m)]
    rng.shuffle(items)
    chosen = items[: rng.randint(1, max(1, min(dmax, len(items))))]

    def query() -> Op:
        return Op("Q", (rng.randrange(g.n), rng.randrange(g.n)))

    if mode in INCREMENTAL_MODES:
        ops = []
        for kind, x in chosen:
            ops.append(Op("FAILV" if kind == "v" else "FAILE", (x,)))
            ops.extend(query() for _ in range(max(1, queries // len(chosen))))
        return ops
    return [Op("BATCH", tuple(chosen))] + [query() for _ in range(queries)]


def shrink(mode: str, g: RotationGraph, ops: list[Op]) -> list[Op]:
    """Drop commands and batch items while the script still disagrees."""

    def fails(candidate: list[Op]) -> bool:
        try:
            return run_script(mode, g, candidate, verify=True)[1] is not None
        except Exception:
            return False

    ops = list(ops)
    changed = True
    while changed:
        changed = False
        for i in range(len(ops) - 1, -1, -1):
            trial = ops[:i] + ops[i + 1:]
            if fails(trial):
                ops, changed = trial, True
                continue
            op = ops[i]
            if op.kind == "BATCH" and len(op.args) > 1:
                for j in range(len(op.args) - 1, -1, -1):
                    smaller = Op("BATCH", op.args[:j] + op.args[j + 1:])
                    trial = ops[:i] + [smaller] + ops[i + 1:]
                    if fails(trial):
                        ops[i], op, changed = smaller, smaller, True
    return ops


@dataclass
class FuzzReport:
    trials: int = 0
    queries: int = 0
    failure: tuple[int, RotationGraph, list[Op]] | None = None


def fuzz(mode: str, trials: int, n: int, dmax: int, seed: int, *, n_min: int | None = None) -> FuzzReport:
    """Differential trials against brute force; stops at the first mismatch.

    Graph sizes are drawn from ``[n_min, n]`` (default: exactly ``n``).
    """
    rng = random.Random(seed)
    report = FuzzReport()
    lo = n if n_min is None else n_min
    for t in range(trials):
        g = fuzz_graph(mode, rng.randint(lo, n), rng)
        ops = fuzz_script(mode, g, dmax, rng)
        answers, bad = run_script(mode, g, ops, verify=True)
        report.trials += 1
        report.queries += len(answers)
        if bad is not None:
            report.failure = (t, g, shrink(mode, g, ops))
            break
    return report
