"""Text formats for plane graphs and failure/query scripts.

Graph file::

    planar <n> <m>
    e <id> <u> <v>          (m lines)
    v <id>: <dart> ...      (n lines, ccw; dart = <edge id>+ or <edge id>-)

``<id>+`` is the dart leaving ``u``; ``<id>-`` the one leaving ``v``.
``#`` starts a comment.

Script file, one command per line::

    FAILV <v> | FAILE <id> | BATCH <item> ... | Q <u> <v> | RESET

where a BATCH item is ``v<id>`` or ``e<id>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import GraphFormatError, PlanarConnError
from .planar_core import RotationGraph


def _strip(line: str) -> str:
    i = line.find("#")
    if i >= 0:
        line = line[:i]
    return line.strip()


def dumps_graph(g: RotationGraph) -> str:
    out = [f"planar {g.n} {g.m}"]
    for i, (a, b) in enumerate(g.endpoints):
        out.append(f"e {i} {a} {b}")
    for v, rot in enumerate(g.rotations):
        darts = " ".join(f"{d >> 1}{'-' if d & 1 else '+'}" for d in rot)
        out.append(f"v {v}: {darts}".rstrip())
    return "\n".join(out) + "\n"


def loads_graph(text: str) -> RotationGraph:
    header = None
    endpoints: dict[int, tuple[int, int]] = {}
    rotations: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        try:
            if header is None:
                if parts[0] != "planar" or len(parts) != 3:
                    raise GraphFormatError(lineno, "expected header 'planar <n> <m>'")
                header = (int(parts[1]), int(parts[2]))
            elif parts[0] == "e":
                if len(parts) != 4:
                    raise GraphFormatError(lineno, "expected 'e <id> <u> <v>'")
                i, a, b = int(parts[1]), int(parts[2]), int(parts[3])
                if i in endpoints:
                    raise GraphFormatError(lineno, f"edge {i} defined twice")
                if not (0 <= i < header[1]):
                    raise GraphFormatError(lineno, f"edge id {i} out of range")
                if not (0 <= a < header[0] and 0 <= b < header[0]):
                    raise GraphFormatError(lineno, f"edge {i} endpoint out of range")
                endpoints[i] = (a, b)
            elif parts[0] == "v":
                if not parts[1].endswith(":"):
                    raise GraphFormatError(lineno, "expected 'v <id>: <darts>'")
                v = int(parts[1][:-1])
                if v in rotations:
                    raise GraphFormatError(lineno, f"vertex {v} defined twice")
                if not (0 <= v < header[0]):
                    raise GraphFormatError(lineno, f"vertex id {v} out of range")
                darts = []
                for tok in parts[2:]:
                    if tok[-1] not in "+-":
                        raise GraphFormatError(lineno, f"bad dart {tok!r}")
                    e = int(tok[:-1])
                    if e not in endpoints:
                        raise GraphFormatError(lineno, f"dart {tok!r} names unknown edge {e}")
                    d = 2 * e + (1 if tok[-1] == "-" else 0)
                    tail = endpoints[e][d & 1]
                    if tail != v:
                        raise GraphFormatError(lineno, f"dart {tok!r} does not leave vertex {v}")
                    darts.append(d)
                rotations[v] = darts
            else:
                raise GraphFormatError(lineno, f"unknown record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(lineno, str(exc)) from None
    if header is None:
        raise GraphFormatError(0, "empty graph file")
    n, m = header
    if len(endpoints) != m:
        raise GraphFormatError(0, f"expected {m} edges, found {len(endpoints)}")
    if len(rotations) != n:
        raise GraphFormatError(0, f"expected {n} rotations, found {len(rotations)}")
    return RotationGraph(n, [rotations[v] for v in range(n)], [endpoints[i] for i in range(m)])


def save_graph(g: RotationGraph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_graph(g))


def load_graph(path: str) -> RotationGraph:
    with open(path) as fh:
        return loads_graph(fh.read())


@dataclass(frozen=True)
class Op:
    kind: str  # FAILV, FAILE, BATCH, Q, RESET
    args: tuple = ()


def loads_script(text: str) -> list[Op]:
    ops = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        cmd = parts[0].upper()
        try:
            if cmd in ("FAILV", "FAILE"):
                if len(parts) != 2:
                    raise GraphFormatError(lineno, f"{cmd} takes one argument")
                ops.append(Op(cmd, (int(parts[1]),)))
            elif cmd == "Q":
                if len(parts) != 3:
                    raise GraphFormatError(lineno, "Q takes two vertices")
                ops.append(Op("Q", (int(parts[1]), int(parts[2]))))
            elif cmd == "RESET":
                ops.append(Op("RESET"))
            elif cmd == "BATCH":
                items = []
                for tok in parts[1:]:
                    if tok[0] not in "ve":
                        raise GraphFormatError(lineno, f"bad batch item {tok!r}")
                    items.append((tok[0], int(tok[1:])))
                ops.append(Op("BATCH", tuple(items)))
            else:
                raise GraphFormatError(lineno, f"unknown command {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, PlanarConnError):
                raise
            raise GraphFormatError(lineno, str(exc)) from None
    return ops


def dumps_script(ops: Iterable[Op]) -> str:
    out = []
    for op in ops:
        if op.kind == "BATCH":
            out.append(" ".join(["BATCH"] + [f"{k}{x}" for k, x in op.args]))
        else:
            out.append(" ".join([op.kind] + [str(a) for a in op.args]))
    return "\n".join(out) + ("\n" if out else "")
