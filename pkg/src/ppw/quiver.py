"""Finite acyclic quivers, their double quivers and path enumeration."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property


class QuiverError(ValueError):
    """Malformed or forbidden quiver input."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """A finite quiver checked to have no loops and no directed cycles."""

    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("duplicate arrow id")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise QuiverError(f"arrow {a.name} uses an unknown vertex")
            if a.source == a.target:
                raise QuiverError(f"loop arrow {a.name} at vertex {a.source}")
        cycle = _find_cycle(self.vertices, self.arrows)
        if cycle:
            raise QuiverError("directed cycle " + " -> ".join(map(str, cycle)))

    @classmethod
    def build(cls, vertices, arrows) -> "Quiver":
        """``arrows`` is an iterable of (name, source, target)."""
        return cls(tuple(vertices), tuple(Arrow(*a) for a in arrows))

    def out_arrows(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def is_source(self, v: int) -> bool:
        return not self.in_arrows(v)

    def edge_count(self, u: int, v: int) -> int:
        return sum(1 for a in self.arrows if {a.source, a.target} == {u, v})

    @cached_property
    def double(self) -> "DoubleQuiver":
        return DoubleQuiver(self)

    def signature(self) -> tuple:
        return (self.vertices, tuple((a.name, a.source, a.target) for a in self.arrows))

    def to_text(self) -> str:
        vs = " ".join(map(str, self.vertices))
        arr = "; ".join(f"{a.name}: {a.source} -> {a.target}" for a in self.arrows)
        return f"vertices: {vs}\narrows: {arr}\n"


def _find_cycle(vertices, arrows) -> list[int] | None:
    succ = {v: [] for v in vertices}
    for a in arrows:
        succ[a.source].append(a.target)
    state = {v: 0 for v in vertices}
    stack: list[int] = []

    def dfs(v):
        state[v] = 1
        stack.append(v)
        for w in succ[v]:
            if state[w] == 1:
                return stack[stack.index(w):] + [w]
            if state[w] == 0:
                found = dfs(w)
                if found:
                    return found
        stack.pop()
        state[v] = 2
        return None

    for v in vertices:
        if state[v] == 0:
            found = dfs(v)
            if found:
                return found
    return None


_TOKEN = re.compile(r"\s*(?:(?P<arrow>->)|(?P<word>[A-Za-z_][\w']*|\d+)|(?P<punct>[:;,])|(?P<bad>\S))")


def parse_quiver(text: str) -> Quiver:
    """Parse ``vertices: 1 2; arrows: a: 1 -> 2; b: 2 -> 3``.

    Sections may be split over lines; ``#`` starts a comment.
    """
    tokens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            m = _TOKEN.match(line, pos)
            if m is None or m.end() == pos:
                break
            if m.group("bad"):
                raise QuiverError(f"parse error at line {lineno}, column {m.start('bad') + 1}: "
                                  f"unexpected {m.group('bad')!r}")
            kind = m.lastgroup
            tokens.append((kind, m.group(kind), lineno, m.start(kind) + 1))
            pos = m.end()

    def err(tok, msg):
        _, val, ln, col = tok
        raise QuiverError(f"parse error at line {ln}, column {col}: {msg} (got {val!r})")

    vertices: list[int] = []
    arrows: list[tuple[str, int, int]] = []
    i = 0
    section = None
    while i < len(tokens):
        kind, val, _, _ = tokens[i]
        if kind == "word" and val in ("vertices", "arrows") and i + 1 < len(tokens) \
                and tokens[i + 1][1] == ":":
            section = val
            i += 2
            continue
        if section is None:
            err(tokens[i], "expected 'vertices:' or 'arrows:'")
        if kind == "punct" and val in ";,":
            i += 1
            continue
        if section == "vertices":
            if not val.isdigit():
                err(tokens[i], "vertex ids must be positive integers")
            vertices.append(int(val))
            i += 1
        else:
            seq = tokens[i:i + 5]
            if len(seq) < 5 or seq[1][1] != ":" or seq[3][1] != "->":
                err(tokens[i], "expected '<name>: <src> -> <tgt>'")
            name, src, tgt = seq[0][1], seq[2][1], seq[4][1]
            if not (src.isdigit() and tgt.isdigit()):
                err(seq[2], "arrow endpoints must be vertex ids")
            arrows.append((name, int(src), int(tgt)))
            i += 5
    if not vertices:
        raise QuiverError("parse error: no vertices declared")
    return Quiver.build(vertices, arrows)


@dataclass(frozen=True)
class DArrow:
    """Arrow of the double quiver; ``deg`` is 1 exactly for starred arrows."""

    index: int
    name: str
    source: int
    target: int
    deg: int
    base: str

    @property
    def starred(self) -> bool:
        return self.deg == 1


class DoubleQuiver:
    """Q together with a reversed arrow ``name*`` of degree one per arrow."""

    def __init__(self, base: Quiver):
        self.base = base
        arrows = [DArrow(i, a.name, a.source, a.target, 0, a.name)
                  for i, a in enumerate(base.arrows)]
        n = len(arrows)
        arrows += [DArrow(n + i, a.name + "*", a.target, a.source, 1, a.name)
                   for i, a in enumerate(base.arrows)]
        self.arrows: tuple[DArrow, ...] = tuple(arrows)
        self.by_name = {a.name: a for a in self.arrows}
        self.vertices = base.vertices

    def star(self, a: DArrow) -> DArrow:
        n = len(self.base.arrows)
        return self.arrows[a.index + n] if a.index < n else self.arrows[a.index - n]

    def out_arrows(self, v: int) -> list[DArrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: int) -> list[DArrow]:
        return [a for a in self.arrows if a.target == v]

    def __eq__(self, other):
        return isinstance(other, DoubleQuiver) and self.base == other.base

    def __hash__(self):
        return hash(self.base)


@dataclass(frozen=True)
class Path:
    """Composable arrow sequence, read left to right (``ab`` is a then b)."""

    arrows: tuple[int, ...]
    source: int
    target: int
    degree: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    def names(self, dq: DoubleQuiver) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return " ".join(dq.arrows[i].name for i in self.arrows)

    def compose(self, other: "Path") -> "Path":
        if self.target != other.source:
            raise ValueError("paths do not compose")
        return Path(self.arrows + other.arrows, self.source, other.target,
                    self.degree + other.degree)


def trivial_path(v: int) -> Path:
    return Path((), v, v, 0)


def enumerate_paths(dq: DoubleQuiver, start: int, end: int, max_degree: int) -> list[Path]:
    """All paths start -> end with at most ``max_degree`` starred arrows.

    Ordered by length, then lexicographically by arrow index.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    found: list[Path] = []
    layer = [trivial_path(start)]
    while layer:
        found.extend(p for p in layer if p.target == end)
        nxt = []
        for p in layer:
            for a in dq.out_arrows(p.target):
                if p.degree + a.deg <= max_degree:
                    nxt.append(Path(p.arrows + (a.index,), start, a.target, p.degree + a.deg))
        layer = sorted(nxt, key=lambda q: q.arrows)
    return found


def topological_order(q: Quiver) -> list[int]:
    """Kahn's algorithm, always releasing the smallest available id."""
    indeg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indeg[a.target] += 1
    ready = sorted(v for v in q.vertices if indeg[v] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in q.out_arrows(v):
            indeg[a.target] -= 1
            if indeg[a.target] == 0:
                ready.append(a.target)
        ready.sort()
    return order


def admissible_coxeter_word(q: Quiver) -> tuple[int, ...]:
    """Vertex order with no path from a later vertex to an earlier one."""
    return tuple(topological_order(q))


def support_subquiver(q: Quiver, vs) -> Quiver:
    vs = set(vs)
    unknown = vs - set(q.vertices)
    if unknown:
        raise QuiverError(f"unknown vertex id {sorted(unknown)}")
    return Quiver(tuple(v for v in q.vertices if v in vs),
                  tuple(a for a in q.arrows if a.source in vs and a.target in vs))


def reflect_at(q: Quiver, v: int) -> Quiver:
    """Reverse every arrow at the source v; reversed arrows get a trailing prime."""
    if not q.is_source(v):
        raise QuiverError(f"vertex {v} is not a source")
    arrows = []
    for a in q.arrows:
        if a.source == v:
            arrows.append(Arrow(a.name + "'", a.target, v))
        else:
            arrows.append(a)
    return Quiver(q.vertices, tuple(arrows))


# ---------------------------------------------------------------- library

def linear_quiver(n: int) -> Quiver:
    """Type A_n with arrows i -> i+1."""
    return Quiver.build(range(1, n + 1), [(f"a{i}", i, i + 1) for i in range(1, n)])


def kronecker_quiver() -> Quiver:
    return Quiver.build([1, 2], [("a", 1, 2), ("b", 1, 2)])


def triangle_quiver() -> Quiver:
    """The three-vertex quiver 1 -> 2 -> 3 with an extra arrow 1 -> 3."""
    return Quiver.build([1, 2, 3], [("a", 1, 2), ("b", 2, 3), ("c", 1, 3)])


def d4_quiver() -> Quiver:
    return Quiver.build([1, 2, 3, 4], [("a", 1, 2), ("b", 3, 2), ("c", 4, 2)])


BUILTIN = {
    "A1": lambda: linear_quiver(1),
    "A2": lambda: linear_quiver(2),
    "A3": lambda: linear_quiver(3),
    "A4": lambda: linear_quiver(4),
    "D4": d4_quiver,
    "kronecker": kronecker_quiver,
    "triangle": triangle_quiver,
}

DYNKIN = {"A1", "A2", "A3", "A4", "D4"}


def builtin_quiver(name: str) -> Quiver:
    try:
        return BUILTIN[name]()
    except KeyError:
        raise QuiverError(f"unknown builtin quiver {name!r}; choose from {sorted(BUILTIN)}")
