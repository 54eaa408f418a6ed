"""The quiver Q_w, endomorphism algebras by structure constants, quotients by
factoring ideals, presentations by quiver and relations, global dimension.

Product convention in every table: ``x * y`` is "x then y", i.e. y o x for maps.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from . import modules as md
from .coxeter import CoxeterGroup, sortable_factorize, word_stats
from .linalg import Field, Subspace
from .modules import GradedModule, ModuleMap
from .quiver import Quiver, admissible_coxeter_word


class CapExceeded(RuntimeError):
    pass


class NotBasic(ValueError):
    pass


# ------------------------------------------------------------------ Q_w

@dataclass(frozen=True)
class QwArrow:
    kind: str     # "left", "Q" or "Q*"
    source: int
    target: int
    degree: int
    base: str = ""


@dataclass
class GradedQuiverPresentation:
    word: tuple
    types: tuple
    m: tuple
    arrows: list[QwArrow]

    @property
    def vertices(self) -> list[int]:
        return list(range(1, len(self.word) + 1))

    def negative(self) -> list[QwArrow]:
        return [a for a in self.arrows if a.degree < 0]

    def degree_formula(self, a: QwArrow) -> int:
        mi, mj = self.m[a.source - 1], self.m[a.target - 1]
        return {"left": 1, "Q": mi - mj, "Q*": mi - mj + 1}[a.kind]

    def to_text(self) -> str:
        lines = [f"vertices: {' '.join(f'{i}({u})' for i, u in enumerate(self.word, 1))}"]
        for a in self.arrows:
            lines.append(f"{a.kind:5s} {a.source} -> {a.target} deg {a.degree}"
                         + (f" [{a.base}]" if a.base else ""))
        return "\n".join(lines)


def build_Qw(q: Quiver, w) -> GradedQuiverPresentation:
    """Vertices 1..l typed by the letters of w, with left arrows, Q-arrows and Q*-arrows."""
    w = tuple(w)
    if not CoxeterGroup(q).is_reduced(w):
        raise ValueError(f"word {w} is not reduced")
    l = len(w)
    _, m = word_stats(w)

    def nxt(i):
        """Next position of the same type after i (or l + 1)."""
        return next((j for j in range(i + 1, l + 1) if w[j - 1] == w[i - 1]), l + 1)

    def last_of_type(u, lo, hi):
        found = [j for j in range(lo + 1, hi) if w[j - 1] == u]
        return found[-1] if found else None

    arrows = []
    for i in range(1, l + 1):
        prev = [j for j in range(1, i) if w[j - 1] == w[i - 1]]
        if prev:
            arrows.append(QwArrow("left", i, prev[-1], 1))
    for a in q.arrows:
        u, v = a.source, a.target
        for i in range(1, l + 1):
            if w[i - 1] == u:
                j = last_of_type(v, i, nxt(i))
                if j is not None:
                    arrows.append(QwArrow("Q", i, j, m[i - 1] - m[j - 1], a.name))
            if w[i - 1] == v:
                j = last_of_type(u, i, nxt(i))
                if j is not None:
                    arrows.append(QwArrow("Q*", i, j, m[i - 1] - m[j - 1] + 1, a.name))
    arrows.sort(key=lambda a: (a.source, a.target, a.kind, a.base))
    return GradedQuiverPresentation(w, w, m, arrows)


def negative_arrow_audit(P: GradedQuiverPresentation, q: Quiver | None = None) -> dict:
    """Negative arrows join last occurrences; arrows between other positions have degree 0.

    The statement needs w to be c-sortable; pass ``q`` to record that.
    """
    p, _ = word_stats(P.word)
    last = set(p.values())
    bad_negative, bad_nonzero = [], []
    for a in P.arrows:
        if a.kind == "left":
            continue
        ends_last = a.source in last and a.target in last
        if a.degree < 0 and not ends_last:
            bad_negative.append(a)
        if not ends_last and a.degree != 0:
            bad_nonzero.append(a)
    degree_ok = all(a.degree == P.degree_formula(a) for a in P.arrows)
    return {
        "negative": [(a.source, a.target, a.degree) for a in P.negative()],
        "violations": [(a.source, a.target, a.degree) for a in bad_negative + bad_nonzero],
        "degree_formula": degree_ok,
        "passed": not bad_negative and not bad_nonzero and degree_ok,
        "sortable": None if q is None else _is_sorting_word(q, P.word),
    }


def _is_sorting_word(q: Quiver, w) -> bool:
    f = sortable_factorize(q, w, admissible_coxeter_word(q))
    return bool(f) and tuple(f.word) == tuple(w)


# ------------------------------------------------------------------ tables

def vadd(F: Field, x: dict, y: dict, c=1) -> dict:
    out = dict(x)
    for k, v in y.items():
        s = F.red(out.get(k, 0) + c * v)
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


@dataclass
class AlgebraTable:
    """Finite-dimensional algebra by structure constants on a basis."""

    field: Field
    labels: list
    mult: dict                 # (i, j) -> sparse vector of basis_i * basis_j
    idempotents: list          # sparse vectors, one per vertex
    degrees: list | None = None
    components: list | None = None   # (a, b, shift) per basis element
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mul(self, x: dict, y: dict) -> dict:
        F = self.field
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.mult.get((i, j))
                if prod:
                    out = vadd(F, out, prod, a * b)
        return out

    def one(self) -> dict:
        out: dict = {}
        for e in self.idempotents:
            out = vadd(self.field, out, e)
        return out

    def check_associative(self) -> bool:
        n = self.dim
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.mult.get((i, j)) is None and self.mult.get((j, k)) is None:
                continue
            left = self.mul(self.mult.get((i, j), {}), {k: 1})
            right = self.mul({i: 1}, self.mult.get((j, k), {}))
            if vadd(self.field, left, right, -1):
                return False
        return True

    def check_idempotents(self) -> bool:
        es = self.idempotents
        for a, e in enumerate(es):
            for b, f in enumerate(es):
                p = self.mul(e, f)
                if vadd(self.field, p, e if a == b else {}, -1):
                    return False
        one = self.one()
        return all(not vadd(self.field, self.mul(one, {i: 1}), {i: 1}, -1) for i in range(self.dim))

    def left_matrix(self, x: dict) -> np.ndarray:
        n = self.dim
        m = la.zeros(n, n)
        for j in range(n):
            for k, c in self.mul(x, {j: 1}).items():
                m[k, j] = c
        return m

    def cartan(self) -> list[list[int]]:
        return [[self.piece_dim(a, b) for b in range(len(self.idempotents))]
                for a in range(len(self.idempotents))]

    def piece_dim(self, a: int, b: int) -> int:
        vecs = [self.mul(self.mul(self.idempotents[a], {i: 1}), self.idempotents[b])
                for i in range(self.dim)]
        return la.vectors_rank(self.field, [v for v in vecs if v])


class HomSpace:
    """A basis of maps with fast coordinate extraction."""

    def __init__(self, F: Field, maps: list[ModuleMap]):
        self.F = F
        self.maps = maps
        self.index: dict = {}
        flats = [f.flat() for f in maps]
        for v in flats:
            for k in v:
                self.index.setdefault(k, len(self.index))
        k = len(maps)
        if k == 0:
            return
        aug = la.zeros(k, len(self.index) + k)
        for i, v in enumerate(flats):
            for key, c in v.items():
                aug[i, self.index[key]] = c
            aug[i, len(self.index) + i] = 1
        r, piv = la.rref(F, aug)
        n = len(self.index)
        if any(p >= n for p in piv[:k]) or len(piv) < k:
            raise ValueError("maps are linearly dependent")
        self.pivots = piv[:k]
        self.G = r[:k, n:]

    def coords(self, f: ModuleMap) -> list:
        k = len(self.maps)
        flat = f.flat()
        if k == 0:
            if flat:
                raise ValueError("nonzero map in a zero Hom space")
            return []
        for key in flat:
            if key not in self.index:
                raise ValueError("map not in the span of the basis")
        inv = {v: key for key, v in self.index.items()}
        fp = [flat.get(inv[p], 0) for p in self.pivots]
        c = [self.F.red(sum(fp[j] * self.G[j, i] for j in range(k))) for i in range(k)]
        return c


def endomorphism_table(mods: list[GradedModule], shifts=(0,), name: str = "End",
                       over=None) -> AlgebraTable:
    """End of the direct sum of ``mods`` (maps of the given shifts)."""
    F = mods[0].field
    shifts = tuple(shifts)
    spaces = {}
    labels, comps, degrees = [], [], []
    offset = {}
    for a, X in enumerate(mods):
        for b, Y in enumerate(mods):
            for s in shifts:
                H = md.hom_graded(X, Y, s, over)
                spaces[(a, b, s)] = HomSpace(F, H)
                offset[(a, b, s)] = len(labels)
                for t in range(len(H)):
                    labels.append(f"{a}->{b}[{s}]#{t}")
                    comps.append((a, b, s))
                    degrees.append(s)
    mult = {}
    lo, hi = min(shifts), max(shifts)
    for (a, b, s1), H1 in spaces.items():
        for (b2, c, s2), H2 in spaces.items():
            if b2 != b:
                continue
            s = s1 + s2
            for i, x in enumerate(H1.maps):
                for j, y in enumerate(H2.maps):
                    prod = y.compose(x)
                    if prod.is_zero():
                        continue
                    if s < lo or s > hi or (a, c, s) not in spaces:
                        raise CapExceeded(f"shift window {shifts} too small for products")
                    co = spaces[(a, c, s)].coords(prod)
                    vec = {offset[(a, c, s)] + k: v for k, v in enumerate(co) if v}
                    if vec:
                        mult[(offset[(a, b, s1)] + i, offset[(b, c, s2)] + j)] = vec
    idem = []
    for a, X in enumerate(mods):
        if (a, a, 0) not in spaces or not spaces[(a, a, 0)].maps:
            continue
        co = spaces[(a, a, 0)].coords(md.identity_map(X))
        idem.append({offset[(a, a, 0)] + k: v for k, v in enumerate(co) if v})
    T = AlgebraTable(F, labels, mult, idem, degrees, comps, name)
    T.spaces = spaces
    T.offset = offset
    T.modules = mods
    return T


def end_algebra_graded(mods: list[GradedModule], m: int, name: str = "End") -> AlgebraTable:
    """Graded End over shifts in [-(m+1), m+1]; the boundary pieces must vanish."""
    window = range(-(m + 1), m + 2)
    T = endomorphism_table(mods, window, name)
    for (a, b, s), H in T.spaces.items():
        if abs(s) == m + 1 and H.maps:
            raise CapExceeded("Hom does not vanish at the edge of the shift window")
    return T


# ------------------------------------------------------------------ ideals, quotients

def ideal_subspace(T: AlgebraTable, vectors: list[dict]) -> Subspace:
    n = T.dim
    rows = la.zeros(len(vectors), n)
    for i, v in enumerate(vectors):
        for k, c in v.items():
            rows[i, k] = c
    return Subspace.span(T.field, n, rows)


def factoring_vectors(T: AlgebraTable, through: list[GradedModule], over=None,
                      first_shifts=None) -> list[dict]:
    """Basis coordinates of g o f for f: X_a -> Y(s1), g: Y -> X_b(s - s1) over Y in ``through``.

    ``first_shifts`` limits s1; (0,) means factoring through add of ``through`` itself.
    """
    out = []
    mods = T.modules
    shifts = sorted({s for (_, _, s) in T.spaces})
    for Y in through:
        for a, X in enumerate(mods):
            for s1 in (shifts if first_shifts is None else first_shifts):
                fs = md.hom_graded(X, Y, s1, over)
                if not fs:
                    continue
                for b, Z in enumerate(mods):
                    for s in shifts:
                        key = (a, b, s)
                        if key not in T.spaces:
                            continue
                        # g: Y(s1) -> Z(s), i.e. a shift s - s1 map from Y
                        gs = md.hom_graded(Y, Z, s - s1, over)
                        for f in fs:
                            for g in gs:
                                prod = g.compose(f)
                                if prod.is_zero():
                                    continue
                                co = T.spaces[key].coords(prod)
                                out.append({T.offset[key] + k: v for k, v in enumerate(co) if v})
    return out


def projective_factoring_vectors(T: AlgebraTable) -> list[dict]:
    """Maps factoring through graded projectives, via covers of the targets."""
    out = []
    covers = {b: md.projective_cover(Z) for b, Z in enumerate(T.modules)}
    for (a, b, s), H in T.spaces.items():
        P, pi = covers[b]
        if P.is_zero():
            continue
        for g in md.hom_graded(T.modules[a], P, s):
            prod = md._shift_compose(pi, g)
            if prod.is_zero():
                continue
            co = H.coords(prod)
            out.append({T.offset[(a, b, s)] + k: v for k, v in enumerate(co) if v})
    return out


def quotient_table(T: AlgebraTable, I: Subspace, name: str = "") -> AlgebraTable:
    """T / I for a two-sided ideal I (checked)."""
    F = T.field
    n = T.dim
    qc = I.quotient_coords()
    proj = I.projection(F)
    pos = {c: i for i, c in enumerate(qc)}

    def red(vec: dict) -> dict:
        col = la.zeros(n, 1)
        for k, c in vec.items():
            col[k, 0] = c
        r = la.mul(F, proj, col)
        return {i: r[i, 0] for i in range(len(qc)) if r[i, 0]}

    # ideal check: basis * I and I * basis stay in I
    for r in range(I.dim):
        v = {k: I.rows[r, k] for k in range(n) if I.rows[r, k]}
        for i in range(n):
            for w in (T.mul({i: 1}, v), T.mul(v, {i: 1})):
                if w and red(w):
                    raise ValueError("subspace is not a two-sided ideal")
    mult = {}
    for i, ci in enumerate(qc):
        for j, cj in enumerate(qc):
            p = T.mult.get((ci, cj))
            if p:
                r = red(p)
                if r:
                    mult[(i, j)] = r
    idem = [r for r in (red(e) for e in T.idempotents) if r]
    Q = AlgebraTable(F, [T.labels[c] for c in qc], mult, idem,
                     [T.degrees[c] for c in qc] if T.degrees else None,
                     [T.components[c] for c in qc] if T.components else None,
                     name or f"{T.name}/I")
    Q.parent = T
    Q.reduce = red
    Q.kept = qc
    return Q


def stable_quotient(T: AlgebraTable, name: str = "A_w") -> AlgebraTable:
    return quotient_table(T, ideal_subspace(T, projective_factoring_vectors(T)), name)


def quotient_by_factoring(T: AlgebraTable, through: list[GradedModule], name: str = "") -> AlgebraTable:
    return quotient_table(T, ideal_subspace(T, factoring_vectors(T, through)), name)


def quotient_by_summands(T: AlgebraTable, positions: list[int], name: str = "") -> AlgebraTable:
    return quotient_by_factoring(T, [T.modules[i] for i in positions], name)


# ------------------------------------------------------------------ radical

def radical(T: AlgebraTable) -> Subspace:
    """Radical via the trace form of the regular representation (characteristic 0)."""
    F = T.field
    n = T.dim
    tau = [F.red(sum(T.mult.get((k, i), {}).get(k, 0) for k in range(n))) for i in range(n)]
    G = la.zeros(n, n)
    for (i, j), v in T.mult.items():
        G[i, j] = F.red(sum(c * tau[k] for k, c in v.items()))
    N = la.nullspace(F, G)
    return Subspace.span(F, n, N.T)


def _vec(row, n) -> dict:
    return {k: row[k] for k in range(n) if row[k]}


def _span_products(T: AlgebraTable, A: Subspace, B: Subspace) -> Subspace:
    n = T.dim
    vecs = []
    for r in range(A.dim):
        x = _vec(A.rows[r], n)
        for s in range(B.dim):
            p = T.mul(x, _vec(B.rows[s], n))
            if p:
                vecs.append(p)
    return ideal_subspace(T, vecs)


def radical_layers(T: AlgebraTable) -> list[int]:
    J = radical(T)
    layers = [T.dim - J.dim]
    cur = J
    while cur.dim:
        nxt = _span_products(T, cur, J)
        layers.append(cur.dim - nxt.dim)
        cur = nxt
    return layers


# ------------------------------------------------------------------ presentation

@dataclass
class Presentation:
    vertices: list[int]
    arrows: list[tuple[str, int, int, int | None]]  # name, source, target, degree
    relations: list[dict]                             # path (arrow names) -> coefficient
    field: Field
    dim: int = 0

    def relation_text(self, r: dict) -> str:
        terms = []
        for path, c in sorted(r.items(), key=lambda t: t[0]):
            word = "*".join(path)
            c = self.field.red(c)
            if self.field.p and c > self.field.p // 2:
                c = c - self.field.p
            if c == 1:
                terms.append(("+", word))
            elif c == -1:
                terms.append(("-", word))
            else:
                sign = "-" if c < 0 else "+"
                terms.append((sign, f"{abs(c)} {word}"))
        out = ""
        for i, (sign, t) in enumerate(terms):
            if i == 0:
                out = t if sign == "+" else f"-{t}"
            else:
                out += f" {sign} {t}"
        return out

    def to_text(self) -> str:
        vs = " ".join(f"v{v}" for v in self.vertices)
        arr = " ".join(f"{a}: v{s} -> v{t}" + (f" deg {d};" if d is not None else ";")
                       for a, s, t, d in self.arrows)
        rels = " ".join(self.relation_text(r) + ";" for r in self.relations)
        return f"quiver {{ {vs}; {arr} }} relations {{ {rels} }}"

    def relation_strings(self) -> list[str]:
        return [self.relation_text(r) for r in self.relations]


def _topological(n: int, edges) -> list[int] | None:
    indeg = {i: 0 for i in range(n)}
    succ = {i: [] for i in range(n)}
    for a, b in edges:
        if a != b:
            succ[a].append(b)
            indeg[b] += 1
        else:
            return None
    order, ready = [], sorted(i for i in range(n) if indeg[i] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    return order if len(order) == n else None


def _arrow_spaces(T: AlgebraTable) -> tuple[Subspace, dict]:
    """Radical and representatives of e_a (J/J^2) e_b for each pair of vertices."""
    F = T.field
    n = T.dim
    es = T.idempotents
    r = len(es)
    J = radical(T)
    if n - J.dim != r:
        raise NotBasic(f"A/rad has dimension {n - J.dim} but there are {r} idempotents")
    J2 = _span_products(T, J, J)
    spaces = {}
    for a in range(r):
        for b in range(r):
            vecs = [T.mul(T.mul(es[a], _vec(J.rows[k], n)), es[b]) for k in range(J.dim)]
            S = ideal_subspace(T, [v for v in vecs if v])
            vecs2 = [T.mul(T.mul(es[a], _vec(J2.rows[k], n)), es[b]) for k in range(J2.dim)]
            cur = ideal_subspace(T, [v for v in vecs2 if v])
            reps = []
            for k in range(S.dim):
                new = cur.add(F, S.rows[k:k + 1])
                if new.dim > cur.dim:
                    reps.append(_vec(S.rows[k], n))
                    cur = new
            if reps:
                spaces[(a, b)] = reps
    return J, spaces


def _degree_of(T: AlgebraTable, x: dict):
    if T.degrees is None:
        return None
    ds = {T.degrees[k] for k in x}
    return ds.pop() if len(ds) == 1 else None


def gabriel_arrows(T: AlgebraTable) -> list[tuple[int, int, int | None]]:
    """Arrows (source, target, degree) of the Gabriel quiver, vertices numbered from 1
    in idempotent order."""
    _, spaces = _arrow_spaces(T)
    return sorted((a + 1, b + 1, _degree_of(T, x)) for (a, b), xs in spaces.items() for x in xs)


def qw_matches_end_quiver(W, T: AlgebraTable | None = None) -> dict:
    """Compare Q_w with the graded Gabriel quiver of End(M) for M = sum of the M^i."""
    q, w = W.quiver, W.word
    if T is None:
        T = end_algebra_graded(md.summands_M(W), max(W.m, default=0))
    P = build_Qw(q, w)
    qw = sorted((a.source, a.target, a.degree) for a in P.arrows)
    end = gabriel_arrows(T)
    return {"qw": qw, "end": end, "passed": qw == end}


def presentation_from_table(T: AlgebraTable, cap: int = 400) -> Presentation:
    """Gabriel quiver from rad/rad^2 and a minimal set of relations by path length."""
    F = T.field
    n = T.dim
    if n > cap:
        raise CapExceeded(f"algebra dimension {n} exceeds cap {cap}")
    es = T.idempotents
    r = len(es)
    if n == 0:
        return Presentation([], [], [], F, 0)
    J, spaces = _arrow_spaces(T)
    order = _topological(r, spaces.keys())
    perm = order if order is not None else list(range(r))
    rank = {v: i for i, v in enumerate(perm)}
    if order is not None:
        _normalize_arrows(T, spaces, perm)
    multiple = any(len(v) > 1 for v in spaces.values())
    arrows = []
    letters = "abcdefghijklmnopqrstuvwxyz"
    seq = 0
    for (a, b) in sorted(spaces, key=lambda k: (rank[k[0]], rank[k[1]])):
        for t, x in enumerate(spaces[(a, b)]):
            if multiple:
                name = f"{letters[t]}_{rank[a] + 1}"
            else:
                name = letters[seq % 26] + ("" if seq < 26 else str(seq // 26))
                seq += 1
            arrows.append((name, a, b, _degree_of(T, x), x))
    relations = _relations(T, J, arrows, es)
    pres = Presentation([rank[v] + 1 for v in perm],
                        [(nm, rank[a] + 1, rank[b] + 1, d) for nm, a, b, d, _ in arrows],
                        relations, F, n)
    pres.sorted_vertices = sorted(pres.vertices)
    return pres


def _normalize_arrows(T: AlgebraTable, spaces: dict, order: list[int]) -> None:
    """Choose arrow bases so that a lone length-2 relation through a vertex reads
    x*y (one arrow each way) or a_1*a_2 - b_1*b_2 (two each way)."""
    F = T.field
    fixed = set()
    for j in order:
        ins = [k for k in spaces if k[1] == j]
        outs = [k for k in spaces if k[0] == j]
        for ko in outs:
            if ko in fixed:
                continue
            for ki in ins:
                xs, ys = spaces[ki], spaces[ko]
                if len(xs) != len(ys) or len(xs) not in (1, 2):
                    continue
                kern = _length_two_kernel(T, xs, ys)
                if kern is None or kern.shape[1] != 1:
                    continue
                B = kern[:, 0].reshape(len(xs), len(ys))
                if la.rank(F, B) != len(xs):
                    continue
                D = la.eye(len(xs))
                if len(xs) == 2:
                    D[1, 1] = -1
                Q = la.mul(F, la.inverse(F, B), D)
                Qi = la.inverse(F, Q)
                new = []
                for s in range(len(ys)):
                    v: dict = {}
                    for q in range(len(ys)):
                        if Qi[s, q]:
                            v = vadd(F, v, ys[q], Qi[s, q])
                    new.append(v)
                spaces[ko] = new
                fixed.add(ko)
                break
        for k in outs:
            fixed.add(k)


def _length_two_kernel(T: AlgebraTable, xs, ys):
    """Kernel of the multiplication k^{xs} (x) k^{ys} -> A, columns indexed by (p, q)."""
    F = T.field
    n = T.dim
    prods = [T.mul(x, y) for x in xs for y in ys]
    m = la.zeros(n, len(prods))
    for c, p in enumerate(prods):
        for k, v in p.items():
            m[k, c] = v
    return la.nullspace(F, m)


def _relations(T: AlgebraTable, J: Subspace, arrows, es) -> list[dict]:
    """Minimal relations, increasing in path length up to the Loewy length."""
    F = T.field
    n = T.dim
    loewy = len(radical_layers(T))
    by_source: dict = {}
    for entry in arrows:
        by_source.setdefault(entry[1], []).append(entry)
    # paths as (names, source, target, value)
    layer = [((nm,), a, b, x) for nm, a, b, d, x in arrows]
    all_paths = list(layer)
    for L in range(2, loewy + 1):
        nxt = []
        for names, a, b, val in layer:
            for nm, s, t, d, x in by_source.get(b, []):
                nxt.append((names + (nm,), a, t, T.mul(val, x)))
        layer = nxt
        all_paths += nxt
    arrow_names = {nm: (a, b) for nm, a, b, d, x in arrows}
    between = _paths_between(arrow_names, len(es), loewy)
    relations: list[dict] = []
    for L in range(2, loewy + 1):
        for a in range(len(es)):
            for b in range(len(es)):
                ps = [p for p in all_paths if p[1] == a and p[2] == b and 2 <= len(p[0]) <= L]
                if not any(len(p[0]) == L for p in ps):
                    continue
                m = la.zeros(n, len(ps))
                for c, p in enumerate(ps):
                    for k, v in p[3].items():
                        m[k, c] = v
                K = la.nullspace(F, m)
                if not K.shape[1]:
                    continue
                cons = _consequences(relations, arrow_names, between, a, b, L)
                have = _path_span(F, cons, ps)
                for c in range(K.shape[1]):
                    row = la.zeros(1, len(ps))
                    for i in range(len(ps)):
                        row[0, i] = K[i, c]
                    new = have.add(F, row)
                    if new.dim > have.dim:
                        have = new
                        relations.append(_monic(F, {ps[i][0]: K[i, c] for i in range(len(ps)) if K[i, c]}))
    return relations


def _monic(F: Field, vec: dict) -> dict:
    lead = min(vec)
    c = vec[lead]
    return {k: F.div(v, c) for k, v in vec.items()}


def _paths_between(arrow_names: dict, nverts: int, maxlen: int) -> dict:
    """(x, y, L) -> words of length L from x to y; length 0 gives the empty word."""
    out: dict = {}
    layer = [((), v, v) for v in range(nverts)]
    for L in range(0, maxlen + 1):
        for word, x, y in layer:
            out.setdefault((x, y, L), []).append(word)
        layer = [(word + (nm,), x, t) for word, x, y in layer
                 for nm, (s, t) in arrow_names.items() if s == y]
    return out


def _ends(r: dict, arrow_names: dict) -> tuple[int, int]:
    word = next(iter(r))
    return arrow_names[word[0]][0], arrow_names[word[-1]][1]


def _consequences(relations, arrow_names, between, a, b, L) -> list[dict]:
    """u * r * v from a to b for earlier relations r, terms of length <= L kept."""
    out = []
    for r in relations:
        x, y = _ends(r, arrow_names)
        rl = min(len(k) for k in r)
        for lpre in range(0, L - rl + 1):
            for pre in between.get((a, x, lpre), []):
                for lpost in range(0, L - rl - lpre + 1):
                    for post in between.get((y, b, lpost), []):
                        v = {pre + k + post: c for k, c in r.items() if len(k) + lpre + lpost <= L}
                        if v:
                            out.append(v)
    return out


def _path_span(F: Field, vecs: list[dict], ps) -> Subspace:
    idx = {p[0]: i for i, p in enumerate(ps)}
    rows = []
    for v in vecs:
        row = [0] * len(ps)
        for k, c in v.items():
            row[idx[k]] = c
        rows.append(row)
    return Subspace.span(F, len(ps), la.mat(rows, len(ps)) if rows else la.zeros(0, len(ps)))


def presented_dimension(pres: Presentation, max_len: int = 12) -> int:
    """dim of kQ/(relations) for relations homogeneous in path length."""
    F = pres.field
    arrow_names = {nm: (s - 1, t - 1) for nm, s, t, d in pres.arrows}
    nv = len(pres.vertices)
    between = _paths_between(arrow_names, nv, max_len)
    total = nv
    for L in range(1, max_len + 1):
        layer_total = 0
        for a in range(nv):
            for b in range(nv):
                words = between.get((a, b, L), [])
                if not words:
                    continue
                ps = [(w,) for w in words]
                cons = _consequences(pres.relations, arrow_names, between, a, b, L)
                cons = [{k: c for k, c in v.items() if len(k) == L} for v in cons]
                layer_total += len(ps) - _path_span(F, [v for v in cons if v], ps).dim
        if layer_total == 0:
            break
        total += layer_total
    return total


# ------------------------------------------------------------------ global dimension

def global_dimension(T: AlgebraTable, cap: int = 8) -> int | None:
    """max over simples of the projective dimension; None if some resolution exceeds cap."""
    F = T.field
    n = T.dim
    if n == 0:
        return 0
    J = radical(T)
    best = 0
    for i in range(len(T.idempotents)):
        pd = _projective_dimension_of_simple(T, J, i, cap)
        if pd is None:
            return None
        best = max(best, pd)
    return best


def _left_ideal_basis(T: AlgebraTable, e: dict) -> list[dict]:
    """Basis of A e."""
    vecs = [T.mul({k: 1}, e) for k in range(T.dim)]
    S = ideal_subspace(T, [v for v in vecs if v])
    return [_vec(S.rows[r], T.dim) for r in range(S.dim)]


def _projective_dimension_of_simple(T: AlgebraTable, J: Subspace, i: int, cap: int) -> int | None:
    F = T.field
    n = T.dim
    es = T.idempotents
    # Omega S_i = J e_i inside one copy of A
    Je = [T.mul(_vec(J.rows[r], n), es[i]) for r in range(J.dim)]
    N = _module_span(F, [[v] for v in Je if v], 1, n)
    steps = 0
    comps = 1
    while N:
        steps += 1
        if steps > cap:
            return None
        gens = _top_generators(T, J, N, comps, n)
        # cover: sum_g A e_{j_g} -> ambient, a -> a * n_g (left action)
        basis_cols = []
        labels = []
        for g, (j, vec) in enumerate(gens):
            for b in _left_ideal_basis(T, es[j]):
                img = [T.mul(b, comp) for comp in vec]
                labels.append((g, b))
                basis_cols.append(img)
        # kernel of the cover map
        m = la.zeros(comps * n, len(basis_cols))
        for c, img in enumerate(basis_cols):
            for t, comp in enumerate(img):
                for k, v in comp.items():
                    m[t * n + k, c] = v
        K = la.nullspace(F, m)
        newN = []
        for c in range(K.shape[1]):
            vec = [dict() for _ in gens]
            for r in range(K.shape[0]):
                if K[r, c]:
                    g, b = labels[r]
                    vec[g] = vadd(F, vec[g], b, K[r, c])
            newN.append(vec)
        comps = len(gens)
        N = _module_span(F, newN, comps, n)
    return steps


def _module_span(F: Field, vecs: list[list[dict]], comps: int, n: int) -> list[list[dict]]:
    if not vecs:
        return []
    rows = la.zeros(len(vecs), comps * n)
    for i, v in enumerate(vecs):
        for t, comp in enumerate(v):
            for k, c in comp.items():
                rows[i, t * n + k] = c
    S = Subspace.span(F, comps * n, rows)
    return [[_vec(S.rows[r, t * n:(t + 1) * n], n) for t in range(comps)] for r in range(S.dim)]


def _top_generators(T: AlgebraTable, J: Subspace, N: list[list[dict]], comps: int, n: int):
    """Elements of N, each in some e_j N, spanning N modulo J N."""
    F = T.field
    es = T.idempotents
    Jv = [_vec(J.rows[r], n) for r in range(J.dim)]
    JN = [[T.mul(j, comp) for comp in v] for j in Jv for v in N]
    rad = _module_span(F, [v for v in JN if any(v)], comps, n)
    cur = _as_subspace(F, rad, comps, n)
    gens = []
    for j, e in enumerate(es):
        eN = [[T.mul(e, comp) for comp in v] for v in N]
        for v in eN:
            if not any(v):
                continue
            row = _as_rows(F, [v], comps, n)
            new = cur.add(F, row)
            if new.dim > cur.dim:
                cur = new
                gens.append((j, v))
    total = _as_subspace(F, N, comps, n)
    if cur.dim != total.dim:
        raise AssertionError("top generators do not span")
    return gens


def _as_rows(F, vecs, comps, n):
    rows = la.zeros(len(vecs), comps * n)
    for i, v in enumerate(vecs):
        for t, comp in enumerate(v):
            for k, c in comp.items():
                rows[i, t * n + k] = c
    return rows


def _as_subspace(F, vecs, comps, n) -> Subspace:
    return Subspace.span(F, comps * n, _as_rows(F, vecs, comps, n))


# ------------------------------------------------------------------ comparisons

def restrict_degree_zero(f: ModuleMap, X0: GradedModule, Y0: GradedModule) -> ModuleMap:
    blocks = {(v, 0): f.blocks[(v, 0)] for (v, d) in X0.dims if (v, 0) in f.blocks}
    return ModuleMap(X0, Y0, 0, blocks)


def _in_span(F: Field, S: Subspace, vec: dict) -> bool:
    col = la.zeros(S.n, 1)
    for k, c in vec.items():
        col[k, 0] = c
    return S.contains(F, col)


def compare_F(W) -> dict:
    """Restriction to degree 0 as a map End^Z(M) -> End_kQ(M_0), checked on the quotients
    by maps through graded projectives and through add T, T = sum of (M^{p_u})_0."""
    from .hereditary import degree_zero
    M = md.summands_M(W)
    F = W.field
    T = endomorphism_table(M, name="End(M)")
    M0 = [degree_zero(X) for X in M]
    E0 = endomorphism_table(M0, name="End(M_0)")
    images = []
    for k, (a, b, s) in enumerate(T.components):
        f = T.spaces[(a, b, s)].maps[k - T.offset[(a, b, s)]]
        g = restrict_degree_zero(f, M0[a], M0[b])
        co = E0.spaces[(a, b, 0)].coords(g)
        images.append({E0.offset[(a, b, 0)] + t: c for t, c in enumerate(co) if c})

    def F_of(x: dict) -> dict:
        out: dict = {}
        for k, c in x.items():
            out = vadd(F, out, images[k], c)
        return out

    multiplicative = all(not vadd(F, F_of(v), E0.mul(images[i], images[j]), -1)
                         for (i, j), v in T.mult.items())
    multiplicative = multiplicative and all(
        not E0.mul(images[i], images[j]) for i in range(T.dim) for j in range(T.dim)
        if (i, j) not in T.mult)
    IP = ideal_subspace(T, projective_factoring_vectors(T))
    positions = md.projective_summand_positions(W)
    IT = ideal_subspace(E0, factoring_vectors(E0, [M0[p - 1] for p in positions]))
    ideal_ok = all(_in_span(F, IT, F_of(_vec(IP.rows[r], T.dim))) for r in range(IP.dim))
    # induced map on quotients
    qc = IP.quotient_coords()
    proj = IT.projection(F)
    cols = []
    for c in qc:
        col = la.zeros(E0.dim, 1)
        for k, v in images[c].items():
            col[k, 0] = v
        cols.append(la.mul(F, proj, col))
    mat = la.hstack(cols, proj.shape[0]) if cols else la.zeros(proj.shape[0], 0)
    rk = la.rank(F, mat) if cols else 0
    bijective = rk == len(qc) == proj.shape[0]
    return {
        "end_dim": T.dim, "end0_dim": E0.dim,
        "stable_dim": len(qc), "quotient_dim": proj.shape[0],
        "multiplicative": multiplicative, "ideal_maps_into": ideal_ok,
        "bijective": bijective,
        "passed": multiplicative and ideal_ok and bijective,
    }


def hereditary_quotient_Bw(W) -> AlgebraTable:
    """End_kQ(M_0) / [T]."""
    from .hereditary import degree_zero
    M0 = [degree_zero(X) for X in md.summands_M(W)]
    E0 = endomorphism_table(M0, name="End(M_0)")
    return quotient_by_summands(E0, [p - 1 for p in md.projective_summand_positions(W)], "B_w")


def stable_endomorphism_algebra(W) -> AlgebraTable:
    """A_w: the stable graded endomorphism algebra of M."""
    return stable_quotient(endomorphism_table(md.summands_M(W), name="End(M)"), "A_w")


def negative_degree_factoring(W) -> dict:
    """Every basis map M -> M(a), a < 0, factors through add P (P = sum of the M^{p_u})."""
    M = md.summands_M(W)
    T = end_algebra_graded(M, max(W.m, default=0))
    P = [M[p - 1] for p in md.projective_summand_positions(W)]
    I = ideal_subspace(T, factoring_vectors(T, P, first_shifts=(0,)))
    neg = [k for k, d in enumerate(T.degrees) if d < 0]
    bad = [T.labels[k] for k in neg if not _in_span(W.field, I, {k: 1})]
    return {"negative_maps": len(neg), "not_factoring": bad, "passed": not bad}


def reflection_reduction_check(q: Quiver, w, field=la.QQ) -> dict:
    """dim End^Z(M) / [M^1(i) | 0 <= i <= p_{u_1}] against dim End^Z(M') for w' = w minus
    its first letter over the quiver reflected at that letter (on the support subquiver)."""
    from .preproj import WordAlgebra
    from .quiver import reflect_at, support_subquiver
    w = tuple(w)
    sub = support_subquiver(q, set(w))
    v = w[0]
    if any(a.target == v for a in sub.arrows):
        raise ValueError(f"first letter {v} is not a source of the support subquiver")
    W = WordAlgebra(sub, w, field)
    M = md.summands_M(W)
    T = endomorphism_table(M)
    through = [md.shift(M[0], i) for i in range(0, W.p[v] + 1)]
    Q = quotient_by_factoring(T, through)
    if len(w) > 1:
        W2 = WordAlgebra(reflect_at(sub, v), w[1:], field)
        reduced = endomorphism_table(md.summands_M(W2)).dim
    else:
        reduced = 0
    return {"end": T.dim, "quotient": Q.dim, "reduced": reduced,
            "passed": Q.dim == reduced}


def algebra_invariants(T: AlgebraTable) -> dict:
    return {"dim": T.dim, "vertices": len(T.idempotents),
            "cartan": T.cartan(), "loewy": radical_layers(T)}


def same_algebra(A: AlgebraTable, B: AlgebraTable) -> dict:
    """Compare two basic algebras by dimension, radical layers and normalized presentation."""
    ia, ib = algebra_invariants(A), algebra_invariants(B)
    pa, pb = presentation_from_table(A), presentation_from_table(B)
    same = (ia["dim"] == ib["dim"] and ia["loewy"] == ib["loewy"]
            and sorted(map(sorted, ia["cartan"])) == sorted(map(sorted, ib["cartan"]))
            and pa.to_text() == pb.to_text())
    return {"a": pa.to_text(), "b": pb.to_text(), "invariants_a": ia,
            "invariants_b": ib, "same": same}
