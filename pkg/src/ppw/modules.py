"""Graded modules over quotients of preprojective algebras.

Conventions: modules are left modules and a path ``ab`` means a then b, so
an arrow x: b -> a acts as a map X_{a, d} -> X_{b, d + deg x}, i.e. from
the space at its target to the space at its source.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .linalg import Subspace
from .preproj import GradedAlgebra, GradedIdeal, OwnerMismatch, WordAlgebra, quotient_algebra

VD = tuple[int, int]  # (vertex, degree)


class NotInSub(ValueError):
    pass


def owner_key(A: GradedAlgebra) -> tuple:
    return (A.label, A.quiver.signature(), A.field.name)


class GradedModule:
    """Spaces X_{v,d} and arrow actions keyed by (arrow name, degree)."""

    def __init__(self, owner: GradedAlgebra, dims: dict, act: dict, name: str = "",
                 labels: dict | None = None):
        self.owner = owner
        self.field = owner.field
        self.dq = owner.dq
        self.dims: dict[VD, int] = {k: n for k, n in dims.items() if n}
        self.act: dict[tuple[str, int], np.ndarray] = {}
        for (x, d), m in act.items():
            arr = self.dq.by_name[x]
            src = (arr.target, d)
            tgt = (arr.source, d + arr.deg)
            if src in self.dims and tgt in self.dims and not la.is_zero(m):
                assert m.shape == (self.dims[tgt], self.dims[src]), (x, d, m.shape)
                self.act[(x, d)] = m
        self.name = name
        self.labels = labels or {}

    # -------------------------------------------------------------- access
    def dim_at(self, v: int, d: int) -> int:
        return self.dims.get((v, d), 0)

    def action(self, x: str, d: int) -> np.ndarray:
        arr = self.dq.by_name[x]
        m = self.act.get((x, d))
        if m is None:
            return la.zeros(self.dim_at(arr.source, d + arr.deg), self.dim_at(arr.target, d))
        return m

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return not self.dims

    def degrees(self) -> list[int]:
        return sorted({d for _, d in self.dims})

    @property
    def lo(self) -> int:
        return min((d for _, d in self.dims), default=0)

    @property
    def hi(self) -> int:
        return max((d for _, d in self.dims), default=-1)

    def dim_vector(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for (v, _), n in self.dims.items():
            out[v] += n
        return dict(out)

    def graded_dims(self) -> dict[VD, int]:
        return dict(sorted(self.dims.items()))

    def keys(self) -> list[VD]:
        return sorted(self.dims, key=lambda k: (k[1], k[0]))

    def path_action(self, path: tuple, d: int) -> np.ndarray:
        """Matrix of a path (arrow indices, left to right) acting from degree d."""
        F = self.field
        arrows = [self.dq.arrows[i] for i in path]
        if not arrows:
            raise ValueError("empty path")
        op = None
        deg = d
        for arr in reversed(arrows):
            m = self.action(arr.name, deg)
            op = m if op is None else la.mul(F, m, op)
            deg += arr.deg
        return op

    # -------------------------------------------------------------- checks
    def check_relations(self) -> bool:
        F = self.field
        base = [a for a in self.dq.arrows if not a.starred]
        for (v, d), n in self.dims.items():
            total = la.zeros(self.dim_at(v, d + 1), n)
            for a in base:
                st = self.dq.star(a)
                if a.source == v:
                    total = total + la.mul(F, self.action(a.name, d + 1), self.action(st.name, d))
                if a.target == v:
                    total = total - la.mul(F, self.action(st.name, d), self.action(a.name, d))
            if not la.is_zero(la.reduce_array(F, total)):
                return False
        return True

    def annihilated_by(self, I: GradedIdeal) -> bool:
        """Every element of the ideal (in the common parent algebra) acts as zero."""
        F = self.field
        A = I.owner
        for key, s in I.sub.items():
            a, b, L, e = key
            if L == 0:
                for d in self.degrees():
                    if self.dim_at(b, d):
                        return False
                continue
            for d in self.degrees():
                if not self.dim_at(b, d) or not self.dim_at(a, d + e):
                    continue
                ops = [self.path_action(m, d) for m in A.comps[key]]
                for r in range(s.dim):
                    total = la.zeros(self.dim_at(a, d + e), self.dim_at(b, d))
                    for c, op in zip(s.rows[r], ops):
                        if c:
                            total = total + c * op
                    if not la.is_zero(la.reduce_array(F, total)):
                        return False
        return True

    def to_json(self) -> dict:
        F = self.field
        return {
            "owner": self.owner.label,
            "dims": [{"vertex": v, "degree": d, "dim": n} for (v, d), n in sorted(self.dims.items())],
            "arrows": [{"arrow": x, "degree": d,
                        "matrix": [[F.fmt(c) for c in row] for row in m]}
                       for (x, d), m in sorted(self.act.items())],
        }

    def __repr__(self):
        return f"GradedModule({self.name or '?'}, dim={self.total_dim})"


def module_from_json(owner: GradedAlgebra, data: dict) -> GradedModule:
    F = owner.field
    dims = {(e["vertex"], e["degree"]): e["dim"] for e in data["dims"]}
    act = {}
    for e in data["arrows"]:
        act[(e["arrow"], e["degree"])] = la.mat([[F.parse(c) for c in row] for row in e["matrix"]])
    return GradedModule(owner, dims, act)


def zero_module(owner: GradedAlgebra) -> GradedModule:
    return GradedModule(owner, {}, {}, "0")


# ------------------------------------------------------------------ maps

class ModuleMap:
    """Degree-``shift`` homomorphism: blocks f_{v,d}: X_{v,d} -> Y_{v,d+shift}."""

    def __init__(self, source: GradedModule, target: GradedModule, shift: int, blocks: dict):
        self.source = source
        self.target = target
        self.shift = shift
        self.blocks: dict[VD, np.ndarray] = {}
        for (v, d), m in blocks.items():
            if source.dim_at(v, d) and target.dim_at(v, d + shift) and not la.is_zero(m):
                self.blocks[(v, d)] = m

    def block(self, v: int, d: int) -> np.ndarray:
        m = self.blocks.get((v, d))
        if m is None:
            return la.zeros(self.target.dim_at(v, d + self.shift), self.source.dim_at(v, d))
        return m

    def is_zero(self) -> bool:
        return not self.blocks

    def is_homomorphism(self) -> bool:
        X, Y, s, F = self.source, self.target, self.shift, self.source.field
        for arr in X.dq.arrows:
            for d in X.degrees():
                a, b = arr.target, arr.source
                lhs = la.mul(F, self.block(b, d + arr.deg), X.action(arr.name, d))
                rhs = la.mul(F, Y.action(arr.name, d + s), self.block(a, d))
                if not la.is_zero(la.reduce_array(F, lhs - rhs)):
                    return False
        return True

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """self o first."""
        F = self.source.field
        blocks = {}
        for (v, d), m in first.blocks.items():
            g = self.blocks.get((v, d + first.shift))
            if g is not None:
                blocks[(v, d)] = la.mul(F, g, m)
        return ModuleMap(first.source, self.target, first.shift + self.shift, blocks)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        F = self.source.field
        blocks = dict(self.blocks)
        for k, m in other.blocks.items():
            blocks[k] = la.reduce_array(F, blocks[k] + m) if k in blocks else m
        return ModuleMap(self.source, self.target, self.shift, blocks)

    def scale(self, c) -> "ModuleMap":
        F = self.source.field
        return ModuleMap(self.source, self.target, self.shift,
                         {k: la.reduce_array(F, c * m) for k, m in self.blocks.items()})

    def flat(self) -> dict:
        """Sparse coordinate vector, indexed by (v, d, i, j)."""
        out = {}
        for (v, d), m in self.blocks.items():
            for (i, j), c in np.ndenumerate(m):
                if c:
                    out[(v, d, i, j)] = c
        return out

    def is_injective(self) -> bool:
        F = self.source.field
        return all(la.rank(F, self.block(v, d)) == n for (v, d), n in self.source.dims.items())

    def is_surjective(self) -> bool:
        F = self.source.field
        s = self.shift
        return all(la.rank(F, self.block(v, d - s)) == n for (v, d), n in self.target.dims.items())

    def is_iso(self) -> bool:
        return (self.source.dims == {(v, d - self.shift): n for (v, d), n in self.target.dims.items()}
                and self.is_injective())

    def rank(self) -> int:
        F = self.source.field
        return sum(la.rank(F, m) for m in self.blocks.values())


def identity_map(X: GradedModule) -> ModuleMap:
    return ModuleMap(X, X, 0, {k: la.eye(n) for k, n in X.dims.items()})


def zero_map(X: GradedModule, Y: GradedModule, shift: int = 0) -> ModuleMap:
    return ModuleMap(X, Y, shift, {})


def combine(maps: list[ModuleMap], coeffs) -> ModuleMap:
    F = maps[0].source.field
    blocks: dict = {}
    for f, c in zip(maps, coeffs):
        if not c:
            continue
        for k, m in f.blocks.items():
            blocks[k] = blocks[k] + c * m if k in blocks else c * m
    return ModuleMap(maps[0].source, maps[0].target, maps[0].shift,
                     {k: la.reduce_array(F, m) for k, m in blocks.items()})


def flat_rank(F, maps: list[ModuleMap]) -> int:
    vectors = [f.flat() for f in maps]
    index = {}
    rows = []
    for v in vectors:
        row = {}
        for k, c in v.items():
            row[index.setdefault(k, len(index))] = c
        rows.append(row)
    return la.sparse_rank(F, rows, len(index))


# ------------------------------------------------------------------ Hom

def _check_owner(X: GradedModule, Y: GradedModule, over):
    if over is not None:
        if X.dq.base != over.quiver or Y.dq.base != over.quiver:
            raise OwnerMismatch("modules are not over a common algebra")
        return
    if owner_key(X.owner) != owner_key(Y.owner):
        raise OwnerMismatch(f"owner mismatch: {X.owner.label} vs {Y.owner.label}")


def hom_graded(X: GradedModule, Y: GradedModule, s: int = 0, over=None) -> list[ModuleMap]:
    """Basis of Hom^Z(X, Y(s)), i.e. maps X_{v,d} -> Y_{v,d+s} commuting with arrows."""
    _check_owner(X, Y, over)
    F = X.field
    var: dict[VD, tuple[int, int, int]] = {}
    n = 0
    for (v, d), nx in X.dims.items():
        ny = Y.dim_at(v, d + s)
        if ny:
            var[(v, d)] = (n, ny, nx)
            n += ny * nx
    if n == 0:
        return []
    rows = []
    for arr in X.dq.arrows:
        a, b, e = arr.target, arr.source, arr.deg
        for (v, d), nx in X.dims.items():
            if v != a:
                continue
            nyb = Y.dim_at(b, d + e + s)
            if not nyb:
                continue
            fb, fa = var.get((b, d + e)), var.get((a, d))
            if fb is None and fa is None:
                continue
            Xx = X.action(arr.name, d)
            Yx = Y.action(arr.name, d + s)
            for i in range(nyb):
                for j in range(nx):
                    row: dict = {}
                    if fb is not None:
                        off, _, nxb = fb
                        for k in range(nxb):
                            c = Xx[k, j]
                            if c:
                                row[off + i * nxb + k] = row.get(off + i * nxb + k, 0) + c
                    if fa is not None:
                        off, nya, _ = fa
                        for k in range(nya):
                            c = Yx[i, k]
                            if c:
                                idx = off + k * nx + j
                                row[idx] = F.red(row.get(idx, 0) - c)
                    if row:
                        rows.append(row)
    basis = la.sparse_nullspace(F, rows, n)
    out = []
    for vec in basis:
        blocks = {}
        for (v, d), (off, ny, nx) in var.items():
            m = la.zeros(ny, nx)
            hit = False
            for i in range(ny):
                for j in range(nx):
                    c = vec.get(off + i * nx + j)
                    if c:
                        m[i, j] = c
                        hit = True
            if hit:
                blocks[(v, d)] = m
        out.append(ModuleMap(X, Y, s, blocks))
    return out


def shift_window(X: GradedModule, Y: GradedModule) -> range:
    """Shifts s for which Hom^Z(X, Y(s)) can be nonzero."""
    if X.is_zero() or Y.is_zero():
        return range(0)
    return range(Y.lo - X.hi, Y.hi - X.lo + 1)


def hom_dim(X, Y, s=0, over=None) -> int:
    return len(hom_graded(X, Y, s, over))


# ------------------------------------------------------------------ constructions

def projective_module(A: GradedAlgebra, u: int, j: int = 0, owner: GradedAlgebra | None = None,
                      name: str | None = None) -> GradedModule:
    """A e_u (j): the space at (v, d) is e_v A_{d+j} e_u."""
    if u not in A.quiver.vertices:
        raise ValueError(f"unknown vertex {u}")
    F = A.field
    owner = owner or A
    # blocks per (v, degree of A): concatenation of components over length
    blocks: dict[VD, list] = defaultdict(list)
    for key in A.keys():
        a, b, L, d = key
        if b == u and A.cdim(key):
            blocks[(a, d)].append(key)
    offsets = {}
    dims = {}
    labels = {}
    for (a, d), keys in blocks.items():
        off = 0
        for k in keys:
            offsets[k] = off
            off += A.cdim(k)
        dims[(a, d - j)] = off
        labels[(a, d - j)] = [m for k in keys for m in A.comps[k]]
    act = {}
    for arr in A.dq.arrows:
        for (a, d), keys in blocks.items():
            if a != arr.target:
                continue
            tgt = (arr.source, d + arr.deg)
            if tgt not in blocks:
                continue
            m = la.zeros(dims[(arr.source, d + arr.deg - j)], dims[(a, d - j)])
            for k in keys:
                lm = A.lmul(k, arr.index)
                tk = A.left_target(k, arr.index)
                if tk in offsets and lm.size:
                    r0, c0 = offsets[tk], offsets[k]
                    m[r0:r0 + lm.shape[0], c0:c0 + lm.shape[1]] = lm
            act[(arr.name, d - j)] = m
    return GradedModule(owner, dims, act, name or f"{A.label}e{u}({j})", labels)


def shift(X: GradedModule, j: int) -> GradedModule:
    """X(j)_i = X_{i+j}."""
    dims = {(v, d - j): n for (v, d), n in X.dims.items()}
    act = {(x, d - j): m for (x, d), m in X.act.items()}
    labels = {(v, d - j): l for (v, d), l in X.labels.items()}
    return GradedModule(X.owner, dims, act, f"{X.name}({j})", labels)


def degree_range(X: GradedModule, lo: int | None, hi: int | None) -> GradedModule:
    """X_{[lo, hi]}: keep degrees in range (a subquotient since degrees only rise)."""
    def keep(d):
        return (lo is None or d >= lo) and (hi is None or d <= hi)
    dims = {k: n for k, n in X.dims.items() if keep(k[1])}
    act = {k: m for k, m in X.act.items() if keep(k[1])}
    labels = {k: l for k, l in X.labels.items() if keep(k[1])}
    return GradedModule(X.owner, dims, act, f"{X.name}[{lo},{hi}]", labels)


def truncate_above(X: GradedModule, i: int) -> GradedModule:
    return degree_range(X, None, i)


def truncate_below(X: GradedModule, i: int) -> GradedModule:
    return degree_range(X, i, None)


def slice_module(X: GradedModule, i: int, j: int) -> GradedModule:
    return degree_range(X, i, j)


def degree_inclusion(sub: GradedModule, X: GradedModule) -> ModuleMap:
    """Inclusion X_{>=i} -> X (identity blocks)."""
    return ModuleMap(sub, X, 0, {k: la.eye(n) for k, n in sub.dims.items()})


def degree_projection(X: GradedModule, quo: GradedModule) -> ModuleMap:
    return ModuleMap(X, quo, 0, {k: la.eye(n) for k, n in quo.dims.items()})


def relabel(X: GradedModule, owner: GradedAlgebra, name: str | None = None) -> GradedModule:
    """Same data regarded over another algebra with the same double quiver."""
    if owner.dq.base != X.dq.base:
        raise OwnerMismatch("quivers differ")
    return GradedModule(owner, X.dims, X.act, name or X.name, X.labels)


@dataclass
class DirectSum:
    module: GradedModule
    inclusions: list[ModuleMap]
    projections: list[ModuleMap]


def direct_sum(mods: list[GradedModule], name: str = "") -> DirectSum:
    if not mods:
        raise ValueError("empty direct sum")
    owner = mods[0].owner
    for X in mods[1:]:
        if owner_key(X.owner) != owner_key(owner):
            raise OwnerMismatch("direct sum over different owners")
    keys = sorted({k for X in mods for k in X.dims})
    dims = {k: sum(X.dim_at(*k) for X in mods) for k in keys}
    act = {}
    act_keys = {k for X in mods for k in X.act}
    for (x, d) in act_keys:
        act[(x, d)] = la.block_diag([X.action(x, d) for X in mods])
    S = GradedModule(owner, dims, act, name or " + ".join(X.name for X in mods))
    incs, projs = [], []
    offs = {k: 0 for k in keys}
    for X in mods:
        ib, pb = {}, {}
        for k, n in X.dims.items():
            i = la.zeros(dims[k], n)
            p = la.zeros(n, dims[k])
            for r in range(n):
                i[offs[k] + r, r] = 1
                p[r, offs[k] + r] = 1
            ib[k], pb[k] = i, p
            offs[k] += n
        incs.append(ModuleMap(X, S, 0, ib))
        projs.append(ModuleMap(S, X, 0, pb))
    return DirectSum(S, incs, projs)


def kernel(f: ModuleMap) -> tuple[GradedModule, ModuleMap]:
    X, F = f.source, f.source.field
    bases = {}
    for (v, d), n in X.dims.items():
        K = la.nullspace(F, f.block(v, d))
        if K.shape[1]:
            bases[(v, d)] = K
    act = {}
    for (x, d), m in X.act.items():
        arr = X.dq.by_name[x]
        src, tgt = (arr.target, d), (arr.source, d + arr.deg)
        if src in bases and tgt in bases:
            img = la.mul(F, m, bases[src])
            sol = la.solve(F, bases[tgt], img)
            assert sol is not None, "kernel not stable"
            act[(x, d)] = sol
    dims = {k: b.shape[1] for k, b in bases.items()}
    K = GradedModule(X.owner, dims, act, "ker")
    return K, ModuleMap(K, X, 0, bases)


def image(f: ModuleMap) -> tuple[GradedModule, ModuleMap]:
    """Image submodule of the target (in degrees of the target)."""
    Y, F, s = f.target, f.target.field, f.shift
    bases = {}
    for (v, d), n in Y.dims.items():
        C = la.colspace(F, f.block(v, d - s))
        if C.shape[1]:
            bases[(v, d)] = C
    act = {}
    for (x, d), m in Y.act.items():
        arr = Y.dq.by_name[x]
        src, tgt = (arr.target, d), (arr.source, d + arr.deg)
        if src in bases and tgt in bases:
            act[(x, d)] = la.solve(F, bases[tgt], la.mul(F, m, bases[src]))
    dims = {k: b.shape[1] for k, b in bases.items()}
    I = GradedModule(Y.owner, dims, act, "im")
    return I, ModuleMap(I, Y, 0, bases)


def cokernel(f: ModuleMap) -> tuple[GradedModule, ModuleMap]:
    Y, F, s = f.target, f.target.field, f.shift
    proj, sect = {}, {}
    for (v, d), n in Y.dims.items():
        S = Subspace.span(F, n, f.block(v, d - s).T)
        qc = S.quotient_coords()
        if qc:
            proj[(v, d)] = S.projection(F)
            sec = la.zeros(n, len(qc))
            for i, c in enumerate(qc):
                sec[c, i] = 1
            sect[(v, d)] = sec
    act = {}
    for (x, d), m in Y.act.items():
        arr = Y.dq.by_name[x]
        src, tgt = (arr.target, d), (arr.source, d + arr.deg)
        if src in proj and tgt in proj:
            act[(x, d)] = la.mul(F, proj[tgt], la.mul(F, m, sect[src]))
    dims = {k: p.shape[0] for k, p in proj.items()}
    C = GradedModule(Y.owner, dims, act, "coker")
    return C, ModuleMap(Y, C, 0, proj)


def submodule_generated(X: GradedModule, gens: dict[VD, np.ndarray]) -> tuple[GradedModule, ModuleMap]:
    """Smallest submodule containing the given column vectors."""
    F = X.field
    spaces = {k: Subspace.span(F, X.dims[k], g.T) for k, g in gens.items() if g.shape[1]}
    todo = sorted(spaces, key=lambda k: k[1])
    while todo:
        k = todo.pop(0)
        v, d = k
        for arr in X.dq.arrows:
            if arr.target != v:
                continue
            tgt = (arr.source, d + arr.deg)
            if tgt not in X.dims:
                continue
            img = la.mul(F, X.action(arr.name, d), spaces[k].rows.T)
            old = spaces.get(tgt, Subspace(X.dims[tgt]))
            new = old.add(F, img.T)
            if new.dim != old.dim:
                spaces[tgt] = new
                if tgt not in todo:
                    todo.append(tgt)
                    todo.sort(key=lambda kk: kk[1])
    dims = {k: s.dim for k, s in spaces.items() if s.dim}
    bases = {k: _cols(s) for k, s in spaces.items() if s.dim}
    act = {}
    for (x, d), m in X.act.items():
        arr = X.dq.by_name[x]
        src, tgt = (arr.target, d), (arr.source, d + arr.deg)
        if src in bases and tgt in bases:
            act[(x, d)] = la.solve(F, bases[tgt], la.mul(F, m, bases[src]))
    S = GradedModule(X.owner, dims, act, "sub")
    return S, ModuleMap(S, X, 0, bases)


def _cols(s: Subspace) -> np.ndarray:
    return s.rows.T.copy()


# ------------------------------------------------------------------ radical, covers

def radical_spaces(X: GradedModule) -> dict[VD, Subspace]:
    F = X.field
    out = {}
    for (v, d), n in X.dims.items():
        imgs = []
        for arr in X.dq.arrows:
            if arr.source != v:
                continue
            m = X.action(arr.name, d - arr.deg)
            if m.shape[1]:
                imgs.append(m.T)
        out[(v, d)] = Subspace.span(F, n, la.vstack(imgs, n))
    return out


def top_generators(X: GradedModule) -> list[tuple[VD, np.ndarray]]:
    """Vectors spanning a complement of rad X, one per top composition factor."""
    gens = []
    for k, R in sorted(radical_spaces(X).items(), key=lambda t: (t[0][1], t[0][0])):
        for c in R.quotient_coords():
            g = la.zeros(X.dims[k], 1)
            g[c, 0] = 1
            gens.append((k, g))
    return gens


def top_dims(X: GradedModule) -> dict[VD, int]:
    out: dict = defaultdict(int)
    for k, _ in top_generators(X):
        out[k] += 1
    return dict(out)


def element_action(X: GradedModule, path: tuple, d: int, vec: np.ndarray) -> np.ndarray:
    """path . vec for a vector in degree d at the path's end vertex."""
    if not path:
        return vec
    return la.mul(X.field, X.path_action(path, d), vec)


def map_from_projective(P: GradedModule, X: GradedModule, gen_deg: int, vec: np.ndarray) -> ModuleMap:
    """The map A e_u(-gen_deg) -> X sending e_u to ``vec`` (requires P.labels)."""
    blocks = {}
    for (a, d), paths in P.labels.items():
        if not X.dim_at(a, d):
            continue
        m = la.zeros(X.dim_at(a, d), len(paths))
        for j, p in enumerate(paths):
            col = element_action(X, p, gen_deg, vec)
            if col.shape[0]:
                m[:, j] = col[:, 0]
        blocks[(a, d)] = m
    return ModuleMap(P, X, 0, blocks)


def projective_cover(X: GradedModule, A: GradedAlgebra | None = None) -> tuple[GradedModule, ModuleMap]:
    """Graded projective cover P -> X over the algebra A (default: the owner)."""
    A = A or X.owner
    gens = top_generators(X)
    if not gens:
        return zero_module(X.owner), zero_map(zero_module(X.owner), X)
    summands, pieces = [], []
    for (v, d), g in gens:
        P = projective_module(A, v, -d, owner=X.owner)
        summands.append(P)
        pieces.append((P, d, g))
    S = direct_sum(summands, "P")
    total = None
    for (P, d, g), pr in zip(pieces, S.projections):
        f = map_from_projective(P, X, d, g).compose(pr)
        total = f if total is None else total + f
    return S.module, total


def syzygy(X: GradedModule, A: GradedAlgebra | None = None) -> tuple[GradedModule, ModuleMap]:
    """Omega X with its inclusion into the projective cover."""
    P, pi = projective_cover(X, A)
    if X.is_zero():
        return zero_module(X.owner), zero_map(zero_module(X.owner), P)
    assert pi.is_surjective(), "projective cover is not onto"
    return kernel(pi)


def syzygy_power(X: GradedModule, j: int, A=None) -> GradedModule:
    for _ in range(j):
        X = syzygy(X, A)[0]
    return X


def projective_shift_window(A: GradedAlgebra, X: GradedModule) -> range:
    top = A.max_degree()
    if X.is_zero():
        return range(0)
    return range(-X.hi, top - X.lo + 1)


def free_approximation(X: GradedModule, A: GradedAlgebra | None = None) -> tuple[GradedModule, ModuleMap]:
    """Left approximation X -> F by graded projectives (stacked Hom basis)."""
    A = A or X.owner
    targets = []
    for u in A.quiver.vertices:
        if not any(k[1] == u for k in A.comps):
            continue
        for s in projective_shift_window(A, X):
            P = projective_module(A, u, s, owner=X.owner)
            if P.is_zero():
                continue
            for f in hom_graded(X, P):
                targets.append((P, f))
    if not targets:
        Z = zero_module(X.owner)
        return Z, zero_map(X, Z)
    S = direct_sum([P for P, _ in targets], "F")
    total = None
    for (P, f), inc in zip(targets, S.inclusions):
        g = inc.compose(f)
        total = g if total is None else total + g
    return S.module, total


def in_sub_category(X: GradedModule, A: GradedAlgebra | None = None) -> bool:
    if X.is_zero():
        return True
    _, f = free_approximation(X, A)
    return f.is_injective()


def cosyzygy_in_sub(X: GradedModule, A: GradedAlgebra | None = None) -> tuple[GradedModule, ModuleMap]:
    """Omega^- X: cokernel of the left approximation by graded projectives."""
    Fm, f = free_approximation(X, A)
    if not f.is_injective():
        raise NotInSub("module does not embed in a graded free module")
    C, p = cokernel(f)
    return C, p


# ------------------------------------------------------------------ stable Hom, Ext

def stable_hom(X: GradedModule, Y: GradedModule, s: int = 0, A=None) -> tuple[int, list[ModuleMap]]:
    """Hom^Z(X, Y(s)) modulo maps factoring through graded projectives."""
    _check_owner(X, Y, None)
    H = hom_graded(X, Y, s)
    if not H:
        return 0, []
    P, pi = projective_cover(Y, A)
    if P.is_zero():
        return len(H), H
    through = [_shift_compose(pi, g) for g in hom_graded(X, P, s)]
    F = X.field
    r = flat_rank(F, through)
    # extend a basis of the factoring maps by elements of H
    chosen = []
    base = list(through)
    rk = r
    for h in H:
        if flat_rank(F, base + [h]) > rk:
            base.append(h)
            chosen.append(h)
            rk += 1
    return len(H) - r, chosen


def _shift_compose(pi: ModuleMap, g: ModuleMap) -> ModuleMap:
    """pi(s) o g for g: X -> P(s) and pi: P -> Y."""
    blocks = {}
    F = pi.source.field
    for (v, d), m in g.blocks.items():
        p = pi.blocks.get((v, d + g.shift))
        if p is not None:
            blocks[(v, d)] = la.mul(F, p, m)
    return ModuleMap(g.source, pi.target, g.shift, blocks)


def stable_hom_dim(X, Y, s=0, A=None) -> int:
    _check_owner(X, Y, None)
    H = hom_graded(X, Y, s)
    if not H:
        return 0
    P, pi = projective_cover(Y, A)
    if P.is_zero():
        return len(H)
    return len(H) - flat_rank(X.field, [_shift_compose(pi, g) for g in hom_graded(X, P, s)])


def ext1(X: GradedModule, Y: GradedModule, s: int = 0, A=None) -> int:
    """dim Ext^1(X, Y(s)) from the presentation 0 -> Omega X -> P -> X -> 0."""
    _check_owner(X, Y, None)
    K, inc = syzygy(X, A)
    if K.is_zero():
        return 0
    H = hom_graded(K, Y, s)
    if not H:
        return 0
    P = inc.target
    restr = [g.compose(inc) for g in hom_graded(P, Y, s)]
    return len(H) - flat_rank(X.field, restr)


def ext1_total(X: GradedModule, Y: GradedModule, A=None) -> int:
    """Ungraded Ext^1 as the sum over all shifts."""
    K, _ = syzygy(X, A)
    return sum(ext1(X, Y, s, A) for s in shift_window(K, Y))


def ext(X: GradedModule, Y: GradedModule, i: int, s: int = 0, A=None) -> int:
    """Ext^i via dimension shifting: Ext^i(X, Y) = Ext^1(Omega^{i-1} X, Y)."""
    if i < 1:
        raise ValueError("i >= 1")
    return ext1(syzygy_power(X, i - 1, A), Y, s, A)


# ------------------------------------------------------------------ radical filtration

def radical_filtration(X: GradedModule) -> list[dict[VD, int]]:
    """Layers rad^k X / rad^{k+1} X as (vertex, degree) multiplicities."""
    F = X.field
    cur = {k: Subspace.full(n) for k, n in X.dims.items()}
    layers = []
    while any(s.dim for s in cur.values()):
        nxt = {}
        for (v, d), n in X.dims.items():
            imgs = []
            for arr in X.dq.arrows:
                if arr.source != v:
                    continue
                src = (arr.target, d - arr.deg)
                if src in cur and cur[src].dim:
                    imgs.append(la.mul(F, X.action(arr.name, src[1]), cur[src].rows.T).T)
            nxt[(v, d)] = Subspace.span(F, n, la.vstack(imgs, n))
        layer = {k: cur[k].dim - nxt[k].dim for k in cur if cur[k].dim - nxt[k].dim}
        layers.append(dict(sorted(layer.items(), key=lambda t: (t[0][1], t[0][0]))))
        cur = nxt
    return layers


# ------------------------------------------------------------------ word modules

def subquotient_module(A: GradedAlgebra, big: GradedIdeal, small: GradedIdeal, owner: GradedAlgebra,
                       column: int | None = None, name: str = "") -> GradedModule:
    """The left module big/small (optionally only its e_column part)."""
    F = A.field
    bases: dict = {}
    for key in A.keys():
        if column is not None and key[1] != column:
            continue
        S = small.component(key)
        B = big.component(key)
        if B.dim == S.dim:
            continue
        red = S.reduce(F, B.rows.T).T
        sub = Subspace.span(F, A.cdim(key), red)
        bases[key] = sub
    blocks: dict[VD, list] = defaultdict(list)
    for key in sorted(bases, key=lambda k: (k[2], k[1])):
        blocks[(key[0], key[3])].append(key)
    offsets, dims = {}, {}
    for k, keys in blocks.items():
        off = 0
        for key in keys:
            offsets[key] = off
            off += bases[key].dim
        dims[k] = off
    act = {}
    for arr in A.dq.arrows:
        for (a, d), keys in blocks.items():
            if a != arr.target:
                continue
            tgt = (arr.source, d + arr.deg)
            if tgt not in blocks:
                continue
            m = la.zeros(dims[tgt], dims[(a, d)])
            for key in keys:
                tk = A.left_target(key, arr.index)
                if tk not in bases:
                    continue
                img = la.mul(F, A.lmul(key, arr.index), bases[key].rows.T)
                img = small.component(tk).reduce(F, img)
                coords = img[bases[tk].pivots, :]
                r0, c0 = offsets[tk], offsets[key]
                m[r0:r0 + coords.shape[0], c0:c0 + coords.shape[1]] = coords
            act[(arr.name, d)] = m
    return GradedModule(owner, dims, act, name)


def layer_module(W: WordAlgebra, i: int) -> GradedModule:
    """L_w^i = I_{u_1..u_{i-1}} / I_{u_1..u_i}, checked to equal L e_{u_i}."""
    if not 1 <= i <= len(W.word):
        raise IndexError(f"layer index {i} out of range 1..{len(W.word)}")
    full = subquotient_module(W.pi, W.prefixes[i - 1], W.prefixes[i], W.algebra, None, f"L^{i}")
    col = subquotient_module(W.pi, W.prefixes[i - 1], W.prefixes[i], W.algebra, W.word[i - 1], f"L^{i}")
    if full.total_dim != col.total_dim:
        raise AssertionError(f"L^{i} is not concentrated in column {W.word[i - 1]}")
    return col


def summand_Mi(W: WordAlgebra, i: int) -> GradedModule:
    """M^i = (Pi / I_{u_1..u_i}) e_{u_i} (m_i)."""
    if not 1 <= i <= len(W.word):
        raise IndexError(f"summand index {i} out of range 1..{len(W.word)}")
    Q = W.prefix_quotient(i)
    return projective_module(Q, W.word[i - 1], W.m[i - 1], owner=W.algebra, name=f"M^{i}")


def summands_M(W: WordAlgebra) -> list[GradedModule]:
    return [summand_Mi(W, i) for i in range(1, len(W.word) + 1)]


def projective_summand_positions(W: WordAlgebra) -> list[int]:
    return sorted(W.p.values())


def tilting_object(W: WordAlgebra) -> GradedModule:
    """M = sum_{i=0}^m (Pi_{c0..ci})(i)."""
    f = W.factorization
    if not f:
        raise ValueError("word is not c-sortable")
    parts = []
    for i in range(f.m + 1):
        I = W.ideal_of(f.prefix_word(i))
        Q = quotient_algebra(W.pi, I)
        for u in W.quiver.vertices:
            X = projective_module(Q, u, i, owner=W.algebra, name=f"Pi_c{i}e{u}({i})")
            if not X.is_zero():
                parts.append(X)
    return direct_sum(parts, "M").module


def graded_projectives(W: WordAlgebra, shifts) -> list[GradedModule]:
    out = []
    for u in sorted(W.support):
        for j in shifts:
            out.append(projective_module(W.algebra, u, j, name=f"Pe{u}({j})"))
    return out


# ------------------------------------------------------------------ random modules

def random_map(maps: list[ModuleMap], rng: random.Random) -> ModuleMap | None:
    if not maps:
        return None
    F = maps[0].source.field
    return combine(maps, [F.random(rng) for _ in maps])


def random_sub_module(W: WordAlgebra, rng: random.Random) -> GradedModule:
    """Kernel of a random map between graded projectives (lies in Sub)."""
    A = W.algebra
    us = sorted(W.support)
    for _ in range(20):
        P = projective_module(A, rng.choice(us), rng.randint(-1, 1))
        Q = direct_sum([projective_module(A, rng.choice(us), rng.randint(-1, 1))
                        for _ in range(rng.randint(1, 2))]).module
        f = random_map(hom_graded(P, Q), rng)
        if f is None:
            continue
        K, _ = kernel(f)
        if not K.is_zero():
            return K
    return projective_module(A, us[0], 0)


# ------------------------------------------------------------------ right multiplication

def _label_index(P: GradedModule) -> dict:
    """(start vertex, monomial) -> (block key, position) for projective-built modules."""
    out = {}
    for (a, d), paths in P.labels.items():
        for pos, m in enumerate(paths):
            out[(a, m)] = ((a, d), pos)
    return out


def right_multiplication(A: GradedAlgebra, P: GradedModule, Q: GradedModule, path: tuple,
                         sign=1, shift: int = 0) -> ModuleMap:
    """The map P -> Q(shift), p -> sign * p.path, for modules cut out of A e_s and A e_t.

    Both modules must carry monomial labels (built by ``projective_module``);
    products landing outside Q are dropped, which is correct when Q is a
    degree truncation of a projective.
    """
    F = A.field
    index = _label_index(Q)
    blocks: dict = {}
    for (a, d), paths in P.labels.items():
        for j, m in enumerate(paths):
            key, vec = A.monomial(m + tuple(path), a)
            basis = A.comps.get(key, ())
            for k, c in enumerate(vec[:, 0] if vec.shape[0] else ()):
                if not c:
                    continue
                hit = index.get((a, basis[k]))
                if hit is None:
                    continue
                (qa, qd), pos = hit
                if qd != d + shift:
                    raise AssertionError("degree bookkeeping of right multiplication is off")
                blk = blocks.setdefault((a, d), la.zeros(Q.dim_at(a, qd), P.dim_at(a, d)))
                blk[pos, j] = F.red(blk[pos, j] + sign * c)
    return ModuleMap(P, Q, shift, blocks)


def drop_space(X: GradedModule, key: VD, name: str = "") -> GradedModule:
    """Remove one (vertex, degree) space; a submodule when nothing maps into it."""
    dims = {k: n for k, n in X.dims.items() if k != key}
    labels = {k: l for k, l in X.labels.items() if k != key}
    return GradedModule(X.owner, dims, X.act, name or X.name, labels)


def coordinates(F, basis: list[ModuleMap], f: ModuleMap) -> list:
    """Coefficients of f in a basis of maps (raises if f is not in the span)."""
    index: dict = {}
    cols = [b.flat() for b in basis]
    target = f.flat()
    for v in cols + [target]:
        for k in v:
            index.setdefault(k, len(index))
    A = la.zeros(len(index), len(basis))
    b = la.zeros(len(index), 1)
    for j, v in enumerate(cols):
        for k, c in v.items():
            A[index[k], j] = c
    for k, c in target.items():
        b[index[k], 0] = c
    if not basis:
        if target:
            raise ValueError("map not in the span of the basis")
        return []
    x = la.solve(F, A, b)
    if x is None:
        raise ValueError("map not in the span of the basis")
    return list(x[:, 0])


def find_isomorphism_from_sum(mods: list[GradedModule], Y: GradedModule,
                              rng: random.Random | None = None, tries: int = 8):
    """(D, f) with D = direct_sum(mods) and f: D.module -> Y an isomorphism, or (D, None).

    Uses Hom(sum X_k, Y) = sum Hom(X_k, Y), one Hom computation per distinct part."""
    D = direct_sum(mods)
    if D.module.dims != Y.dims:
        return D, None
    rng = rng or random.Random(0)
    homs: dict[int, list[ModuleMap]] = {}
    for X in mods:
        if id(X) not in homs:
            homs[id(X)] = hom_graded(X, Y)
    if any(not homs[id(X)] for X in mods if not X.is_zero()):
        return D, None
    for _ in range(tries):
        total = None
        for X, pr in zip(mods, D.projections):
            h = random_map(homs[id(X)], rng)
            if h is None:
                continue
            g = h.compose(pr)
            total = g if total is None else total + g
        if total is not None and total.is_injective():
            return D, total
    return D, None


def find_isomorphism(X: GradedModule, Y: GradedModule, rng: random.Random | None = None,
                     tries: int = 8, over=None) -> ModuleMap | None:
    """A degree-0 isomorphism X -> Y from a random combination of Hom, or None."""
    if X.dims != Y.dims:
        return None
    if X.is_zero():
        return ModuleMap(X, Y, 0, {})
    rng = rng or random.Random(0)
    H = hom_graded(X, Y, 0, over)
    if not H:
        return None
    for t in range(tries):
        f = H[0] if (t == 0 and len(H) == 1) else random_map(H, rng)
        if f.is_injective():
            return f
    return None
