"""Degree-zero side: kQ-modules, source reflections, the functor G = Hom(U, -),
indecomposable splitting, tilting and cotilting checks.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from dataclasses import dataclass

import numpy as np
import sympy

from . import linalg as la
from . import modules as md
from .coxeter import CoxeterGroup
from .linalg import Field, QQ
from .modules import GradedModule, ModuleMap
from .preproj import GradedAlgebra, OwnerMismatch, build_truncated_preprojective
from .quiver import Quiver, QuiverError, enumerate_paths, reflect_at, support_subquiver


# ------------------------------------------------------------------ kQ

_KQ_CACHE: dict = {}


def kq_algebra(q: Quiver, F: Field = QQ) -> GradedAlgebra:
    """The path algebra kQ as the degree-zero truncation of Pi."""
    key = (q.signature(), F.name)
    if key not in _KQ_CACHE:
        A = build_truncated_preprojective(q, 0, F)
        A.label = "kQ"
        _KQ_CACHE[key] = A
    return _KQ_CACHE[key]


def is_hereditary_module(X: GradedModule) -> bool:
    return (len(X.degrees()) <= 1
            and all(not X.dq.by_name[x].starred for x, _ in X.act))


def degree_zero(X: GradedModule, vertices=None) -> GradedModule:
    """The degree-0 slice of X as a kQ-module (Q restricted to ``vertices``)."""
    q = X.dq.base
    sub = support_subquiver(q, vertices) if vertices is not None else q
    vs = set(sub.vertices)
    stray = [v for (v, d) in X.dims if d == 0 and v not in vs]
    if stray:
        raise ValueError(f"degree-0 part has support outside {sorted(vs)}")
    A = kq_algebra(sub, X.field)
    dims = {(v, 0): n for (v, d), n in X.dims.items() if d == 0}
    act = {(a.name, 0): X.action(a.name, 0) for a in sub.arrows}
    return GradedModule(A, dims, act, f"F({X.name})")


def as_graded(Y: GradedModule, owner: GradedAlgebra, degree: int = 0) -> GradedModule:
    """A kQ-module regarded as a graded owner-module concentrated in one degree."""
    dims = {(v, degree): n for (v, _), n in Y.dims.items()}
    act = {(x, degree): m for (x, _), m in Y.act.items()}
    for x, _ in Y.act:
        if x not in owner.dq.by_name:
            raise OwnerMismatch(f"arrow {x} not in the owner's quiver")
    return GradedModule(owner, dims, act, Y.name)


def hereditary_simple(A: GradedAlgebra, u: int) -> GradedModule:
    return GradedModule(A, {(u, 0): 1}, {}, f"S{u}")


def injective_module(A: GradedAlgebra, u: int) -> GradedModule:
    """D(e_u kQ): at vertex a the dual of the paths u -> a."""
    q = A.quiver
    dq = A.dq
    paths = {a: enumerate_paths(dq, u, a, 0) for a in q.vertices}
    dims = {(a, 0): len(ps) for a, ps in paths.items()}
    act = {}
    for arr in q.arrows:
        b, a = arr.source, arr.target
        x = dq.by_name[arr.name].index
        m = la.zeros(len(paths[b]), len(paths[a]))
        pos = {p.arrows: i for i, p in enumerate(paths[a])}
        for i, p in enumerate(paths[b]):
            j = pos.get(p.arrows + (x,))
            if j is not None:
                m[i, j] = 1
        act[(arr.name, 0)] = m
    return GradedModule(A, dims, act, f"I{u}")


# ------------------------------------------------------------------ reflection

def reflection_plus(q: Quiver, v: int, X: GradedModule) -> GradedModule:
    """Source reflection at v: X'_v = ker(sum_{b: v->t} X_t -> X_v)."""
    if not q.is_source(v):
        raise QuiverError(f"vertex {v} is not a source")
    if X.dq.base != q:
        raise OwnerMismatch("module is not over kQ for this quiver")
    F = X.field
    qp = reflect_at(q, v)
    A = kq_algebra(qp, F)
    outs = q.out_arrows(v)
    nv = X.dim_at(v, 0)
    stacked = la.hstack([X.action(b.name, 0) for b in outs], nv)
    K = la.nullspace(F, stacked)
    dims = {k: n for k, n in X.dims.items() if k[0] != v}
    if K.shape[1]:
        dims[(v, 0)] = K.shape[1]
    act = {}
    for a in q.arrows:
        if a.source != v:
            act[(a.name, 0)] = X.action(a.name, 0)
    off = 0
    for b in outs:
        nt = X.dim_at(b.target, 0)
        act[(b.name + "'", 0)] = K[off:off + nt, :]
        off += nt
    return GradedModule(A, dims, act, f"R+({X.name})")


@dataclass
class ReflectionData:
    quiver: Quiver
    vertex: int
    reflected: Quiver
    rho: dict          # Pi arrow name -> (sign, Pi' arrow name)
    rho_inv: dict      # Pi' arrow name -> (sign, Pi arrow name)


def reflection_data(q: Quiver, v: int) -> ReflectionData:
    if not q.is_source(v):
        raise QuiverError(f"vertex {v} is not a source")
    qp = reflect_at(q, v)
    rho, rho_inv = {}, {}
    for a in q.arrows:
        if a.source == v:
            g = a.name + "'"
            rho[a.name] = (1, g + "*")
            rho[a.name + "*"] = (-1, g)
            rho_inv[g + "*"] = (1, a.name)
            rho_inv[g] = (-1, a.name + "*")
        else:
            rho[a.name] = (1, a.name)
            rho[a.name + "*"] = (1, a.name + "*")
            rho_inv[a.name] = (1, a.name)
            rho_inv[a.name + "*"] = (1, a.name + "*")
    return ReflectionData(q, v, qp, rho, rho_inv)


def double_reflection_iso(q: Quiver, v: int, N: int = 2, F: Field = QQ) -> dict:
    """Check rho: Pi -> Pi' on bases up to degree N.

    Returns per-component ranks, whether rho commutes with right multiplication
    by arrows, and whether rho_inv o rho is the identity on arrows.
    """
    data = reflection_data(q, v)
    P = build_truncated_preprojective(q, N + 1, F)
    Pp = build_truncated_preprojective(data.reflected, N + 2, F)
    by = P.dq.by_name
    byp = Pp.dq.by_name

    def image(key, mono):
        sign, path = 1, []
        for x in mono:
            s, name = data.rho[P.dq.arrows[x].name]
            sign *= s
            path.append(byp[name].index)
        k2, vec = Pp.monomial(tuple(path), key[0])
        return k2, la.reduce_array(F, sign * vec)

    ranks = []
    mats = {}
    ok_dims = True
    for key in P.keys():
        a, b, L, d = key
        if d > N:
            continue
        dp = d + (a == v) - (b == v)
        tk = (a, b, L, dp)
        m = la.zeros(Pp.cdim(tk), P.cdim(key))
        for j, mono in enumerate(P.comps[key]):
            k2, vec = image(key, mono)
            assert k2 == tk, (k2, tk)
            if vec.shape[0]:
                m[:, j] = vec[:, 0]
        mats[key] = m
        r = la.rank(F, m)
        ranks.append({"component": key, "dim": P.cdim(key), "dim_reflected": Pp.cdim(tk), "rank": r})
        if not (r == P.cdim(key) == Pp.cdim(tk)):
            ok_dims = False
    commutes = True
    for key, m in mats.items():
        if key[3] >= N:
            continue
        for arr in P.dq.arrows:
            if arr.source != key[1]:
                continue
            tk = P.target(key, arr.index)
            if tk not in mats:
                continue
            s, name = data.rho[arr.name]
            kp = (key[0], key[1], key[2], key[3] + (key[0] == v) - (key[1] == v))
            lhs = la.mul(F, mats[tk], P.rmul(key, arr.index))
            rhs = la.reduce_array(F, s * la.mul(F, Pp.rmul(kp, byp[name].index), m))
            if not la.is_zero(la.reduce_array(F, lhs - rhs)):
                commutes = False
    # signs are +-1, so the inverse carries the same sign
    roundtrip = all(data.rho_inv[data.rho[x][1]] == (data.rho[x][0], x) for x in by)
    return {"ranks": ranks, "bijective": ok_dims, "commutes": commutes, "roundtrip": roundtrip}


def _U_parts(q: Quiver, v: int, N: int, F: Field) -> tuple[GradedAlgebra, dict]:
    """Summands U_u of U = I_v e_v(1) + Pi(1 - e_v), truncated to degrees <= N."""
    Pi = build_truncated_preprojective(q, N + 1, F)
    parts = {}
    for u in q.vertices:
        P = md.projective_module(Pi, u, 0)
        if u == v:
            P = md.shift(md.drop_space(P, (v, 0)), 1)
        parts[u] = md.truncate_above(P, N)
    return Pi, parts


def functor_G(q: Quiver, v: int, X: GradedModule, owner: GradedAlgebra | None = None) -> GradedModule:
    """G(X)_i = Hom^Z(U, X(i)) as a graded module over the reflected preprojective algebra."""
    data = reflection_data(q, v)
    F = X.field
    if X.dq.base != q:
        raise OwnerMismatch("module is not over this quiver")
    if owner is None:
        owner = build_truncated_preprojective(data.reflected, max(X.hi - X.lo, 0) + 1, F)
    if owner.dq.base != data.reflected:
        raise OwnerMismatch("owner is not over the reflected quiver")
    if X.is_zero():
        return md.zero_module(owner)
    lo, hi = X.lo, X.hi
    N = hi - lo  # hi(X(i)) <= N for every i in [lo, hi], so U_{<=N} sees all maps
    Pi, U = _U_parts(q, v, N, F)
    H = {}
    for u in q.vertices:
        for i in range(lo, hi + 1):
            basis = md.hom_graded(U[u], X, i, over=Pi)
            if basis:
                H[(u, i)] = basis
    dims = {k: len(b) for k, b in H.items()}
    phis = {}
    for arr in owner.dq.arrows:
        sign, name = data.rho_inv[arr.name]
        x = Pi.dq.by_name[name]
        s, t = arr.source, arr.target
        j = x.deg + (s == v) - (t == v)
        assert j == arr.deg, "grading of rho is inconsistent"
        phis[arr.name] = md.right_multiplication(Pi, U[s], U[t], (x.index,), sign, j)
    act = {}
    for arr in owner.dq.arrows:
        phi = phis[arr.name]
        for (t, i), basis in H.items():
            if t != arr.target:
                continue
            tgt = (arr.source, i + arr.deg)
            if tgt not in H:
                continue
            m = la.zeros(len(H[tgt]), len(basis))
            for c, f in enumerate(basis):
                g = f.compose(phi)
                coords = md.coordinates(F, H[tgt], g)
                for r, val in enumerate(coords):
                    m[r, c] = val
            act[(arr.name, i)] = m
    return GradedModule(owner, dims, act, f"G({X.name})")


# ------------------------------------------------------------------ splitting

def trace(f: ModuleMap) -> object:
    total = 0
    for (v, d), m in f.blocks.items():
        if f.shift == 0:
            total += sum(m[i, i] for i in range(min(m.shape)))
    return f.source.field.red(total)


def trace_form_rank(F: Field, E: list[ModuleMap]) -> int:
    """dim End/rad End in characteristic 0 (rank of tr(xy))."""
    n = len(E)
    G = la.zeros(n, n)
    for i in range(n):
        for j in range(n):
            G[i, j] = trace(E[i].compose(E[j]))
    return la.rank(F, G)


def _to_sympy(F: Field, c):
    if isinstance(c, Fraction):
        return sympy.Rational(c.numerator, c.denominator)
    return sympy.Integer(int(c))


def characteristic_factors(F: Field, f: ModuleMap) -> list:
    """Distinct irreducible factors (sympy Poly) of the characteristic polynomial."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(1, x, modulus=F.p) if F.p else sympy.Poly(1, x, domain="QQ")
    X = f.source
    for (v, d), n in X.dims.items():
        m = f.block(v, d)
        S = sympy.Matrix(n, n, lambda i, j: _to_sympy(F, m[i, j]))
        cp = S.charpoly(x).as_expr()
        poly = poly * (sympy.Poly(cp, x, modulus=F.p) if F.p else sympy.Poly(cp, x, domain="QQ"))
    _, facs = poly.factor_list()
    return [p for p, _ in facs]


def poly_of_map(F: Field, poly, f: ModuleMap) -> ModuleMap:
    """p(f) blockwise, by Horner's rule."""
    coeffs = poly.all_coeffs()
    blocks = {}
    for (v, d), n in f.source.dims.items():
        m = f.block(v, d)
        acc = la.zeros(n, n)
        for c in coeffs:
            c = F.coerce(_from_sympy(c))
            acc = la.mul(F, acc, m) + c * la.eye(n)
            acc = la.reduce_array(F, acc)
        blocks[(v, d)] = acc
    return ModuleMap(f.source, f.source, 0, blocks)


def _from_sympy(c):
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def map_power(F: Field, f: ModuleMap) -> ModuleMap:
    """f^n blockwise with n the block size (enough to reach the stable kernel)."""
    blocks = {}
    for (v, d), n in f.source.dims.items():
        m = f.block(v, d)
        acc = la.eye(n)
        for _ in range(n):
            acc = la.mul(F, acc, m)
        blocks[(v, d)] = acc
    return ModuleMap(f.source, f.source, 0, blocks)


@dataclass
class Summand:
    module: GradedModule
    inclusion: ModuleMap


@dataclass
class Splitting:
    summands: list[Summand]
    complete: bool = True
    seed: int = 0

    @property
    def modules(self) -> list[GradedModule]:
        return [s.module for s in self.summands]


def _candidates(E: list[ModuleMap], rng: random.Random, tries: int):
    yield from E
    for a, b in itertools.combinations(range(len(E)), 2):
        yield E[a] + E[b]
        if len(E) > 6:
            break
    for _ in range(tries):
        yield md.random_map(E, rng)


def _split(X: GradedModule, rng: random.Random, tries: int) -> tuple[list[Summand], bool]:
    F = X.field
    if X.is_zero():
        return [], True
    ident = md.identity_map(X)
    E = md.hom_graded(X, X, 0)
    if len(E) <= 1 or trace_form_rank(F, E) == 1:
        return [Summand(X, ident)], True
    for phi in _candidates(E, rng, tries):
        facs = characteristic_factors(F, phi)
        if len(facs) < 2:
            continue
        out, complete = [], True
        for p in facs:
            K, inc = md.kernel(map_power(F, poly_of_map(F, p, phi)))
            if K.is_zero():
                continue
            parts, ok = _split(K, rng, tries)
            complete &= ok
            out += [Summand(s.module, inc.compose(s.inclusion)) for s in parts]
        return out, complete
    return [Summand(X, ident)], False


def module_sort_key(X: GradedModule):
    return (X.total_dim, tuple(sorted(X.dim_vector().items())), tuple(sorted(X.dims.items())))


def split_indecomposables(X: GradedModule, seed: int = 0, tries: int = 30) -> Splitting:
    """Fitting-lemma splitting along factors of characteristic polynomials of endomorphisms."""
    rng = random.Random(seed)
    parts, complete = _split(X, rng, tries)
    parts.sort(key=lambda s: module_sort_key(s.module))
    return Splitting(parts, complete, seed)


def is_indecomposable(X: GradedModule) -> bool:
    if X.is_zero():
        return False
    E = md.hom_graded(X, X, 0)
    return len(E) == 1 or trace_form_rank(X.field, E) == 1


def isomorphic_indecomposables(X: GradedModule, Y: GradedModule) -> tuple | None:
    """For indecomposables: X ~ Y iff tr(g o f) != 0 for some f: X->Y, g: Y->X."""
    if X.dims != Y.dims:
        return None
    H1 = md.hom_graded(X, Y, 0)
    H2 = md.hom_graded(Y, X, 0)
    for f in H1:
        for g in H2:
            if trace(g.compose(f)):
                return f, g
    return None


def distinct_indecomposables(mods: list[GradedModule]) -> list[GradedModule]:
    reps: list[GradedModule] = []
    for X in mods:
        if not any(isomorphic_indecomposables(X, R) for R in reps):
            reps.append(X)
    return reps


def multiplicity_table(mods: list[GradedModule]) -> list[tuple[GradedModule, int]]:
    out: list[list] = []
    for X in mods:
        for entry in out:
            if isomorphic_indecomposables(X, entry[0]):
                entry[1] += 1
                break
        else:
            out.append([X, 1])
    return [(a, b) for a, b in out]


# ------------------------------------------------------------------ tilting over kQ

def ext_matrix(mods: list[GradedModule]) -> list[list[int]]:
    return [[md.ext1(X, Y) for Y in mods] for X in mods]


def tilting_check_hereditary(T: GradedModule, seed: int = 0) -> dict:
    """Ext^1(T,T) = 0, pd T <= 1 and the number of non-isomorphic indecomposable summands."""
    n = len([v for v in T.owner.quiver.vertices])
    split = split_indecomposables(T, seed)
    reps = distinct_indecomposables(split.modules)
    witness = None
    ext_total = 0
    for i, X in enumerate(reps):
        for j, Y in enumerate(reps):
            e = md.ext1(X, Y)
            ext_total += e
            if e and witness is None:
                witness = {"from": i, "to": j, "ext1": e,
                           "from_dims": _dims_json(X), "to_dims": _dims_json(Y)}
    K, _ = md.syzygy(T)
    pd_ok = md.syzygy(K)[0].is_zero()
    report = {
        "ext1": ext_total,
        "pd_le_1": pd_ok,
        "summands": len(reps),
        "vertices": n,
        "split_complete": split.complete,
        "passed": ext_total == 0 and pd_ok and len(reps) == n and split.complete,
    }
    if witness:
        report["witness"] = witness
    return report


def _dims_json(X: GradedModule) -> dict:
    return {str(v): n for v, n in sorted(X.dim_vector().items())}


def positive_roots(q: Quiver, limit: int = 200) -> list[tuple[int, ...]]:
    """Positive real roots reachable from simple roots by simple reflections (finite type)."""
    G = CoxeterGroup(q)
    seen = set()
    todo = [tuple(G.root(u)) for u in G.vertices]
    while todo:
        r = todo.pop()
        if r in seen:
            continue
        seen.add(r)
        if len(seen) > limit:
            raise ValueError("root system is not finite")
        vec = np.array(r, dtype=object)
        for u in G.vertices:
            s = tuple(G.simple(u).dot(vec))
            if all(c >= 0 for c in s) and s not in seen:
                todo.append(s)
    return sorted(seen)


def dynkin_indecomposables(q: Quiver, F: Field = QQ, seed: int = 0) -> list[GradedModule]:
    """All indecomposable kQ-modules (Q Dynkin) as summands of the slices of Pi."""
    h = len(positive_roots(q))
    Pi = build_truncated_preprojective(q, h, F)
    pieces = []
    for u in q.vertices:
        P = md.projective_module(Pi, u)
        for d in P.degrees():
            if d > Pi.N - 1:
                raise AssertionError("truncation too small for the preprojective slices")
            Y = degree_zero(md.shift(md.slice_module(P, d, d), d))
            pieces += split_indecomposables(Y, seed).modules
    reps = distinct_indecomposables(pieces)
    reps.sort(key=module_sort_key)
    return reps


def tilting_modules(q: Quiver, F: Field = QQ, seed: int = 0) -> list[list[GradedModule]]:
    """Basic tilting kQ-modules, as lists of indecomposable summands."""
    inds = dynkin_indecomposables(q, F, seed)
    n = len(q.vertices)
    E = ext_matrix(inds)
    rigid = [i for i in range(len(inds)) if E[i][i] == 0]
    out = []
    for combo in itertools.combinations(rigid, n):
        if all(E[a][b] == 0 for a in combo for b in combo):
            out.append([inds[i] for i in combo])
    return out


# ------------------------------------------------------------------ cotilting

class NotInPerp(ValueError):
    pass


class CotiltingContext:
    """A cotilting module T over a finite-dimensional algebra given by a graded owner."""

    def __init__(self, T: GradedModule, gldim: int, seed: int = 0):
        self.T = T
        self.n = gldim
        self.seed = seed
        self.summands = distinct_indecomposables(split_indecomposables(T, seed).modules)
        for i in range(1, max(gldim, 1) + 1):
            if md.ext(T, T, i):
                raise ValueError(f"Ext^{i}(T, T) != 0")

    def in_perp(self, X: GradedModule) -> bool:
        return all(md.ext(X, self.T, i) == 0 for i in range(1, max(self.n, 1) + 1))

    def in_add(self, X: GradedModule) -> bool:
        if X.is_zero():
            return True
        parts = split_indecomposables(X, self.seed).modules
        return all(any(isomorphic_indecomposables(P, S) for S in self.summands) for P in parts)

    def strip(self, X: GradedModule) -> GradedModule:
        """Remove the add T summands, keeping the rest."""
        if X.is_zero():
            return X
        parts = split_indecomposables(X, self.seed).modules
        keep = [P for P in parts if not any(isomorphic_indecomposables(P, S) for S in self.summands)]
        if not keep:
            return md.zero_module(X.owner)
        return md.direct_sum(keep, "core").module


def left_addT_approximation(X: GradedModule, ctx: CotiltingContext, check: bool = True):
    """Stacked Hom basis X -> T' with T' in add T; injective for X in the left perp of T."""
    if check and not ctx.in_perp(X):
        raise NotInPerp("X is not in the left perpendicular category of T")
    targets = []
    for S in ctx.summands:
        for f in md.hom_graded(X, S):
            targets.append((S, f))
    if not targets:
        if not X.is_zero():
            raise AssertionError("approximation is not injective")
        Z = md.zero_module(X.owner)
        return Z, md.zero_map(X, Z)
    D = md.direct_sum([S for S, _ in targets], "T'")
    total = None
    for (S, f), inc in zip(targets, D.inclusions):
        g = inc.compose(f)
        total = g if total is None else total + g
    if not total.is_injective():
        raise AssertionError("approximation is not injective")
    return D.module, total


def minimal_left_approximation(X: GradedModule, parts: dict) -> tuple[list, md.DirectSum, ModuleMap]:
    """Left add{parts}-approximation X -> T0 with T0 a direct sum of the given parts.

    Starts from stacked Hom bases and drops targets while every map X -> part still factors.
    Returns (keys of the parts used, the direct sum, the map).
    """
    F = X.field
    targets = [(k, f) for k, S in parts.items() for f in md.hom_graded(X, S)]
    need = {k: len(md.hom_graded(X, S)) for k, S in parts.items()}

    def build(ts):
        D = md.direct_sum([parts[k] for k, _ in ts], "T0")
        total = None
        for (k, f), inc in zip(ts, D.inclusions):
            g = inc.compose(f)
            total = g if total is None else total + g
        return D, total

    between = {(k, l): md.hom_graded(parts[k], parts[l]) for k in parts for l in parts}

    def approximates(ts) -> bool:
        for l in parts:
            through = [h.compose(f) for k, f in ts for h in between[(k, l)]]
            if md.flat_rank(F, through) < need[l]:
                return False
        return True

    i = 0
    while i < len(targets):
        trial = targets[:i] + targets[i + 1:]
        if approximates(trial):
            targets = trial
        else:
            i += 1
    if not targets:
        raise ValueError("nothing to approximate")
    D, f = build(targets)
    return [k for k, _ in targets], D, f


def omega_T_minus(X: GradedModule, ctx: CotiltingContext, k: int = 1) -> GradedModule:
    for _ in range(k):
        if X.is_zero():
            return X
        _, f = left_addT_approximation(X, ctx)
        C, _ = md.cokernel(f)
        X = ctx.strip(C)
    return X


def random_sub_T(ctx: CotiltingContext, rng: random.Random) -> GradedModule:
    """Kernel of a random map T^a -> T^b (lies in Sub T)."""
    S = ctx.summands
    for _ in range(30):
        A = md.direct_sum([rng.choice(S) for _ in range(rng.randint(1, 2))]).module
        B = md.direct_sum([rng.choice(S) for _ in range(rng.randint(1, 2))]).module
        H = md.hom_graded(A, B)
        f = md.random_map(H, rng) if H else md.zero_map(A, B)
        K, _ = md.kernel(f)
        if not K.is_zero():
            return K
    return S[0]


def perp_generator(inds: list[GradedModule], T: GradedModule) -> list[GradedModule]:
    """Indecomposables X with Ext^1(X, T) = 0 (finite type, hereditary)."""
    return [X for X in inds if md.ext1(X, T) == 0]


def gldim_bound_check(q: Quiver, T_parts: list[GradedModule], F: Field = QQ, seed: int = 0,
                      randoms: int = 20) -> dict:
    """Omega_T^{-1} lands in add T, and gl.dim End(M_gen)/[T] <= 3n - 1 over kQ."""
    from .endo import endomorphism_table, quotient_by_summands, global_dimension
    n = 1 if q.arrows else 0
    T = md.direct_sum(T_parts, "T").module
    ctx = CotiltingContext(T, n, seed)
    rng = random.Random(seed)
    inds = dynkin_indecomposables(q, F, seed)
    gen = perp_generator(inds, T)
    failures = []
    for t in range(randoms):
        X = random_sub_T(ctx, rng)
        if not ctx.in_perp(X):
            failures.append({"sample": t, "reason": "random module not in perp"})
            continue
        core = omega_T_minus(X, ctx, n)
        if not core.is_zero():
            failures.append({"sample": t, "reason": "Omega_T^-n not in add T", "dims": _dims_json(core)})
    # for X in perp T: X in add T iff Ext^1(Y, X) = 0 for the generator Y of perp T
    Y = md.direct_sum(gen, "Mgen").module
    charac = all((md.ext1(Y, X) == 0) == ctx.in_add(X) for X in gen)
    table = endomorphism_table(gen)
    tpos = [i for i, X in enumerate(gen) if ctx.in_add(X)]
    B = quotient_by_summands(table, tpos)
    gd = global_dimension(B, cap=6)
    bound = 3 * n - 1
    return {
        "generator_size": len(gen),
        "random_failures": failures,
        "add_T_characterization": charac,
        "quotient_dim": B.dim,
        "gldim": gd,
        "bound": bound,
        "passed": not failures and charac and gd is not None and gd <= bound,
    }


# ------------------------------------------------------------------ T from a word

def word_tilting_parts(W) -> dict[int, GradedModule]:
    """T e_u = (Pi_w e_u (m_{p_u}))_0 as kQ-modules over the support subquiver."""
    out = {}
    for u in sorted(W.support):
        mp = W.m[W.p[u] - 1]
        P = md.projective_module(W.algebra, u, mp)
        X = degree_zero(md.slice_module(P, 0, 0), W.support)
        X.name = f"T{u}"
        out[u] = X
    return out


def word_tilting_check(W, seed: int = 0) -> dict:
    """Ext^1(T, T) = 0 and |Supp(w)| summands for T built from the word."""
    parts = word_tilting_parts(W)
    T = md.direct_sum(list(parts.values()), "T").module
    rep = tilting_check_hereditary(T, seed)
    rep["summand_dims"] = {u: X.total_dim for u, X in parts.items()}
    rep["support"] = sorted(W.support)
    return rep


def layer_identification(W, seed: int = 0) -> dict:
    """(Pi_w e_u)_{m_{p_u}} = L_w^{p_u}, witnessed by an explicit isomorphism."""
    rng = random.Random(seed)
    found = {}
    for u in sorted(W.support):
        i = W.p[u]
        mp = W.m[i - 1]
        X = md.slice_module(md.projective_module(W.algebra, u, 0), mp, mp)
        L = md.layer_module(W, i)
        f = md.find_isomorphism(X, L, rng, over=W.algebra)
        found[u] = {"position": i, "degree": mp, "dim": X.total_dim,
                    "iso": f is not None and f.is_injective() and f.is_surjective()}
    return {"vertices": found, "passed": all(v["iso"] for v in found.values())}


def reduction_functor_check(q: Quiver, w, F: Field = QQ, seed: int = 0) -> dict:
    """For v = w[0] (a source of the support subquiver) and w' = w[1:] over mu_v:
    G(M^1) = 0, G(M^j) = M'^{j-1}, and G(M^j)_0 = R+_v((M^j)_0), each by an explicit isomorphism."""
    from .preproj import WordAlgebra
    w = tuple(w)
    if len(w) < 2:
        raise ValueError("need at least two letters")
    sub = support_subquiver(q, set(w))
    v = w[0]
    if not sub.is_source(v):
        raise QuiverError(f"first letter {v} is not a source of the support subquiver")
    W = WordAlgebra(sub, w, F)
    W2 = WordAlgebra(reflect_at(sub, v), w[1:], F)
    rng = random.Random(seed)
    M = md.summands_M(W)
    M2 = md.summands_M(W2)
    G = [functor_G(sub, v, X) for X in M]
    first_zero = G[0].is_zero()
    iso_G, iso_square = [], []
    for j in range(2, len(w) + 1):
        f = md.find_isomorphism(G[j - 1], M2[j - 2], rng, over=W2.pi)
        iso_G.append(f is not None)
    for j, (X, GX) in enumerate(zip(M, G), 1):
        if X.hi > 0:
            raise AssertionError(f"M^{j} is not concentrated in degrees <= 0")
        left = degree_zero(GX) if not GX.is_zero() else None
        right = reflection_plus(sub, v, degree_zero(X))
        if left is None:
            iso_square.append(right.is_zero())
            continue
        f = md.find_isomorphism(left, right, rng)
        iso_square.append(f is not None)
    return {"vertex": v, "G_M1_zero": first_zero, "G_Mj_iso": iso_G, "square_iso": iso_square,
            "passed": first_zero and all(iso_G) and all(iso_square)}
