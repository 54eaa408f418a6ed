"""Exact linear algebra over the rationals or a prime field.

Dense matrices are numpy object arrays holding Python ints / Fractions
(or ints reduced mod p).  Large homogeneous systems are solved sparsely
with rows stored as ``{column: value}`` dicts.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class Field:
    """Arithmetic helpers shared by the rational and prime-field backends."""

    name = "field"
    p = 0

    def red(self, x):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def coerce(self, x):
        return self.red(x)

    def fmt(self, x) -> str:
        raise NotImplementedError

    def parse(self, s: str):
        return self.red(Fraction(s)) if self.p == 0 else self.coerce(Fraction(s))

    def random(self, rng, lo: int = -3, hi: int = 3):
        return self.red(rng.randint(lo, hi))

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "rat"

    def red(self, x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def div(self, a, b):
        if b == 1:
            return a
        if b == -1:
            return -a
        return self.red(Fraction(a) / b)

    def fmt(self, x) -> str:
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}"


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2:
            raise ValueError("modulus must be prime")
        self.p = p
        self.name = f"gfp:{p}"

    def red(self, x):
        return x % self.p

    def coerce(self, x):
        x = Fraction(x)
        return (x.numerator * pow(x.denominator, -1, self.p)) % self.p

    def div(self, a, b):
        return (a * pow(b, -1, self.p)) % self.p

    def fmt(self, x) -> str:
        return f"{x % self.p}/1"


QQ = Rationals()
DEFAULT_PRIME = 1048583  # smallest prime above 2**20


def field_from_spec(spec: str | None) -> Field:
    """Parse ``rat`` or ``gfp:P``."""
    if spec in (None, "", "rat", "QQ"):
        return QQ
    if spec.startswith("gfp"):
        _, _, p = spec.partition(":")
        return PrimeField(int(p) if p else DEFAULT_PRIME)
    raise ValueError(f"unknown field {spec!r}")


# ---------------------------------------------------------------- dense

def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=object)


def eye(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def mat(rows: Sequence[Sequence], ncols: int | None = None) -> np.ndarray:
    rows = [list(r) for r in rows]
    if not rows:
        return zeros(0, ncols or 0)
    m = zeros(len(rows), len(rows[0]))
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            m[i, j] = x
    return m


def mul(F: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.size == 0 or b.size == 0:
        return zeros(a.shape[0], b.shape[1])
    return reduce_array(F, a.dot(b))


def reduce_array(F: Field, a: np.ndarray) -> np.ndarray:
    out = zeros(*a.shape)
    for idx, x in np.ndenumerate(a):
        if x:
            out[idx] = F.red(x)
    return out


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def hstack(blocks: list[np.ndarray], nrows: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[1]]
    if not blocks:
        return zeros(nrows, 0)
    return np.concatenate(blocks, axis=1)


def vstack(blocks: list[np.ndarray], ncols: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return zeros(0, ncols)
    return np.concatenate(blocks, axis=0)


def block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def rref(F: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in a]
    ncols = a.shape[1]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        inv = pr[c]
        if inv != 1:
            pr = [F.div(x, inv) if x else 0 for x in pr]
            rows[r] = pr
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [F.red(x - f * y) if y else x for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    out = mat(rows[:r], ncols) if r else zeros(0, ncols)
    return out, pivots


_RANK_PRIME = 2147483629  # largest prime below 2**31; products fit in int64


def _modular_rank(a: np.ndarray, p: int) -> int | None:
    """Rank of a rational matrix mod p, or None if a denominator vanishes mod p."""
    m = np.zeros(a.shape, dtype=np.int64)
    for idx, x in np.ndenumerate(a):
        if x:
            x = Fraction(x)
            if x.denominator % p == 0:
                return None
            m[idx] = x.numerator * pow(x.denominator, -1, p) % p
    r = 0
    nrows = m.shape[0]
    for c in range(m.shape[1]):
        nz = np.nonzero(m[r:, c])[0]
        if not nz.size:
            continue
        piv = r + nz[0]
        m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            m[rows] = (m[rows] - np.outer(col[rows], m[r]) % p) % p
        r += 1
        if r == nrows:
            break
    return r


def rank(F: Field, a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T
    if F.p == 0 and a.size >= 400:
        # rank mod p never exceeds the rational rank, so full rank mod p is exact
        r = _modular_rank(a, _RANK_PRIME)
        if r == a.shape[0]:
            return r
    return len(rref(F, a)[1])


def nullspace(F: Field, a: np.ndarray) -> np.ndarray:
    """Columns spanning {x : a x = 0}."""
    n = a.shape[1]
    if a.shape[0] == 0:
        return eye(n)
    r, piv = rref(F, a)
    free = [c for c in range(n) if c not in set(piv)]
    out = zeros(n, len(free))
    for k, f in enumerate(free):
        out[f, k] = 1
        for i, p in enumerate(piv):
            out[p, k] = F.red(-r[i, f])
    return out


def solve(F: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Some x with a x = b, or None."""
    n = a.shape[1]
    aug = np.concatenate([a, b], axis=1) if a.shape[0] else zeros(0, n + b.shape[1])
    r, piv = rref(F, aug)
    if any(p >= n for p in piv):
        return None
    x = zeros(n, b.shape[1])
    for i, p in enumerate(piv):
        x[p, :] = r[i, n:]
    return x


def inverse(F: Field, a: np.ndarray) -> np.ndarray | None:
    n = a.shape[0]
    if a.shape != (n, n):
        return None
    x = solve(F, a, eye(n))
    if x is None or rank(F, a) < n:
        return None
    return x


def colspace(F: Field, a: np.ndarray) -> np.ndarray:
    """Columns forming a canonical basis of the column space."""
    r, _ = rref(F, a.T)
    return r.T.copy() if r.shape[0] else zeros(a.shape[0], 0)


class Subspace:
    """A subspace of k^n held in reduced row echelon form."""

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, n: int, rows: np.ndarray | None = None, pivots=None):
        self.n = n
        if rows is None:
            rows = zeros(0, n)
            pivots = []
        self.rows = rows
        self.pivots = list(pivots)

    @classmethod
    def span(cls, F: Field, n: int, vectors: np.ndarray) -> "Subspace":
        """Span of the rows of ``vectors``."""
        if vectors.shape[0] == 0:
            return cls(n)
        r, p = rref(F, vectors)
        return cls(n, r, p)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, eye(n), list(range(n)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def add(self, F: Field, vectors: np.ndarray) -> "Subspace":
        if vectors.shape[0] == 0:
            return self
        return Subspace.span(F, self.n, vstack([self.rows, vectors], self.n))

    def reduce(self, F: Field, v: np.ndarray) -> np.ndarray:
        """Reduce column vectors (n x k) modulo the subspace."""
        v = v.copy()
        for i, p in enumerate(self.pivots):
            row = self.rows[i]
            for k in range(v.shape[1]):
                f = v[p, k]
                if f:
                    for j in range(self.n):
                        if row[j]:
                            v[j, k] = F.red(v[j, k] - f * row[j])
        return v

    def contains(self, F: Field, v: np.ndarray) -> bool:
        return is_zero(self.reduce(F, v))

    def quotient_coords(self) -> list[int]:
        ps = set(self.pivots)
        return [c for c in range(self.n) if c not in ps]

    def projection(self, F: Field) -> np.ndarray:
        """Matrix k^n -> k^n/S in the coordinates ``quotient_coords``."""
        qc = self.quotient_coords()
        pos = {c: i for i, c in enumerate(qc)}
        out = zeros(len(qc), self.n)
        for c, i in pos.items():
            out[i, c] = 1
        for r, p in enumerate(self.pivots):
            for c, i in pos.items():
                x = self.rows[r, c]
                if x:
                    out[i, p] = F.red(-x)
        return out

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.n == other.n
                and self.pivots == other.pivots
                and all(x == y for x, y in zip(self.rows.flat, other.rows.flat)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


# ---------------------------------------------------------------- sparse

def sparse_nullspace(F: Field, rows: Iterable[dict], n: int) -> list[dict]:
    """Basis of the kernel of a sparse system with n unknowns."""
    pivot_rows: dict[int, dict] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        # pivot rows are fully reduced, so one pass suffices
        for c in [c for c in row if c in pivot_rows]:
            f = row.get(c)
            if not f:
                continue
            for cc, vv in pivot_rows[c].items():
                x = F.red(row.get(cc, 0) - f * vv)
                if x:
                    row[cc] = x
                else:
                    row.pop(cc, None)
        if not row:
            continue
        p = min(row)
        inv = row[p]
        if inv != 1:
            row = {c: F.div(v, inv) for c, v in row.items()}
        # back-substitute into existing pivot rows
        for q, prow in pivot_rows.items():
            f = prow.get(p)
            if f:
                for cc, vv in row.items():
                    x = F.red(prow.get(cc, 0) - f * vv)
                    if x:
                        prow[cc] = x
                    else:
                        prow.pop(cc, None)
        pivot_rows[p] = row
    free = [c for c in range(n) if c not in pivot_rows]
    basis = []
    for f in free:
        v = {f: 1}
        for p, prow in pivot_rows.items():
            x = prow.get(f)
            if x:
                v[p] = F.red(-x)
        basis.append(v)
    return basis


def sparse_rank(F: Field, rows: Iterable[dict], n: int) -> int:
    return n - len(sparse_nullspace(F, rows, n))


def vectors_rank(F: Field, vectors: list[dict]) -> int:
    """Rank of a list of sparse vectors."""
    n = 1 + max((c for v in vectors for c in v), default=-1)
    return sparse_rank(F, vectors, n)
