"""Coxeter group words: reduced expressions, elements, c-sortable factorization."""
from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .quiver import Quiver

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    parts = text.replace(",", " ").split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad word {text!r}: letters must be vertex ids")


def check_letters(q: Quiver, w) -> None:
    bad = [u for u in w if u not in q.vertices]
    if bad:
        raise ValueError(f"letters {bad} are not vertices of the quiver")


class CoxeterGroup:
    """Geometric representation of W_Q on the root lattice (integer matrices)."""

    def __init__(self, q: Quiver):
        self.quiver = q
        self.vertices = list(q.vertices)
        self.pos = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        form = [[0] * n for _ in range(n)]
        for i, u in enumerate(self.vertices):
            for j, v in enumerate(self.vertices):
                form[i][j] = 2 if i == j else -q.edge_count(u, v)
        self.form = np.array(form, dtype=object)
        self._simple = {}
        for u in self.vertices:
            i = self.pos[u]
            # s_u(x) = x - B(x, alpha_u) alpha_u
            m = self.identity()
            for c in range(n):
                m[i, c] -= self.form[c, i]
            self._simple[u] = m

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def identity(self) -> np.ndarray:
        n = self.rank
        return np.array([[int(r == c) for c in range(n)] for r in range(n)], dtype=object)

    def simple(self, u: int) -> np.ndarray:
        return self._simple[u]

    def element(self, w) -> np.ndarray:
        m = self.identity()
        for u in w:
            m = m.dot(self._simple[u])
        return m

    def root(self, u: int) -> np.ndarray:
        v = np.zeros(self.rank, dtype=object)
        v[self.pos[u]] = 1
        return v

    def is_positive(self, x: np.ndarray) -> bool:
        """Roots are either non-negative or non-positive combinations."""
        return all(c >= 0 for c in x)

    def is_reduced(self, w) -> bool:
        m = self.identity()
        for u in w:
            if not self.is_positive(m.dot(self.root(u))):
                return False
            m = m.dot(self._simple[u])
        return True

    def is_left_descent(self, u: int, y_inverse: np.ndarray) -> bool:
        """True iff l(s_u y) < l(y), given the matrix of y^{-1}."""
        return not self.is_positive(y_inverse.dot(self.root(u)))

    def preserves_form(self, m: np.ndarray) -> bool:
        return np.array_equal(m.T.dot(self.form).dot(m), self.form)


def is_reduced(q: Quiver, w) -> bool:
    return CoxeterGroup(q).is_reduced(w)


def element_of(q: Quiver, w) -> np.ndarray:
    return CoxeterGroup(q).element(w)


def support(w) -> frozenset:
    return frozenset(w)


@dataclass(frozen=True)
class SortableFactorization:
    blocks: tuple[Word, ...]
    c: Word

    @property
    def m(self) -> int:
        return len(self.blocks) - 1

    @property
    def word(self) -> Word:
        return tuple(u for b in self.blocks for u in b)

    def prefix_word(self, i: int) -> Word:
        """Concatenation c^(0) ... c^(i)."""
        return tuple(u for b in self.blocks[:i + 1] for u in b)

    def __str__(self):
        return " | ".join(f"c{i}=" + " ".join(map(str, b)) for i, b in enumerate(self.blocks))


@dataclass(frozen=True)
class Failure:
    """Factorization failed; ``block`` is the first block whose support is not nested."""

    reason: str
    block: int
    blocks: tuple[Word, ...] = ()

    def __bool__(self):
        return False


def sorting_blocks(q: Quiver, w, c) -> tuple[Word, ...]:
    """Greedy c-sorting word of the element of w, split into passes over c."""
    G = CoxeterGroup(q)
    target = G.element(w)
    target_inv = G.element(tuple(reversed(w)))
    x = G.identity()
    blocks: list[Word] = []
    steps = 0
    limit = len(w)
    while not np.array_equal(x, target):
        block = []
        for u in c:
            # remaining part y = x^{-1} w, so y^{-1} = w^{-1} x
            if G.is_left_descent(u, target_inv.dot(x)):
                block.append(u)
                x = x.dot(G.simple(u))
                steps += 1
        if not block or steps > limit:
            raise RuntimeError("sorting scan did not terminate")
        blocks.append(tuple(block))
    return tuple(blocks)


def sortable_factorize(q: Quiver, w, c) -> SortableFactorization | Failure:
    """Factor w as c^(0) c^(1) ... c^(m) with nested supports, or return a Failure."""
    G = CoxeterGroup(q)
    check_letters(q, w)
    if not G.is_reduced(w):
        raise ValueError(f"word {tuple(w)} is not reduced")
    if not w:
        return SortableFactorization((), tuple(c))
    blocks = sorting_blocks(q, w, c)
    for i in range(1, len(blocks)):
        if not set(blocks[i]) <= set(blocks[i - 1]):
            return Failure("supports not nested", i, blocks)
    return SortableFactorization(blocks, tuple(c))


def word_stats(w) -> tuple[dict[int, int], tuple[int, ...]]:
    """(p, m): p_u is the last position of u (1-based), m_i counts earlier u_i."""
    p: dict[int, int] = {}
    m = []
    seen: dict[int, int] = {}
    for i, u in enumerate(w, 1):
        m.append(seen.get(u, 0))
        seen[u] = seen.get(u, 0) + 1
        p[u] = i
    return p, tuple(m)


def sortable_words(q: Quiver, c, max_len: int) -> list[SortableFactorization]:
    """All c-sortable elements of length 1..max_len, by their sorting words."""
    G = CoxeterGroup(q)
    found: dict[tuple, SortableFactorization] = {}
    # every sortable element's sorting word is a subword of c^max_len
    frontier = [((), G.identity())]
    seen = {tuple(G.identity().flat)}
    for _ in range(max_len):
        nxt = []
        for word, m in frontier:
            for u in q.vertices:
                if G.is_positive(m.dot(G.root(u))):
                    mm = m.dot(G.simple(u))
                    key = tuple(mm.flat)
                    if key in seen:
                        continue
                    seen.add(key)
                    nxt.append((word + (u,), mm))
        for word, m in nxt:
            f = sortable_factorize(q, word, c)
            if f:
                found[tuple(m.flat)] = f
        frontier = nxt
    return sorted(found.values(), key=lambda f: (len(f.word), f.word))


def brute_force_elements(q: Quiver, max_len: int) -> int:
    """Number of group elements of length <= max_len (breadth-first)."""
    G = CoxeterGroup(q)
    seen = {tuple(G.identity().flat)}
    frontier = [G.identity()]
    for _ in range(max_len):
        nxt = []
        for m in frontier:
            for u in q.vertices:
                mm = m.dot(G.simple(u))
                key = tuple(mm.flat)
                if key not in seen:
                    seen.add(key)
                    nxt.append(mm)
        frontier = nxt
    return len(seen)


def brute_force_sortable_count(q: Quiver, c, max_len: int) -> int:
    """Non-identity c-sortable elements of length <= max_len, by extending reduced words
    letter by letter and testing every distinct element found."""
    G = CoxeterGroup(q)
    seen: set = set()
    count = 0
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for u in q.vertices:
                x = w + (u,)
                if not G.is_reduced(x):
                    continue
                nxt.append(x)
                key = tuple(G.element(x).flat)
                if key in seen:
                    continue
                seen.add(key)
                if sortable_factorize(q, x, c):
                    count += 1
        layer = nxt
    return count
