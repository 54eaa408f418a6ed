"""ASCII rendering of radical filtrations of graded modules.

Each layer of rad^k X / rad^{k+1} X is printed on one line, composition
factors grouped by degree.  Degree-0 factors are wrapped in brackets.
"""
from __future__ import annotations

from .modules import GradedModule, projective_module, radical_filtration
from .preproj import WordAlgebra

Layer = list[tuple[int, int, int]]  # (vertex, degree, multiplicity)


def layers_of(X: GradedModule) -> list[Layer]:
    return [[(v, d, n) for (v, d), n in layer.items()] for layer in radical_filtration(X)]


def _factor(v: int, d: int) -> str:
    return f"[{v}]" if d == 0 else str(v)


def render_layer(layer: Layer) -> str:
    groups: dict[int, list[str]] = {}
    for v, d, n in sorted(layer, key=lambda t: (t[1], t[0])):
        groups.setdefault(d, []).extend([_factor(v, d)] * n)
    return "  |  ".join(f"d{d}: " + " ".join(fs) for d, fs in sorted(groups.items()))


def render_module(X: GradedModule, title: str | None = None) -> str:
    ls = layers_of(X)
    head = f"{title or X.name}  (dim {X.total_dim}, {len(ls)} layers)"
    body = [f"  {k}: {render_layer(layer)}" for k, layer in enumerate(ls)]
    return "\n".join([head] + body)


def piw_projectives(W: WordAlgebra) -> dict[int, GradedModule]:
    """Pi_w e_u for each vertex u of the quiver (zero outside the support)."""
    return {u: projective_module(W.algebra, u, 0, name=f"Pi_w e_{u}") for u in W.quiver.vertices}


def render_piw(W: WordAlgebra) -> str:
    blocks = [f"word {' '.join(map(str, W.word))}"]
    for u, X in piw_projectives(W).items():
        blocks.append(render_module(X, f"Pi_w e_{u}"))
    return "\n".join(blocks) + "\n"


def layers_json(X: GradedModule) -> list[list[dict]]:
    return [[{"vertex": v, "degree": d, "mult": n} for v, d, n in layer] for layer in layers_of(X)]
