"""Colour-identical pairs, colour fixation and cycle separation.

Two notions of a "fixed" vertex are kept apart on purpose:

* syntactic: the vertex sees every vertex of some odd cycle
  (:func:`is_color_fixed_by_odd_cycle`);
* semantic: in no optimal colouring does a non-neighbour share its colour
  (:func:`semantically_fixed_vertices`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Budget, ColorConstraint, Coloring, chromatic_number, k_colorable
from .graph import Graph, GraphError, bits, connected_components, contract, is_cycle_graph, mask_of, neighborhood_odd_cycle, odd_cycle_in


@dataclass(frozen=True)
class IdentityPartition:
    chi: int
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, v: int) -> tuple[int, ...]:
        for cls in self.classes:
            if v in cls:
                return cls
        raise KeyError(v)

    def identical_pairs(self) -> list[tuple[int, int]]:
        return [(c[i], c[j]) for c in self.classes for i in range(len(c)) for j in range(i + 1, len(c))]


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"need two distinct vertices of the graph, got {u} and {v}")


def separating_coloring(g: Graph, u: int, v: int, chi: int | None = None, budget: Budget | None = None) -> Coloring | None:
    """An optimal colouring giving ``u`` and ``v`` different colours, if one exists."""
    _check_pair(g, u, v)
    if chi is None:
        chi = chromatic_number(g, budget)[0]
    return k_colorable(g, chi, ColorConstraint(((u, v),)), budget)


def is_color_identical_pair(g: Graph, u: int, v: int, budget: Budget | None = None) -> bool:
    """True iff ``u``, ``v`` are non-adjacent and equal in every chi(g)-colouring."""
    _check_pair(g, u, v)
    if g.has_edge(u, v):
        return False
    return separating_coloring(g, u, v, budget=budget) is None


def identity_partition(g: Graph, budget: Budget | None = None) -> IdentityPartition:
    chi, witness = chromatic_number(g, budget)
    known = [witness.colors]
    classes: list[tuple[int, ...]] = []
    placed = [False] * g.n
    for v in range(g.n):
        if placed[v]:
            continue
        members = [v]
        for u in range(v + 1, g.n):
            if placed[u] or g.has_edge(u, v):
                continue
            # any optimal colouring already found that splits u, v settles the query
            if any(col[u] != col[v] for col in known):
                continue
            split = k_colorable(g, chi, ColorConstraint(((v, u),)), budget)
            if split is None:
                members.append(u)
            else:
                known.append(split.colors)
        for u in members:
            placed[u] = True
        classes.append(tuple(members))
    return IdentityPartition(chi, tuple(classes))


def is_color_fixed_by_odd_cycle(g: Graph, v: int) -> list[int] | None:
    """An odd cycle inside N(v), which pins v's colour once the cycle is coloured."""
    return neighborhood_odd_cycle(g, v)


def shared_cycle_pair(g: Graph, u: int, v: int) -> list[int] | None:
    """An odd cycle joined completely to both ``u`` and ``v``, if any."""
    _check_pair(g, u, v)
    return odd_cycle_in(g, g.adj[u] & g.adj[v])


def cycle_separates(g: Graph, cycle, u: int, v: int) -> bool:
    """True iff ``u`` and ``v`` fall in different components of ``g`` minus ``cycle``."""
    vertices = sorted(set(cycle))
    if any(not 0 <= w < g.n for w in vertices):
        raise GraphError("cycle vertex out of range")
    if is_cycle_graph(g.induced(vertices)) is None:
        raise GraphError("cycle vertices do not induce a cycle")
    _check_pair(g, u, v)
    if u in vertices or v in vertices:
        raise GraphError("u and v must lie outside the cycle")
    rest = ((1 << g.n) - 1) & ~mask_of(vertices)
    for comp in connected_components(g, within=rest):
        if u in comp:
            return v not in comp
    raise AssertionError("unreachable")


def semantically_fixed_vertices(g: Graph, budget: Budget | None = None) -> list[int]:
    """Vertices that no non-neighbour can share a colour with in any chi-colouring.

    Sharing a colour with ``u`` is tested by contracting ``u`` into ``v`` and
    asking whether the contraction is still chi-colourable.
    """
    chi, witness = chromatic_number(g, budget)
    known = [witness.colors]
    full = (1 << g.n) - 1
    fixed = []
    for v in range(g.n):
        partners = list(bits(full & ~g.adj[v] & ~(1 << v)))
        if any(col[u] == col[v] for col in known for u in partners):
            continue
        alone = True
        for u in partners:
            merged = k_colorable(contract(g, v, u), chi, budget=budget)
            if merged is not None:
                known.append(_lift(merged.colors, v, u))
                alone = False
                break
        if alone:
            fixed.append(v)
    return fixed


def _lift(colors: tuple[int, ...], kept: int, dropped: int) -> tuple[int, ...]:
    """Expand a colouring of G/(kept, dropped) back to G."""
    out = list(colors[:dropped]) + [0] + list(colors[dropped:])
    k = kept if kept < dropped else kept - 1
    out[dropped] = colors[k]
    return tuple(out)
