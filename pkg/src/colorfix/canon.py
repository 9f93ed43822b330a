"""Canonical labelling of small graphs by individualisation and refinement.

The canonical form is the relabelling, among all leaves of the search tree,
whose graph6 adjacency bit string is lexicographically greatest. Cell splits
and target-cell choice depend only on isomorphism-invariant counts, so the
result is a pure function of the isomorphism class. Interchangeable twins
(vertices whose neighbourhoods agree apart from each other) are individualised
only once per cell, since swapping two twins is an automorphism.
"""

from __future__ import annotations

from .graph import Graph, to_graph6


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells):
            splitter = 0
            for v in cells[i]:
                splitter |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & splitter).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[key] for key in sorted(groups))
                    changed = True
            cells = out
            i += 1
    return cells


def _key(rows: tuple[int, ...], order: list[int]) -> int:
    acc = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            acc = acc << 1 | (row >> order[i] & 1)
    return acc


def _twins(rows: tuple[int, ...], u: int, v: int) -> bool:
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order ``order`` such that ``g.relabel(order)`` is canonical."""
    rows = g.adj
    if g.n <= 1:
        return list(range(g.n))
    best_key = -1
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_key, best_order
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            key = _key(rows, order)
            if key > best_key:
                best_key, best_order = key, order
            return
        cell = cells[target]
        reps: list[int] = []
        for v in cell:
            if not any(_twins(rows, v, r) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [w for w in cell if w != v]
            search(_refine(rows, cells[:target] + [[v], rest] + cells[target + 1 :]))

    search(_refine(rows, [list(range(g.n))]))
    return best_order


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_order(g))


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)

