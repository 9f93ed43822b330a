"""k-chromatic and (edge-)k-critical graphs, with replayable certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .coloring import Budget, Coloring, chromatic_number, k_colorable, max_clique_size
from .graph import Edge, Graph, delete_edge, is_connected


@dataclass(frozen=True)
class CriticalityCertificate:
    """A ``k``-colouring of G plus, for every edge e, a ``(k-1)``-colouring of G - e."""

    k: int
    base_witness: Coloring
    per_edge: tuple[tuple[Edge, Coloring], ...]

    def replay(self, g: Graph) -> bool:
        """Re-check every stored colouring against the graph it certifies."""
        if not self.base_witness.is_proper(g) or self.base_witness.num_colors > self.k:
            return False
        if [e for e, _ in self.per_edge] != g.edges():
            return False
        for e, col in self.per_edge:
            if not col.is_proper(delete_edge(g, e)) or col.num_colors > self.k - 1:
                return False
        return chromatic_number(g)[0] == self.k

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "base": list(self.base_witness.colors),
            "per_edge": [[list(e), list(c.colors)] for e, c in self.per_edge],
        }


@dataclass(frozen=True)
class CriticalityCheck:
    """Outcome of a criticality test; ``certificate`` is None when not critical."""

    certificate: CriticalityCertificate | None
    reason: str = ""
    counterexample: Edge | None = None

    def __bool__(self) -> bool:
        return self.certificate is not None


def is_k_chromatic(g: Graph, k: int, budget: Budget | None = None) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        return False
    return chromatic_number(g, budget)[0] == k


def check_criticality(g: Graph, k: int, budget: Budget | None = None) -> CriticalityCheck:
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        return CriticalityCheck(None, "empty graph")
    if not is_connected(g):
        return CriticalityCheck(None, "disconnected")
    if g.n > 1 and g.min_degree() < k - 1:
        return CriticalityCheck(None, f"minimum degree below {k - 1}")
    complete = g.num_edges == g.n * (g.n - 1) // 2
    if not complete and max_clique_size(g) >= k:
        return CriticalityCheck(None, f"contains K{k} but is not K{k}")
    chi, witness = chromatic_number(g, budget)
    if chi != k:
        return CriticalityCheck(None, f"chromatic number is {chi}")
    per_edge = []
    for e in g.edges():
        col = k_colorable(delete_edge(g, e), k - 1, budget=budget) if k > 1 else None
        if col is None:
            return CriticalityCheck(None, "edge deletion keeps chromatic number", e)
        per_edge.append((e, col))
    return CriticalityCheck(CriticalityCertificate(k, witness, tuple(per_edge)))


def is_k_critical(g: Graph, k: int, budget: Budget | None = None) -> CriticalityCertificate | None:
    return check_criticality(g, k, budget).certificate


def subcriticals(g: Graph) -> Iterator[tuple[Edge, Graph]]:
    """Every single-edge deletion ``(e, G - e)`` in lexicographic edge order."""
    for e in g.edges():
        yield e, delete_edge(g, e)
