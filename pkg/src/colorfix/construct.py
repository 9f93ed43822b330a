"""Named graphs: odd wheels, colour-fixation chains and their closures, and a few classics."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, delete_vertex, is_cycle_graph, universal_vertices


@dataclass(frozen=True)
class ChainSpec:
    """Odd cycle lengths of a hub/cycle/hub/.../hub chain, in order."""

    cycle_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.cycle_lengths:
            raise GraphError("a chain needs at least one cycle")
        for length in self.cycle_lengths:
            if length < 3 or length % 2 == 0:
                raise GraphError(f"chain cycle lengths must be odd and at least 3, got {length}")

    @classmethod
    def parse(cls, text: str) -> ChainSpec:
        try:
            lengths = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
        except ValueError:
            raise GraphError(f"bad chain spec {text!r}; expected e.g. '3,5,3'") from None
        return cls(lengths)

    def __str__(self) -> str:
        return ",".join(map(str, self.cycle_lengths))


@dataclass(frozen=True)
class ChainGraph:
    spec: ChainSpec
    graph: Graph
    hubs: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def grotzsch_graph() -> Graph:
    """Mycielskian of C5: 11 vertices, triangle-free, chromatic number 4."""
    cycle = [(i, (i + 1) % 5) for i in range(5)]
    shadows = [(5 + i, (i + d) % 5) for i in range(5) for d in (1, 4)]
    apex = [(10, 5 + i) for i in range(5)]
    return Graph.from_edges(11, cycle + shadows + apex)


def odd_wheel(cycle_len: int) -> tuple[Graph, int]:
    """Hub 0 joined to the cycle 1..cycle_len; returns the graph and the hub."""
    if cycle_len < 3 or cycle_len % 2 == 0:
        raise GraphError(f"odd wheel needs an odd rim length of at least 3, got {cycle_len}")
    rim = [(1 + i, 1 + (i + 1) % cycle_len) for i in range(cycle_len)]
    spokes = [(0, 1 + i) for i in range(cycle_len)]
    return Graph.from_edges(cycle_len + 1, rim + spokes), 0


def build_chain(spec: ChainSpec | list[int] | tuple[int, ...]) -> ChainGraph:
    """Hubs ``0..h-1`` first, then each cycle's vertices consecutively.

    ``cycles[i]`` is joined completely to ``hubs[i]`` and ``hubs[i + 1]``.
    """
    if not isinstance(spec, ChainSpec):
        spec = ChainSpec(tuple(spec))
    h = len(spec.cycle_lengths) + 1
    edges = []
    cycles = []
    nxt = h
    for i, length in enumerate(spec.cycle_lengths):
        cyc = tuple(range(nxt, nxt + length))
        nxt += length
        cycles.append(cyc)
        edges += [(cyc[j], cyc[(j + 1) % length]) for j in range(length)]
        edges += [(hub, c) for hub in (i, i + 1) for c in cyc]
    return ChainGraph(spec, Graph.from_edges(nxt, edges), tuple(range(h)), tuple(cycles))


def close_chain(chain: ChainGraph, pair: tuple[int, int] | None = None) -> Graph:
    """The chain plus an edge between two hubs, by default the first and last."""
    a, b = pair if pair is not None else (chain.hubs[0], chain.hubs[-1])
    if a not in chain.hubs or b not in chain.hubs or a == b:
        raise GraphError(f"closing pair must be two distinct hubs, got ({a}, {b})")
    return chain.graph.add_edge(a, b)


def double_wheel(cycle_len: int) -> Graph:
    """Two non-adjacent hubs sharing one odd rim."""
    return build_chain(ChainSpec((cycle_len,))).graph


def is_odd_wheel(g: Graph) -> bool:
    """True for a hub joined to an odd cycle (K4 counts, with every vertex a hub)."""
    for hub in universal_vertices(g):
        length = is_cycle_graph(delete_vertex(g, hub))
        if length is not None and length % 2 == 1:
            return True
    return False
