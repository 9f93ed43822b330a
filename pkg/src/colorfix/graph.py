"""Immutable simple graphs on dense vertex labels, with graph6 and edge-list I/O.

Adjacency is stored as one Python int bitmask per vertex, so set operations on
neighbourhoods are single integer operations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or violated operation preconditions."""


class Graph6Error(GraphError):
    """Raised when a graph6 line cannot be decoded."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"cannot add edge ({u}, {v}) to a graph on {self.n} vertices")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_of(index[u] for u in bits(self.adj[v]) if u in index))
        return Graph._trusted(len(keep), tuple(rows))

    def relabel(self, order: list[int]) -> Graph:
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(order):
            rows[i] = mask_of(pos[u] for u in bits(self.adj[v]))
        return Graph._trusted(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) is not in the graph")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return g.induced(u for u in range(g.n) if u != v)


def contract(g: Graph, u: int, v: int) -> Graph:
    """Identify ``v`` into ``u`` (parallel edges collapse), then drop ``v``.

    The merged vertex keeps ``u``'s label, shifted down by one if ``u > v``.
    """
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot contract ({u}, {v}) in a graph on {g.n} vertices")
    rows = list(g.adj)
    merged = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
    rows[u] = merged
    for w in bits(merged):
        rows[w] = (rows[w] & ~(1 << v)) | (1 << u)
    rows[v] = 0
    return Graph(g.n, tuple(rows)).induced(w for w in range(g.n) if w != v)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` plus every edge between them."""
    edges = list(a.edges())
    edges += [(a.n + x, a.n + y) for x, y in b.edges()]
    edges += [(x, a.n + y) for x in range(a.n) for y in range(b.n)]
    return Graph.from_edges(a.n + b.n, edges)


def connected_components(g: Graph, within: int | None = None) -> list[list[int]]:
    """Components ordered by least vertex; ``within`` restricts to a vertex mask."""
    remaining = (1 << g.n) - 1 if within is None else within
    out = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for w in bits(frontier):
                reach |= g.adj[w]
            frontier = reach & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        out.append(list(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def is_cycle_graph(g: Graph) -> int | None:
    """Length of ``g`` if it is a single cycle (connected, 2-regular), else None."""
    if g.n < 3 or any(d != 2 for d in g.degrees()) or not is_connected(g):
        return None
    return g.n


def odd_cycle_in(g: Graph, within: int) -> list[int] | None:
    """An induced odd cycle inside the vertex mask ``within``, or None if bipartite.

    BFS 2-colours each component from its least vertex; the lexicographically
    least same-colour edge closes an odd walk through the BFS tree, and chords
    are then cut away until the cycle is induced.
    """
    side: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for start in bits(within):
        if start in side:
            continue
        side[start], depth[start], parent[start] = 0, 0, -1
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in bits(g.adj[x] & within):
                if y not in side:
                    side[y] = side[x] ^ 1
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
    conflict = None
    for x in bits(within):
        for y in bits(g.adj[x] & within):
            if x < y and side[x] == side[y]:
                conflict = (x, y)
                break
        if conflict:
            break
    if conflict is None:
        return None
    x, y = conflict
    left, right = [x], [y]
    while left[-1] != right[-1]:
        if depth[left[-1]] >= depth[right[-1]]:
            left.append(parent[left[-1]])
        else:
            right.append(parent[right[-1]])
    cycle = left + right[-2::-1]
    return _shorten_to_induced(g, cycle)


def _shorten_to_induced(g: Graph, cycle: list[int]) -> list[int]:
    while True:
        size = len(cycle)
        chord = None
        for i in range(size):
            for j in range(i + 2, size):
                if i == 0 and j == size - 1:
                    continue
                if g.has_edge(cycle[i], cycle[j]):
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            return cycle
        i, j = chord
        inner = cycle[i : j + 1]
        outer = cycle[j:] + cycle[: i + 1]
        cycle = inner if len(inner) % 2 else outer


def neighborhood_odd_cycle(g: Graph, v: int) -> list[int] | None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return odd_cycle_in(g, g.adj[v])


def is_bipartite(g: Graph) -> bool:
    return odd_cycle_in(g, (1 << g.n) - 1) is None


# --- graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    if g.n < 1:
        raise GraphError("graph6 needs at least one vertex")
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(">>graph6<<"):
        base = len(">>graph6<<")
    data = line[base:]
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside 63..126", base + i)
    if not data:
        raise Graph6Error("empty graph6 line", base)
    vals = [ord(ch) - 63 for ch in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated 18-bit length header", base + len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated 36-bit length header", base + len(vals))
        n = 0
        for x in vals[2:8]:
            n = n << 6 | x
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} adjacency bytes, found {len(body)}", base + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing garbage after adjacency data", base + pos + need)
    if need and nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("non-zero padding bits", base + pos + need - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    """Read the ``n m`` header followed by ``m`` lines of 0-based ``u v`` pairs."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge list must start with an 'n m' header")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        pairs = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"bad edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header promises {m} edges, found {len(pairs)}")
    g = Graph.from_edges(n, pairs)
    if g.num_edges != m:
        raise GraphError("edge list contains repeated edges")
    return g


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)
