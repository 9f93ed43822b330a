"""Exact vertex colouring: decision, chromatic number, enumeration and counting."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .graph import Graph, GraphError, bits

POLYNOMIAL_MAX_N = 16


class BudgetExceeded(RuntimeError):
    """A search ran out of its node-expansion budget before reaching a verdict."""


@dataclass
class Budget:
    """Node-expansion allowance shared by every search that receives it."""

    limit: int | None = None
    used: int = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"node budget of {self.limit} exhausted")


@dataclass(frozen=True)
class Coloring:
    """Colour index per vertex; colours are numbered by first appearance."""

    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=-1) + 1

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    @classmethod
    def normalized(cls, colors: Iterable[int]) -> Coloring:
        relabel: dict[int, int] = {}
        return cls(tuple(relabel.setdefault(c, len(relabel)) for c in colors))


@dataclass(frozen=True)
class ColorConstraint:
    """Extra must-differ pairs, usually between non-adjacent vertices."""

    differ: tuple[tuple[int, int], ...] = field(default=())

    def satisfied_by(self, coloring: Coloring) -> bool:
        return all(coloring.colors[u] != coloring.colors[v] for u, v in self.differ)


def search_order(g: Graph) -> list[int]:
    """Descending degree, ties broken by vertex index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def k_colorable(
    g: Graph,
    k: int,
    constraint: ColorConstraint | None = None,
    budget: Budget | None = None,
) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or None if none exists.

    Vertices are coloured in :func:`search_order`; a vertex may open at most one
    new colour beyond those already in use, which removes colour-permutation
    symmetry. Forward checking rejects a branch as soon as an uncoloured
    vertex loses its last available colour.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    if n == 0:
        return Coloring(())
    rows = list(g.adj)
    if constraint is not None:
        for u, v in constraint.differ:
            if u == v:
                return None
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    work = Graph(n, tuple(rows)) if constraint is not None else g
    order = search_order(work)
    full = (1 << k) - 1
    domain = [full] * n
    color = [-1] * n

    def extend(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        options = domain[v] & ((1 << min(used + 1, k)) - 1)
        for c in bits(options):
            if budget is not None:
                budget.tick()
            bit = 1 << c
            touched = []
            dead = False
            for w in bits(rows[v]):
                if color[w] < 0 and domain[w] & bit:
                    domain[w] &= ~bit
                    touched.append(w)
                    if not domain[w]:
                        dead = True
                        break
            if not dead:
                color[v] = c
                if extend(pos + 1, max(used, c + 1)):
                    return True
                color[v] = -1
            for w in touched:
                domain[w] |= bit
        return False

    if not extend(0, 0):
        return None
    return Coloring.normalized(color)


def greedy_clique(g: Graph) -> list[int]:
    """A large clique grown greedily from every start vertex; the best is kept."""
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(bits(cand), key=lambda w: ((g.adj[w] & cand).bit_count(), -w))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def max_clique_size(g: Graph) -> int:
    """Exact clique number by Bron–Kerbosch with pivoting."""
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(bits(cand | excl), key=lambda u: (g.adj[u] & cand).bit_count())
        for v in bits(cand & ~g.adj[pivot]):
            expand(size + 1, cand & g.adj[v], excl & g.adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return best


def dsatur(g: Graph) -> Coloring:
    """DSATUR greedy colouring: most saturated vertex first, then degree, then index."""
    color = [-1] * g.n
    seen = [0] * g.n
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if color[u] < 0),
            key=lambda u: (seen[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        while seen[v] >> c & 1:
            c += 1
        color[v] = c
        for w in bits(g.adj[v]):
            seen[w] |= 1 << c
    return Coloring.normalized(color)


def chromatic_number(g: Graph, budget: Budget | None = None) -> tuple[int, Coloring]:
    """Chromatic number with a witness colouring that uses exactly that many colours."""
    if g.n < 1:
        raise GraphError("chromatic number needs at least one vertex")
    lower = len(greedy_clique(g))
    upper = dsatur(g)
    for k in range(lower, upper.num_colors):
        found = k_colorable(g, k, budget=budget)
        if found is not None:
            return k, found
    return upper.num_colors, upper


def enumerate_colorings(g: Graph, k: int) -> Iterator[Coloring]:
    """Every proper colouring with at most ``k`` colours, one per colour permutation class.

    Colours first appear in increasing vertex order, and colourings are emitted
    in lexicographic order.
    """
    n = g.n
    color = [-1] * n

    def walk(v: int, used: int) -> Iterator[Coloring]:
        if v == n:
            yield Coloring(tuple(color))
            return
        for c in range(min(used + 1, k)):
            if any(color[w] == c for w in bits(g.adj[v] & ((1 << v) - 1))):
                continue
            color[v] = c
            yield from walk(v + 1, max(used, c + 1))
        color[v] = -1

    yield from walk(0, 0)


def chromatic_polynomial_value(g: Graph, k: int) -> int:
    """Number of labelled proper ``k``-colourings, by deletion–contraction."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n > POLYNOMIAL_MAX_N:
        raise GraphError(f"chromatic polynomial refused for n={g.n} > {POLYNOMIAL_MAX_N}")
    return _count(tuple(g.adj), k)


@lru_cache(maxsize=1 << 16)
def _count(rows: tuple[int, ...], k: int) -> int:
    n = len(rows)
    if n == 0:
        return 1
    m2 = sum(r.bit_count() for r in rows)
    if m2 == 0:
        return k**n
    if m2 == n * (n - 1):
        out = 1
        for i in range(n):
            out *= k - i
        return out
    for v, r in enumerate(rows):
        d = r.bit_count()
        if d <= 1:
            # isolated vertex: k choices; pendant vertex: k - 1 choices
            return (k - d) * _count(_drop(rows, v), k)
    # delete/contract the edge at the lowest-degree vertex to keep branches small
    v = min(range(n), key=lambda x: (rows[x].bit_count(), x))
    u = (rows[v] & -rows[v]).bit_length() - 1
    deleted = list(rows)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    merged = list(deleted)
    nb = merged[v]
    merged[u] |= nb
    for w in bits(nb):
        merged[w] |= 1 << u
    return _count(tuple(deleted), k) - _count(_drop(merged, v), k)


def _drop(rows, v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    out = []
    for i, r in enumerate(rows):
        if i != v:
            out.append((r & low) | ((r >> (v + 1)) << v))
    return tuple(out)
