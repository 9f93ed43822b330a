"""Exact planarity testing.

A graph is planar iff each of its biconnected blocks is. Each block is tested
with the Demoucron–Malgrange–Pertuiset fragment-embedding procedure: embed a
cycle, then repeatedly route a path of some fragment through a face that
contains all of the fragment's attachment vertices. A fragment with no such
face proves the block non-planar; preferring fragments with a single
admissible face makes the greedy choice safe.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph


def is_planar(g: Graph) -> bool:
    m = g.num_edges
    if g.n >= 3 and m > 3 * g.n - 6:
        return False
    if g.n <= 4 or m <= 8:
        return True
    return all(_block_is_planar(block) for block in biconnected_blocks(g))


def biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected blocks, found by an iterative Tarjan DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    clock = 0
    blocks: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    for root in range(g.n):
        if disc[root] >= 0 or not g.adj[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == (p, v):
                        break
                blocks.append(block)
    return blocks


def _block_is_planar(edges: list[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    n, m = len(adj), len(edges)
    if n <= 4 or m <= 8:
        return True
    if m > 3 * n - 6:
        return False

    a, b = min((min(e), max(e)) for e in edges)
    cycle = _path(adj, a, b, allowed=set(adj) - {a}, skip_direct=True)
    faces = [cycle[:], cycle[::-1]]
    placed = set(cycle)
    used = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}

    while len(used) < m:
        fragments: list[tuple[set[int], list[int]]] = []
        for u in sorted(placed):
            for w in sorted(adj[u]):
                if u < w and w in placed and frozenset((u, w)) not in used:
                    fragments.append(({u, w}, [u, w]))
        seen: set[int] = set()
        for start in sorted(set(adj) - placed):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in placed and y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            attach = {y for x in comp for y in adj[x] if y in placed}
            s, t = sorted(attach)[:2]
            path = _path(adj, s, t, allowed=comp | {t}, skip_direct=True)
            fragments.append((attach, path))

        choice = None
        for attach, path in fragments:
            admissible = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not admissible:
                return False
            if choice is None or (len(admissible) == 1 and len(choice[1]) > 1):
                choice = (path, admissible)
        path, admissible = choice
        face = faces[admissible[0]]
        i, j = face.index(path[0]), face.index(path[-1])
        inner = path[1:-1]
        faces[admissible[0]] = _arc(face, i, j) + inner[::-1]
        faces.append(_arc(face, j, i) + inner)
        placed.update(path)
        used.update(frozenset(p) for p in zip(path, path[1:]))
    return True


def _arc(face: list[int], i: int, j: int) -> list[int]:
    if i <= j:
        return face[i : j + 1]
    return face[i:] + face[: j + 1]


def _path(adj: dict[int, set[int]], s: int, t: int, allowed: set[int], skip_direct: bool = False) -> list[int]:
    """Shortest path from ``s`` to ``t`` whose interior stays inside ``allowed``."""
    prev = {s: s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if skip_direct and x == s and y == t:
                continue
            if y in prev or y not in allowed:
                continue
            prev[y] = x
            if y == t:
                out = [t]
                while out[-1] != s:
                    out.append(prev[out[-1]])
                return out[::-1]
            if y != t:
                queue.append(y)
    raise ValueError(f"no path from {s} to {t}")
