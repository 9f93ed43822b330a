"""Isomorph-free enumeration and exhaustive claim checking with witnessed reports."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import IO, Callable, Iterable, Iterator

from .canon import canonical_form, canonical_graph6
from .coloring import Budget, BudgetExceeded, chromatic_number
from .construct import ChainSpec, build_chain, close_chain, grotzsch_graph, is_odd_wheel
from .criticality import CriticalityCertificate, check_criticality
from .graph import Graph, GraphError, bits, delete_edge, delete_vertex, is_connected, is_cycle_graph, parse_graph6, read_graph6_lines, to_graph6, universal_vertices
from .identity import (
    cycle_separates,
    identity_partition,
    is_color_identical_pair,
    neighborhood_odd_cycle,
    semantically_fixed_vertices,
    separating_coloring,
)
from .planarity import is_planar

ENUMERATION_MAX_N = 9
CLAIMS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")
VERDICTS = ("pass", "fail", "budget-exceeded")
DEFAULT_CHAINS = ("3", "5", "3,3", "3,5", "5,5", "3,3,3")


# --- enumeration --------------------------------------------------------------


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices.

    Every connected graph has a vertex whose removal leaves it connected, so
    level n is grown from level n - 1 by attaching a new vertex to every
    non-empty neighbour set, then deduplicated by canonical form. Output is
    sorted by canonical graph6.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise GraphError(
            f"built-in enumeration covers 1 <= n <= {ENUMERATION_MAX_N}; "
            "for larger n feed graph6 from an external generator via a corpus file"
        )
    yield from _level(n)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[str, Graph] = {}
    new = 1 << (n - 1)
    for g in _level(n - 1):
        for nbrs in range(1, new):
            rows = list(g.adj)
            rows.append(nbrs)
            for w in bits(nbrs):
                rows[w] |= new
            c = canonical_form(Graph._trusted(n, tuple(rows)))
            found.setdefault(to_graph6(c), c)
    return tuple(found[key] for key in sorted(found))


# --- corpora ------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """Where instances come from and which of them to keep.

    Built-in corpora cover every connected graph with ``min_n..max_n``
    vertices; file corpora read one graph6 line per graph.
    """

    max_n: int | None = None
    min_n: int = 1
    path: str | None = None
    connected: bool = True
    min_degree: int = 0
    chi_min: int | None = None
    chi_max: int | None = None

    def __post_init__(self) -> None:
        if (self.max_n is None) == (self.path is None):
            raise GraphError("corpus needs exactly one of max_n or path")
        if self.max_n is not None and not 1 <= self.min_n <= self.max_n <= ENUMERATION_MAX_N:
            raise GraphError(f"built-in corpus range must lie within 1..{ENUMERATION_MAX_N}")

    def keeps(self, g: Graph) -> bool:
        if self.connected and not is_connected(g):
            return False
        if g.n and g.min_degree() < self.min_degree:
            return False
        if self.chi_min is not None or self.chi_max is not None:
            chi = chromatic_number(g)[0] if g.n else 0
            if self.chi_min is not None and chi < self.chi_min:
                return False
            if self.chi_max is not None and chi > self.chi_max:
                return False
        return True


def iter_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    """Canonically labelled corpus members, each isomorphism class once."""
    if spec.max_n is not None:
        for n in range(spec.min_n, spec.max_n + 1):
            for g in enumerate_connected_graphs(n):
                if spec.keeps(g):
                    yield g
        return
    seen: set[str] = set()
    try:
        with open(spec.path) as fh:
            graphs = list(read_graph6_lines(fh))
    except OSError as exc:
        raise OSError(f"cannot read corpus {spec.path}: {exc.strerror}") from exc
    for g in graphs:
        c = canonical_form(g)
        key = to_graph6(c) if c.n else ""
        if key in seen or not c.n or not spec.keeps(c):
            continue
        seen.add(key)
        yield c


def find_k_critical(corpus: CorpusSpec, k: int) -> Iterator[tuple[Graph, CriticalityCertificate]]:
    for g in iter_corpus(corpus):
        if g.n < k or (g.n > 1 and g.min_degree() < k - 1):
            continue
        cert = check_criticality(g, k).certificate
        if cert is not None:
            yield g, cert


# --- reports ------------------------------------------------------------------


@dataclass
class ClaimReport:
    claim_id: str
    instance: str
    verdict: str
    witness: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {"claim": self.claim_id, "instance": self.instance, "verdict": self.verdict, "witness": self.witness}
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, separators=(",", ":"))

    def sort_key(self) -> tuple[str, str, str]:
        return (self.claim_id, self.instance, json.dumps(self.witness, sort_keys=True))


def summarize(reports: Iterable[ClaimReport]) -> dict:
    counts = dict.fromkeys(VERDICTS, 0)
    per_claim: dict[str, dict[str, int]] = {}
    for r in reports:
        counts[r.verdict] += 1
        per_claim.setdefault(r.claim_id, dict.fromkeys(VERDICTS, 0))[r.verdict] += 1
    return {"counts": counts, "per_claim": dict(sorted(per_claim.items()))}


def write_report(reports: Iterable[ClaimReport], destination: str | Path | IO[str], timing: bool = False) -> dict:
    """Write one JSON object per report, sorted, then a final summary line."""
    ordered = sorted(reports, key=ClaimReport.sort_key)
    summary = summarize(ordered)
    lines = [r.to_json(timing) for r in ordered]
    lines.append(json.dumps({"summary": summary}, sort_keys=True, separators=(",", ":")))
    text = "\n".join(lines) + "\n"
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        try:
            Path(destination).write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {destination}: {exc.strerror}") from exc
    return summary


def read_report(path: str | Path) -> tuple[list[dict], dict]:
    records = [json.loads(line) for line in Path(path).read_text().splitlines() if line]
    return records[:-1], records[-1]["summary"]


# --- claims -------------------------------------------------------------------


def _critical_k(g: Graph, budget: Budget) -> tuple[int, CriticalityCertificate | None]:
    chi = chromatic_number(g, budget)[0]
    if chi < 1:
        return chi, None
    return chi, check_criticality(g, chi, budget).certificate


def _claim_c1(g: Graph, budget: Budget) -> tuple[str, dict] | None:
    chi, cert = _critical_k(g, budget)
    if chi not in (3, 4, 5) or cert is None:
        return None
    for e in g.edges():
        split = separating_coloring(delete_edge(g, e), *e, chi=chi - 1, budget=budget)
        if split is not None:
            return "fail", {"k": chi, "edge": list(e), "separating_coloring": list(split.colors)}
    return "pass", {"k": chi, "edges_checked": g.num_edges}


def _claim_c2(g: Graph, budget: Budget) -> tuple[str, dict] | None:
    if not universal_vertices(g):
        return None
    chi, cert = _critical_k(g, budget)
    if chi != 4 or cert is None:
        return None
    hubs = universal_vertices(g)
    for v in hubs:
        length = is_cycle_graph(delete_vertex(g, v))
        if length is None or length % 2 == 0:
            return "fail", {"universal_vertex": v, "remainder": to_graph6(delete_vertex(g, v))}
    return "pass", {"universal_vertices": hubs, "cycle_length": g.n - 1}


def _claim_c3(g: Graph, budget: Budget) -> tuple[str, dict] | None:
    chi, cert = _critical_k(g, budget)
    if chi != 4 or cert is None or is_odd_wheel(g):
        return None
    full = (1 << g.n) - 1
    candidates = [v for v in range(g.n) if full & ~g.adj[v] & ~(1 << v)]
    offenders = [v for v in semantically_fixed_vertices(g, budget) if v in candidates]
    if offenders:
        return "fail", {"fixed_vertices": offenders}
    return "pass", {"vertices_checked": len(candidates)}


def _is_joined_double_wheel(g: Graph) -> bool:
    length = g.n - 2
    if length < 3 or length % 2 == 0:
        return False
    return canonical_form(g) == canonical_form(close_chain(build_chain((length,))))


def _claim_c4(g: Graph, budget: Budget) -> tuple[str, dict] | None:
    chi, cert = _critical_k(g, budget)
    if chi != 5 or cert is None:
        return None
    shape = _is_joined_double_wheel(g)
    unique_edges = []
    for e in g.edges():
        pairs = identity_partition(delete_edge(g, e), budget).identical_pairs()
        if len(pairs) == 1:
            unique_edges.append([list(e), list(pairs[0])])
    some_edge = "pass" if shape or not unique_edges else "fail"
    every_edge = "pass" if shape or len(unique_edges) < g.num_edges else "fail"
    witness = {
        "joined_double_wheel": shape,
        "unique_pair_edges": unique_edges,
        "edges": g.num_edges,
        "reading_some_edge": some_edge,
        "reading_every_edge": every_edge,
    }
    return some_edge, witness


def _claim_c5(g: Graph, budget: Budget) -> tuple[str, dict] | None:
    if not is_planar(g):
        return None
    chi, coloring = chromatic_number(g, budget)
    return ("fail" if chi > 4 else "pass"), {"chi": chi, "coloring": list(coloring.colors)}


def _claim_c7(g: Graph, budget: Budget) -> tuple[str, dict] | None:
    if not is_planar(g) or chromatic_number(g, budget)[0] != 4:
        return None
    syntactic = [v for v in range(g.n) if neighborhood_odd_cycle(g, v) is not None]
    semantic = semantically_fixed_vertices(g, budget)
    # semantic fixation without an odd cycle in the neighbourhood contradicts the claim;
    # the converse mismatch is expected (a fixed hub may still share its colour) and only recorded
    unexplained = [v for v in semantic if v not in syntactic]
    witness = {
        "syntactic": syntactic,
        "semantic": semantic,
        "semantic_only": unexplained,
        "syntactic_only": [v for v in syntactic if v not in semantic],
    }
    return ("fail" if unexplained else "pass"), witness


def chain_bundle(spec: ChainSpec, budget: Budget | None = None) -> dict:
    """Every sub-check of the chain claim, plus the closure's criticality verdict."""
    chain = build_chain(spec)
    g = chain.graph
    closed = close_chain(chain)
    chi = chromatic_number(g, budget)[0]
    hubs = chain.hubs
    pairs_identical = all(
        is_color_identical_pair(g, hubs[i], hubs[j], budget) for i in range(len(hubs)) for j in range(i + 1, len(hubs))
    )
    separation = all(
        cycle_separates(g, chain.cycles[c], hubs[i], hubs[j])
        for i in range(len(hubs))
        for j in range(i + 1, len(hubs))
        for c in range(i, j)
    )
    closed_chi = chromatic_number(closed, budget)[0]
    critical = check_criticality(closed, 5, budget)
    return {
        "spec": str(spec),
        "chain_chi_is_4": chi == 4,
        "hub_pairs_identical": pairs_identical,
        "cycles_separate_hubs": separation,
        "chain_planar": is_planar(g),
        "closed_chi_is_5": closed_chi == 5,
        "closed_nonplanar": not is_planar(closed),
        "closed_5_critical": bool(critical),
        "closed_graph6": canonical_graph6(closed),
    }


_BUNDLE_CHECKS = ("chain_chi_is_4", "hub_pairs_identical", "cycles_separate_hubs", "chain_planar", "closed_chi_is_5", "closed_nonplanar")

_GRAPH_CLAIMS: dict[str, Callable[[Graph, Budget], tuple[str, dict] | None]] = {
    "C1": _claim_c1,
    "C2": _claim_c2,
    "C3": _claim_c3,
    "C4": _claim_c4,
    "C5": _claim_c5,
    "C7": _claim_c7,
}


def evaluate_instance(graph6: str, claims: tuple[str, ...], budget: int | None = None) -> list[ClaimReport]:
    """All applicable claim reports for one corpus graph (given in canonical graph6)."""
    g = parse_graph6(graph6)
    out = []
    for claim in claims:
        check = _GRAPH_CLAIMS.get(claim)
        if check is None:
            continue
        start = time.perf_counter()
        try:
            result = check(g, Budget(budget))
        except BudgetExceeded:
            result = ("budget-exceeded", {"budget": budget})
        if result is not None:
            out.append(ClaimReport(claim, graph6, result[0], result[1], time.perf_counter() - start))
    return out


def evaluate_chain(spec_text: str, budget: int | None = None) -> list[ClaimReport]:
    spec = ChainSpec.parse(spec_text)
    instance = canonical_graph6(build_chain(spec).graph)
    start = time.perf_counter()
    try:
        bundle = chain_bundle(spec, Budget(budget))
        verdict = "pass" if all(bundle[c] for c in _BUNDLE_CHECKS) else "fail"
    except BudgetExceeded:
        bundle, verdict = {"spec": str(spec), "budget": budget}, "budget-exceeded"
    return [ClaimReport("C6", instance, verdict, bundle, time.perf_counter() - start)]


def _run(task: tuple) -> list[ClaimReport]:
    kind, payload, claims, budget = task
    if kind == "chain":
        return evaluate_chain(payload, budget)
    return evaluate_instance(payload, claims, budget)


def parse_claims(text: str) -> tuple[str, ...]:
    """Parse ``C1,C3``, ``C1..C7`` or ``all`` into an ordered claim tuple."""
    chosen: set[str] = set()
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if part.lower() == "all":
            chosen.update(CLAIMS)
        elif ".." in part:
            lo, hi = part.split("..")
            if lo not in CLAIMS or hi not in CLAIMS:
                raise GraphError(f"unknown claim range {part!r}")
            chosen.update(CLAIMS[CLAIMS.index(lo) : CLAIMS.index(hi) + 1])
        elif part in CLAIMS:
            chosen.add(part)
        else:
            raise GraphError(f"unknown claim {part!r}; expected one of {', '.join(CLAIMS)}")
    if not chosen:
        raise GraphError("no claims selected")
    return tuple(c for c in CLAIMS if c in chosen)


def verify_claims(
    corpus: CorpusSpec,
    claims: Iterable[str],
    budget: int | None = None,
    jobs: int = 1,
    chains: Iterable[str] = DEFAULT_CHAINS,
    include_grotzsch: bool = True,
) -> list[ClaimReport]:
    """Check the selected claims over the corpus; reports come back sorted.

    C6 runs over ``chains`` rather than the corpus. When C1 is selected the
    Grötzsch graph is checked as well, as a triangle-free non-planar instance.
    """
    claims = tuple(c for c in CLAIMS if c in set(claims))
    if not claims:
        raise GraphError("no claims selected")
    tasks: list[tuple] = []
    graph_claims = tuple(c for c in claims if c != "C6")
    names = [to_graph6(g) for g in iter_corpus(corpus)]
    if graph_claims:
        tasks += [("graph", name, graph_claims, budget) for name in names]
    if "C1" in claims and include_grotzsch:
        extra = canonical_graph6(grotzsch_graph())
        if extra not in names:
            tasks.append(("graph", extra, ("C1",), budget))
    if "C6" in claims:
        tasks += [("chain", spec, (), budget) for spec in chains]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run, tasks, chunksize=max(1, len(tasks) // (jobs * 8))))
    else:
        batches = [_run(t) for t in tasks]
    return sorted((r for batch in batches for r in batch), key=ClaimReport.sort_key)
