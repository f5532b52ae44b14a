"""Isomorph-free generation of stable dual graphs and criterion searches.

A stable graph of genus g with k vertices satisfies
``sum_v (2 g(v) - 2 + deg(v)) = 2g - 2`` with every term at least 1, so
``k <= 2g - 2``, ``|E| <= 3g - 3`` and each vertex degree is capped by
``2g - k + 1 - 2 g(v)``.

Generation fixes the vertex count and the genus multiset (a *partition*),
then adds edges one at a time.  Every partial graph is checked against
conditions that hold for all edge-subgraphs of a valid final graph (degree
caps, remaining degree deficit, component count, no saturated component,
and for the strong criterion the monotone penalty bound), so pruning never
loses a final graph.  Partial graphs are memoized by canonical code, which
makes the search isomorph-free; candidate edges are reduced by the
automorphisms found while canonicalizing.

A second, independent generator (``enumerate_edges_first``) enumerates
labeled multigraph structures by brute force and assigns genera afterwards.
It is only practical for small genus and serves as a cross-check.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Callable, Iterator

from .canonical import canonical_code, canonical_form, encode, graph_from_code
from .criteria import STRONG, WEAK, _branch_and_bound, evaluate
from .graph import DualGraph, GraphError, num_components, stability_check
from .io import graph_to_json

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationQuery:
    genus: int
    genus_zero_only: bool = False
    max_vertices: int | None = None
    criterion: str | None = None
    n: int | None = None

    def __post_init__(self):
        if self.genus < 2:
            raise GraphError("no stable curves of genus < 2")
        if (self.criterion is None) != (self.n is None):
            raise ValueError("criterion and n go together")
        if self.criterion not in (None, STRONG, WEAK):
            raise ValueError(f"unknown criterion {self.criterion!r}")


def genus_partitions(g: int, genus_zero_only: bool = False, max_vertices: int | None = None):
    """Yield ``(genera, num_edges)`` for every feasible partition, largest k first."""
    top = 2 * g - 2
    if max_vertices is not None:
        top = min(top, max_vertices)
    for k in range(top, 0, -1):
        for genera in _nonincreasing(k, g, 0 if genus_zero_only else g):
            s = sum(genera)
            E = g - s + k - 1
            if E > 3 * g - 3:
                continue
            caps = [2 * g - k + 1 - 2 * x for x in genera]
            need = [max(0, 3 - 2 * x) for x in genera]
            if any(c < d for c, d in zip(caps, need)):
                continue
            if k > 1 and min(caps) < 1:
                continue
            if sum(need) > 2 * E:
                continue
            yield genera, E


def _nonincreasing(k, total, top):
    if k == 0:
        yield ()
        return
    for first in range(min(top, total), -1, -1):
        for rest in _nonincreasing(k - 1, total - first, first):
            yield (first,) + rest


def _masks(adj):
    k = len(adj)
    masks = [0] * k
    bit = 0
    for i in range(k):
        for j in range(i, k):
            for _ in range(adj[i][j]):
                masks[i] |= 1 << bit
                masks[j] |= 1 << bit
                bit += 1
    return masks


def strong_prune(g: int, n: int, exhaustive_limit: int = 5000) -> Callable:
    """Partial-graph test for the strong criterion at ``n``.

    Rejects once some ``|S| <= n`` is certain to score above ``g - n`` in
    every completion: each vertex still short of its minimum degree will
    receive more edges, and every new edge at ``S`` raises ``|E(S)|`` by one
    while lowering the total deficit of ``S`` by at most two.
    """

    def ok(genera, adj, deg, need):
        k = len(genera)
        m = min(n, k)
        if m == 0:
            return True
        masks = _masks(adj)
        weights = [2 * x for x in genera]
        deficit = [max(0, need[v] - deg[v]) for v in range(k)]
        limit = g - n
        if comb(k, m) <= exhaustive_limit:
            for S in combinations(range(k), m):
                covered = 0
                base = 0
                short = 0
                for v in S:
                    covered |= masks[v]
                    base += weights[v]
                    short += deficit[v]
                if covered.bit_count() + base + (short + 1) // 2 > limit:
                    return False
            return True
        value, _, _ = _branch_and_bound(masks, weights, m)
        return value <= limit

    return ok


@dataclass
class PartitionResult:
    genera: tuple[int, ...]
    num_edges: int
    examined: int = 0
    states: int = 0
    complete: int = 0
    codes: list[bytes] = field(default_factory=list)


def _search_partition(g, genera, E, prune=None, accept=None, limit=None) -> PartitionResult:
    """DFS over edge additions for one partition.

    ``prune(genera, adj, deg, need)`` must hold on every edge-subgraph of an
    accepted graph.  ``accept(graph)`` filters complete graphs.  Stops after
    ``limit`` accepted graphs when given.
    """
    k = len(genera)
    caps = [2 * g - k + 1 - 2 * x for x in genera]
    need = [max(0, 3 - 2 * x) for x in genera]
    result = PartitionResult(tuple(genera), E)
    seen: set[tuple] = set()
    found: dict[bytes, None] = {}

    adj = [[0] * k for _ in range(k)]
    deg = [0] * k
    code, _, auts = canonical_form(genera, adj)
    seen.add(code)

    def feasible(remaining):
        deficit = sum(max(0, need[v] - deg[v]) for v in range(k))
        if deficit > 2 * remaining:
            return False
        if k == 1:
            return True
        parent = list(range(k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = k
        for i in range(k):
            for j in range(i + 1, k):
                if adj[i][j]:
                    a, b = find(i), find(j)
                    if a != b:
                        parent[a] = b
                        comps -= 1
        if comps - 1 > remaining:
            return False
        if comps > 1:
            open_roots = {find(v) for v in range(k) if deg[v] < caps[v]}
            if len(open_roots) < comps:
                return False
        return True

    def pair_orbits(auts):
        pairs = [(i, j) for i in range(k) for j in range(i, k)]
        if not auts:
            return pairs
        parent = {p: p for p in pairs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for aut in auts:
            for i, j in pairs:
                a, b = aut[i], aut[j]
                img = (a, b) if a <= b else (b, a)
                ra, rb = find((i, j)), find(img)
                if ra != rb:
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
        return [p for p in pairs if find(p) == p]

    def dfs(t, auts):
        result.states += 1
        if t == E:
            result.complete += 1
            edges = [(i, j) for i in range(k) for j in range(i, k) for _ in range(adj[i][j])]
            graph = DualGraph(tuple(genera), tuple(edges))
            if accept is None or accept(graph):
                c, _, _ = canonical_form(genera, adj)
                found[encode(k, c)] = None
                if limit is not None and len(found) >= limit:
                    return True
            return False
        remaining = E - t - 1
        short = [v for v in range(k) if deg[v] < need[v]]
        if short:
            # every completion adds an edge at a vertex below its minimum degree
            v = max(short, key=lambda u: (deg[u], -u))
            candidates = [(min(u, v), max(u, v)) for u in range(k)]
        else:
            candidates = pair_orbits(auts)
        # joining components first steers the DFS towards connected completions
        candidates.sort(key=lambda p: (p[0] == p[1], -(need[p[0]] > deg[p[0]]) - (need[p[1]] > deg[p[1]]), p))
        for i, j in candidates:
            if i == j:
                if deg[i] + 2 > caps[i]:
                    continue
            elif deg[i] + 1 > caps[i] or deg[j] + 1 > caps[j]:
                continue
            adj[i][j] += 1
            if i != j:
                adj[j][i] += 1
            deg[i] += 1
            deg[j] += 1
            result.examined += 1
            ok = feasible(remaining) and (prune is None or prune(genera, adj, deg, need))
            if ok:
                child_code, _, child_auts = canonical_form(genera, adj)
                if child_code not in seen:
                    seen.add(child_code)
                    if dfs(t + 1, child_auts):
                        return True
            adj[i][j] -= 1
            if i != j:
                adj[j][i] -= 1
            deg[i] -= 1
            deg[j] -= 1
        return False

    result.examined += 1
    if feasible(E) and (prune is None or prune(genera, adj, deg, need)):
        dfs(0, auts)
    result.codes = list(found)
    return result


def _partitions_for(query: EnumerationQuery):
    return list(genus_partitions(query.genus, query.genus_zero_only, query.max_vertices))


def _screen(query: EnumerationQuery):
    prune = accept = None
    if query.criterion == STRONG:
        prune = strong_prune(query.genus, query.n)
        accept = lambda G: evaluate(G, query.n, STRONG).verdict  # noqa: E731
    elif query.criterion == WEAK:
        accept = lambda G: evaluate(G, query.n, WEAK).verdict  # noqa: E731
    return prune, accept


def _run_partition(args):
    query, genera, E, limit = args
    prune, accept = _screen(query)
    return _search_partition(query.genus, genera, E, prune, accept, limit)


def _map(fn, items, jobs):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


@dataclass
class EnumerationStats:
    genus: int
    partitions: int = 0
    examined: int = 0
    states: int = 0
    complete: int = 0
    emitted: int = 0

    def as_dict(self):
        return {
            "genus": self.genus,
            "partitions": self.partitions,
            "examined": self.examined,
            "states": self.states,
            "complete": self.complete,
            "emitted": self.emitted,
        }


def enumerate_codes(query: EnumerationQuery, jobs: int = 1, stats: EnumerationStats | None = None) -> list[bytes]:
    """Sorted canonical codes of all graphs answering the query."""
    parts = _partitions_for(query)
    results = _map(_run_partition, [(query, genera, E, None) for genera, E in parts], jobs)
    codes = sorted(c for r in results for c in r.codes)
    if stats is not None:
        stats.partitions = len(parts)
        stats.examined = sum(r.examined for r in results)
        stats.states = sum(r.states for r in results)
        stats.complete = sum(r.complete for r in results)
        stats.emitted = len(codes)
    return codes


def enumerate_stable_graphs(query: EnumerationQuery | int, jobs: int = 1,
                            stats: EnumerationStats | None = None) -> Iterator[DualGraph]:
    """All connected stable graphs of the query genus, one per isomorphism
    class, as canonical representatives in canonical-code order."""
    if isinstance(query, int):
        query = EnumerationQuery(query)
    for code in enumerate_codes(query, jobs, stats):
        yield graph_from_code(code)


def enumerate_edges_first(g: int, genus_zero_only: bool = False, max_elements: int | None = None) -> set[bytes]:
    """Independent brute-force generator: canonical codes of stable genus-g graphs.

    Connected labeled multigraph structures are listed exhaustively for each
    vertex count and cycle rank, deduplicated, and then decorated with every
    distribution of the remaining genus over the vertices.
    """
    if g < 2:
        raise GraphError("no stable curves of genus < 2")
    out = set()
    for k in range(1, 2 * g - 1):
        pairs = [(i, j) for i in range(k) for j in range(i, k)]
        for b1 in range(0, g + 1):
            E = b1 + k - 1
            if E > 3 * g - 3:
                continue
            if max_elements is not None and k + E > max_elements:
                continue
            structures = {}
            for edges in combinations_with_replacement(pairs, E):
                if num_components(k, edges) != 1:
                    continue
                G = DualGraph((0,) * k, edges)
                code, _, _ = canonical_form(G.genera, G.adjacency())
                structures.setdefault(code, G)
            rest = g - b1
            if genus_zero_only and rest:
                continue
            for G in structures.values():
                for genera in _compositions(rest, k):
                    H = DualGraph(genera, G.edges)
                    if stability_check(H):
                        code, _, _ = canonical_form(H.genera, H.adjacency())
                        out.add(encode(k, code))
    return out


def _compositions(total, k):
    for cuts in combinations(range(total + k - 1), k - 1):
        prev = -1
        parts = []
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(total + k - 2 - prev)
        yield tuple(parts)


@dataclass(frozen=True)
class SearchCertificate:
    claim: str  # "exists" or "none-below"
    genus: int | None
    n: int
    criterion: str
    cap: int
    witness: DualGraph | None
    exhaustion: dict

    def as_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "genus": self.genus,
            "n": self.n,
            "criterion": self.criterion,
            "cap": self.cap,
            "exhaustion": {str(k): v for k, v in sorted(self.exhaustion.items())},
        }
        if self.witness is not None:
            report = evaluate(self.witness, self.n, self.criterion)
            out["witness"] = graph_to_json(self.witness)
            out["witness_code"] = canonical_code(self.witness).hex()
            out["witness_report"] = report.as_dict()
        return out


def _first_hit(query: EnumerationQuery, jobs: int):
    parts = _partitions_for(query)
    totals = {"partitions": len(parts), "examined": 0, "states": 0, "complete": 0}
    if jobs and jobs > 1:
        results = _map(_run_partition, [(query, genera, E, 1) for genera, E in parts], jobs)
    else:
        results = []
        for genera, E in parts:
            r = _run_partition((query, genera, E, 1))
            results.append(r)
            if r.codes:
                break
    for r in results:
        totals["examined"] += r.examined
        totals["states"] += r.states
        totals["complete"] += r.complete
        if r.codes:
            return graph_from_code(r.codes[0]), totals
    return None, totals


def minimal_genus(n: int, criterion: str, cap: int, jobs: int = 1) -> SearchCertificate:
    """Smallest genus ``<= cap`` with a stable graph passing the criterion."""
    if n < 1 or cap < 2:
        raise ValueError("need n >= 1 and cap >= 2")
    exhaustion = {}
    for g in range(2, cap + 1):
        witness, totals = _first_hit(EnumerationQuery(g, criterion=criterion, n=n), jobs)
        log.info("genus %d: %s", g, totals)
        if witness is not None:
            return SearchCertificate("exists", g, n, criterion, cap, witness, exhaustion)
        exhaustion[g] = totals
    return SearchCertificate("none-below", None, n, criterion, cap, None, exhaustion)


def search_witnesses(g: int, n: int, criterion: str, limit: int = 10, jobs: int = 1) -> list[DualGraph]:
    """Up to ``limit`` genus-g graphs passing the criterion, in canonical-code order.

    Partitions are searched largest vertex count first and the search stops
    once ``limit`` graphs are collected, so the result is deterministic but
    not necessarily the ``limit`` smallest codes overall.
    """
    query = EnumerationQuery(g, criterion=criterion, n=n)
    codes: list[bytes] = []
    for genera, E in _partitions_for(query):
        r = _run_partition((query, genera, E, limit - len(codes)))
        codes.extend(r.codes)
        if len(codes) >= limit:
            break
    return [graph_from_code(c) for c in sorted(codes)[:limit]]
