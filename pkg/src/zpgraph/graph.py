"""Dual graphs of stable curves.

A dual graph has one vertex per irreducible component of the special fibre,
weighted by the genus of that component, and one edge per node.  Loops and
parallel edges are allowed.  Edges are identified by their position in
``DualGraph.edges``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or operations undefined on a graph."""


@dataclass(frozen=True)
class DualGraph:
    """Connected vertex-weighted multigraph.

    ``genera[i]`` is the genus of vertex ``i``; ``edges[e]`` is the unordered
    endpoint pair of edge ``e`` (stored with the smaller index first).
    Connectivity is checked by ``validate`` and by ``total_genus``, not on
    construction, because edge deletion legitimately produces disconnected
    graphs.
    """

    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        genera = tuple(int(x) for x in self.genera)
        k = len(genera)
        edges = []
        for e in self.edges:
            u, w = (int(x) for x in e)
            if not (0 <= u < k and 0 <= w < k):
                raise GraphError(f"edge {e!r} references a missing vertex")
            edges.append((u, w) if u <= w else (w, u))
        if any(x < 0 for x in genera):
            raise GraphError("vertex genus must be nonnegative")
        names = self.names
        if names is None:
            names = tuple(f"v{i + 1}" for i in range(k))
        else:
            names = tuple(str(x) for x in names)
            if len(names) != k:
                raise GraphError("one name per vertex required")
            if len(set(names)) != k:
                raise GraphError("vertex names must be distinct")
        object.__setattr__(self, "genera", genera)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "names", names)

    @classmethod
    def from_edges(cls, genera: Sequence[int], edges: Iterable[Sequence[int]], names=None):
        return cls(tuple(genera), tuple(tuple(e) for e in edges), names)

    @property
    def num_vertices(self) -> int:
        return len(self.genera)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of edge branches at ``v``; a loop counts twice."""
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, w in self.edges:
            deg[u] += 1
            deg[w] += 1
        return deg

    def loops(self) -> list[int]:
        count = [0] * self.num_vertices
        for u, w in self.edges:
            if u == w:
                count[u] += 1
        return count

    def adjacency(self) -> list[list[int]]:
        """Multiplicity matrix; the diagonal holds loop counts."""
        k = self.num_vertices
        adj = [[0] * k for _ in range(k)]
        for u, w in self.edges:
            adj[u][w] += 1
            if u != w:
                adj[w][u] += 1
        return adj

    def vertex_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def is_connected(self) -> bool:
        return self.num_vertices > 0 and num_components(self.num_vertices, self.edges) == 1

    def validate(self) -> "DualGraph":
        if not self.is_connected():
            raise GraphError("dual graph must be connected")
        return self

    def relabel(self, perm: Sequence[int]) -> "DualGraph":
        """Graph with vertex ``i`` moved to position ``perm[i]``."""
        k = self.num_vertices
        genera = [0] * k
        names = [""] * k
        for i, p in enumerate(perm):
            genera[p] = self.genera[i]
            names[p] = self.names[i]
        edges = [(perm[u], perm[w]) for u, w in self.edges]
        return DualGraph(tuple(genera), tuple(edges), tuple(names))


def num_components(k: int, edges: Iterable[tuple[int, int]]) -> int:
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = k
    for u, w in edges:
        ru, rw = find(u), find(w)
        if ru != rw:
            parent[ru] = rw
            count -= 1
    return count


def betti1(G: DualGraph) -> int:
    """First Betti number ``|E| - |V| + #components``; connectivity not required."""
    return G.num_edges - G.num_vertices + num_components(G.num_vertices, G.edges)


def total_genus(G: DualGraph) -> int:
    """Arithmetic genus of the stable curve: cycle rank plus component genera."""
    if not G.is_connected():
        raise GraphError("genus undefined for disconnected special fibre")
    return betti1(G) + sum(G.genera)


def incident_edge_set(G: DualGraph, S: Iterable[int]) -> frozenset[int]:
    """Edges with at least one endpoint in ``S`` (a loop appears once)."""
    S = frozenset(S)
    for v in S:
        if not 0 <= v < G.num_vertices:
            raise GraphError(f"vertex {v} not in graph")
    return frozenset(e for e, (u, w) in enumerate(G.edges) if u in S or w in S)


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    connected: bool
    violations: tuple[int, ...]

    def __bool__(self):
        return self.stable


def stability_check(G: DualGraph) -> StabilityVerdict:
    """Check ``2 g(v) - 2 + deg(v) > 0`` at every vertex, plus connectivity."""
    deg = G.degrees()
    bad = tuple(v for v in range(G.num_vertices) if 2 * G.genera[v] - 2 + deg[v] <= 0)
    connected = G.is_connected()
    return StabilityVerdict(connected and not bad, connected, bad)


def delete_edges(G: DualGraph, F: Iterable[int]) -> DualGraph:
    F = frozenset(F)
    for e in F:
        if not 0 <= e < G.num_edges:
            raise GraphError(f"edge {e} not in graph")
    kept = tuple(edge for e, edge in enumerate(G.edges) if e not in F)
    return DualGraph(G.genera, kept, G.names)
