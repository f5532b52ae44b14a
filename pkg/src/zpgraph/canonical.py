"""Canonical labeling of genus-labeled multigraphs.

Colour refinement followed by individualization over the first non-singleton
cell.  The search keeps the lexicographically least leaf code; leaves that
tie with it yield automorphisms, which prune later branches.  Transpositions
of twin vertices are seeded as automorphisms up front so that large sets of
isolated or interchangeable vertices (common in partial graphs during
enumeration) do not blow up the search.
"""

from __future__ import annotations

from typing import Sequence

from .graph import DualGraph

Matrix = Sequence[Sequence[int]]


def _rank(keys):
    table = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [table[key] for key in keys], len(table)


def _refine(colors, ncolors, nbrs, adj):
    k = len(colors)
    while ncolors < k:
        sigs = [
            (colors[v], tuple(sorted((colors[u], adj[v][u]) for u in nbrs[v])))
            for v in range(k)
        ]
        new, n = _rank(sigs)
        if n == ncolors:
            break
        colors, ncolors = new, n
    return colors, ncolors


def _twin_transpositions(colors, adj):
    k = len(colors)
    out = []
    for u in range(k):
        for w in range(u + 1, k):
            if colors[u] != colors[w]:
                continue
            ru, rw = adj[u], adj[w]
            if all(ru[x] == rw[x] for x in range(k) if x != u and x != w):
                perm = list(range(k))
                perm[u], perm[w] = w, u
                out.append(tuple(perm))
    return out


class _Search:
    def __init__(self, genera, adj):
        self.genera = genera
        self.adj = adj
        self.k = len(genera)
        self.nbrs = [[u for u in range(self.k) if u != v and adj[v][u]] for v in range(self.k)]
        self.best = None
        self.best_inv = None
        self.auts = []

    def leaf_code(self, inv):
        g, a, k = self.genera, self.adj, self.k
        code = [g[v] for v in inv]
        for i in range(k):
            row = a[inv[i]]
            code.extend(row[inv[j]] for j in range(i, k))
        return tuple(code)

    def run(self):
        colors, n = _rank([(self.genera[v], self.adj[v][v]) for v in range(self.k)])
        colors, n = _refine(colors, n, self.nbrs, self.adj)
        if n < self.k:
            self.auts = _twin_transpositions(colors, self.adj)
        self.visit(colors, n, [])

    def visit(self, colors, ncolors, path):
        k = self.k
        if ncolors == k:
            inv = [0] * k
            for v, c in enumerate(colors):
                inv[c] = v
            code = self.leaf_code(inv)
            if self.best is None or code < self.best:
                self.best, self.best_inv = code, inv
            elif code == self.best:
                aut = [0] * k
                for p in range(k):
                    aut[inv[p]] = self.best_inv[p]
                self.auts.append(tuple(aut))
            return
        counts = [0] * ncolors
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(ncolors) if counts[c] > 1)
        cell = [v for v in range(k) if colors[v] == target]
        done = []
        seen_auts = -1
        root = None
        for v in cell:
            if done:
                if seen_auts != len(self.auts):
                    root = self._orbits(path)
                    seen_auts = len(self.auts)
                rv = root(v)
                if any(root(u) == rv for u in done):
                    continue
            new = [2 * c + (c == target and u != v) for u, c in enumerate(colors)]
            new, n = _rank(new)
            new, n = _refine(new, n, self.nbrs, self.adj)
            self.visit(new, n, path + [v])
            done.append(v)

    def _orbits(self, path):
        parent = list(range(self.k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for aut in self.auts:
            if all(aut[p] == p for p in path):
                for v in range(self.k):
                    a, b = find(v), find(aut[v])
                    if a != b:
                        parent[a] = b
        return find


def canonical_form(genera: Sequence[int], adj: Matrix):
    """Return ``(code, labeling, automorphisms)``.

    ``code`` is a tuple of ints (genera in canonical order followed by the
    upper triangle of the multiplicity matrix), ``labeling[v]`` is the
    canonical position of vertex ``v`` and ``automorphisms`` is a list of
    vertex permutations found during the search (not necessarily generating
    the full group).
    """
    search = _Search(list(genera), adj)
    if search.k == 0:
        return (), [], []
    search.run()
    labeling = [0] * search.k
    for p, v in enumerate(search.best_inv):
        labeling[v] = p
    return search.best, labeling, search.auts


def encode(k: int, code: Sequence[int]) -> bytes:
    return b"".join(x.to_bytes(2, "big") for x in (k, *code))


def canonical_code(G: DualGraph) -> bytes:
    """Byte string equal for two graphs iff they are genus-preserving isomorphic."""
    code, _, _ = canonical_form(G.genera, G.adjacency())
    return encode(G.num_vertices, code)


def canonical_graph(G: DualGraph) -> DualGraph:
    """Representative of the isomorphism class with vertices in canonical order."""
    _, labeling, _ = canonical_form(G.genera, G.adjacency())
    H = G.relabel(labeling)
    edges = sorted(H.edges)
    return DualGraph(H.genera, tuple(edges))


def graph_from_code(code: bytes) -> DualGraph:
    values = [int.from_bytes(code[i:i + 2], "big") for i in range(0, len(code), 2)]
    k, rest = values[0], values[1:]
    genera, tri = rest[:k], rest[k:]
    edges = []
    pos = 0
    for i in range(k):
        for j in range(i, k):
            edges.extend([(i, j)] * tri[pos])
            pos += 1
    return DualGraph(tuple(genera), tuple(edges))
