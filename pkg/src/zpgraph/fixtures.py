"""Named dual graphs used in tests, demos and golden reports, plus a random
generator of connected stable graphs."""

from __future__ import annotations

import random

from .graph import DualGraph, stability_check, total_genus


def figure1() -> DualGraph:
    """Chain of four rational components, each carrying one self-node (genus 4)."""
    return DualGraph(
        (0, 0, 0, 0),
        ((0, 1), (1, 2), (2, 3), (0, 0), (1, 1), (2, 2), (3, 3)),
        ("a", "b", "c", "d"),
    )


def theta() -> DualGraph:
    return DualGraph((0, 0), ((0, 1), (0, 1), (0, 1)))


def dumbbell() -> DualGraph:
    return DualGraph((0, 0), ((0, 0), (0, 1), (1, 1)))


def heawood() -> DualGraph:
    """Heawood graph: cubic, girth 6, 14 vertices, 21 edges, genus 8."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return DualGraph((0,) * 14, tuple(edges))


def k33() -> DualGraph:
    return DualGraph((0,) * 6, tuple((i, j) for i in range(3) for j in range(3, 6)))


def single_vertex(genus: int) -> DualGraph:
    return DualGraph((genus,))


def random_stable_graph(rng: random.Random, max_genus: int = 10, max_vertices: int = 7) -> DualGraph:
    """Connected stable graph with total genus in ``[2, max_genus]``.

    A random spanning tree is decorated with extra edges and loops, then each
    unstable vertex is repaired by a loop or a genus bump.  Rejection keeps
    the genus within bounds.
    """
    while True:
        k = rng.randint(1, max_vertices)
        edges = [(rng.randrange(v), v) for v in range(1, k)]
        for _ in range(rng.randint(0, 4)):
            u, w = rng.randrange(k), rng.randrange(k)
            edges.append((u, w))
        genera = [rng.choice((0, 0, 0, 1, 1, 2)) for _ in range(k)]
        deg = [0] * k
        for u, w in edges:
            deg[u] += 1
            deg[w] += 1
        for v in range(k):
            while 2 * genera[v] - 2 + deg[v] <= 0:
                if rng.random() < 0.5:
                    edges.append((v, v))
                    deg[v] += 2
                else:
                    genera[v] += 1
        perm = list(range(len(edges)))
        rng.shuffle(perm)
        G = DualGraph(tuple(genera), tuple(edges[i] for i in perm))
        if 2 <= total_genus(G) <= max_genus:
            assert stability_check(G)
            return G
