"""
All stable dual graphs of small genus
=====================================
"""

import time

from zpgraph import EnumerationQuery, EnumerationStats, enumerate_stable_graphs
from zpgraph.enumeration import enumerate_codes, enumerate_edges_first

for G in enumerate_stable_graphs(2):
    print(G.genera, G.edges)

for g in range(2, 6):
    stats = EnumerationStats(g)
    t = time.perf_counter()
    codes = enumerate_codes(EnumerationQuery(g), stats=stats)
    print(f"genus {g}: {len(codes)} graphs, {stats.states} partial states, {time.perf_counter() - t:.2f}s")

# brute-force cross-check, only feasible for tiny genus
for g in (2, 3):
    print(g, set(enumerate_codes(EnumerationQuery(g))) == enumerate_edges_first(g))
