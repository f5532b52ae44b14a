"""
Smallest genus passing the strong criterion
===========================================

For n = 2 every graph of genus at most 7 has a pair of vertices that covers
too many edges.  The pruned search proves it and finds a witness at genus 8.
"""

import json
import time

from zpgraph import heawood, minimal_genus, theorem_margin

for n, cap in ((1, 4), (2, 8)):
    t = time.perf_counter()
    cert = minimal_genus(n, "strong", cap)
    print(f"n={n}: {cert.claim} at genus {cert.genus} ({time.perf_counter() - t:.1f}s)")
    for g, totals in cert.exhaustion.items():
        print("   none at genus", g, totals)
    print("   witness:", json.dumps(cert.as_dict()["witness"]))

# a classical witness of the same genus
print("Heawood graph, n=2:", theorem_margin(heawood(), 2).margin)
