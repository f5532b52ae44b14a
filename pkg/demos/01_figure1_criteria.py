"""
Two criteria on a chain of four looped rational curves
=======================================================

Four genus-0 components in a chain, each with one self-node.  Total genus 4,
all of it coming from cycles.
"""

from zpgraph import figure1, n_max, remark_margin, theorem_margin, total_genus

G = figure1()
print("vertices:", G.names, "genus:", total_genus(G))

# the strong criterion charges every edge touching S, plus twice the genus in S
for n in (1, 2):
    rep = theorem_margin(G, n)
    print(f"strong n={n}: margin {rep.margin}, verdict {rep.verdict}, "
          f"worst S = {[G.names[v] for v in rep.witness]}")

# the weak one only asks for enough cycles left after cutting the edges at S
for n in (1, 2, 3):
    rep = remark_margin(G, n)
    print(f"weak   n={n}: margin {rep.margin}, verdict {rep.verdict}")

print("n_max strong:", n_max(G, "strong"), " weak:", n_max(G, "weak"))
