"""
A linear model of differentials on a nodal curve
=================================================

Each component contributes a block of holomorphic coordinates, each node a
residue.  Residues at the two branches of a node are opposite and they sum
to zero around each component.  The result has dimension equal to the genus.
"""

from zpgraph import (
    build_section_space,
    edge,
    figure1,
    heawood,
    prop1_witness_dim,
    restriction_kernel_dim,
    vertex,
)

G = figure1()
model = build_section_space(G)
print("variables:", model.num_vars, "constraints:", len(model.constraints), "dimension:", model.dimension)

# forcing everything over S to vanish; matrix rank and the closed form agree
for S in ([], [0], [1, 2], [0, 1, 2, 3]):
    print("kernel over", [G.names[v] for v in S], "->", restriction_kernel_dim(G, S, model))

# tuples may mix components and nodes
bridge = G.edges.index((1, 2))
space = prop1_witness_dim(G, [vertex(0), edge(bridge)], model)
print("vanishing at a and on the b-c node:", space.dimension)
for vec in space.basis():
    print("  ", [str(x) for x in vec])

# the 14-vertex cubic graph of girth 6: every pair of locations leaves room
H = heawood()
worst = min(prop1_witness_dim(H, [vertex(0), vertex(v)]).dimension for v in range(1, 14))
print("Heawood, worst pair of vertices:", worst)
