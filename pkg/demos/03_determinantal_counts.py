"""
How big is the locus of dependent tuples?
=========================================

Count n x g matrices of rank < n over F_q, read off the degree in q, and
compare the codimension with the two values one might expect.
"""

from zpgraph import empirical_codim, enumerate_rank_counts, rank_count_table, tuple_rank_deficient

# closed form against brute force
print(rank_count_table(2, 2, 2).counts, enumerate_rank_counts(2, 2, 2))
print(rank_count_table(2, 3, 3).counts, enumerate_rank_counts(2, 3, 3))

print(tuple_rank_deficient([(1, 2, 3), (2, 4, 6)], method="both"))

print(" n  g  codim  dim V  g-n+1")
for g in range(1, 6):
    for n in range(1, g + 1):
        est = empirical_codim(n, g)
        print(f"{n:2d} {g:2d} {est.codim:6d} {g:6d} {g - n + 1:6d}")

# the count for 2x2 is q^4 minus the number of invertible matrices
print(empirical_codim(2, 2).coefficients)
