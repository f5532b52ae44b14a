from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zpgraph.determinantal import (
    empirical_codim,
    enumerate_rank_counts,
    interpolate,
    prime_power_base,
    prime_powers,
    rank_count_exact,
    rank_count_table,
    rank_lt_count,
    tuple_rank_deficient,
)


def test_prime_powers():
    assert prime_powers(8) == [2, 3, 4, 5, 7, 8, 9, 11]
    assert prime_power_base(27) == 3
    assert prime_power_base(12) is None
    assert prime_power_base(1) is None


def test_rank_count_examples():
    assert rank_count_exact(2, 2, 1, 2) == 9
    assert rank_count_table(2, 2, 2).counts == (1, 9, 6)
    assert rank_lt_count(2, 2, 2) == 10
    for a, b, q in [(1, 1, 2), (3, 5, 7), (4, 2, 9)]:
        assert rank_count_exact(a, b, 0, q) == 1


@pytest.mark.parametrize("bad", [(2, 2, 3, 2), (2, 2, -1, 2), (2, 2, 1, 6), (2, 2, 1, 1)])
def test_rank_count_rejects(bad):
    with pytest.raises(ValueError):
        rank_count_exact(*bad)


@pytest.mark.parametrize("p", [2, 3])
def test_rank_counts_match_brute_force(p):
    for a in range(1, 4):
        for b in range(1, 4):
            table = rank_count_table(a, b, p)
            assert table.counts == enumerate_rank_counts(a, b, p)


@given(st.integers(1, 5), st.integers(1, 5), st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16, 25]))
def test_counts_sum_to_all_matrices(a, b, q):
    table = rank_count_table(a, b, q)
    assert sum(table.counts) == q ** (a * b)
    assert table.counts[0] == 1


def test_interpolate_recovers_polynomial():
    f = lambda x: 3 * x**3 - x + Fraction(1, 2)  # noqa: E731
    xs = [2, 3, 5, 7, 11]
    assert interpolate(xs, [f(x) for x in xs]) == [Fraction(1, 2), -1, 0, 3, 0]
    with pytest.raises(ValueError):
        interpolate([2, 2], [1, 1])


def test_codim_examples():
    assert empirical_codim(1, 4).codim == 4
    two_two = empirical_codim(2, 2)
    assert two_two.codim == 1 and two_two.degree == 3
    assert empirical_codim(2, 3, [2, 3, 4, 5, 7, 8, 9]).codim == 2


def test_codim_statements_reported():
    est = empirical_codim(2, 5).as_dict()
    assert est["codim"] == 4
    assert est["stated"]["codimension dim V"] == 5
    assert est["stated"]["matches codimension dim V"] is False
    assert est["stated"]["codimension exceeds n"] is True
    assert est["stated"]["standard determinantal codimension"] == 4


def test_codim_needs_enough_q():
    with pytest.raises(ValueError):
        empirical_codim(2, 3, [2, 3, 4, 5, 7, 8])
    with pytest.raises(ValueError):
        empirical_codim(3, 2)
    with pytest.raises(ValueError):
        empirical_codim(1, 1, [2, 6])


def test_tuple_examples():
    assert tuple_rank_deficient([(1, 2, 3), (4, 5, 6), (1, 2, 3)], method="both")
    assert not tuple_rank_deficient([(1, 0, 0, 0), (0, 1, 0, 0)], method="both")
    assert tuple_rank_deficient([(1, 2, 3), (2, 4, 6)], method="both")
    with pytest.raises(ValueError):
        tuple_rank_deficient([(1, 2), (1, 2, 3)])
    with pytest.raises(ValueError):
        tuple_rank_deficient([(1, 2), (1, 2)], method="det")


def _random_tuple(rng, n, g):
    vecs = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(g)] for _ in range(n)]
    if rng.random() < 0.5:
        # make the last vector a combination of the others
        coeffs = [Fraction(rng.randint(-2, 2)) for _ in range(n - 1)]
        vecs[-1] = [sum(c * v[j] for c, v in zip(coeffs, vecs)) for j in range(g)]
    return vecs


def test_rank_and_minors_agree(rng):
    for _ in range(2000):
        n = rng.randint(2, 3)
        g = rng.randint(n, 5)
        vecs = _random_tuple(rng, n, g)
        assert tuple_rank_deficient(vecs, "rank") == tuple_rank_deficient(vecs, "minors")
