import functools

import pytest

from zpgraph.canonical import canonical_code, graph_from_code
from zpgraph.criteria import STRONG, WEAK, evaluate, theorem_margin
from zpgraph.enumeration import (
    EnumerationQuery,
    EnumerationStats,
    enumerate_codes,
    enumerate_edges_first,
    enumerate_stable_graphs,
    genus_partitions,
    minimal_genus,
    search_witnesses,
)
from zpgraph.fixtures import dumbbell, figure1, heawood, k33, theta
from zpgraph.graph import DualGraph, GraphError, stability_check, total_genus

GENUS_TWO = [
    DualGraph((2,), ()),
    DualGraph((1,), ((0, 0),)),
    DualGraph((0,), ((0, 0), (0, 0))),
    DualGraph((1, 1), ((0, 1),)),
    DualGraph((1, 0), ((0, 1), (1, 1))),
]


def test_genus_two_by_hand():
    expected = {canonical_code(G) for G in GENUS_TWO + [dumbbell(), theta()]}
    assert len(expected) == 7
    assert set(enumerate_codes(EnumerationQuery(2))) == expected


def test_genus_two_all_genus_zero():
    found = list(enumerate_stable_graphs(EnumerationQuery(2, genus_zero_only=True)))
    assert len(found) == 3
    assert all(set(G.genera) == {0} for G in found)


@pytest.mark.parametrize("g,count", [(2, 7), (3, 42), (4, 379)])
def test_counts(g, count):
    assert len(enumerate_codes(EnumerationQuery(g))) == count


@pytest.mark.parametrize("g", [2, 3, 4])
def test_sound_and_duplicate_free(g):
    codes = enumerate_codes(EnumerationQuery(g))
    assert len(set(codes)) == len(codes)
    assert codes == sorted(codes)
    for code in codes:
        G = graph_from_code(code)
        assert G.is_connected() and stability_check(G).stable
        assert total_genus(G) == g
        assert canonical_code(G) == code


@pytest.mark.parametrize("g", [2, 3])
def test_two_strategies_agree(g):
    assert set(enumerate_codes(EnumerationQuery(g))) == enumerate_edges_first(g)
    assert set(enumerate_codes(EnumerationQuery(g, genus_zero_only=True))) == enumerate_edges_first(g, True)


def test_max_vertices_filter():
    full = enumerate_stable_graphs(3)
    capped = enumerate_stable_graphs(EnumerationQuery(3, max_vertices=2))
    assert {canonical_code(G) for G in capped} == {canonical_code(G) for G in full if G.num_vertices <= 2}


@functools.lru_cache(maxsize=None)
def _all(g):
    return tuple(enumerate_stable_graphs(g))


@pytest.mark.parametrize("g", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("criterion", [STRONG, WEAK])
def test_screened_equals_filtered(g, n, criterion):
    everything = _all(g)
    expected = sorted(canonical_code(G) for G in everything if evaluate(G, n, criterion).verdict)
    assert enumerate_codes(EnumerationQuery(g, criterion=criterion, n=n)) == expected


def test_parallel_matches_serial():
    stats = EnumerationStats(4)
    assert enumerate_codes(EnumerationQuery(4), jobs=2, stats=stats) == enumerate_codes(EnumerationQuery(4))
    assert stats.emitted == 379


def test_query_validation():
    with pytest.raises(GraphError, match="no stable curves of genus < 2"):
        EnumerationQuery(1)
    with pytest.raises(ValueError):
        EnumerationQuery(3, criterion=STRONG)


def test_partitions_respect_bounds():
    for g in range(2, 7):
        for genera, E in genus_partitions(g):
            assert len(genera) <= max(1, 2 * g - 2)
            assert E <= 3 * g - 3
            assert sum(genera) + E - len(genera) + 1 == g
            assert list(genera) == sorted(genera, reverse=True)


def test_search_witnesses_examples():
    assert search_witnesses(2, 1, STRONG) == []
    fig = canonical_code(figure1())
    found = search_witnesses(4, 2, WEAK, limit=100)
    assert fig in {canonical_code(G) for G in found}
    hits = search_witnesses(8, 2, STRONG, limit=1)
    assert len(hits) == 1 and theorem_margin(hits[0], 2).verdict


def test_minimal_genus_small():
    cert = minimal_genus(1, STRONG, 4)
    assert cert.claim == "exists" and cert.genus == 4
    assert theorem_margin(cert.witness, 1).verdict
    assert all(t["examined"] > 0 for t in cert.exhaustion.values())
    assert set(cert.exhaustion) == {2, 3}
    # the graph named in the literature example also works at genus 4
    assert theorem_margin(k33(), 1).margin == 1

    weak = minimal_genus(2, WEAK, 4)
    assert weak.genus == 4 and evaluate(weak.witness, 2, WEAK).verdict
    assert evaluate(figure1(), 2, WEAK).verdict


def test_minimal_genus_cap_reached():
    cert = minimal_genus(2, STRONG, 5)
    assert cert.claim == "none-below" and cert.witness is None
    assert sorted(cert.exhaustion) == [2, 3, 4, 5]
    assert all(t["examined"] > 0 for t in cert.exhaustion.values())


def test_minimal_genus_monotone():
    g1 = minimal_genus(1, STRONG, 6).genus
    g2 = minimal_genus(2, STRONG, 8).genus
    assert g1 <= g2 == 8
    assert theorem_margin(heawood(), 2).verdict


def test_certificate_dict():
    d = minimal_genus(1, STRONG, 4).as_dict()
    assert d["claim"] == "exists" and d["genus"] == 4
    assert d["witness_report"]["verdict"] is True
