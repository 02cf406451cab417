"""Closed-form feasibility predicates, family recognition, verifier reports."""

import pytest

from pebblex import (
    FeasibilityVerdict,
    Graph,
    Puz,
    bipartite_pebbles_feasible,
    classify_instance,
    complete_multipartite,
    girth5_reachable_oracle,
    is_feasible,
    kms_feasible,
    multipartite_feasible,
    pebble_family,
    verify_parity_example,
    verify_product_theorem,
    verify_prop2,
    verify_square_lemma,
    wilson_feasible,
)
from pebblex.classify import NOT_APPLICABLE, _partitions_min2
from pebblex.names import graph_from_desc


def g(desc):
    return graph_from_desc(desc)


# two triangles joined by a path through vertices 3-4-5-6
DOUBLE_TRIANGLE = Graph(
    range(1, 9),
    [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 8), (7, 8)],
)

K4_MINUS_EDGE = Graph(range(1, 5), [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])

DISCONNECTED = Graph(range(1, 7), [(1, 2), (2, 3), (4, 5), (5, 6)])


# ---------------------------------------------------------------------------
# one free pebble

def test_wilson_feasible_default():
    v = wilson_feasible(g("k4"))
    assert v == FeasibilityVerdict(True, True, "default")


def test_wilson_cycle_rule():
    assert wilson_feasible(g("c7")) == FeasibilityVerdict(True, False, "cycle")


def test_wilson_bipartite_rule():
    k33 = complete_multipartite(3, 3)
    assert wilson_feasible(k33) == FeasibilityVerdict(True, False, "bipartite")


def test_wilson_theta_rule():
    assert wilson_feasible(g("theta122")) == FeasibilityVerdict(
        True, False, "theta"
    )


def test_wilson_check_order_cycle_before_bipartite():
    # even cycles are both; the cycle clause must fire first
    assert wilson_feasible(g("c6")).rule == "cycle"


def test_wilson_not_applicable():
    # too small: the 3-cycle's one-free-pebble puzzle is feasible, so it
    # sits outside this predicate's scope instead of being called a cycle
    assert wilson_feasible(g("c3")) == FeasibilityVerdict(
        False, None, NOT_APPLICABLE
    )
    # not 2-connected
    assert wilson_feasible(g("p4")).applicable is False
    assert wilson_feasible(DISCONNECTED).applicable is False
    # and the excluded 3-cycle really is feasible
    assert is_feasible(Puz(g("c3"), g("star2"))) is True


# ---------------------------------------------------------------------------
# k labeled pebbles, the rest identical blanks

def test_kms_isthmus_witness():
    v = kms_feasible(g("p4"), 2)
    assert v == FeasibilityVerdict(True, False, "k-isthmus", (2, 3))


def test_kms_feasible_default():
    assert kms_feasible(K4_MINUS_EDGE, 2) == FeasibilityVerdict(
        True, True, "default"
    )


def test_kms_witness_is_a_real_isthmus():
    v = kms_feasible(g("p6"), 4)
    assert v.rule == "k-isthmus"
    w = v.witness
    board = g("p6")
    assert len(w) == 4
    # consecutive witness vertices are adjacent on the board
    for a, b in zip(w, w[1:]):
        assert board.has_edge(a, b)
    # interior vertices of the witness path have no neighbors off the path
    for x in w[1:-1]:
        assert set(board.adj[x]) <= set(w)


def test_kms_not_applicable():
    assert kms_feasible(g("c6"), 2).rule == NOT_APPLICABLE
    assert kms_feasible(g("p4"), 1).rule == NOT_APPLICABLE
    assert kms_feasible(g("p4"), 5).rule == NOT_APPLICABLE
    assert kms_feasible(DISCONNECTED, 2).rule == NOT_APPLICABLE


# ---------------------------------------------------------------------------
# two-sided pebbles

def test_two_part_rules():
    assert bipartite_pebbles_feasible(g("c6"), 2).rule == "cycle"
    assert bipartite_pebbles_feasible(g("p5"), 2).rule == "bipartite"
    assert bipartite_pebbles_feasible(g("k4"), 2) == FeasibilityVerdict(
        True, True, "default"
    )
    assert bipartite_pebbles_feasible(DISCONNECTED, 2).rule == NOT_APPLICABLE


def test_two_part_isthmus():
    # odd cycle with a pendant triangle: not bipartite, not a cycle,
    # but the bridge path is a 2-isthmus
    board = Graph(
        range(1, 7), [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)]
    )
    v = bipartite_pebbles_feasible(board, 2)
    assert v.rule == "k-isthmus"
    assert v.feasible is False


def test_two_part_range_errors():
    with pytest.raises(ValueError):
        bipartite_pebbles_feasible(g("p5"), 1)
    with pytest.raises(ValueError):
        bipartite_pebbles_feasible(g("p5"), 3)  # 3 > 5 // 2


# ---------------------------------------------------------------------------
# three or more parts

def test_multipartite_rules():
    assert multipartite_feasible(g("k6"), (2, 2, 2)) == FeasibilityVerdict(
        True, True, "default"
    )
    assert multipartite_feasible(g("c6"), (2, 2, 2)).rule == "cycle"
    v = multipartite_feasible(DOUBLE_TRIANGLE, (2, 2, 4))
    assert v.rule == "k-isthmus"
    assert v.witness == (3, 4, 5, 6)
    assert multipartite_feasible(DISCONNECTED, (2, 2, 2)).rule == NOT_APPLICABLE


def test_multipartite_partition_errors():
    with pytest.raises(ValueError):
        multipartite_feasible(g("k6"), (3, 3))  # only two parts
    with pytest.raises(ValueError):
        multipartite_feasible(g("k6"), (1, 2, 3))  # part of size 1
    with pytest.raises(ValueError):
        multipartite_feasible(g("k6"), (2, 2, 3))  # sums to 7, not 6


def test_partitions_min2():
    assert _partitions_min2(6) == [(2, 2, 2)]
    assert _partitions_min2(7) == [(2, 2, 3)]
    assert _partitions_min2(8) == [(2, 2, 2, 2), (2, 2, 4), (2, 3, 3)]
    assert _partitions_min2(5) == []


# ---------------------------------------------------------------------------
# recognizing pebble graphs

def test_pebble_family_branches():
    assert pebble_family(g("star5")) == ("wilson", None)
    assert pebble_family(g("k6")) == ("kms", 6)
    assert pebble_family(complete_multipartite(1, 1, 1, 3)) == ("kms", 3)
    assert pebble_family(complete_multipartite(2, 4)) == ("two-part", 2)
    assert pebble_family(complete_multipartite(2, 2, 3)) == (
        "multipart",
        (2, 2, 3),
    )
    assert pebble_family(g("p4")) == (None, None)
    assert pebble_family(g("c5")) == (None, None)


def test_classify_instance_dispatch():
    fam, v = classify_instance(g("c6"), g("star5"))
    assert fam == "wilson" and v.rule == "cycle"
    fam, v = classify_instance(g("p4"), g("k4"))
    assert fam == "kms" and v == FeasibilityVerdict(True, True, "default")
    fam, v = classify_instance(g("p4"), complete_multipartite(1, 1, 2))
    assert fam == "kms" and v.witness == (2, 3)
    fam, v = classify_instance(g("c5"), g("c5"))
    assert fam is None and v.rule == NOT_APPLICABLE
    with pytest.raises(ValueError):
        classify_instance(g("p4"), g("p5"))


# ---------------------------------------------------------------------------
# long-cycle boards

def test_girth5_oracle_counts():
    assert len(girth5_reachable_oracle(g("p3"))) == 3
    assert len(girth5_reachable_oracle(g("c5"))) == 11
    assert len(girth5_reachable_oracle(g("c7"))) == 29
    assert len(girth5_reachable_oracle(g("theta122"))) == 34


def test_girth5_oracle_configs_are_matching_swaps():
    board = g("c5")
    for cfg in girth5_reachable_oracle(board):
        moved = [v for v, p in zip(board.vertices, cfg) if v != p]
        # moved vertices pair up into disjoint board edges
        assert len(moved) % 2 == 0
        seen = set()
        for v, p in zip(board.vertices, cfg):
            if v != p and v not in seen:
                assert board.has_edge(v, p)
                assert cfg[board.index_of(p)] == v
                seen.update((v, p))


def test_girth5_oracle_guards():
    with pytest.raises(ValueError, match="not applicable"):
        girth5_reachable_oracle(g("c4"))
    with pytest.raises(ValueError, match="not applicable"):
        girth5_reachable_oracle(DISCONNECTED)


# ---------------------------------------------------------------------------
# verdict serialization

def test_verdict_as_json():
    v = kms_feasible(g("p4"), 2)
    assert v.as_json() == {
        "applicable": True,
        "feasible": False,
        "rule": "k-isthmus",
        "witness": [2, 3],
    }
    assert wilson_feasible(g("c3")).as_json()["witness"] is None


# ---------------------------------------------------------------------------
# report-producing verifiers

REPORT_KEYS = {
    "instance",
    "verdict",
    "rule",
    "witness",
    "bfs_states",
    "peb_order",
    "elapsed_ms",
}


def test_verify_prop2_c5():
    r = verify_prop2(g("c5"))
    assert set(r) == REPORT_KEYS
    assert r["verdict"] is True
    assert r["rule"] == "matching-configurations"
    assert r["witness"] == {"matching_configs": 11, "reachable": 11}
    assert r["bfs_states"] == 11
    assert r["peb_order"] == 1
    assert isinstance(r["elapsed_ms"], float)


def test_verify_prop2_rejects_short_cycles():
    with pytest.raises(ValueError):
        verify_prop2(g("c4"))


def test_verify_product_theorem_p2_p3():
    r = verify_product_theorem(g("p2"), g("p3"))
    assert r["verdict"] is True
    assert r["rule"] == "factor-product"
    assert r["witness"]["factor_orders"] == [2, 1]
    assert r["witness"]["predicted_order"] == 2
    assert r["witness"]["copies_respected"] is True
    assert r["peb_order"] == 2


def test_verify_square_lemma_small():
    r = verify_square_lemma(max_n=6, bfs_max_n=5)
    assert r["verdict"] is True
    assert r["rule"] == "replay"
    assert r["witness"]["failures"] == []
    assert r["witness"]["total_moves"] == 0 + 1 + 3 + 8 + 20 + 49


def test_verify_parity_example():
    r = verify_parity_example()
    assert r["verdict"] is True
    assert r["witness"] == {"reachable": 360, "home": 60, "home_even": 60}


# ---------------------------------------------------------------------------
# predicates agree with brute force on small boards

def test_predicates_match_bfs_small():
    from pebblex.classify import _examples_check_graph
    from pebblex.catalog import connected_graphs

    instances = 0
    for n in range(1, 6):
        for board in connected_graphs(n):
            done, bad = _examples_check_graph(board, cap=10**6)
            instances += done
            assert bad == []
    assert instances > 50
