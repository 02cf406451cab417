"""Exhaustive small-graph catalogs and their canonical-form machinery."""

import os
import random

import pytest

from pebblex import Graph, girth, is_connected
from pebblex.catalog import (
    canonical_key,
    connected_graphs,
    girth5_graphs,
    random_connected_graphs,
    trees,
)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
GIRTH5_COUNTS = {3: 1, 4: 2, 5: 4, 6: 8, 7: 18, 8: 47}


@pytest.mark.parametrize("n,count", sorted(CONNECTED_COUNTS.items()))
def test_connected_counts(n, count):
    cat = connected_graphs(n)
    assert len(cat) == count
    for g in cat:
        assert g.vertices == tuple(range(1, n + 1))
        assert is_connected(g)


def test_connected_catalog_has_no_isomorphic_pair():
    for n in range(2, 7):
        keys = [canonical_key(g) for g in connected_graphs(n)]
        assert len(set(keys)) == len(keys)


def test_connected_count_seven():
    # the biggest catalog size the exhaustive sweeps rely on
    assert len(connected_graphs(7)) == 853


@pytest.mark.parametrize("n,count", sorted(TREE_COUNTS.items()))
def test_tree_counts(n, count):
    cat = trees(n)
    assert len(cat) == count
    for t in cat:
        assert t.m == n - 1
        assert is_connected(t)


@pytest.mark.parametrize("n,count", sorted(GIRTH5_COUNTS.items()))
def test_girth5_counts(n, count):
    cat = girth5_graphs(n)
    assert len(cat) == count
    for g in cat:
        assert is_connected(g)
        assert girth(g) >= 5


def test_girth5_matches_filtered_connected_catalog():
    for n in range(3, 7):
        direct = {canonical_key(g) for g in girth5_graphs(n)}
        filtered = {
            canonical_key(g) for g in connected_graphs(n) if girth(g) >= 5
        }
        assert direct == filtered


def test_canonical_key_is_relabel_invariant():
    rng = random.Random(7)
    for g in connected_graphs(5):
        perm = list(range(1, 6))
        rng.shuffle(perm)
        relab = Graph(
            range(1, 6),
            [(perm[u - 1], perm[v - 1]) for u, v in g.edges()],
        )
        assert canonical_key(relab) == canonical_key(g)


def test_canonical_key_separates_non_isomorphic():
    p4 = Graph(range(1, 5), [(1, 2), (2, 3), (3, 4)])
    star = Graph(range(1, 5), [(1, 2), (1, 3), (1, 4)])
    assert canonical_key(p4) != canonical_key(star)


def test_random_connected_graphs_deterministic():
    a = random_connected_graphs(12, seed=42)
    b = random_connected_graphs(12, seed=42)
    assert [g.edges() for g in a] == [g.edges() for g in b]
    c = random_connected_graphs(12, seed=43)
    assert [g.edges() for g in a] != [g.edges() for g in c]
    sizes = {g.n for g in a}
    assert sizes <= {5, 6, 7, 8}
    for g in a:
        assert is_connected(g)


def test_cache_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv("PEBBLEX_CACHE_DIR", str(tmp_path))
    first = trees(6, use_cache=True)
    cache_file = tmp_path / "pebblex-catalog-v1" / "trees_6.json"
    assert cache_file.exists()
    again = trees(6, use_cache=True)
    assert [t.edges() for t in first] == [t.edges() for t in again]
    # a corrupt cache entry is regenerated, not trusted
    cache_file.write_text("{not json")
    rebuilt = trees(6, use_cache=True)
    assert len(rebuilt) == 6


def test_cache_round_trip_preserves_order(monkeypatch, tmp_path):
    monkeypatch.setenv("PEBBLEX_CACHE_DIR", str(tmp_path))
    fresh = connected_graphs(4, use_cache=False)
    cached_once = connected_graphs(4, use_cache=True)
    cached_twice = connected_graphs(4, use_cache=True)
    assert [g.edges() for g in fresh] == [g.edges() for g in cached_once]
    assert [g.edges() for g in cached_once] == [g.edges() for g in cached_twice]
