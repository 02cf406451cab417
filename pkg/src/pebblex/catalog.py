"""Exhaustive and randomized graph catalogs for verification sweeps.

Connected graphs are generated by vertex augmentation: every connected
graph on n vertices arises from some connected graph on n-1 vertices by
re-attaching a non-cut vertex, so extending each (n-1)-vertex
representative by a new vertex joined to every nonempty neighbor subset
reaches every isomorphism class.  Isomorph rejection uses the maximal
packed adjacency bitstring over all vertex relabelings; the inner loop
is a vectorized gather over a precomputed (permutation, slot) index
table, which keeps the 7-vertex sweep (853 classes) down to a few
seconds.

Trees get the cheaper classic treatment (grow by one leaf, dedupe by
rooted canonical encodings from the centers), and the girth-constrained
family only ever attaches a new vertex to pairwise-far neighbor sets,
which preserves girth >= 5 by construction.

Results are cached on disk keyed by family and size; set
PEBBLEX_CACHE_DIR to move the cache out of the system temp directory.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import tempfile

import numpy as np

from .graphs import Graph, distances_from, is_connected

MAX_CONNECTED_N = 7
MAX_TREE_N = 9
MAX_GIRTH5_N = 8

_CACHE_ENV = "PEBBLEX_CACHE_DIR"
_CACHE_SUBDIR = "pebblex-catalog-v1"

_perm_gather_cache = {}


def _pair_slots(n):
    return list(itertools.combinations(range(n), 2))


def _perm_gather(n):
    """(n!, m) table: row k, column s holds the slot that permutation k
    pulls slot s's adjacency bit from."""
    cached = _perm_gather_cache.get(n)
    if cached is not None:
        return cached
    slots = _pair_slots(n)
    index = {pair: s for s, pair in enumerate(slots)}
    perms = list(itertools.permutations(range(n)))
    gat = np.empty((len(perms), len(slots)), dtype=np.int32)
    for k, p in enumerate(perms):
        row = gat[k]
        for s, (i, j) in enumerate(slots):
            a, b = p[i], p[j]
            row[s] = index[(a, b) if a < b else (b, a)]
    _perm_gather_cache[n] = gat
    return gat


def _bit_rows(edge_sets, n):
    slots = _pair_slots(n)
    index = {pair: s for s, pair in enumerate(slots)}
    rows = np.zeros((len(edge_sets), len(slots)), dtype=np.uint8)
    for r, edges in enumerate(edge_sets):
        for u, v in edges:
            rows[r, index[(u - 1, v - 1)]] = 1
    return rows


def _canonical_keys(rows, n):
    gat = _perm_gather(n)
    m = rows.shape[1]
    weights = (np.int64(1) << np.arange(m - 1, -1, -1, dtype=np.int64))
    out = np.empty(len(rows), dtype=np.int64)
    # keep each gather under a few million elements
    step = max(1, (4 << 20) // max(1, gat.size))
    for i in range(0, len(rows), step):
        chunk = rows[i : i + step]
        permuted = chunk[:, gat]
        keys = permuted.astype(np.int64) @ weights
        out[i : i + len(chunk)] = keys.max(axis=1)
    return out


def canonical_key(g):
    """Isomorphism-invariant integer key (equal keys iff isomorphic)."""
    n = g.n
    if g.vertices != tuple(range(1, n + 1)):
        g = g.relabeled({v: i + 1 for i, v in enumerate(g.vertices)})
    rows = _bit_rows([tuple(g.edges())], n)
    return int(_canonical_keys(rows, n)[0])


def _cache_dir():
    root = os.environ.get(_CACHE_ENV) or tempfile.gettempdir()
    return os.path.join(root, _CACHE_SUBDIR)


def _cache_load(name):
    try:
        with open(os.path.join(_cache_dir(), name + ".json")) as fh:
            payload = json.load(fh)
        return tuple(
            Graph(range(1, payload["n"] + 1), [tuple(e) for e in edges])
            for edges in payload["graphs"]
        )
    except (OSError, ValueError, KeyError, TypeError):
        return None


def _cache_store(name, n, graphs):
    try:
        os.makedirs(_cache_dir(), exist_ok=True)
        path = os.path.join(_cache_dir(), name + ".json")
        tmp = path + ".tmp"
        payload = {"n": n, "graphs": [[list(e) for e in g.edges()] for g in graphs]}
        with open(tmp, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError:
        pass  # cache is best-effort


def _dedupe(candidates, n):
    """candidates: list of edge tuples; keeps first representative per class."""
    rows = _bit_rows(candidates, n)
    keys = _canonical_keys(rows, n)
    seen = set()
    reps = []
    for key, edges in zip(keys.tolist(), candidates):
        if key not in seen:
            seen.add(key)
            reps.append(Graph(range(1, n + 1), edges))
    return tuple(reps)


def connected_graphs(n, use_cache=True):
    """All connected graphs on n vertices, one per isomorphism class."""
    if not 1 <= n <= MAX_CONNECTED_N:
        raise ValueError(f"connected catalog covers 1..{MAX_CONNECTED_N}, got {n}")
    if n == 1:
        return (Graph([1]),)
    name = f"connected_{n}"
    if use_cache:
        hit = _cache_load(name)
        if hit is not None:
            return hit
    parents = connected_graphs(n - 1, use_cache=use_cache)
    candidates = []
    for g in parents:
        base = tuple(g.edges())
        for mask in range(1, 1 << (n - 1)):
            extra = tuple((v, n) for v in range(1, n) if mask >> (v - 1) & 1)
            candidates.append(base + extra)
    reps = _dedupe(candidates, n)
    if use_cache:
        _cache_store(name, n, reps)
    return reps


def _ahu_key(g):
    # strip leaves round by round to find the 1 or 2 center vertices
    degree = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    layer = [v for v in alive if degree[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for w in g.adj[v]:
                if w in alive:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt

    def encode(v, parent):
        return tuple(sorted(encode(w, v) for w in g.adj[v] if w != parent))

    return min(encode(c, None) for c in alive)


def trees(n, use_cache=True):
    """All trees on n vertices, one per isomorphism class."""
    if not 1 <= n <= MAX_TREE_N:
        raise ValueError(f"tree catalog covers 1..{MAX_TREE_N}, got {n}")
    if n == 1:
        return (Graph([1]),)
    name = f"trees_{n}"
    if use_cache:
        hit = _cache_load(name)
        if hit is not None:
            return hit
    seen = set()
    reps = []
    for g in trees(n - 1, use_cache=use_cache):
        base = tuple(g.edges())
        for v in g.vertices:
            t = Graph(range(1, n + 1), base + ((v, n),))
            key = _ahu_key(t)
            if key not in seen:
                seen.add(key)
                reps.append(t)
    reps = tuple(reps)
    if use_cache:
        _cache_store(name, n, reps)
    return reps


def girth5_graphs(n, use_cache=True):
    """Connected graphs on n vertices whose every cycle has length >= 5.

    Acyclic graphs count (their girth is infinite).  Grown by attaching
    the new vertex only to sets of pairwise-distance->=3 vertices, which
    is exactly the condition for creating no short cycle.
    """
    if not 1 <= n <= MAX_GIRTH5_N:
        raise ValueError(f"girth-5 catalog covers 1..{MAX_GIRTH5_N}, got {n}")
    if n == 1:
        return (Graph([1]),)
    name = f"girth5_{n}"
    if use_cache:
        hit = _cache_load(name)
        if hit is not None:
            return hit
    candidates = []
    for g in girth5_graphs(n - 1, use_cache=use_cache):
        base = tuple(g.edges())
        dist = {v: distances_from(g, v) for v in g.vertices}
        for mask in range(1, 1 << (n - 1)):
            nbrs = [v for v in range(1, n) if mask >> (v - 1) & 1]
            if all(
                dist[a][b] >= 3 for a, b in itertools.combinations(nbrs, 2)
            ):
                candidates.append(base + tuple((v, n) for v in nbrs))
    reps = _dedupe(candidates, n)
    if use_cache:
        _cache_store(name, n, reps)
    return reps


def random_connected_graphs(count, seed, sizes=(5, 6, 7, 8)):
    """Deterministic sample of random connected graphs, cycling through
    the requested sizes with edge probability drawn from [0.3, 0.7]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = sizes[len(out) % len(sizes)]
        p = rng.uniform(0.3, 0.7)
        edges = [
            (u, v)
            for u, v in itertools.combinations(range(1, n + 1), 2)
            if rng.random() < p
        ]
        g = Graph(range(1, n + 1), edges)
        if is_connected(g):
            out.append(g)
    return out
