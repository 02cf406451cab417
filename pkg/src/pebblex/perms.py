"""Permutations of graph vertex sets and automorphism groups.

A permutation of a densely labeled n-vertex graph is a tuple ``p`` of length
n with ``p[i-1]`` the image of vertex i.  Composition is right-to-left:
``compose(p, q)`` applies q first, then p.  For graphs with gaps in their
label set the engines below work with plain dicts instead; the tuple form is
the public face.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations as _all_perms


def identity_perm(n):
    return tuple(range(1, n + 1))


def is_perm(p):
    return sorted(p) == list(range(1, len(p) + 1))


def compose(p, q):
    """Apply q first, then p."""
    if len(p) != len(q):
        raise ValueError("length mismatch")
    return tuple(p[q[i] - 1] for i in range(len(p)))


def inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def perm_power(p, k):
    """p composed with itself k times; negative k uses the inverse."""
    n = len(p)
    if k < 0:
        p = inverse(p)
        k = -k
    result = identity_perm(n)
    base = p
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def perm_order(p):
    """lcm of cycle lengths."""
    return math.lcm(*(len(c) for c in cycles(p))) if p else 1


def cycles(p):
    """Cycle decomposition, fixed points included; each cycle starts at its
    smallest element, cycles sorted by first element."""
    n = len(p)
    seen = [False] * n
    out = []
    for s in range(1, n + 1):
        if seen[s - 1]:
            continue
        c = [s]
        seen[s - 1] = True
        v = p[s - 1]
        while v != s:
            c.append(v)
            seen[v - 1] = True
            v = p[v - 1]
        out.append(tuple(c))
    return out


def cycle_notation(p):
    """Human form like '(1 3 2)(4 5)'; fixed points omitted; identity is
    '()'."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) if parts else "()"


def sign(p):
    """+1 for even permutations, -1 for odd."""
    return -1 if sum(len(c) - 1 for c in cycles(p)) % 2 else 1


def transposition(n, a, b):
    if not (1 <= a <= n and 1 <= b <= n and a != b):
        raise ValueError("need two distinct vertices in range")
    p = list(range(1, n + 1))
    p[a - 1], p[b - 1] = b, a
    return tuple(p)


def parse_perm(text, n=None):
    """Parse a whitespace-separated image list, e.g. '3 1 2'."""
    try:
        vals = tuple(int(t) for t in text.split())
    except ValueError:
        raise ValueError("permutation must be whitespace-separated integers")
    if not vals:
        raise ValueError("empty permutation")
    if n is not None and len(vals) != n:
        raise ValueError(f"expected {n} entries, got {len(vals)}")
    if not is_perm(vals):
        raise ValueError("not a permutation of 1..n")
    return vals


# ---------------------------------------------------------------------------
# automorphisms

def is_automorphism(g, p):
    """Does the tuple p preserve adjacency of the densely labeled graph g?"""
    if len(p) != g.n or not is_perm(p):
        return False
    return all(g.has_edge(p[u - 1], p[v - 1]) for u, v in g.edges())


def automorphisms(g, max_n=16):
    """All automorphisms of g as sorted tuples, by backtracking with degree
    and neighborhood pruning.

    Guarded to n <= max_n (default 16); raise the bound explicitly for
    bigger instances.
    """
    if not g.is_dense_labeled():
        raise ValueError("needs a densely labeled graph")
    n = g.n
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the guard ({max_n}); pass max_n to override"
        )
    deg = {v: g.degree(v) for v in g.vertices}
    # order vertices by scarcity of their degree class, then by label, so the
    # backtracking fails early on constrained vertices
    from collections import Counter

    freq = Counter(deg.values())
    order = sorted(g.vertices, key=lambda v: (freq[deg[v]], v))
    pos = {v: i for i, v in enumerate(order)}
    out = []
    img = {}
    used = set()

    def bt(i):
        if i == n:
            out.append(tuple(img[v] for v in g.vertices))
            return
        v = order[i]
        for w in g.vertices:
            if w in used or deg[w] != deg[v]:
                continue
            ok = True
            for u in g.adj[v]:
                if pos[u] < i and not g.has_edge(img[u], w):
                    ok = False
                    break
            if ok:
                for u in g.vertices:
                    if pos[u] < i and u not in g.adj[v] and g.has_edge(img[u], w):
                        ok = False
                        break
            if ok:
                img[v] = w
                used.add(w)
                bt(i + 1)
                del img[v]
                used.discard(w)

    bt(0)
    return sorted(out)


def automorphisms_dict(g):
    """Automorphisms of an arbitrarily labeled graph, as dicts.

    Backtracking over the actual label set; used internally on induced
    subgraphs whose labels have gaps.
    """
    vs = g.vertices
    deg = {v: g.degree(v) for v in vs}
    out = []
    img = {}
    used = set()

    def bt(i):
        if i == len(vs):
            out.append(dict(img))
            return
        v = vs[i]
        for w in vs:
            if w in used or deg[w] != deg[v]:
                continue
            ok = True
            for u in vs[:i]:
                if g.has_edge(u, v) != g.has_edge(img[u], w):
                    ok = False
                    break
            if ok:
                img[v] = w
                used.add(w)
                bt(i + 1)
                del img[v]
                used.discard(w)

    bt(0)
    return out


def is_closed_under_composition(perms):
    """Exhaustive closure check; meant for groups of order <= 200."""
    s = set(perms)
    if len(s) > 200:
        raise ValueError("closure check is limited to 200 elements")
    return all(compose(p, q) in s for p in s for q in s)


@dataclass(frozen=True)
class GroupSummary:
    """Order plus the sorted element list of a permutation group."""

    order: int
    elements: tuple

    @classmethod
    def from_elements(cls, elements):
        elems = tuple(sorted(set(elements)))
        return cls(order=len(elems), elements=elems)


def symmetric_group(n):
    """Every permutation of 1..n; n <= 8 guard."""
    if n > 8:
        raise ValueError("symmetric group materialization is capped at n=8")
    return [tuple(p) for p in _all_perms(range(1, n + 1))]


# ---------------------------------------------------------------------------
# basepoint selection for the flip realization engine

def select_flip_basepoint(g, sigma):
    """Choose the power of sigma the realization engine attacks first.

    Over exponents e coprime to the order of sigma (ascending) and vertices
    x (ascending), minimize the pair (d, m) lexicographically, where
    d = dist(x, sigma^e(x)) and m is the number of distinct vertices in
    {x, sigma^e(x), sigma^{2e}(x), ...}.  Returns (sigma^e, e, x, d, m).
    """
    from .graphs import distances_from

    n = len(sigma)
    ordr = perm_order(sigma)
    best = None
    powers = {1: sigma}
    for e in range(1, ordr + 1):
        if math.gcd(e, ordr) != 1:
            continue
        pe = powers.get(e)
        if pe is None:
            pe = perm_power(sigma, e)
            powers[e] = pe
        for x in g.vertices:
            y = pe[x - 1]
            d = 0 if y == x else distances_from(g, x)[y]
            m = 1
            v = y
            while v != x:
                m += 1
                v = pe[v - 1]
            key = (d, m, e, x)
            if best is None or key < best[0]:
                best = (key, pe, e, x, d, m)
    _, pe, e, x, d, m = best
    return pe, e, x, d, m
