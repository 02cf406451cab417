"""Pebble exchange puzzles.

An instance pairs a board graph with a pebble graph on the same number of
vertices.  A configuration is a bijection from board vertices to pebbles,
stored as a tuple aligned with the sorted board vertex list: ``config[k]``
is the pebble sitting on the k-th smallest board vertex.  A move names two
board vertices; it is legal when they are adjacent on the board AND the two
pebbles sitting there are adjacent in the pebble graph, and it swaps those
pebbles.

Reachability is plain breadth-first search over configurations, vectorized
with numpy for instances up to 15 vertices (configurations pack into an
int64 under radix n) and falling back to dict-based search beyond that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, IllegalMoveError, PuzzleError
from .graphs import Graph
from .perms import GroupSummary, automorphisms, compose, inverse

DEFAULT_CAP = 50_000_000

_NUMPY_MAX_N = 15  # radix-n packed keys stay under 2**63 up to here


@dataclass(frozen=True)
class Puz:
    """A board graph and a pebble graph of equal size."""

    board: Graph
    pebbles: Graph

    def __post_init__(self):
        if self.board.n != self.pebbles.n:
            raise ValueError(
                f"board has {self.board.n} vertices, pebble graph has "
                f"{self.pebbles.n}; they must match"
            )

    @property
    def n(self):
        return self.board.n

    def __repr__(self):
        return f"Puz(board={self.board!r}, pebbles={self.pebbles!r})"


def puz_on(g):
    """The self-puzzle with g as both board and pebble graph."""
    return Puz(g, g)


def identity_configuration(puz):
    """The k-th smallest pebble on the k-th smallest board vertex."""
    return tuple(puz.pebbles.vertices)


def check_configuration(puz, config):
    if tuple(sorted(config)) != puz.pebbles.vertices:
        raise PuzzleError(
            f"configuration {config} is not an arrangement of the pebbles "
            f"{puz.pebbles.vertices}"
        )
    return tuple(config)


def apply_move(puz, config, move):
    """One pebble exchange; raises IllegalMoveError with the failed
    condition spelled out."""
    x1, x2 = move
    if not (puz.board.has_vertex(x1) and puz.board.has_vertex(x2)):
        raise IllegalMoveError(f"move ({x1},{x2}) names a missing board vertex")
    if x1 == x2:
        raise IllegalMoveError(f"move ({x1},{x2}) must name two distinct vertices")
    if not puz.board.has_edge(x1, x2):
        raise IllegalMoveError(
            f"board vertices {x1} and {x2} are not adjacent"
        )
    i, j = puz.board.index_of(x1), puz.board.index_of(x2)
    p1, p2 = config[i], config[j]
    if not puz.pebbles.has_edge(p1, p2):
        raise IllegalMoveError(
            f"pebbles {p1} and {p2} (on board vertices {x1},{x2}) are not "
            f"adjacent in the pebble graph"
        )
    out = list(config)
    out[i], out[j] = p2, p1
    return tuple(out)


def replay(puz, start, moves):
    """Apply a move list from ``start``; returns the final configuration."""
    cfg = check_configuration(puz, start)
    for mv in moves:
        cfg = apply_move(puz, cfg, mv)
    return cfg


# ---------------------------------------------------------------------------
# breadth-first search cores

def _edge_positions(puz):
    b = puz.board
    return [(b.index_of(u), b.index_of(v)) for u, v in b.edges()]


def _np_search(puz, start, cap, target=None):
    """Vectorized BFS.  Returns (visited_key_array, found, labels, radix).

    Keys are configurations packed base-n over pebble indexes; the caller
    can unpack them with the returned labels array and radix vector.
    """
    n = puz.n
    labels = np.array(puz.pebbles.vertices, dtype=np.int64)
    idx = {int(v): k for k, v in enumerate(labels)}
    P = np.zeros((n, n), dtype=bool)
    for u, v in puz.pebbles.edges():
        P[idx[u], idx[v]] = P[idx[v], idx[u]] = True
    radix = np.array([n ** (n - 1 - j) for j in range(n)], dtype=np.int64)
    edges = _edge_positions(puz)

    start_row = np.array([[idx[p] for p in start]], dtype=np.uint8)
    start_key = int((start_row.astype(np.int64) @ radix)[0])
    target_key = None
    if target is not None:
        target_key = int(
            np.array([idx[p] for p in target], dtype=np.int64) @ radix
        )
    visited = np.array([start_key], dtype=np.int64)
    frontier = start_row
    found = target_key == start_key
    while frontier.size and not found:
        kids = []
        for a, b in edges:
            mask = P[frontier[:, a], frontier[:, b]]
            if mask.any():
                sub = frontier[mask].copy()
                sub[:, [a, b]] = sub[:, [b, a]]
                kids.append(sub)
        if not kids:
            break
        C = np.concatenate(kids)
        keys = C.astype(np.int64) @ radix
        ukeys, uidx = np.unique(keys, return_index=True)
        pos = np.minimum(np.searchsorted(visited, ukeys), visited.size - 1)
        fresh = visited[pos] != ukeys
        if not fresh.any():
            break
        new_keys = ukeys[fresh]
        frontier = C[uidx[fresh]]
        visited = np.sort(np.concatenate([visited, new_keys]))
        if visited.size > cap:
            raise CapExceededError(
                f"visited {visited.size} configurations, cap is {cap}"
            )
        if target_key is not None:
            t = np.searchsorted(new_keys, target_key)
            found = t < new_keys.size and int(new_keys[t]) == target_key
    return visited, bool(found), labels, radix


def _np_unpack(visited, labels, radix, n):
    digits = (visited[:, None] // radix[None, :]) % n
    return frozenset(map(tuple, labels[digits].tolist()))


def _py_search(puz, start, cap, target=None):
    """Dict-based BFS for instances too large to pack into int64 keys."""
    edges = _edge_positions(puz)
    pebbles = puz.pebbles
    visited = {start}
    frontier = [start]
    found = start == target
    while frontier and not found:
        nxt = []
        for f in frontier:
            for i, j in edges:
                if not pebbles.has_edge(f[i], f[j]):
                    continue
                g = list(f)
                g[i], g[j] = g[j], g[i]
                t = tuple(g)
                if t not in visited:
                    visited.add(t)
                    nxt.append(t)
                    if t == target:
                        found = True
            if found:
                break
        if len(visited) > cap:
            raise CapExceededError(
                f"visited {len(visited)} configurations, cap is {cap}"
            )
        frontier = nxt
    return visited, found


def reachable_set(puz, start=None, cap=DEFAULT_CAP):
    """All configurations reachable from ``start`` (default: identity)."""
    start = check_configuration(
        puz, identity_configuration(puz) if start is None else start
    )
    if puz.n <= _NUMPY_MAX_N:
        visited, _, labels, radix = _np_search(puz, start, cap)
        return _np_unpack(visited, labels, radix, puz.n)
    visited, _ = _py_search(puz, start, cap)
    return frozenset(visited)


def reachable_count(puz, start=None, cap=DEFAULT_CAP):
    """Size of the reachable set, without materializing configurations."""
    start = check_configuration(
        puz, identity_configuration(puz) if start is None else start
    )
    if puz.n <= _NUMPY_MAX_N:
        visited, _, _, _ = _np_search(puz, start, cap)
        return int(visited.size)
    visited, _ = _py_search(puz, start, cap)
    return len(visited)


def equivalent(puz, f1, f2, cap=DEFAULT_CAP):
    """Can some legal move sequence turn f1 into f2?"""
    f1 = check_configuration(puz, f1)
    f2 = check_configuration(puz, f2)
    if f1 == f2:
        return True
    if puz.n <= _NUMPY_MAX_N:
        _, found, _, _ = _np_search(puz, f1, cap, target=f2)
    else:
        _, found = _py_search(puz, f1, cap, target=f2)
    return found


def is_feasible(puz, cap=DEFAULT_CAP):
    """True when every configuration is reachable from every other.

    Since moves are reversible it is enough to count the component of the
    identity.  Raises CapExceededError up front when n! itself exceeds the
    cap, so a False answer always means genuinely infeasible.
    """
    total = math.factorial(puz.n)
    if total > cap:
        raise CapExceededError(
            f"full configuration space has {total} states, cap is {cap}"
        )
    return reachable_count(puz, cap=cap) == total


def bfs_witness(puz, start, target, cap=DEFAULT_CAP):
    """A shortest move list turning start into target, or None.

    Plain parent-pointer BFS; intended for small instances where an explicit
    move sequence is wanted rather than a yes/no answer.
    """
    start = check_configuration(puz, start)
    target = check_configuration(puz, target)
    if start == target:
        return []
    edges = _edge_positions(puz)
    board_vs = puz.board.vertices
    pebbles = puz.pebbles
    parent = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for f in frontier:
            for i, j in edges:
                if not pebbles.has_edge(f[i], f[j]):
                    continue
                g = list(f)
                g[i], g[j] = g[j], g[i]
                t = tuple(g)
                if t in parent:
                    continue
                parent[t] = (f, (board_vs[i], board_vs[j]))
                if t == target:
                    moves = []
                    cur = t
                    while parent[cur] is not None:
                        cur, mv = parent[cur]
                        moves.append(mv)
                    moves.reverse()
                    return moves
                nxt.append(t)
        if len(parent) > cap:
            raise CapExceededError(
                f"visited {len(parent)} configurations, cap is {cap}"
            )
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# the exchange group

def pebble_exchange_group(g, cap=DEFAULT_CAP, max_aut_n=16):
    """Automorphisms of g reachable from the identity in the self-puzzle.

    Returns a GroupSummary.  One BFS over the identity's component, then a
    membership test per automorphism.
    """
    auts = automorphisms(g, max_n=max_aut_n)
    reach = reachable_set(puz_on(g), cap=cap)
    return GroupSummary.from_elements(p for p in auts if p in reach)


def is_peb_normal_in_aut(g, cap=DEFAULT_CAP):
    """Conjugation check that the exchange group is normal in the full
    automorphism group.  Exhaustive, so the automorphism group is capped at
    200 elements."""
    auts = automorphisms(g)
    if len(auts) > 200:
        raise ValueError(
            f"automorphism group has {len(auts)} elements, check is capped "
            f"at 200"
        )
    peb = set(pebble_exchange_group(g, cap=cap).elements)
    return all(
        compose(a, compose(p, inverse(a))) in peb for a in auts for p in peb
    )


# ---------------------------------------------------------------------------
# transposition: swap the roles of board and pebble graph

def transpose_configuration(puz, config):
    """The inverse bijection, aligned to the sorted pebble vertex list."""
    config = check_configuration(puz, config)
    out = [None] * puz.n
    for k, board_v in enumerate(puz.board.vertices):
        out[puz.pebbles.index_of(config[k])] = board_v
    return tuple(out)


def transpose_instance(puz):
    """The puzzle with board and pebble graphs swapped."""
    return Puz(puz.pebbles, puz.board)


def transpose_sequence(puz, start, moves):
    """Carry a move list over to the transposed instance.

    Each move is renamed to the pair of pebbles it exchanged; on the
    transposed instance those are board vertices.  Returns
    (t_start, t_moves) where t_start is the transposed start configuration;
    replaying t_moves from it provably tracks the inverse bijection at every
    step, and the result is revalidated here before being returned.
    """
    cfg = check_configuration(puz, start)
    t_moves = []
    for mv in moves:
        x1, x2 = mv
        i, j = puz.board.index_of(x1), puz.board.index_of(x2)
        t_moves.append((cfg[i], cfg[j]))
        cfg = apply_move(puz, cfg, mv)
    t_puz = transpose_instance(puz)
    t_start = transpose_configuration(puz, start)
    t_end = replay(t_puz, t_start, t_moves)
    if t_end != transpose_configuration(puz, cfg):
        raise PuzzleError("transposed replay does not invert the original")
    return t_start, t_moves
