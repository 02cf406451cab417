"""Constructive move sequences on squared paths, and the compiler that turns
any flip-realizable automorphism into explicit pebble exchanges on a squared
graph.

Three related sequence families, all reversing n pebbles:

* ``seq_A(n)``: board and pebble graph are both the squared path on 1..n.
* ``seq_B(n)``: same pebbles, but the board is the squared path on 1..n+1
  with vertex n deleted.  The missing vertex starves the board of one edge,
  which is exactly what the recursion needs.
* ``seq_C(n)``: the transpose of seq_B, swapping the roles of board and
  pebble graph.

The recursion builds B(n) out of B(n-1), A(n-2) and C(n-1) placed into the
board through vertex and pebble renamings; every placement is validated by
replaying the renamed moves one by one, every stage is checked against its
expected configuration, and the finished certificate is replayed start to
end, so a construction error raises SynthesisError instead of producing a
bad certificate.

Certificates serialize to text: a descriptor line naming both graphs, the
start and end configurations, then the move list.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import IllegalMoveError, SynthesisError
from .graphs import path, square
from .perms import is_automorphism
from .puzzle import (
    Puz,
    apply_move,
    bfs_witness,
    identity_configuration,
    puz_on,
    replay,
    transpose_sequence,
)

MAX_RECURSIVE_N = 16  # sequence length roughly multiplies by 1+sqrt(2) per n


def sequence_length(n):
    """Moves in seq_A(n)/seq_B(n)/seq_C(n): the reversal recursion uses two
    sequences one size down, one two sizes down, and one extra move."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = 0, 1  # lengths at sizes 1 and 2
    if n == 1:
        return a
    for _ in range(n - 2):
        a, b = b, 2 * b + a + 1
    return b


def reversal(n):
    return tuple(range(n, 0, -1))


@dataclass(frozen=True)
class MoveCertificate:
    """A replayable claim: ``moves`` turns ``start`` into ``end`` on ``puz``.

    ``board_desc``/``pebbles_desc`` are graph descriptors making the
    certificate self-contained when serialized.  ``provenance`` records how
    the moves were obtained: recursive, bfs, or compiled.
    """

    puz: Puz
    start: tuple
    end: tuple
    moves: tuple
    board_desc: str
    pebbles_desc: str
    provenance: str = "recursive"

    def validate(self):
        """Replay the moves; raises unless the end configuration matches."""
        got = replay(self.puz, self.start, self.moves)
        if got != self.end:
            raise SynthesisError(
                f"certificate replay ends at {got}, claimed {self.end}"
            )
        return self


@dataclass(frozen=True)
class SubPuzzleEmbedding:
    """How a sub-certificate was placed into a host: vertex and pebble
    renamings plus the orientation its moves were replayed in."""

    board_map: dict
    pebble_map: dict
    direction: str  # "forward" or "reversed"


def embed_subsequence(host, host_cfg, sub, board_map, pebble_map, where=""):
    """Replay a sub-certificate inside a host puzzle under renamings.

    The host region must currently look like the sub start (moves are then
    replayed in order) or like the sub end (moves are replayed backwards;
    each move is its own inverse, so that walks end back to start).  Each
    renamed move is validated by the host's own move rule, and the region
    is checked again after the replay.  Returns (new_cfg, moves, embedding).
    """
    sub_board = sub.puz.board.vertices
    sub_idx = {v: i for i, v in enumerate(sub_board)}

    def region_matches(cfg, sub_cfg):
        return all(
            cfg[host.board.index_of(board_map[v])] == pebble_map[sub_cfg[sub_idx[v]]]
            for v in sub_board
        )

    if region_matches(host_cfg, sub.start):
        direction = "forward"
        seq = sub.moves
        target = sub.end
    elif region_matches(host_cfg, sub.end):
        direction = "reversed"
        seq = tuple(reversed(sub.moves))
        target = sub.start
    else:
        raise SynthesisError(
            f"{where}: host region matches neither orientation of the "
            f"sub-certificate"
        )
    cfg = host_cfg
    out = []
    for a, b in seq:
        mv = (board_map[a], board_map[b])
        try:
            cfg = apply_move(host, cfg, mv)
        except IllegalMoveError as exc:
            raise SynthesisError(f"{where}: renamed move {mv} is illegal: {exc}")
        out.append(mv)
    if not region_matches(cfg, target):
        raise SynthesisError(f"{where}: region mismatch after replay")
    return cfg, out, SubPuzzleEmbedding(dict(board_map), dict(pebble_map), direction)


# ---------------------------------------------------------------------------
# the dense recursion (labels 1..n throughout; relabeling happens at the
# public seq_B/seq_C seam)

_B_MOVES = {1: (), 2: ((1, 2),)}
_C_MOVES = {}


def _board_b(n):
    """Squared path on 1..n minus the edge (n-2, n): the dense form of the
    squared (n+1)-path with vertex n deleted."""
    sq = square(path(n))
    if n < 3:
        return sq
    edges = [e for e in sq.edges() if e != (n - 2, n)]
    from .graphs import Graph

    return Graph(sq.vertices, edges)


def _dense_b(n):
    return MoveCertificate(
        Puz(_board_b(n), square(path(n))),
        tuple(range(1, n + 1)),
        reversal(n),
        _b_moves(n),
        board_desc=f"p{n + 1}^2~{n}",
        pebbles_desc=f"p{n}^2",
    )


def _dense_a(n):
    sq = square(path(n))
    return MoveCertificate(
        Puz(sq, sq),
        tuple(range(1, n + 1)),
        reversal(n),
        _b_moves(n),
        board_desc=f"p{n}^2",
        pebbles_desc=f"p{n}^2",
    )


def _dense_c(n):
    return MoveCertificate(
        Puz(square(path(n)), _board_b(n)),
        tuple(range(1, n + 1)),
        reversal(n),
        _c_moves(n),
        board_desc=f"p{n}^2",
        pebbles_desc=f"p{n + 1}^2~{n}",
    )


def _b_moves(n):
    if n in _B_MOVES:
        return _B_MOVES[n]
    host = Puz(_board_b(n), square(path(n)))
    cfg = tuple(range(1, n + 1))
    moves = []

    def expect(stage, tag):
        if cfg != stage:
            raise SynthesisError(f"reversal recursion n={n}, {tag}: got {cfg}")

    # 1. reverse pebbles 2..n on board 2..n (one size down, shifted)
    cfg, mv, _ = embed_subsequence(
        host, cfg, _dense_b(n - 1),
        {i: i + 1 for i in range(1, n)},
        {j: j + 1 for j in range(1, n)},
        where=f"B({n}) stage 1",
    )
    moves += mv
    expect((1,) + tuple(range(n, 1, -1)), "stage 1")
    # 2. rotate the middle block into ascending order (two sizes down)
    cfg, mv, _ = embed_subsequence(
        host, cfg, _dense_a(n - 2),
        {i: i + 1 for i in range(1, n - 1)},
        {j: n + 1 - j for j in range(1, n - 1)},
        where=f"B({n}) stage 2",
    )
    moves += mv
    expect((1,) + tuple(range(3, n + 1)) + (2,), "stage 2")
    # 3. the transposed sequence, replayed backwards, descends the front
    pm = {j: n + 1 - j for j in range(1, n - 1)}
    pm[n - 1] = 1
    cfg, mv, _ = embed_subsequence(
        host, cfg, _dense_c(n - 1),
        {i: i for i in range(1, n)},
        pm,
        where=f"B({n}) stage 3",
    )
    moves += mv
    expect(tuple(range(n, 2, -1)) + (1, 2), "stage 3")
    # 4. one last exchange finishes the reversal
    cfg = apply_move(host, cfg, (n - 1, n))
    moves.append((n - 1, n))
    expect(reversal(n), "stage 4")
    _B_MOVES[n] = tuple(moves)
    return _B_MOVES[n]


def _c_moves(n):
    if n in _C_MOVES:
        return _C_MOVES[n]
    host = Puz(_board_b(n), square(path(n)))
    start = tuple(range(1, n + 1))
    t_start, t_moves = transpose_sequence(host, start, _b_moves(n))
    if t_start != start:
        raise SynthesisError("transposed start is not the identity")
    _C_MOVES[n] = tuple(t_moves)
    return _C_MOVES[n]


def _check_n(n, allow_large):
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_RECURSIVE_N and not allow_large:
        raise ValueError(
            f"n={n} would synthesize about 2.414**n moves; pass "
            f"allow_large=True to do it anyway"
        )


# ---------------------------------------------------------------------------
# public sequence builders

def seq_A(n, via="recursive", allow_large=False):
    """Certificate reversing n pebbles on the squared path.

    ``via='bfs'`` (n <= 5) finds a shortest sequence by search instead of
    the recursion; the provenance field records which route was taken.
    """
    _check_n(n, allow_large)
    if via == "bfs":
        if n > 5:
            raise ValueError("bfs synthesis is capped at n=5")
        puz = puz_on(square(path(n)))
        moves = bfs_witness(puz, identity_configuration(puz), reversal(n))
        cert = MoveCertificate(
            puz, tuple(range(1, n + 1)), reversal(n), tuple(moves),
            board_desc=f"p{n}^2", pebbles_desc=f"p{n}^2", provenance="bfs",
        )
    elif via == "recursive":
        cert = _dense_a(n)
    else:
        raise ValueError(f"unknown synthesis route {via!r}")
    return cert.validate()


def seq_B(n, allow_large=False):
    """Certificate reversing n pebbles on the squared (n+1)-path with
    vertex n deleted.  Board vertices keep their original names
    1..n-1, n+1; configurations are aligned to that sorted order."""
    _check_n(n, allow_large)
    dense = _dense_b(n)
    if n == 1:
        return dense.validate()
    rename = {v: (v if v < n else n + 1) for v in range(1, n + 1)}
    board = square(path(n + 1)).induced(set(range(1, n)) | {n + 1})
    moves = tuple((rename[a], rename[b]) for a, b in dense.moves)
    cert = MoveCertificate(
        Puz(board, dense.puz.pebbles),
        dense.start,
        dense.end,
        moves,
        board_desc=f"p{n + 1}^2~{n}",
        pebbles_desc=f"p{n}^2",
    )
    return cert.validate()


def seq_C(n, allow_large=False):
    """The transpose of seq_B: board is the squared path on 1..n, pebbles
    live on the squared (n+1)-path with vertex n deleted, and the sequence
    carries (1, ..., n-1, n+1) to (n+1, n-1, ..., 2, 1)."""
    _check_n(n, allow_large)
    dense = _dense_c(n)
    if n == 1:
        return dense.validate()
    rename = {v: (v if v < n else n + 1) for v in range(1, n + 1)}
    pebbles = square(path(n + 1)).induced(set(range(1, n)) | {n + 1})
    cert = MoveCertificate(
        Puz(dense.puz.board, pebbles),
        tuple(rename[p] for p in dense.start),
        tuple(rename[p] for p in dense.end),
        dense.moves,
        board_desc=f"p{n}^2",
        pebbles_desc=f"p{n + 1}^2~{n}",
    )
    return cert.validate()


# ---------------------------------------------------------------------------
# compiling automorphisms of g into moves on the square of g

def compile_automorphism_to_square_moves(g, sigma, board_desc=None):
    """Moves on the self-puzzle of g squared that realize sigma.

    sigma must be an automorphism of connected g.  It is first realized as
    path reversals on g; each reversal of a path P whose pebbles lie along
    a path Q then becomes seq_A(len(P)) placed with board names from P and
    pebble names from Q.  Inside the square both name maps send path
    neighbors at distance <= 2 to adjacent vertices, so every renamed move
    is legal; the builder validates each one and the final configuration.
    """
    from .flips import realize_by_flips

    sigma = tuple(sigma)
    if not is_automorphism(g, sigma):
        raise ValueError(f"{sigma} is not an automorphism of the graph")
    flips = realize_by_flips(g, sigma)
    host = puz_on(square(g))
    cfg = identity_configuration(host)
    moves = []
    for fl in flips:
        k = len(fl)
        pebbles = tuple(cfg[host.board.index_of(v)] for v in fl)
        cfg, mv, emb = embed_subsequence(
            host, cfg, _dense_a(k),
            {i: fl[i - 1] for i in range(1, k + 1)},
            {i: pebbles[i - 1] for i in range(1, k + 1)},
            where=f"flip {fl}",
        )
        if emb.direction != "forward":
            raise SynthesisError(f"flip {fl}: expected a forward placement")
        moves += mv
    if cfg != sigma:
        raise SynthesisError(
            f"compiled moves realize {cfg}, wanted {sigma}"
        )
    desc = board_desc if board_desc is not None else f"<{g.n}-vertex-graph>^2"
    cert = MoveCertificate(
        host, identity_configuration(host), sigma, tuple(moves),
        board_desc=desc, pebbles_desc=desc, provenance="compiled",
    )
    return cert.validate()


# ---------------------------------------------------------------------------
# certificate wire format

def format_certificate(cert):
    for d in (cert.board_desc, cert.pebbles_desc):
        # the header is whitespace-split on parse
        if not d or any(c.isspace() for c in d):
            raise ValueError(
                f"graph descriptor {d!r} cannot appear in a certificate "
                f"header; use a whitespace-free descriptor"
            )
    lines = [f"board={cert.board_desc} pebbles={cert.pebbles_desc}"]
    lines.append(" ".join(str(p) for p in cert.start))
    lines.append(" ".join(str(p) for p in cert.end))
    lines.append(str(len(cert.moves)))
    lines.extend(f"{a} {b}" for a, b in cert.moves)
    return "\n".join(lines) + "\n"


def parse_certificate(text, provenance="file"):
    """Rebuild a certificate from its text form.

    Raises ValueError (naming the line) on format problems.  The replay
    itself is the caller's job, via ``.validate()``.
    """
    from .names import graph_from_desc

    lines = [
        (no, ln.strip())
        for no, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if len(lines) < 4:
        raise ValueError("line 1: certificate needs at least four lines")
    no, head = lines[0]
    parts = dict(
        kv.split("=", 1) for kv in head.split() if "=" in kv
    )
    if set(parts) != {"board", "pebbles"}:
        raise ValueError(
            f"line {no}: header must be 'board=<desc> pebbles=<desc>'"
        )
    try:
        board = graph_from_desc(parts["board"])
        pebbles = graph_from_desc(parts["pebbles"])
    except ValueError as exc:
        raise ValueError(f"line {no}: {exc}")
    puz = Puz(board, pebbles)

    def perm_line(no, ln, what):
        try:
            vals = tuple(int(t) for t in ln.split())
        except ValueError:
            raise ValueError(f"line {no}: {what} must be integers")
        if tuple(sorted(vals)) != pebbles.vertices:
            raise ValueError(
                f"line {no}: {what} is not an arrangement of the pebbles"
            )
        return vals

    start = perm_line(*lines[1], "start configuration")
    end = perm_line(*lines[2], "end configuration")
    no, cnt = lines[3]
    try:
        k = int(cnt)
    except ValueError:
        raise ValueError(f"line {no}: move count must be an integer")
    if k < 0 or len(lines) - 4 != k:
        raise ValueError(
            f"line {no}: declared {k} moves but found {len(lines) - 4}"
        )
    moves = []
    for no, ln in lines[4:]:
        ps = ln.split()
        if len(ps) != 2:
            raise ValueError(f"line {no}: move line must be 'x1 x2'")
        try:
            moves.append((int(ps[0]), int(ps[1])))
        except ValueError:
            raise ValueError(f"line {no}: move line must be two integers")
    return MoveCertificate(
        puz, start, end, tuple(moves),
        board_desc=parts["board"], pebbles_desc=parts["pebbles"],
        provenance=provenance,
    )
