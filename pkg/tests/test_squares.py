"""Reversal synthesis on squared paths and the certificate wire format."""

import math

import pytest

from pebblex import (
    MoveCertificate,
    Puz,
    bfs_witness,
    compile_automorphism_to_square_moves,
    format_certificate,
    identity_configuration,
    parse_certificate,
    puz_on,
    reachable_set,
    replay,
    reversal,
    seq_A,
    seq_B,
    seq_C,
    sequence_length,
    square,
)
from pebblex.names import graph_from_desc


def path(n):
    return graph_from_desc(f"p{n}")


SEQUENCE_LENGTHS = [
    0, 1, 3, 8, 20, 49, 119, 288, 696, 1681,
    4059, 9800, 23660, 57121, 137903, 332928,
]


def test_sequence_length_frozen_table():
    assert [sequence_length(n) for n in range(1, 17)] == SEQUENCE_LENGTHS


def test_sequence_length_recurrence():
    for n in range(3, 16):
        assert (
            sequence_length(n)
            == 2 * sequence_length(n - 1) + sequence_length(n - 2) + 1
        )
    with pytest.raises(ValueError):
        sequence_length(0)


def test_reversal():
    assert reversal(4) == (4, 3, 2, 1)
    assert reversal(1) == (1,)


# ---------------------------------------------------------------------------
# the three sequence families

@pytest.mark.parametrize("n", range(1, 9))
def test_seq_a_reverses_n_pebbles(n):
    cert = seq_A(n)
    assert cert.start == tuple(range(1, n + 1))
    assert cert.end == reversal(n)
    assert len(cert.moves) == sequence_length(n)
    assert cert.provenance == "recursive"
    cert.validate()


def test_seq_a_bfs_route():
    cert = seq_A(5, via="bfs")
    assert cert.end == reversal(5)
    assert cert.provenance == "bfs"
    # search finds a shorter sequence than the recursion at n=5
    assert len(cert.moves) == 10
    with pytest.raises(ValueError):
        seq_A(6, via="bfs")
    with pytest.raises(ValueError):
        seq_A(4, via="meet-in-the-middle")


def test_seq_a_size_guard():
    with pytest.raises(ValueError):
        seq_A(17)
    assert len(seq_A(17, allow_large=True).moves) == 803760


@pytest.mark.parametrize("n", range(2, 8))
def test_seq_b_board_skips_second_to_last_vertex(n):
    cert = seq_B(n)
    assert cert.puz.board.vertices == tuple(range(1, n)) + (n + 1,)
    assert cert.puz.pebbles.vertices == tuple(range(1, n + 1))
    assert cert.start == tuple(range(1, n + 1))
    assert cert.end == reversal(n)
    assert len(cert.moves) == sequence_length(n)
    cert.validate()


def test_seq_b_small_values():
    b2 = seq_B(2)
    assert b2.puz.board.vertices == (1, 3)
    assert b2.moves == ((1, 3),)
    assert b2.board_desc == "p3^2~2"
    b3 = seq_B(3)
    assert b3.moves == ((2, 4), (1, 2), (2, 4))
    b5 = seq_B(5)
    assert b5.puz.board.vertices == (1, 2, 3, 4, 6)
    assert b5.start == (1, 2, 3, 4, 5)
    assert b5.end == (5, 4, 3, 2, 1)


@pytest.mark.parametrize("n", range(2, 8))
def test_seq_c_pebbles_skip_second_to_last_vertex(n):
    cert = seq_C(n)
    assert cert.puz.board.vertices == tuple(range(1, n + 1))
    assert cert.puz.pebbles.vertices == tuple(range(1, n)) + (n + 1,)
    assert cert.start == tuple(range(1, n)) + (n + 1,)
    assert cert.end == (n + 1,) + tuple(range(n - 1, 0, -1))
    assert len(cert.moves) == sequence_length(n)
    cert.validate()


def test_seq_c_small_values():
    c2 = seq_C(2)
    assert c2.puz.board.vertices == (1, 2)
    assert c2.puz.pebbles.vertices == (1, 3)
    assert c2.start == (1, 3)
    assert c2.end == (3, 1)
    assert c2.moves == ((1, 2),)
    c4 = seq_C(4)
    assert c4.start == (1, 2, 3, 5)
    assert c4.end == (5, 3, 2, 1)


def test_seq_a_endpoint_is_reachable_by_search():
    # independent confirmation on a size the configuration BFS can cover
    for n in range(2, 6):
        pz = puz_on(square(path(n)))
        reach = reachable_set(pz)
        assert seq_A(n).end in reach
        assert len(reach) == math.factorial(n)


# ---------------------------------------------------------------------------
# compiling arbitrary automorphisms

def test_compile_c5_rotation():
    g = graph_from_desc("c5")
    cert = compile_automorphism_to_square_moves(g, (2, 3, 4, 5, 1))
    # the square of C5 is K5
    assert cert.puz.board.m == 10
    assert cert.end == (2, 3, 4, 5, 1)
    assert cert.provenance == "compiled"
    assert replay(cert.puz, cert.start, cert.moves) == cert.end


def test_compile_star_rotation():
    g = graph_from_desc("star3")
    cert = compile_automorphism_to_square_moves(g, (1, 3, 4, 2))
    # the square of a 3-leaf star is K4
    assert cert.puz.board.m == 6
    assert cert.moves == ((1, 3), (2, 1), (1, 3), (1, 4), (3, 1), (1, 4))
    assert cert.end == (1, 3, 4, 2)


def test_compile_rejects_non_automorphism():
    with pytest.raises(ValueError):
        compile_automorphism_to_square_moves(path(4), (2, 1, 3, 4))


def test_compile_unnamed_board_gets_placeholder_descriptor():
    g = graph_from_desc("c5")
    cert = compile_automorphism_to_square_moves(g, (1, 2, 3, 4, 5))
    assert cert.board_desc == "<5-vertex-graph>^2"
    # serializes, but the placeholder deliberately names no real graph
    text = format_certificate(cert)
    with pytest.raises(ValueError, match="line 1"):
        parse_certificate(text)


# ---------------------------------------------------------------------------
# wire format

def test_certificate_round_trip_is_byte_identical():
    cert = seq_A(4)
    text = format_certificate(cert)
    assert text == (
        "board=p4^2 pebbles=p4^2\n"
        "1 2 3 4\n"
        "4 3 2 1\n"
        "8\n"
        "3 4\n2 3\n3 4\n2 3\n1 2\n1 3\n2 3\n3 4\n"
    )
    back = parse_certificate(text)
    back.validate()
    assert back.provenance == "file"
    assert format_certificate(back) == text


def test_format_certificate_rejects_whitespace_descriptors():
    cert = seq_A(3)
    bad = MoveCertificate(
        cert.puz, cert.start, cert.end, cert.moves,
        board_desc="my graph^2", pebbles_desc=cert.pebbles_desc,
    )
    with pytest.raises(ValueError):
        format_certificate(bad)


def test_parse_certificate_reports_line_numbers():
    good = format_certificate(seq_A(3))
    with pytest.raises(ValueError, match="line 1"):
        parse_certificate("board=p3^2\n1 2 3\n3 2 1\n0\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_certificate("zzz\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_certificate(good.replace("1 2 3\n", "1 2 x\n", 1))
    with pytest.raises(ValueError, match="line 3"):
        parse_certificate(good.replace("3 2 1\n", "3 2 2\n", 1))
    with pytest.raises(ValueError, match="line 4"):
        parse_certificate(good.replace("\n3\n", "\n7\n", 1))
    lines = good.splitlines()
    lines[4] = lines[4] + " 9"  # first move line gains a third token
    with pytest.raises(ValueError, match="line 5"):
        parse_certificate("\n".join(lines) + "\n")


def test_certificate_validate_rejects_wrong_end():
    cert = seq_A(3)
    lie = MoveCertificate(
        cert.puz, cert.start, (1, 2, 3), cert.moves,
        cert.board_desc, cert.pebbles_desc,
    )
    from pebblex import SynthesisError

    with pytest.raises(SynthesisError):
        lie.validate()


def test_parsed_certificate_replays_like_builder():
    pz = puz_on(square(path(4)))
    w = bfs_witness(pz, identity_configuration(pz), (4, 3, 2, 1))
    cert = MoveCertificate(
        pz, identity_configuration(pz), (4, 3, 2, 1), tuple(w),
        board_desc="p4^2", pebbles_desc="p4^2", provenance="bfs",
    ).validate()
    back = parse_certificate(format_certificate(cert)).validate()
    assert back.end == cert.end
    assert back.moves == cert.moves
