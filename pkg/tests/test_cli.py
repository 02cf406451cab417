"""End-to-end runs of the command-line surface via its main() entry."""

import json

import pytest

from pebblex import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert out.out, f"no stdout; stderr: {out.err}"
    return code, json.loads(out.out)


# ---------------------------------------------------------------------------
# groups

def test_aut_order(capsys):
    code, rep = run_json(capsys, "aut", "--graph", "p4", "--no-timing")
    assert code == 0
    assert rep == {"aut_order": 2, "instance": "p4"}


def test_aut_elements(capsys):
    code, rep = run_json(capsys, "aut", "--graph", "p3", "--elements",
                         "--no-timing")
    assert code == 0
    assert rep["aut_order"] == 2
    assert {"1": 3, "2": 2, "3": 1} in rep["elements"]


def test_peb_q2(capsys):
    code, rep = run_json(capsys, "peb", "--graph", "q2", "--elements",
                         "--no-timing")
    assert code == 0
    assert rep["peb_order"] == 4
    assert rep["aut_order"] == 8
    assert rep["bfs_states"] == 12
    assert len(rep["elements"]) == 4


# ---------------------------------------------------------------------------
# feasibility and equivalence

def test_feasible_closed_form_negative(capsys):
    code, rep = run_json(capsys, "feasible", "--board", "c6",
                         "--pebbles", "star5", "--no-timing")
    assert code == 1
    assert rep["verdict"] is False
    assert rep["rule"] == "cycle"


def test_feasible_closed_form_positive(capsys):
    code, rep = run_json(capsys, "feasible", "--board", "k4",
                         "--pebbles", "star3", "--no-timing")
    assert code == 0
    assert rep["verdict"] is True
    assert rep["rule"] == "default"


def test_feasible_bfs_fallback(capsys):
    # a path pebble graph matches no closed-form family
    code, rep = run_json(capsys, "feasible", "--board", "p3",
                         "--pebbles", "p3", "--no-timing")
    assert code == 1
    assert rep["rule"] == "bfs"
    assert rep["bfs_states"] == 3


def test_feasible_cap_exit(capsys):
    code, out = run(capsys, "feasible", "--board", "p7", "--pebbles", "p7",
                    "--cap", "10")
    assert code == 3
    assert "error" in out.err


def test_equivalent_positive_and_negative(capsys):
    code, rep = run_json(capsys, "equivalent", "--board", "p3",
                         "--pebbles", "p3", "--from", "1 2 3",
                         "--to", "2 1 3", "--no-timing")
    assert code == 0 and rep["verdict"] is True
    code, rep = run_json(capsys, "equivalent", "--board", "p3",
                         "--pebbles", "p3", "--from", "1 2 3",
                         "--to", "3 2 1", "--no-timing")
    assert code == 1 and rep["verdict"] is False


def test_equivalent_bad_config(capsys):
    code, out = run(capsys, "equivalent", "--board", "p3", "--pebbles", "p3",
                    "--from", "1 2 2", "--to", "1 2 3")
    assert code == 2


# ---------------------------------------------------------------------------
# flip certificates

def test_flips_round_trip(capsys, tmp_path):
    cert = tmp_path / "rot.flips"
    code, rep = run_json(capsys, "flips", "--graph", "c5",
                         "--perm", "2 3 4 5 1", "--out", str(cert),
                         "--no-timing")
    assert code == 0
    assert rep["flips"] == 2
    assert rep["cycles"] == "(1 2 3 4 5)"
    code, rep = run_json(capsys, "replay-flips", "--graph", "c5",
                         "--cert", str(cert), "--no-timing")
    assert code == 0
    assert rep["permutation"] == [2, 3, 4, 5, 1]


def test_flips_rejects_non_automorphism(capsys):
    code, out = run(capsys, "flips", "--graph", "p4", "--perm", "2 1 3 4")
    assert code == 2
    assert "not an automorphism" in out.err


# ---------------------------------------------------------------------------
# squared-path and squared-graph certificates

def test_reverse_square_report(capsys):
    code, rep = run_json(capsys, "reverse-square", "--n", "7", "--no-timing")
    assert code == 0
    assert rep["final"] == [7, 6, 5, 4, 3, 2, 1]
    assert rep["moves"] == 119
    assert rep["moves"] == rep["length_formula"]


def test_reverse_square_replay_round_trip(capsys, tmp_path):
    cert = tmp_path / "rev6.cert"
    code, rep1 = run_json(capsys, "reverse-square", "--n", "6",
                          "--out", str(cert), "--no-timing")
    assert code == 0
    code, rep2 = run_json(capsys, "replay", "--cert", str(cert),
                          "--no-timing")
    assert code == 0
    assert rep2["final"] == rep1["final"] == [6, 5, 4, 3, 2, 1]
    assert rep2["moves"] == 49
    assert rep2["board"] == "p6^2"


def test_compile_square_replay_round_trip(capsys, tmp_path):
    cert = tmp_path / "c5rot.cert"
    code, rep1 = run_json(capsys, "compile-square", "--graph", "c5",
                          "--perm", "2 3 4 5 1", "--out", str(cert),
                          "--no-timing")
    assert code == 0
    code, rep2 = run_json(capsys, "replay", "--cert", str(cert),
                          "--no-timing")
    assert code == 0
    assert rep1["final"] == rep2["final"] == [2, 3, 4, 5, 1]
    assert rep2["board"] == "c5^2"


def test_replay_missing_file(capsys, tmp_path):
    code, out = run(capsys, "replay", "--cert", str(tmp_path / "nope"))
    assert code == 2


def test_replay_rejects_tampered_certificate(capsys, tmp_path):
    cert = tmp_path / "tampered.cert"
    code, _ = run(capsys, "reverse-square", "--n", "4", "--out", str(cert),
                  "--no-timing")
    assert code == 0
    lines = cert.read_text().splitlines()
    lines[2] = "1 2 3 4"  # claim the end is the identity
    cert.write_text("\n".join(lines) + "\n")
    code, out = run(capsys, "replay", "--cert", str(cert))
    assert code == 1
    assert "replay ends at" in out.err


def test_reverse_square_size_guard(capsys):
    code, out = run(capsys, "reverse-square", "--n", "17")
    assert code == 2
    assert "allow_large" in out.err or "allow-large" in out.err


# ---------------------------------------------------------------------------
# classification

def test_classify_reports_family(capsys):
    code, rep = run_json(capsys, "classify", "--board", "c6",
                         "--pebbles", "star5", "--no-timing")
    assert code == 1
    assert rep["family"] == "wilson"
    assert rep["rule"] == "cycle"
    assert rep["feasible"] is False


def test_classify_unrecognized_family_is_not_an_error(capsys):
    code, rep = run_json(capsys, "classify", "--board", "c5",
                         "--pebbles", "c5", "--no-timing")
    assert code == 0
    assert rep["family"] is None
    assert rep["rule"] == "not applicable"
    assert rep["feasible"] is None


# ---------------------------------------------------------------------------
# verification suites

def test_verify_parity(capsys):
    code, rep = run_json(capsys, "verify", "parity", "--no-timing")
    assert code == 0
    assert rep["suite"] == "parity"
    assert rep["verdict"] is True
    assert rep["reports"][0]["witness"]["reachable"] == 360


def test_verify_prop2_single_board(capsys):
    code, rep = run_json(capsys, "verify", "prop2", "--graph", "c5",
                         "--no-timing")
    assert code == 0
    assert rep["reports"][0]["instance"] == "c5"
    assert rep["reports"][0]["witness"]["matching_configs"] == 11


def test_verify_lemma_square_small(capsys):
    code, rep = run_json(capsys, "verify", "lemma-square", "--max-n", "6",
                         "--no-timing")
    assert code == 0
    assert rep["verdict"] is True


def test_verify_product_requires_both_factors(capsys):
    code, out = run(capsys, "verify", "product", "--g1", "p2")
    assert code == 2
    assert "together" in out.err


def test_verify_product_custom_pair(capsys):
    code, rep = run_json(capsys, "verify", "product", "--g1", "p2",
                         "--g2", "p2", "--no-timing")
    assert code == 0
    assert rep["reports"][0]["witness"]["predicted_order"] == 4


# ---------------------------------------------------------------------------
# input handling and output discipline

def test_graph_from_file(capsys, tmp_path):
    f = tmp_path / "board.g"
    f.write_text("3 2\n1 2\n2 3\n")
    code, rep = run_json(capsys, "aut", "--graph", str(f), "--no-timing")
    assert code == 0
    assert rep["aut_order"] == 2


def test_bad_graph_file_is_usage_error(capsys, tmp_path):
    f = tmp_path / "broken.g"
    f.write_text("3 2\n1 2\nx y\n")
    code, out = run(capsys, "aut", "--graph", str(f))
    assert code == 2
    assert "line 3" in out.err


def test_unknown_graph_name(capsys):
    code, out = run(capsys, "aut", "--graph", "nosuchgraph")
    assert code == 2


def test_output_is_deterministic(capsys):
    _, first = run(capsys, "peb", "--graph", "q2", "--elements",
                   "--no-timing")
    _, second = run(capsys, "peb", "--graph", "q2", "--elements",
                    "--no-timing")
    assert first.out == second.out


def test_output_keys_sorted(capsys):
    _, out = run(capsys, "reverse-square", "--n", "4", "--no-timing")
    rep = json.loads(out.out)
    assert out.out == json.dumps(rep, indent=2, sort_keys=True) + "\n"


def test_no_timing_strips_nested_reports(capsys):
    _, rep = run_json(capsys, "verify", "parity", "--no-timing")
    assert "elapsed_ms" not in json.dumps(rep)
    _, rep = run_json(capsys, "verify", "parity")
    assert "elapsed_ms" in json.dumps(rep)
