"""Command-line surface.

Every verb prints one JSON report to stdout (sorted keys, so identical
invocations give identical bytes; pass --no-timing to also drop the
elapsed-time field).  Certificates are never printed, only written to
files via --out.

Exit codes: 0 success / positive verdict, 1 negative verdict or failed
replay, 2 usage or input-format error, 3 state cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

from . import catalog, classify, names, puzzle, squares
from .errors import (
    CapExceededError,
    FlipError,
    GraphParseError,
    IllegalMoveError,
    PuzzleError,
    RealizationError,
    SynthesisError,
)
from .flips import (
    flip_sequence_permutation,
    format_flip_sequence,
    parse_flip_sequence,
    realize_by_flips,
)
from .perms import automorphisms_dict, cycle_notation, parse_perm
from .puzzle import Puz, pebble_exchange_group

_PRODUCT_PAIRS = (("p2", "p2"), ("p2", "p3"), ("p2", "p4"), ("p2", "c3"), ("p3", "p2"))


def _graph(desc):
    return names.graph_from_desc(desc)


def _dense(g):
    if g.is_dense_labeled():
        return g
    return g.relabeled({v: i + 1 for i, v in enumerate(g.vertices)})


def _text_arg(raw):
    # inline text, or a file path holding the same text
    if os.path.exists(raw):
        with open(raw) as fh:
            return fh.read()
    return raw


def _perm_arg(raw, n):
    return parse_perm(_text_arg(raw), n)


def _config_arg(raw, pz):
    try:
        vals = tuple(int(t) for t in _text_arg(raw).split())
    except ValueError:
        raise ValueError("configuration must be whitespace-separated integers")
    try:
        puzzle.check_configuration(pz, vals)
    except PuzzleError as exc:
        # malformed input, not a failed computation
        raise ValueError(str(exc))
    return vals


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "elapsed_ms"}
    if isinstance(obj, list):
        return [_strip_timing(x) for x in obj]
    return obj


def _emit(report, args):
    if getattr(args, "no_timing", False):
        report = _strip_timing(report)
    print(json.dumps(report, indent=2, sort_keys=True))


def _write_out(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def _cmd_aut(args):
    t0 = time.perf_counter()
    g = _graph(args.graph)
    auts = automorphisms_dict(g)
    report = {
        "instance": args.graph,
        "aut_order": len(auts),
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    if args.elements:
        report["elements"] = [
            {str(v): img[v] for v in g.vertices} for img in auts
        ]
    _emit(report, args)
    return 0


def _cmd_peb(args):
    t0 = time.perf_counter()
    g = _dense(_graph(args.graph))
    group = pebble_exchange_group(g, cap=args.cap)
    reach = puzzle.reachable_count(puzzle.puz_on(g), cap=args.cap)
    report = {
        "instance": args.graph,
        "peb_order": group.order,
        "aut_order": len(automorphisms_dict(g)),
        "bfs_states": reach,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    if args.elements:
        report["elements"] = [cycle_notation(p) for p in group.elements]
    _emit(report, args)
    return 0


def _cmd_feasible(args):
    t0 = time.perf_counter()
    board = _graph(args.board)
    pebbles = _graph(args.pebbles)
    family, verdict = classify.classify_instance(board, pebbles)
    report = {
        "instance": f"board={args.board} pebbles={args.pebbles}",
        "family": family,
    }
    if verdict.applicable:
        feasible = verdict.feasible
        report["rule"] = verdict.rule
        report["witness"] = (
            list(verdict.witness) if verdict.witness is not None else None
        )
    else:
        pz = Puz(board, pebbles)
        if math.factorial(pz.n) > args.cap:
            raise CapExceededError(
                f"{pz.n}! configurations exceed the cap of {args.cap}"
            )
        states = puzzle.reachable_count(pz, cap=args.cap)
        feasible = states == math.factorial(pz.n)
        report["rule"] = "bfs"
        report["witness"] = None
        report["bfs_states"] = states
    report["verdict"] = bool(feasible)
    report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    _emit(report, args)
    return 0 if feasible else 1


def _cmd_equivalent(args):
    t0 = time.perf_counter()
    pz = Puz(_graph(args.board), _graph(args.pebbles))
    f1 = _config_arg(getattr(args, "from"), pz)
    f2 = _config_arg(args.to, pz)
    verdict = puzzle.equivalent(pz, f1, f2, cap=args.cap)
    report = {
        "instance": f"board={args.board} pebbles={args.pebbles}",
        "from": list(f1),
        "to": list(f2),
        "verdict": bool(verdict),
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    _emit(report, args)
    return 0 if verdict else 1


def _cmd_flips(args):
    t0 = time.perf_counter()
    g = _graph(args.graph)
    sigma = _perm_arg(args.perm, g.n)
    seq = realize_by_flips(g, sigma)
    if args.out:
        _write_out(args.out, format_flip_sequence(seq))
    report = {
        "instance": args.graph,
        "permutation": list(sigma),
        "cycles": cycle_notation(sigma),
        "flips": len(seq),
        "total_flip_length": sum(len(p) for p in seq),
        "out": args.out,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    _emit(report, args)
    return 0


def _cmd_replay_flips(args):
    t0 = time.perf_counter()
    g = _graph(args.graph)
    with open(args.cert) as fh:
        seq = parse_flip_sequence(fh.read())
    perm = flip_sequence_permutation(g, seq)
    report = {
        "instance": args.graph,
        "flips": len(seq),
        "permutation": list(perm),
        "cycles": cycle_notation(perm),
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    _emit(report, args)
    return 0


def _cmd_reverse_square(args):
    t0 = time.perf_counter()
    cert = squares.seq_A(args.n, via=args.via, allow_large=args.allow_large)
    cert.validate()
    if args.out:
        _write_out(args.out, squares.format_certificate(cert))
    report = {
        "instance": f"reversal on the squared {args.n}-path",
        "n": args.n,
        "moves": len(cert.moves),
        "length_formula": squares.sequence_length(args.n),
        "final": list(cert.end),
        "out": args.out,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    _emit(report, args)
    return 0


def _cmd_compile_square(args):
    t0 = time.perf_counter()
    g = _graph(args.graph)
    sigma = _perm_arg(args.perm, g.n)
    cert = squares.compile_automorphism_to_square_moves(
        g, sigma, board_desc=args.graph.strip() + "^2"
    )
    if args.out:
        _write_out(args.out, squares.format_certificate(cert))
    report = {
        "instance": f"{args.graph}^2",
        "permutation": list(sigma),
        "cycles": cycle_notation(sigma),
        "moves": len(cert.moves),
        "final": list(cert.end),
        "out": args.out,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    _emit(report, args)
    return 0


def _cmd_replay(args):
    t0 = time.perf_counter()
    with open(args.cert) as fh:
        cert = squares.parse_certificate(fh.read())
    cert.validate()
    report = {
        "board": cert.board_desc,
        "pebbles": cert.pebbles_desc,
        "moves": len(cert.moves),
        "start": list(cert.start),
        "final": list(cert.end),
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    _emit(report, args)
    return 0


def _cmd_classify(args):
    t0 = time.perf_counter()
    board = _graph(args.board)
    pebbles = _graph(args.pebbles)
    family, verdict = classify.classify_instance(board, pebbles)
    report = {
        "instance": f"board={args.board} pebbles={args.pebbles}",
        "family": family,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    report.update(verdict.as_json())
    _emit(report, args)
    return 1 if verdict.feasible is False else 0


def _cmd_verify(args):
    suite = args.suite
    reports = []
    if suite == "prop2":
        if args.graph:
            reports.append(
                classify.verify_prop2(_graph(args.graph), cap=args.cap, label=args.graph)
            )
        else:
            top = args.max_n or 8
            for n in range(3, top + 1):
                for i, g in enumerate(catalog.girth5_graphs(n)):
                    reports.append(
                        classify.verify_prop2(
                            g, cap=args.cap, label=f"girth>=5 board {n}.{i}"
                        )
                    )
    elif suite == "product":
        if bool(args.g1) != bool(args.g2):
            raise ValueError("--g1 and --g2 must be given together")
        pairs = [(args.g1, args.g2)] if args.g1 else _PRODUCT_PAIRS
        for a, b in pairs:
            reports.append(
                classify.verify_product_theorem(
                    _graph(a), _graph(b), cap=args.cap, label=f"{a} x {b}"
                )
            )
    elif suite == "examples":
        reports.append(
            classify.verify_examples_agreement(
                max_n=args.max_n or 7, cap=args.cap, jobs=args.jobs
            )
        )
    elif suite == "lemma-square":
        reports.append(classify.verify_square_lemma(max_n=args.max_n or 12))
    elif suite == "lemma-flips":
        reports.append(
            classify.verify_flip_lemma(max_n=args.max_n or 7, jobs=args.jobs)
        )
    elif suite == "parity":
        reports.append(classify.verify_parity_example(cap=args.cap))
    verdict = all(r["verdict"] for r in reports)
    _emit({"suite": suite, "verdict": verdict, "reports": reports}, args)
    return 0 if verdict else 1


def _add_common(sp, out=False, jobs=False):
    sp.add_argument("--cap", type=int, default=puzzle.DEFAULT_CAP,
                    help="max explored configurations before giving up")
    sp.add_argument("--no-timing", action="store_true",
                    help="omit elapsed-time fields from the report")
    if out:
        sp.add_argument("--out", default=None, help="write the certificate here")
    if jobs:
        sp.add_argument("--jobs", type=int, default=None,
                        help="worker processes for sweep suites")


def _build_parser():
    p = argparse.ArgumentParser(
        prog="pebblex",
        description="Pebble exchange puzzles: groups, feasibility, certificates.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("aut", help="automorphism group of a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--elements", action="store_true")
    _add_common(sp)
    sp.set_defaults(func=_cmd_aut)

    sp = sub.add_parser("peb", help="pebble exchange group of a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--elements", action="store_true")
    _add_common(sp)
    sp.set_defaults(func=_cmd_peb)

    sp = sub.add_parser("feasible", help="is Puz(board, pebbles) feasible?")
    sp.add_argument("--board", required=True)
    sp.add_argument("--pebbles", required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_feasible)

    sp = sub.add_parser("equivalent", help="are two configurations connected by moves?")
    sp.add_argument("--board", required=True)
    sp.add_argument("--pebbles", required=True)
    sp.add_argument("--from", required=True, metavar="CONFIG")
    sp.add_argument("--to", required=True, metavar="CONFIG")
    _add_common(sp)
    sp.set_defaults(func=_cmd_equivalent)

    sp = sub.add_parser("flips", help="realize an automorphism as path flips")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--perm", required=True)
    _add_common(sp, out=True)
    sp.set_defaults(func=_cmd_flips)

    sp = sub.add_parser("replay-flips", help="replay a flip-sequence file")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--cert", required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_replay_flips)

    sp = sub.add_parser("reverse-square", help="reversal certificate on a squared path")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--via", choices=("recursive", "bfs"), default="recursive")
    sp.add_argument("--allow-large", action="store_true",
                    help="permit n beyond the guarded range")
    _add_common(sp, out=True)
    sp.set_defaults(func=_cmd_reverse_square)

    sp = sub.add_parser("compile-square",
                        help="compile an automorphism of g into moves on squared g")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--perm", required=True)
    _add_common(sp, out=True)
    sp.set_defaults(func=_cmd_compile_square)

    sp = sub.add_parser("replay", help="validate a move-certificate file")
    sp.add_argument("--cert", required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_replay)

    sp = sub.add_parser("classify", help="closed-form feasibility verdict only")
    sp.add_argument("--board", required=True)
    sp.add_argument("--pebbles", required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=(
        "prop2", "product", "examples", "lemma-square", "lemma-flips", "parity"
    ))
    sp.add_argument("--graph", default=None, help="single board for prop2")
    sp.add_argument("--g1", default=None, help="first product factor")
    sp.add_argument("--g2", default=None, help="second product factor")
    sp.add_argument("--max-n", type=int, default=None)
    _add_common(sp, jobs=True)
    sp.set_defaults(func=_cmd_verify)

    return p


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IllegalMoveError, FlipError, RealizationError, SynthesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PuzzleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
