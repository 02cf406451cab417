"""Closed-form feasibility verdicts, cross-checked against brute force.

A puzzle is feasible when every arrangement of the pebbles can be reached
from every other.  For several pebble-graph families the answer follows
from the board's shape alone: no search required.
"""

from pebblex import (
    Puz,
    classify_instance,
    complete_multipartite,
    is_feasible,
    star,
)
from pebblex.names import graph_from_desc

CASES = [
    # board, pebbles, note
    ("k4", star(3), "one free pebble on a complete board"),
    ("c6", star(5), "one free pebble on a cycle"),
    ("theta122", star(6), "one free pebble on the 7-vertex theta board"),
    ("p4", complete_multipartite(1, 1, 2), "two labeled pebbles on a path"),
    ("k4", complete_multipartite(2, 2), "two-sided pebbles on a complete board"),
    ("k6", complete_multipartite(2, 2, 2), "three pebble classes of two"),
]

if __name__ == "__main__":
    for desc, pebbles, note in CASES:
        board = graph_from_desc(desc)
        family, verdict = classify_instance(board, pebbles)
        bfs = is_feasible(Puz(board, pebbles))
        mark = "agrees" if bfs == verdict.feasible else "DISAGREES"
        print(f"{note}")
        print(
            f"   family={family} rule={verdict.rule!r} "
            f"feasible={verdict.feasible}  brute force: {bfs} ({mark})"
        )
        if verdict.witness:
            print(f"   blocking path: {verdict.witness}")
        print()
