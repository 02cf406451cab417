"""Turning an automorphism into a short script of path reversals.

A flip reverses the pebbles along a board path, provided those pebbles also
form a path among themselves.  Every automorphism of a connected board is a
product of flips, and the constructive engine emits one such product,
replay-checking every claim on the way.
"""

from pebblex import (
    cycle_notation,
    flip_bfs_witness,
    flip_sequence_permutation,
    realize_by_flips,
)
from pebblex.names import graph_from_desc


def demo(desc, sigma):
    g = graph_from_desc(desc)
    seq = realize_by_flips(g, sigma)
    print(f"{desc}, target {cycle_notation(sigma)}:")
    for p in seq:
        print(f"   reverse {' -> '.join(str(v) for v in p)}")
    got = flip_sequence_permutation(g, seq)
    assert got == sigma
    shortest = flip_bfs_witness(g, sigma)
    print(f"   constructed {len(seq)} flips; shortest possible {len(shortest)}")
    print()


if __name__ == "__main__":
    demo("p4", (4, 3, 2, 1))       # reverse a path
    demo("c5", (2, 3, 4, 5, 1))    # rotate a cycle
    demo("c6", (2, 3, 4, 5, 6, 1))
    demo("q2", (2, 4, 1, 3))       # rotate the square grid
