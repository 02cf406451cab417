"""Which symmetries of a graph can pebbles actually perform?

Fill every vertex of a board graph with a distinct pebble; two pebbles on
adjacent vertices may swap only if their labels are also adjacent in the
pebble graph.  Playing the board against itself, some automorphisms of the
board can be reached from the identity arrangement and some cannot.  The
reachable ones form the board's pebble exchange group.

The square grid (the 2-cube) has eight automorphisms but only four are
reachable; the 3-cube has forty-eight, of which eight.
"""

from pebblex import (
    automorphisms,
    compose,
    cycle_notation,
    pebble_exchange_group,
)
from pebblex.names import graph_from_desc


def show(desc):
    g = graph_from_desc(desc)
    auts = automorphisms(g)
    grp = pebble_exchange_group(g)
    print(f"{desc}: |Aut| = {len(auts)}, exchange group order = {grp.order}")
    ident = tuple(range(1, g.n + 1))
    for p in grp.elements:
        tag = "involution" if p != ident and compose(p, p) == ident else ""
        print(f"   {cycle_notation(p):<20} {tag}")


if __name__ == "__main__":
    show("q2")
    print()
    show("q3")
    print()
    # a 5-cycle is rigid for pebbles: rotations are automorphisms,
    # but no rotation is reachable, so the group collapses to identity
    show("c5")
