"""Boards without short cycles are nearly frozen.

When every cycle of the board has length at least five, the self-puzzle
can do almost nothing: the reachable arrangements are exactly those that
swap the two endpoints of each edge in a matching and fix everything else.
On a cycle the count of such arrangements is a Lucas number.
"""

from pebblex import girth5_reachable_oracle, puz_on, reachable_set
from pebblex.catalog import girth5_graphs
from pebblex.names import graph_from_desc


def lucas(n):
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


if __name__ == "__main__":
    for n in (5, 6, 7, 8):
        g = graph_from_desc(f"c{n}")
        reach = reachable_set(puz_on(g))
        predicted = girth5_reachable_oracle(g)
        print(
            f"c{n}: reachable {len(reach)}, matching arrangements "
            f"{len(predicted)}, Lucas({n}) = {lucas(n)}, "
            f"equal: {reach == predicted}"
        )

    print()
    # sweep every connected board on six vertices with girth >= 5
    for i, g in enumerate(girth5_graphs(6)):
        reach = reachable_set(puz_on(g))
        ok = reach == girth5_reachable_oracle(g)
        print(f"6-vertex board {i}: {g.m} edges, "
              f"{len(reach)} arrangements, prediction holds: {ok}")
