"""Independent brute-force oracle for the expected values frozen in the test suite.

Everything here is computed from first principles with the standard library
only: graphs are dicts of neighbor sets, permutations are tuples, searches are
plain BFS over explicitly materialized states.  Nothing imports the package
under test.  Run it and diff the output against the constants in tests/.
"""

import itertools
import math
from collections import deque


def mk(n, edges):
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def path(n):
    return mk(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return mk(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star(leaves):
    return mk(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def complete(n):
    return mk(n, list(itertools.combinations(range(1, n + 1), 2)))


def hypercube(d):
    n = 1 << d
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if bin(a ^ b).count("1") == 1:
                edges.append((a + 1, b + 1))
    return mk(n, edges)


def theta122():
    return mk(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7), (4, 7)])


def grid(a, b):
    # vertex (i,j) -> (i-1)*b + j, 1-based
    edges = []
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            v = (i - 1) * b + j
            if j < b:
                edges.append((v, v + 1))
            if i < a:
                edges.append((v, v + b))
    return mk(a * b, edges)


def square(adj):
    n = len(adj)
    out = {v: set() for v in adj}
    for v in adj:
        for u in adj[v]:
            out[v].add(u)
            for w in adj[u]:
                if w != v:
                    out[v].add(w)
    return out


def edges_of(adj):
    return sorted((u, v) for u in adj for v in adj[u] if u < v)


def count_matchings(adj):
    es = edges_of(adj)
    total = 0
    for r in range(len(es) + 1):
        for sub in itertools.combinations(es, r):
            used = set()
            ok = True
            for u, v in sub:
                if u in used or v in used:
                    ok = False
                    break
                used.add(u)
                used.add(v)
            if ok:
                total += 1
    return total


def automorphism_count(adj):
    n = len(adj)
    verts = list(range(1, n + 1))
    es = set(map(tuple, map(sorted, edges_of(adj))))
    count = 0
    for perm in itertools.permutations(verts):
        img = dict(zip(verts, perm))
        if all((min(img[u], img[v]), max(img[u], img[v])) in es for u, v in es):
            count += 1
    return count


def puzzle_bfs(board, pebbles, start=None):
    """All configurations reachable from start (default identity) in
    Puz(board, pebbles).  Configurations are tuples: position i holds the
    pebble at board vertex i+1."""
    n = len(board)
    b_edges = edges_of(board)
    p_adj = pebbles
    if start is None:
        start = tuple(range(1, n + 1))
    seen = {start}
    frontier = deque([start])
    while frontier:
        f = frontier.popleft()
        for x1, x2 in b_edges:
            y1, y2 = f[x1 - 1], f[x2 - 1]
            if y2 in p_adj[y1]:
                g = list(f)
                g[x1 - 1], g[x2 - 1] = y2, y1
                g = tuple(g)
                if g not in seen:
                    seen.add(g)
                    frontier.append(g)
    return seen


def is_automorphism(adj, perm):
    es = edges_of(adj)
    return all(perm[v - 1] in adj[perm[u - 1]] for u, v in es)


def peb_order(adj):
    reach = puzzle_bfs(adj, adj)
    return sum(1 for f in reach if is_automorphism(adj, f))


def sign(perm):
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            ln += 1
        if ln % 2 == 0:
            s = -s
    return s


def all_flip_paths(adj):
    """Simple paths with >= 2 vertices, one orientation per path."""
    paths = []

    def extend(p):
        if len(p) >= 2 and p[0] < p[-1]:
            paths.append(tuple(p))
        for w in sorted(adj[p[-1]]):
            if w not in p:
                p.append(w)
                extend(p)
                p.pop()

    for v in sorted(adj):
        extend([v])
    return paths


def flip_reachable(adj, start=None):
    """BFS over configurations of Puz(g,g) where one step reverses the pebbles
    along a board path whose pebble image is also a path."""
    n = len(adj)
    paths = all_flip_paths(adj)
    if start is None:
        start = tuple(range(1, n + 1))
    seen = {start}
    frontier = deque([start])
    while frontier:
        f = frontier.popleft()
        for p in paths:
            imgs = [f[v - 1] for v in p]
            if all(imgs[i + 1] in adj[imgs[i]] for i in range(len(imgs) - 1)):
                g = list(f)
                for i, v in enumerate(p):
                    g[v - 1] = imgs[len(p) - 1 - i]
                g = tuple(g)
                if g not in seen:
                    seen.add(g)
                    frontier.append(g)
    return seen


def connected(adj):
    verts = list(adj)
    seen = {verts[0]}
    frontier = deque([verts[0]])
    while frontier:
        v = frontier.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(adj)


def canon(n, edge_set):
    best = None
    verts = list(range(1, n + 1))
    for perm in itertools.permutations(verts):
        img = dict(zip(verts, perm))
        key = tuple(sorted(tuple(sorted((img[u], img[v]))) for u, v in edge_set))
        if best is None or key < best:
            best = key
    return best


def count_connected_graphs(n):
    """Connected graphs on n vertices up to isomorphism, by brute force."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    keys = set()
    for bits in range(1 << len(pairs)):
        edge_set = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        adj = mk(n, edge_set)
        if connected(adj):
            keys.add(canon(n, edge_set))
    return len(keys)


def count_trees(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    keys = set()
    for edge_set in itertools.combinations(pairs, n - 1):
        adj = mk(n, edge_set)
        if connected(adj):
            keys.add(canon(n, edge_set))
    return len(keys)


def main():
    print("== matchings (incl. empty) ==")
    for name, g in [("P3", path(3)), ("K3", complete(3)), ("C5", cycle(5)),
                    ("C6", cycle(6)), ("C7", cycle(7)), ("P4", path(4))]:
        print(f"  {name}: {count_matchings(g)}")

    print("== automorphism group orders ==")
    for name, g in [("P4", path(4)), ("C5", cycle(5)), ("star3", star(3)),
                    ("Q3", hypercube(3)), ("theta122", theta122()),
                    ("K4", complete(4))]:
        print(f"  {name}: {automorphism_count(g)}")

    print("== puzzle reachability ==")
    print(f"  Puz(P3,P3) reachable from id: {len(puzzle_bfs(path(3), path(3)))}")
    g23 = grid(2, 3)
    reach = puzzle_bfs(g23, star(5))
    print(f"  Puz(P2xP3, K_1,5) reachable: {len(reach)}")
    center_home = [f for f in reach if f[0] == 1]
    evens = [f for f in center_home if sign(f) == 1]
    print(f"  ... with star center at start vertex: {len(center_home)}, all even: {len(evens) == len(center_home)}")
    c4 = cycle(4)
    rot = (2, 3, 4, 1)
    print(f"  Puz(C4): rotation reachable from id: {rot in puzzle_bfs(c4, c4)}")
    for n in (3, 4, 5):
        r = len(puzzle_bfs(square(path(n)), square(path(n))))
        print(f"  Puz(P{n}^2) reachable: {r} (n! = {math.factorial(n)})")

    print("== pebble exchange group orders ==")
    print(f"  Peb(P2): {peb_order(path(2))}")
    print(f"  Peb(C5): {peb_order(cycle(5))}")
    print(f"  Peb(C7): {peb_order(cycle(7))}")
    print(f"  Peb(P6^2): {peb_order(square(path(6)))}")
    print(f"  Peb(P7^2): {peb_order(square(path(7)))}")
    print(f"  Peb(Q2): {peb_order(hypercube(2))}")
    print(f"  Peb(Q3): {peb_order(hypercube(3))}")
    print(f"  girth>=5 reachable C5: {len(puzzle_bfs(cycle(5), cycle(5)))}")
    print(f"  girth>=5 reachable C7: {len(puzzle_bfs(cycle(7), cycle(7)))}")

    print("== flip reachability ==")
    p3 = path(3)
    print(f"  P3 (2,1,3) flip-reachable: {(2, 1, 3) in flip_reachable(p3)}")
    c5 = cycle(5)
    fr = flip_reachable(c5)
    rot5 = (2, 3, 4, 5, 1)
    print(f"  C5 rotation flip-reachable: {rot5 in fr}")
    refl = tuple((1 - i) % 5 + 1 for i in range(5))  # i -> 2-i mod 5
    print(f"  C5 reflection {refl} flip-reachable: {refl in fr}")
    for name, g in [("P4", path(4)), ("star3", star(3)), ("C4", cycle(4)), ("K4", complete(4))]:
        fr = flip_reachable(g)
        n = len(g)
        auts = [p for p in itertools.permutations(range(1, n + 1)) if is_automorphism(g, p)]
        print(f"  {name}: all {len(auts)} automorphisms flip-reachable: {all(a in fr for a in auts)}")

    print("== reversal-sequence length recurrence L(1)=0 L(2)=1 L(n)=2L(n-1)+L(n-2)+1 ==")
    L = [None, 0, 1]
    for n in range(3, 17):
        L.append(2 * L[n - 1] + L[n - 2] + 1)
    print(f"  L(1..16) = {L[1:]}")
    print(f"  ratios n=9..15: {[round(L[n + 1] / L[n], 4) for n in range(9, 16)]}")
    print(f"  1+sqrt(2) = {1 + math.sqrt(2):.4f}")

    print("== catalog counts (brute force, small n) ==")
    for n in range(1, 6):
        print(f"  connected graphs on {n}: {count_connected_graphs(n)}")
    for n in range(1, 8):
        print(f"  trees on {n}: {count_trees(n)}")

    print("== girth>=5 connected counts (brute force, small n) ==")

    def girth_ge5(adj):
        # no triangle, no 4-cycle: adjacency or two common neighbors
        for u in adj:
            for v in adj:
                if u < v:
                    common = len(adj[u] & adj[v])
                    if v in adj[u] and common >= 1:
                        return False  # triangle
                    if common >= 2:
                        return False  # 4-cycle
        return True

    for n in range(3, 7):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        keys = set()
        for bits in range(1 << len(pairs)):
            es = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            adj = mk(n, es)
            if connected(adj) and girth_ge5(adj):
                keys.add(canon(n, es))
        print(f"  n={n}: {len(keys)}")

    print("== lucas numbers (cycle matching counts) ==")
    a, b = 2, 1
    vals = {}
    for k in range(1, 11):
        a, b = b, a + b
        vals[k] = b if k >= 2 else b
    # L_1=1, L_2=3, L_3=4, ...
    lu = [None, 1, 3]
    for k in range(3, 11):
        lu.append(lu[k - 1] + lu[k - 2])
    print(f"  L_1..L_10 = {lu[1:]}")


if __name__ == "__main__":
    main()
