import random

import pytest

from pebblex.graphs import complete, cycle, hypercube, path, star, theta_122
from pebblex.perms import (
    GroupSummary,
    automorphisms,
    automorphisms_dict,
    compose,
    cycle_notation,
    cycles,
    identity_perm,
    inverse,
    is_automorphism,
    is_closed_under_composition,
    is_perm,
    parse_perm,
    perm_order,
    perm_power,
    select_flip_basepoint,
    sign,
    symmetric_group,
    transposition,
)


def test_identity_and_is_perm():
    assert identity_perm(4) == (1, 2, 3, 4)
    assert is_perm((2, 3, 1))
    assert not is_perm((1, 1, 3))
    assert not is_perm((0, 1, 2))


def test_compose_applies_right_factor_first():
    p = (2, 1, 3)
    q = (1, 3, 2)
    c = compose(p, q)
    # c(2) = p(q(2)) = p(3) = 3
    assert c == (2, 3, 1)
    assert compose(p, identity_perm(3)) == p
    assert compose(identity_perm(3), p) == p


def test_inverse_and_power():
    rng = random.Random(7)
    for n in (1, 2, 5, 8):
        base = list(range(1, n + 1))
        for _ in range(20):
            rng.shuffle(base)
            p = tuple(base)
            assert compose(p, inverse(p)) == identity_perm(n)
            assert perm_power(p, 0) == identity_perm(n)
            assert perm_power(p, 3) == compose(p, compose(p, p))
            assert perm_power(p, -1) == inverse(p)
            assert perm_power(p, perm_order(p)) == identity_perm(n)


def test_order_and_sign():
    assert perm_order((2, 3, 1, 5, 4)) == 6  # lcm(3, 2)
    assert sign(identity_perm(5)) == 1
    assert sign(transposition(5, 2, 4)) == -1
    assert sign((2, 3, 1)) == 1
    p = (2, 3, 1, 5, 4)
    assert sign(p) == -1
    assert sign(compose(p, p)) == 1


def test_cycles_and_notation():
    assert cycles((2, 3, 1, 4)) == [(1, 2, 3), (4,)]  # fixed points kept
    assert cycle_notation((2, 3, 1, 4)) == "(1 2 3)"
    assert cycle_notation(identity_perm(3)) == "()"
    assert cycle_notation((2, 1, 4, 3)) == "(1 2)(3 4)"


def test_parse_perm():
    assert parse_perm("3 1 2") == (3, 1, 2)
    assert parse_perm("3 1 2", n=3) == (3, 1, 2)
    with pytest.raises(ValueError):
        parse_perm("3 1 2", n=4)
    with pytest.raises(ValueError):
        parse_perm("1 1 2")
    with pytest.raises(ValueError):
        parse_perm("one two")
    with pytest.raises(ValueError):
        parse_perm("   ")


@pytest.mark.parametrize(
    "g,order",
    [
        (path(4), 2),
        (cycle(5), 10),
        (star(3), 6),
        (complete(4), 24),
        (hypercube(3), 48),
        (theta_122(), 4),
    ],
)
def test_automorphism_group_orders(g, order):
    auts = automorphisms(g)
    assert len(auts) == order
    assert all(is_automorphism(g, p) for p in auts)
    assert auts[0] == identity_perm(g.n)  # sorted, identity first
    assert is_closed_under_composition(auts)


def test_automorphisms_dict_matches_tuple_version():
    g = cycle(4)
    as_dicts = automorphisms_dict(g)
    as_tuples = {tuple(d[v] for v in g.vertices) for d in as_dicts}
    assert as_tuples == set(automorphisms(g))
    # works on non-dense labels too
    h = g.relabeled({1: 10, 2: 20, 3: 30, 4: 40})
    assert len(automorphisms_dict(h)) == 8


def test_closure_check_caps_out():
    with pytest.raises(ValueError):
        is_closed_under_composition(symmetric_group(6))


def test_symmetric_group():
    s4 = symmetric_group(4)
    assert len(s4) == 24 and len(set(s4)) == 24
    assert list(s4) == sorted(s4)


def test_group_summary():
    g = GroupSummary.from_elements([(1, 2), (2, 1), (1, 2)])
    assert g.order == 2
    assert g.elements == ((1, 2), (2, 1))


def test_select_flip_basepoint_invariants():
    g = cycle(5)
    sigma = (2, 3, 4, 5, 1)
    powered, e, x, d, m = select_flip_basepoint(g, sigma)
    assert powered == perm_power(sigma, e)
    assert powered[x - 1] != x
    # d is the board distance from x to its image, m the orbit length of x
    assert d == 1 and m == 5
    orbit = {x}
    y = powered[x - 1]
    while y not in orbit:
        orbit.add(y)
        y = powered[y - 1]
    assert len(orbit) == m
