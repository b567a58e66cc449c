import random
from math import factorial

import numpy as np
import pytest

import reference
from groupcensus.perm import (
    CapExceeded,
    close,
    commutes,
    compose,
    identity_perm,
    invert,
    multiplication_table,
    perm_from_cycles,
    perm_from_images,
)
from groupcensus import constructors as con


def test_compose_examples():
    swap = perm_from_cycles(2, [[0, 1]])
    assert np.array_equal(compose(swap, swap), identity_perm(2))
    cyc = perm_from_cycles(3, [[0, 1, 2]])
    assert np.array_equal(compose(cyc, identity_perm(3)), cyc)
    assert np.array_equal(compose(cyc, compose(cyc, cyc)), identity_perm(3))


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(identity_perm(2), identity_perm(3))


def test_invalid_permutation_rejected():
    with pytest.raises(ValueError):
        perm_from_images([0, 0, 1])


def test_close_s3():
    G = close(3, [perm_from_cycles(3, [[0, 1]]), perm_from_cycles(3, [[0, 1, 2]])])
    assert G.order == 6
    assert np.array_equal(G.elems[G.identity_index], identity_perm(3))


def test_close_trivial():
    G = close(4, [identity_perm(4)])
    assert G.order == 1


def test_close_psl2_13_order_matches_reference_closure():
    G = con.psl2(13)
    # independent oracle: naive tuple-based closure of the same generators
    elems = reference.closure(14, [tuple(int(v) for v in g) for g in G.generators])
    assert len(elems) == 13 * (13 * 13 - 1) // 2 == 1092
    assert G.order == len(elems)


def test_close_cap_reports_partial():
    with pytest.raises(CapExceeded) as exc:
        close(7, [perm_from_cycles(7, [[0, 1]]), perm_from_cycles(7, [list(range(7))])], cap=100)
    assert exc.value.partial is not None
    assert exc.value.partial >= 100


def test_close_generator_order_independent():
    gens = [
        perm_from_cycles(4, [[0, 1]]),
        perm_from_cycles(4, [[0, 1, 2, 3]]),
    ]
    a = close(4, gens)
    b = close(4, gens[::-1])
    assert np.array_equal(a.elems, b.elems)


def test_elements_sorted_lexicographically():
    G = con.symmetric(4)
    rows = [tuple(r) for r in G.elems]
    assert rows == sorted(rows)


@pytest.mark.parametrize("spec", ["S(4)", "A(4)", "D(7)", "Q(3)", "H(3)", "C(2) x S(3)"])
def test_closed_and_inverse_closed(spec):
    from groupcensus.specs import parse_spec

    G = con.build(parse_spec(spec))
    assert G.order <= 500
    members = {tuple(r) for r in G.elems}
    for a in members:
        assert reference.inverse(a) in members
        for b in members:
            assert reference.compose(a, b) in members


@pytest.mark.parametrize("degree,gens", [
    (5, [[[0, 1, 2]]]),
    (6, [[[0, 1]], [[2, 3, 4, 5]]]),
    (4, [[[0, 1], [2, 3]]]),
])
def test_lagrange_divisibility(degree, gens):
    G = close(degree, [perm_from_cycles(degree, g) for g in gens])
    assert factorial(degree) % G.order == 0


def test_commutes_examples():
    s4 = con.symmetric(4)
    e = s4.identity_index
    t01 = s4.index_of(perm_from_cycles(4, [[0, 1]]))
    t23 = s4.index_of(perm_from_cycles(4, [[2, 3]]))
    assert all(commutes(s4, e, j) for j in range(0, s4.order, 5))
    assert commutes(s4, t01, t23)
    s3 = con.symmetric(3)
    i = s3.index_of(perm_from_cycles(3, [[0, 1]]))
    j = s3.index_of(perm_from_cycles(3, [[0, 1, 2]]))
    assert not commutes(s3, i, j)
    with pytest.raises(IndexError):
        commutes(s3, 0, 99)


def test_multiplication_table_c2():
    T = multiplication_table(con.cyclic(2))
    assert T.size == 2
    xor = {(i, j): i ^ j for i in range(2) for j in range(2)}
    for (i, j), v in xor.items():
        assert T.mul(i, j) == v


def test_multiplication_table_s3():
    G = con.symmetric(3)
    T = multiplication_table(G)
    assert T.is_latin_square()
    e = T.identity
    for j in range(6):
        assert T.mul(e, j) == j and T.mul(j, e) == j


def test_multiplication_table_psl27_associativity_spot_checks():
    G = con.psl2(7)
    T = multiplication_table(G)
    rng = random.Random(7)
    for _ in range(10 ** 4):
        a, b, c = (rng.randrange(T.size) for _ in range(3))
        assert T.mul(T.mul(a, b), c) == T.mul(a, T.mul(b, c))


def test_table_orders_match_permutation_orders():
    G = con.dicyclic(3)
    T = multiplication_table(G)
    # force the lazy table path for order computation
    T._orders = None
    assert list(T.orders) == list(G.element_orders)


def test_table_cap():
    with pytest.raises(CapExceeded):
        multiplication_table(con.symmetric(4), cap=10)


def test_subgroup_mask_closure_check():
    G = con.symmetric(3)
    c3 = G.mask_from_indices(
        [G.identity_index,
         G.index_of(perm_from_cycles(3, [[0, 1, 2]])),
         G.index_of(perm_from_cycles(3, [[0, 2, 1]]))]
    )
    assert c3.is_closed()
    broken = G.mask_from_indices([G.identity_index, G.index_of(perm_from_cycles(3, [[0, 1, 2]]))])
    assert not broken.is_closed()
