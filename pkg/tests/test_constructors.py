from math import gcd

import numpy as np
import pytest

import reference
from groupcensus import constructors as con
from groupcensus.census import cent_census
from groupcensus.gf import field
from groupcensus.perm import CapExceeded


def test_standard_family_orders():
    assert con.alternating(5).order == 60
    assert con.dihedral(40).order == 80
    assert con.alternating(7).order == 2520
    assert con.cyclic(1).order == 1
    assert con.symmetric(4).order == 24
    assert con.standard_family("dihedral", 6).order == 12


def test_standard_family_errors():
    with pytest.raises(ValueError):
        con.standard_family("sporadic", 1)
    with pytest.raises(ValueError):
        con.alternating(2)
    with pytest.raises(ValueError):
        con.dihedral(2)
    with pytest.raises(ValueError):
        con.cyclic(0)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16, 23, 25])
def test_psl2_order_formula(q):
    G = con.psl2(q)
    assert G.degree == q + 1
    assert G.order == q * (q * q - 1) // gcd(2, q - 1)


def test_psl2_small_match_alternating_orders():
    # order-level sanity only: PSL(2,4) and PSL(2,5) have order 60,
    # PSL(2,9) has order 360
    assert con.psl2(4).order == 60
    assert con.psl2(5).order == 60
    assert con.psl2(9).order == 360


def test_psl2_rejects_bad_q():
    with pytest.raises(ValueError):
        con.psl2(6)
    with pytest.raises(ValueError):
        con.psl2(3)
    with pytest.raises(ValueError):
        con.psl2(83)


def test_psu3_3_order_and_degree():
    G = con.psu3(3)
    assert G.order == 6048
    assert G.degree == 28


def test_psu3_isotropic_point_count_by_exhaustive_scan():
    # independent oracle: scan all 91 projective points of PG(2, 9)
    F = field(3, 2)
    points = []
    for v1 in range(9):
        for v2 in range(9):
            for v3 in range(9):
                v = (F.element(v1), F.element(v2), F.element(v3))
                if v == (F.zero, F.zero, F.zero):
                    continue
                first = next(x for x in v if x != F.zero)
                if first != F.one:
                    continue
                points.append(v)
    assert len(points) == 91
    isotropic = [
        v for v in points
        if F.add(
            F.add(F.mul(v[0], F.frobenius(v[2])), F.mul(v[1], F.frobenius(v[1]))),
            F.mul(v[2], F.frobenius(v[0])),
        ) == F.zero
    ]
    assert len(isotropic) == 28


def test_psu3_action_is_faithful():
    # the permutation image has the full PSU order, so only the identity
    # class acts trivially
    G = con.psu3(3)
    ident = np.arange(G.degree)
    fixing_all = [i for i in range(G.order) if np.array_equal(G.elems[i], ident)]
    assert fixing_all == [G.identity_index]


def test_psu3_rejects_bad_q():
    with pytest.raises(ValueError):
        con.psu3(4)
    with pytest.raises(ValueError):
        con.psu3(7)


def test_heisenberg_structure():
    from groupcensus.census import center
    from groupcensus.structure import derived_subgroup

    G = con.heisenberg(3)
    assert G.order == 27
    Z = center(G)
    assert Z.order == 3
    D = derived_subgroup(G)
    assert D.order == 3
    assert np.array_equal(D.bits, Z.bits)
    assert con.heisenberg(5).order == 125
    with pytest.raises(ValueError):
        con.heisenberg(2)
    with pytest.raises(ValueError):
        con.heisenberg(11)


def test_dicyclic_orders_and_quaternion():
    q8 = con.dicyclic(2)
    assert q8.order == 8
    # quaternion order profile: one element of order 1, one of order 2,
    # six of order 4
    orders = sorted(q8.element_orders.tolist())
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
    assert con.dicyclic(4).order == 16


def test_direct_product_orders():
    c6 = con.direct_product(con.cyclic(2), con.cyclic(3))
    assert c6.order == 6
    assert cent_census(c6).is_abelian
    big = con.direct_product(con.dihedral(4), con.heisenberg(3))
    assert big.order == 216


def test_direct_product_with_trivial_preserves_census():
    a4 = con.alternating(4)
    prod = con.direct_product(a4, con.cyclic(1))
    assert cent_census(prod).cent_count == cent_census(a4).cent_count
    assert cent_census(prod).nacent_count == cent_census(a4).nacent_count


def test_census_factorizes_over_products():
    pairs = [
        (con.symmetric(3), con.dihedral(4)),
        (con.alternating(4), con.cyclic(4)),
        (con.dicyclic(2), con.symmetric(3)),
    ]
    for A, B in pairs:
        prod = con.direct_product(A, B)
        assert (
            cent_census(prod).cent_count
            == cent_census(A).cent_count * cent_census(B).cent_count
        )


def test_constructors_deterministic():
    a = con.psl2.__wrapped__(8)
    b = con.psl2.__wrapped__(8)
    assert np.array_equal(a.elems, b.elems)
    c = con.psu3.__wrapped__(3)
    d = con.psu3.__wrapped__(3)
    assert np.array_equal(c.elems, d.elems)


def test_direct_product_cap():
    with pytest.raises(CapExceeded):
        con.direct_product(con.symmetric(4), con.symmetric(4), cap=100)


def test_heisenberg_matches_reference_closure():
    G = con.heisenberg(3)
    elems = reference.closure(27, [tuple(int(v) for v in g) for g in G.generators])
    assert len(elems) == 27
    assert {tuple(int(v) for v in row) for row in G.elems} == elems
