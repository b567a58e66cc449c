import numpy as np
import pytest

from groupcensus import constructors as con
from groupcensus.census import cent_census, center
from groupcensus.isoclinism import (
    check_gz_simple_proposition,
    check_lemma_pi,
    check_maximal_proposition,
    check_small_n_theorem,
    find_isomorphism,
    is_isomorphic,
    is_simple_table,
    isoclinic,
    isomorphisms,
    product_set,
    quotient,
    validate_witness,
)
from groupcensus.perm import multiplication_table, perm_from_cycles
from groupcensus.structure import all_subgroups, derived_subgroup


def table(G):
    return multiplication_table(G)


def test_quotient_by_whole_group_is_trivial():
    G = con.symmetric(3)
    q = quotient(G, G.full_mask())
    assert q.group.size == 1


def test_quotient_s3_by_c3():
    G = con.symmetric(3)
    c3 = G.mask_from_indices(
        [G.identity_index,
         G.index_of(perm_from_cycles(3, [[0, 1, 2]])),
         G.index_of(perm_from_cycles(3, [[0, 2, 1]]))]
    )
    q = quotient(G, c3)
    assert q.group.size == 2
    assert is_isomorphic(q.group, table(con.cyclic(2)))
    # every element lands in the coset of its representative
    for i in range(G.order):
        assert q.coset_of[i] in (0, 1)


def test_quotient_d4_by_center_is_klein_four():
    G = con.dihedral(4)
    q = quotient(G, center(G))
    assert q.group.size == 4
    klein = table(con.direct_product(con.cyclic(2), con.cyclic(2)))
    assert is_isomorphic(q.group, klein)
    assert not is_isomorphic(q.group, table(con.cyclic(4)))


def test_quotient_rejects_non_normal():
    G = con.symmetric(3)
    swap = G.mask_from_indices(
        [G.identity_index, G.index_of(perm_from_cycles(3, [[0, 1]]))]
    )
    assert swap.is_closed()
    with pytest.raises(ValueError):
        quotient(G, swap)


def test_quotient_coset_map_is_homomorphism():
    G = con.dicyclic(3)
    q = quotient(G, center(G))
    A = G.elems
    for a in range(0, G.order, 3):
        for b in range(0, G.order, 3):
            ab = G.index_of(A[a][A[b]])
            assert q.group.mul(int(q.coset_of[a]), int(q.coset_of[b])) == int(
                q.coset_of[ab]
            )


def test_find_isomorphism_identity_case():
    T = table(con.symmetric(3))
    phi = find_isomorphism(T, T)
    assert phi is not None
    t = T.table
    assert np.array_equal(t[phi][:, phi], phi[t])


def test_c4_not_isomorphic_to_klein_four():
    c4 = table(con.cyclic(4))
    klein = table(con.direct_product(con.cyclic(2), con.cyclic(2)))
    assert find_isomorphism(c4, klein) is None


def test_d6_isomorphic_to_c2_times_s3():
    d6 = table(con.dihedral(6))
    prod = table(con.direct_product(con.cyclic(2), con.symmetric(3)))
    assert is_isomorphic(d6, prod)


def test_d6_not_isomorphic_to_dicyclic_3_or_a4():
    d6 = table(con.dihedral(6))
    assert not is_isomorphic(d6, table(con.dicyclic(3)))
    assert not is_isomorphic(d6, table(con.alternating(4)))


def test_isomorphism_count_s3_is_aut_order():
    s3 = table(con.symmetric(3))
    # Aut(S3) = Inn(S3) = S3, so exactly 6 isomorphisms S3 -> S3
    assert sum(1 for _ in isomorphisms(s3, s3)) == 6


def test_isomorphic_is_symmetric():
    pairs = [
        (table(con.dihedral(4)), table(con.dicyclic(2))),
        (table(con.dihedral(6)), table(con.direct_product(con.cyclic(2), con.symmetric(3)))),
        (table(con.cyclic(6)), table(con.direct_product(con.cyclic(2), con.cyclic(3)))),
    ]
    for a, b in pairs:
        assert is_isomorphic(a, b) == is_isomorphic(b, a)


def test_every_group_isoclinic_with_itself():
    for G in (con.symmetric(3), con.dihedral(4), con.alternating(4), con.psl2(5)):
        res = isoclinic(G, G)
        assert res.status == "witness"
        assert validate_witness(G, G, res.witness)


def test_d4_isoclinic_with_q8():
    d4, q8 = con.dihedral(4), con.dicyclic(2)
    assert not is_isomorphic(table(d4), table(q8))
    res = isoclinic(d4, q8)
    assert res.status == "witness"
    assert validate_witness(d4, q8, res.witness)


def test_abelian_groups_isoclinic_with_trivial_group():
    triv = con.cyclic(1)
    for G in (con.cyclic(6), con.direct_product(con.cyclic(2), con.cyclic(4))):
        assert isoclinic(G, triv).status == "witness"


def test_d4_not_isoclinic_with_d6():
    res = isoclinic(con.dihedral(4), con.dihedral(6))
    assert res.status == "absent"


def test_s3_not_isoclinic_with_d4():
    assert isoclinic(con.symmetric(3), con.dihedral(4)).status == "absent"


def test_isoclinic_cap_gives_inconclusive():
    res = isoclinic(con.alternating(5), con.alternating(5), cap=10)
    assert res.status == "inconclusive"
    assert not res


def test_tampered_witness_fails_validation():
    d4, q8 = con.dihedral(4), con.dicyclic(2)
    res = isoclinic(d4, q8)
    w = res.witness
    bad_alpha = w.alpha.copy()
    bad_alpha[[0, 1]] = bad_alpha[[1, 0]]
    from groupcensus.isoclinism import IsoclinismWitness

    assert not validate_witness(d4, q8, IsoclinismWitness(bad_alpha, w.beta))


def test_isoclinic_groups_share_centralizer_count():
    pairs = [
        (con.dihedral(4), con.dicyclic(2)),
        (con.symmetric(3), con.symmetric(3)),
        (con.heisenberg(3), con.heisenberg(3)),
    ]
    for G, S in pairs:
        if isoclinic(G, S):
            assert cent_census(G).cent_count == cent_census(S).cent_count


def test_product_set_hz():
    G = con.dihedral(6)
    Z = center(G)
    s3_like = next(H for H in all_subgroups(G) if H.order == 6 and not np.all(
        G.commuting_matrix[np.ix_(H.indices(), H.indices())]))
    HZ = product_set(G, s3_like, Z)
    assert HZ.order == 12
    assert HZ.is_closed()


def test_lemma_pi_on_all_subgroups_of_s4():
    G = con.symmetric(4)
    seen_hypothesis = 0
    for H in all_subgroups(G):
        verdict = check_lemma_pi(G, H)
        assert verdict.ok, (H.order, verdict.clauses)
        seen_hypothesis += verdict.hypothesis_holds
    assert seen_hypothesis >= 1  # at least H = G itself


def test_lemma_pi_rejects_non_subgroup():
    G = con.symmetric(3)
    bad = G.mask_from_indices(
        [G.identity_index, G.index_of(perm_from_cycles(3, [[0, 1, 2]]))]
    )
    with pytest.raises(ValueError):
        check_lemma_pi(G, bad)


def test_maximal_proposition_examples():
    for G in (con.symmetric(3), con.dihedral(4), con.symmetric(4), con.dicyclic(3)):
        for verdict in check_maximal_proposition(G):
            assert verdict.ok


def test_small_n_theorem_examples():
    # n = 4: D4 and Q8; n = 5: S3 and the Heisenberg group of order 27
    for G in (con.dihedral(4), con.dicyclic(2), con.symmetric(3), con.heisenberg(3)):
        verdicts = check_small_n_theorem(G)
        assert verdicts
        assert all(v.ok for v in verdicts)


def test_small_n_theorem_vacuous_above_five():
    assert check_small_n_theorem(con.symmetric(4)) == []
    assert check_small_n_theorem(con.cyclic(6)) == []


def test_is_simple_table_examples():
    assert is_simple_table(table(con.cyclic(5)))
    assert not is_simple_table(table(con.cyclic(6)))
    assert not is_simple_table(table(con.symmetric(3)))
    assert not is_simple_table(table(con.cyclic(1)))
    assert is_simple_table(table(con.alternating(5)), cap=100_000)


def test_gz_simple_proposition_c2_times_a5():
    G = con.direct_product(con.cyclic(2), con.alternating(5))
    verdict = check_gz_simple_proposition(G, simple_known=True)
    assert verdict.hypothesis_met
    assert verdict.ok


def test_gz_simple_proposition_hypothesis_not_met():
    verdict = check_gz_simple_proposition(con.symmetric(3))
    assert not verdict.hypothesis_met
    assert not verdict.ok
