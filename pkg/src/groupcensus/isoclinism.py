"""Quotients, small-group isomorphism search, the isoclinism test with
explicit (alpha, beta) witnesses, and the structural property checkers
built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .census import center, subgroup_cent_count
from .perm import PermGroup, SubgroupMask, TableGroup, table_from_mask
from .structure import all_subgroups, derived_subgroup, maximal_subgroups, subgroup_closure

ISOCLINISM_CAP = 512


# -- quotient groups -----------------------------------------------------

@dataclass(frozen=True)
class Quotient:
    group: TableGroup
    coset_of: np.ndarray       # element index -> coset number
    representatives: np.ndarray  # coset number -> least member element index


def _require_normal(G: PermGroup, N: SubgroupMask) -> None:
    if not N.is_closed():
        raise ValueError("mask is not a subgroup")
    A = G.elems
    n_idx = N.indices()
    members = set(n_idx.tolist())
    for g in G.generators:
        gi = G.index_of(g)
        inv = G.elems[G.inverse_indices[gi]]
        conj = A[gi][A[n_idx]][:, inv]
        if set(G.indices_of(conj).tolist()) != members:
            raise ValueError("subgroup is not normal")


def quotient(G: PermGroup, N: SubgroupMask) -> Quotient:
    """G/N as a multiplication table; cosets are numbered in increasing
    order of their least member index."""
    if N.parent is not G:
        raise ValueError("mask does not belong to this group")
    _require_normal(G, N)
    A = G.elems
    n_idx = N.indices()
    coset_least = np.full(G.order, np.iinfo(np.int64).max, dtype=np.int64)
    for j in n_idx.tolist():
        prods = G.indices_of(A[:, A[j]])  # x o n for every x
        np.minimum(coset_least, prods, out=coset_least)
    reps = np.unique(coset_least)
    rep_pos = {int(r): c for c, r in enumerate(reps)}
    coset_of = np.array([rep_pos[int(r)] for r in coset_least], dtype=np.int64)
    k = len(reps)
    table = np.empty((k, k), dtype=np.int64)
    for a in range(k):
        ra = A[reps[a]]
        prods = G.indices_of(ra[A[reps]])
        table[a] = coset_of[prods]
    group = TableGroup(k, int(coset_of[G.identity_index]), table=table)
    return Quotient(group=group, coset_of=coset_of, representatives=reps)


# -- isomorphism search on tables ----------------------------------------

def _table_centralizer_sizes(T: TableGroup) -> np.ndarray:
    table = T.table
    return np.array(
        [(table[i] == table[:, i]).sum() for i in range(T.size)], dtype=np.int64
    )


def _greedy_generating_sequence(T: TableGroup) -> list[int]:
    """Repeatedly adjoin the least-index element outside the generated
    subgroup; deterministic, not necessarily minimum-cardinality."""
    table = T.table
    gens: list[int] = []
    generated = {T.identity}
    while len(generated) < T.size:
        g = next(i for i in range(T.size) if i not in generated)
        gens.append(g)
        frontier = list(generated | {g})
        generated.add(g)
        while frontier:
            nxt = []
            for x in frontier:
                for h in gens:
                    y = int(table[x, h])
                    if y not in generated:
                        generated.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def _extend_map(T1: TableGroup, T2: TableGroup, gens: list[int], images: list[int]):
    """Close the partial map sending gens -> images into a homomorphism on
    the subgroup the gens generate; None on any inconsistency."""
    t1, t2 = T1.table, T2.table
    phi = {T1.identity: T2.identity}
    used = {T2.identity}
    frontier = [T1.identity]
    for g, im in zip(gens, images):
        if g in phi:
            if phi[g] != im:
                return None
            continue
        if im in used:
            return None
        phi[g] = im
        used.add(im)
        frontier.append(g)
    pending = list(phi.keys())
    while pending:
        nxt = []
        for x in pending:
            fx = phi[x]
            for g, im in zip(gens, images):
                y = int(t1[x, g])
                fy = int(t2[fx, im])
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    if fy in used:
                        return None
                    phi[y] = fy
                    used.add(fy)
                    nxt.append(y)
        pending = nxt
    return phi


def isomorphisms(T1: TableGroup, T2: TableGroup) -> Iterator[np.ndarray]:
    """All isomorphisms T1 -> T2 as index arrays, in deterministic order.

    Cheap certificates (size, element-order multiset) short-circuit without
    touching the multiplication tables.
    """
    if T1.size != T2.size:
        return
    o1, o2 = T1.orders, T2.orders
    if sorted(o1.tolist()) != sorted(o2.tolist()):
        return
    gens = _greedy_generating_sequence(T1)
    c1 = _table_centralizer_sizes(T1)
    c2 = _table_centralizer_sizes(T2)
    candidates = []
    for g in gens:
        cands = [
            h
            for h in range(T2.size)
            if o2[h] == o1[g] and c2[h] == c1[g]
        ]
        candidates.append(cands)

    t1, t2 = T1.table, T2.table

    def dfs(pos: int, images: list[int]):
        if pos == len(gens):
            phi = _extend_map(T1, T2, gens, images)
            if phi is None or len(phi) != T1.size:
                return
            arr = np.empty(T1.size, dtype=np.int64)
            for k, v in phi.items():
                arr[k] = v
            # full vectorized homomorphism check, belt and braces
            if np.array_equal(t2[arr][:, arr], arr[t1]):
                yield arr
            return
        for h in candidates[pos]:
            if h in images:
                continue
            if _extend_map(T1, T2, gens[: pos + 1], images + [h]) is None:
                continue
            yield from dfs(pos + 1, images + [h])

    yield from dfs(0, [])


def find_isomorphism(T1: TableGroup, T2: TableGroup) -> Optional[np.ndarray]:
    """First isomorphism in deterministic search order, or None."""
    for phi in isomorphisms(T1, T2):
        return phi
    return None


def is_isomorphic(T1: TableGroup, T2: TableGroup) -> bool:
    return find_isomorphism(T1, T2) is not None


# -- isoclinism ----------------------------------------------------------

@dataclass(frozen=True)
class IsoclinismWitness:
    alpha: np.ndarray  # coset of G/Z(G) -> coset of S/Z(S)
    beta: np.ndarray   # position in G' -> position in S'


@dataclass(frozen=True)
class IsoclinismResult:
    status: str  # "witness" | "absent" | "inconclusive"
    witness: Optional[IsoclinismWitness] = None
    note: str = ""

    def __bool__(self):
        return self.status == "witness"


@dataclass(frozen=True)
class _CommutatorStructure:
    group: PermGroup
    quot: Quotient
    derived: SubgroupMask
    derived_table: TableGroup
    derived_pos: dict = field(hash=False)


def _commutator_structure(G: PermGroup) -> _CommutatorStructure:
    Z = center(G)
    quot = quotient(G, Z)
    D = derived_subgroup(G)
    table = table_from_mask(D)
    pos = {int(v): i for i, v in enumerate(D.indices())}
    return _CommutatorStructure(G, quot, D, table, pos)


def _commutator_index(G: PermGroup, a: int, b: int) -> int:
    A = G.elems
    inv = G.inverse_indices
    p = A[inv[a]][A[inv[b]]]
    p = p[A[a]]
    p = p[A[b]]
    return G.index_of(p)


def _forced_beta(cg: _CommutatorStructure, cs: _CommutatorStructure, alpha: np.ndarray):
    """beta forced pointwise on commutator values by alpha, then extended
    homomorphically over the derived subgroup; None if anything fails."""
    G, S = cg.group, cs.group
    k = cg.quot.group.size
    assignment: dict[int, int] = {}
    for c1 in range(k):
        g1 = int(cg.quot.representatives[c1])
        s1 = int(cs.quot.representatives[int(alpha[c1])])
        for c2 in range(k):
            g2 = int(cg.quot.representatives[c2])
            s2 = int(cs.quot.representatives[int(alpha[c2])])
            u = cg.derived_pos[_commutator_index(G, g1, g2)]
            v = cs.derived_pos[_commutator_index(S, s1, s2)]
            if assignment.setdefault(u, v) != v:
                return None
    # single-valued on commutators; extend to all of G' and validate
    gens = sorted(assignment)
    images = [assignment[g] for g in gens]
    phi = _extend_map(cg.derived_table, cs.derived_table, gens, images)
    if phi is None or len(phi) != cg.derived_table.size:
        return None
    beta = np.empty(cg.derived_table.size, dtype=np.int64)
    for kk, vv in phi.items():
        beta[kk] = vv
    t1, t2 = cg.derived_table.table, cs.derived_table.table
    if not np.array_equal(t2[beta][:, beta], beta[t1]):
        return None
    return beta


def isoclinic(G: PermGroup, S: PermGroup, cap: int = ISOCLINISM_CAP) -> IsoclinismResult:
    """Search for an isoclinism (alpha, beta): alpha ranges over central
    quotient isomorphisms; beta is forced by alpha on commutator values and
    then verified.  Deterministic: first witness in search order."""
    cg = _commutator_structure(G)
    cs = _commutator_structure(S)
    if cg.quot.group.size != cs.quot.group.size:
        return IsoclinismResult("absent", note="central quotient orders differ")
    if cg.derived.order != cs.derived.order:
        return IsoclinismResult("absent", note="derived subgroup orders differ")
    if cg.quot.group.size > cap or cg.derived.order > cap:
        return IsoclinismResult("inconclusive", note=f"search cap {cap} exceeded")
    for alpha in isomorphisms(cg.quot.group, cs.quot.group):
        beta = _forced_beta(cg, cs, alpha)
        if beta is not None:
            return IsoclinismResult(
                "witness", witness=IsoclinismWitness(alpha=alpha, beta=beta)
            )
    return IsoclinismResult("absent", note="no compatible quotient isomorphism")


def validate_witness(G: PermGroup, S: PermGroup, witness: IsoclinismWitness) -> bool:
    """Recheck every compatibility square of a witness from scratch."""
    cg = _commutator_structure(G)
    cs = _commutator_structure(S)
    alpha, beta = witness.alpha, witness.beta
    if sorted(alpha.tolist()) != list(range(cg.quot.group.size)):
        return False
    for c1 in range(cg.quot.group.size):
        g1 = int(cg.quot.representatives[c1])
        s1 = int(cs.quot.representatives[int(alpha[c1])])
        for c2 in range(cg.quot.group.size):
            g2 = int(cg.quot.representatives[c2])
            s2 = int(cs.quot.representatives[int(alpha[c2])])
            u = cg.derived_pos[_commutator_index(G, g1, g2)]
            v = cs.derived_pos[_commutator_index(S, s1, s2)]
            if int(beta[u]) != v:
                return False
    return True


# -- property checkers ---------------------------------------------------

@dataclass(frozen=True)
class LemmaVerdict:
    name: str
    hypothesis_holds: bool
    clauses: tuple  # (clause name, bool) pairs, only applicable clauses

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.clauses)


def _masks_equal(a: SubgroupMask, b: SubgroupMask) -> bool:
    return bool(np.array_equal(a.bits, b.bits))


def _center_of_subgroup(G: PermGroup, H: SubgroupMask) -> SubgroupMask:
    M = G.commuting_matrix
    idx = H.indices()
    bits = np.zeros(G.order, dtype=bool)
    for i in idx.tolist():
        bits[i] = bool(M[i][idx].all())
    return SubgroupMask(G, bits)


def product_set(G: PermGroup, H: SubgroupMask, K: SubgroupMask) -> SubgroupMask:
    """The set HK = {hk}; a subgroup whenever one factor is central/normal."""
    A = G.elems
    h_idx = H.indices()
    out: set[int] = set()
    for k in K.indices().tolist():
        out.update(G.indices_of(A[h_idx][:, A[k]]).tolist())
    return G.mask_from_indices(out)


def check_lemma_pi(G: PermGroup, H: SubgroupMask) -> LemmaVerdict:
    """Subgroups with the full centralizer count: H n Z(G) = Z(H) and
    H/Z(H) isomorphic to HZ(G)/Z(G), hence H isoclinic with HZ(G).  The
    chain |cent(H)| <= |cent_G(H)| <= |cent(G)| and H n Z(G) <= Z(H) are
    checked unconditionally."""
    if not H.is_closed():
        raise ValueError("mask is not a subgroup")
    M = G.commuting_matrix
    idx = H.indices()
    cent_h = subgroup_cent_count(G, H)
    cent_g_h = len({M[i].tobytes() for i in idx.tolist()})
    cent_g = len({M[i].tobytes() for i in range(G.order)})
    clauses = [("chain", cent_h <= cent_g_h <= cent_g)]

    Z = center(G)
    ZH = _center_of_subgroup(G, H)
    inter = SubgroupMask(G, Z.bits & H.bits)
    clauses.append(("intersection_below_center", bool(np.all(~inter.bits | ZH.bits))))

    hypothesis = cent_h == cent_g
    if hypothesis:
        clauses.append(("intersection_equals_center", _masks_equal(inter, ZH)))
        HZ = product_set(G, H, Z)
        Hgrp = H.as_group()
        q_h = quotient(Hgrp, _as_sub(Hgrp, ZH))
        HZgrp = HZ.as_group()
        q_hz = quotient(HZgrp, _as_sub(HZgrp, Z))
        clauses.append(
            ("quotient_isomorphism", is_isomorphic(q_h.group, q_hz.group))
        )
        clauses.append(("isoclinic_with_HZ", bool(isoclinic(Hgrp, HZgrp))))
    return LemmaVerdict("lemma_pi", hypothesis, tuple(clauses))


def _as_sub(H: PermGroup, mask: SubgroupMask) -> SubgroupMask:
    """Re-express a parent-group mask inside the standalone subgroup H."""
    bits = np.zeros(H.order, dtype=bool)
    for i in mask.indices().tolist():
        bits[H.index_of(mask.parent.elems[i])] = True
    return SubgroupMask(H, bits)


def check_maximal_proposition(G: PermGroup, cap: int = 400) -> list[LemmaVerdict]:
    """Maximal M with the full centralizer count: Z(M) = Z(G) or M
    isoclinic with G."""
    cent_g = subgroup_cent_count(G, G.full_mask())
    Z = center(G)
    verdicts = []
    for M in maximal_subgroups(G, cap):
        if subgroup_cent_count(G, M) != cent_g:
            continue
        ZM = _center_of_subgroup(G, M)
        if _masks_equal(ZM, Z):
            verdicts.append(
                LemmaVerdict("maximal:center_equal", True, (("center_equal", True),))
            )
            continue
        witness = isoclinic(M.as_group(), G)
        verdicts.append(
            LemmaVerdict(
                "maximal:isoclinic", True, (("isoclinic_with_G", bool(witness)),)
            )
        )
    return verdicts


def _reference_small_quotients():
    from . import constructors as c
    from .perm import multiplication_table

    klein = multiplication_table(c.direct_product(c.cyclic(2), c.cyclic(2)))
    s3 = multiplication_table(c.symmetric(3))
    c3c3 = multiplication_table(c.direct_product(c.cyclic(3), c.cyclic(3)))
    return [("C2xC2", klein), ("S3", s3), ("C3xC3", c3c3)]


def check_small_n_theorem(G: PermGroup, cap: int = 400) -> list[LemmaVerdict]:
    """Non-abelian G with fewer than 6 centralizers: every subgroup with
    the same count is isoclinic with G, and G/Z(G) is one of C2xC2, S3,
    C3xC3."""
    n = subgroup_cent_count(G, G.full_mask())
    if n == 1 or n >= 6:
        return []
    verdicts = []
    q = quotient(G, center(G))
    listed = any(
        is_isomorphic(q.group, ref) for _, ref in _reference_small_quotients()
    )
    verdicts.append(
        LemmaVerdict("small_n:quotient_listed", True, (("quotient_listed", listed),))
    )
    for H in all_subgroups(G, cap):
        if subgroup_cent_count(G, H) != n:
            continue
        witness = isoclinic(H.as_group(), G)
        verdicts.append(
            LemmaVerdict(
                "small_n:isoclinic", True, (("isoclinic_with_G", bool(witness)),)
            )
        )
    return verdicts


def is_simple_table(T: TableGroup, cap: int = 400) -> bool:
    """Simplicity by normal-subgroup scan over the subgroup lattice of the
    regular representation."""
    if T.size == 1:
        return False
    G = T.regular_representation()
    for H in all_subgroups(G, cap):
        if H.order in (1, G.order):
            continue
        if _is_normal(G, H):
            return False
    return True


def _is_normal(G: PermGroup, N: SubgroupMask) -> bool:
    try:
        _require_normal(G, N)
    except ValueError:
        return False
    return True


@dataclass(frozen=True)
class GZSimpleVerdict:
    hypothesis_met: bool
    derived_stable: bool | None = None          # G' = G''
    center_intersection: bool | None = None     # Z(G) n G' = Z(G')
    isoclinic_with_derived: bool | None = None

    @property
    def ok(self) -> bool:
        return self.hypothesis_met and all(
            v for v in (self.derived_stable, self.center_intersection,
                        self.isoclinic_with_derived)
        )


def check_gz_simple_proposition(
    G: PermGroup, simple_known: bool | None = None, cap: int = 400
) -> GZSimpleVerdict:
    """When G/Z(G) is simple: G' = G'', Z(G) n G' = Z(G'), and G is
    isoclinic with G'.  ``simple_known`` may supply the simplicity flag for
    constructions where the lattice scan would exceed the cap."""
    Z = center(G)
    q = quotient(G, Z)
    if simple_known is None:
        if q.group.size > cap:
            raise ValueError("simplicity test exceeds lattice cap; pass simple_known")
        simple = is_simple_table(q.group, cap)
    else:
        simple = simple_known
    if not simple:
        return GZSimpleVerdict(hypothesis_met=False)
    D = derived_subgroup(G)
    Dgrp = D.as_group()
    DD = derived_subgroup(G, D)
    derived_stable = _masks_equal(D, DD)
    ZD = _center_of_subgroup(G, D)
    inter = SubgroupMask(G, Z.bits & D.bits)
    center_intersection = _masks_equal(inter, ZD)
    witness = isoclinic(G, Dgrp)
    return GZSimpleVerdict(
        hypothesis_met=True,
        derived_stable=derived_stable,
        center_intersection=center_intersection,
        isoclinic_with_derived=bool(witness),
    )
