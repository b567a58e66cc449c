"""Derived series, nilpotency, Sylow decomposition, subgroup lattices and
the derived-length bound for nilpotent groups with n centralizers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .census import cent_census, subgroup_cent_count
from .perm import CapExceeded, PermGroup, SubgroupMask

LATTICE_CAP = 400


@dataclass(frozen=True)
class DerivedSeries:
    terms: tuple  # SubgroupMask chain G >= G' >= G'' >= ...
    solvable: bool
    derived_length: int | None  # None iff not solvable

    def __repr__(self):
        tail = self.derived_length if self.solvable else "non-solvable"
        return f"DerivedSeries(orders={[t.order for t in self.terms]}, {tail})"


@dataclass(frozen=True)
class BoundReport:
    n: int                      # |cent(G)|
    p: int                      # least prime with non-abelian Sylow subgroup
    m: int                      # number of non-abelian Sylow factors
    stated_bound: int
    proof_bound: int
    actual_derived_length: int
    excluded_prime: int         # Sylow prime left out of the stated bound's sum
    component_cent_counts: tuple  # (prime, |cent(P)|) per non-abelian factor

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "m": self.m,
            "stated_bound": self.stated_bound,
            "proof_bound": self.proof_bound,
            "actual_derived_length": self.actual_derived_length,
            "excluded_prime": self.excluded_prime,
            "component_cent_counts": list(map(list, self.component_cent_counts)),
        }


def floor_log(base: int, x: int) -> int:
    """Largest k with base^k <= x."""
    if x < 1:
        raise ValueError("floor_log needs x >= 1")
    k, power = 0, base
    while power <= x:
        k += 1
        power *= base
    return k


def subgroup_closure(G: PermGroup, seed_indices) -> SubgroupMask:
    """Subgroup generated by the given element indices, as a mask."""
    A = G.elems
    seeds = sorted(set(int(i) for i in seed_indices))
    known = {G.identity_index}
    frontier = [G.identity_index]
    while frontier:
        batch = np.asarray(frontier, dtype=np.int64)
        nxt = []
        for s in seeds:
            prods = G.indices_of(A[batch][:, A[s]])
            for p in prods.tolist():
                if p not in known:
                    known.add(p)
                    nxt.append(p)
        frontier = nxt
    return G.mask_from_indices(known)


def _commutator_indices(G: PermGroup, left: np.ndarray, right: np.ndarray) -> set:
    """All commutator element indices [a, b] = a^-1 b^-1 a b over the two
    index sets, computed in vectorized batches over b for each a."""
    A = G.elems
    inv = G.inverse_indices
    out: set[int] = set()
    B = A[right]
    invB = A[inv[right]]
    for a in left.tolist():
        ia = A[inv[a]]
        p1 = ia[invB]                      # a^-1 o b^-1, one row per b
        p2 = p1[:, A[a]]                   # (a^-1 b^-1) o a
        p3 = np.take_along_axis(p2, B, axis=1)  # ... o b
        out.update(G.indices_of(p3).tolist())
    return out


def derived_subgroup(G: PermGroup, H: SubgroupMask | None = None) -> SubgroupMask:
    """Commutator subgroup of H (of G itself when H is omitted)."""
    idx = np.arange(G.order) if H is None else H.indices()
    comms = _commutator_indices(G, idx, idx)
    return subgroup_closure(G, comms)


def derived_series(G: PermGroup) -> DerivedSeries:
    terms = [G.full_mask()]
    while True:
        nxt = derived_subgroup(G, terms[-1])
        if nxt.order == terms[-1].order:
            break
        terms.append(nxt)
    solvable = terms[-1].order == 1
    return DerivedSeries(
        terms=tuple(terms),
        solvable=solvable,
        derived_length=len(terms) - 1 if solvable else None,
    )


def is_nilpotent(G: PermGroup) -> bool:
    """Lower central series [G, gamma_k] reaches the trivial subgroup."""
    everything = np.arange(G.order)
    gamma = G.full_mask()
    while True:
        comms = _commutator_indices(G, everything, gamma.indices())
        nxt = subgroup_closure(G, comms)
        if nxt.order == gamma.order:
            return gamma.order == 1
        if nxt.order == 1:
            return True
        gamma = nxt


def sylow_components(G: PermGroup) -> list[SubgroupMask]:
    """For nilpotent G, the Sylow p-subgroups: exactly the elements of
    p-power order, one mask per prime dividing |G|."""
    if not is_nilpotent(G):
        raise ValueError("Sylow decomposition by element order needs a nilpotent group")
    orders = G.element_orders
    primes = []
    n = G.order
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    components = []
    total = 1
    for p in primes:
        bits = np.array([_is_p_power(int(o), p) for o in orders], dtype=bool)
        mask = SubgroupMask(G, bits)
        components.append(mask)
        total *= mask.order
    assert total == G.order
    return components


def _is_p_power(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1


@lru_cache(maxsize=128)
def all_subgroups(G: PermGroup, cap: int = LATTICE_CAP) -> tuple:
    """The complete subgroup lattice, as masks.

    Built bottom-up: cyclic subgroups first, then closure under join with
    a cyclic subgroup until fixpoint (every subgroup is a join of its
    cyclic subgroups, so this reaches everything).
    """
    if G.order > cap:
        raise CapExceeded(f"lattice cap {cap} exceeded by order {G.order}")
    cyclics = []
    seen = {}
    for i in range(G.order):
        mask = subgroup_closure(G, [i])
        key = mask.key()
        if key not in seen:
            seen[key] = mask
            cyclics.append(mask)
    subgroups = dict(seen)
    frontier = list(subgroups.values())
    while frontier:
        nxt = []
        for H in frontier:
            h_idx = H.indices()
            for C in cyclics:
                if bool(np.all(H.bits | ~C.bits)):  # C <= H, join is H
                    continue
                join = subgroup_closure(G, np.concatenate([h_idx, C.indices()]))
                key = join.key()
                if key not in subgroups:
                    subgroups[key] = join
                    nxt.append(join)
        frontier = nxt
    out = sorted(subgroups.values(), key=lambda m: (m.order, tuple(m.indices())))
    return tuple(out)


def maximal_subgroups(G: PermGroup, cap: int = LATTICE_CAP) -> tuple:
    subs = all_subgroups(G, cap)
    proper = [H for H in subs if H.order < G.order]
    out = []
    for H in proper:
        contained = any(
            K.order > H.order and bool(np.all(K.bits | ~H.bits)) for K in proper
        )
        if not contained:
            out.append(H)
    return tuple(out)


def derived_length_bound(G: PermGroup) -> BoundReport:
    """Both derived-length bounds for a non-abelian nilpotent group: the
    stated bound 2 + floor(log_p n) - sum over all but one non-abelian
    Sylow prime of floor(log_p(p_i + 1)), and the proof-internal bound
    max_j floor(log_{p_j}(|cent(P_j)| - 1)) + 2.  The component excluded
    from the sum is the one attaining the proof bound's maximum."""
    report = cent_census(G)
    if report.is_abelian:
        raise ValueError("bound applies to non-abelian groups")
    components = sylow_components(G)  # raises when G is not nilpotent
    M = G.commuting_matrix
    nonabelian = []
    for comp in components:
        idx = comp.indices()
        if not bool(M[np.ix_(idx, idx)].all()):
            prime = _component_prime(G, comp)
            nonabelian.append((prime, comp))
    nonabelian.sort(key=lambda t: t[0])
    n = report.cent_count
    p = nonabelian[0][0]
    m = len(nonabelian)

    proof_terms = []
    cent_counts = []
    for prime, comp in nonabelian:
        c = subgroup_cent_count(G, comp)
        cent_counts.append((prime, c))
        proof_terms.append(floor_log(prime, c - 1) + 2)
    best = max(range(m), key=lambda j: (proof_terms[j], -j))
    proof_bound = proof_terms[best]
    excluded_prime = nonabelian[best][0]
    stated = 2 + floor_log(p, n)
    for j, (prime, _) in enumerate(nonabelian):
        if j != best:
            stated -= floor_log(p, prime + 1)

    series = derived_series(G)
    return BoundReport(
        n=n,
        p=p,
        m=m,
        stated_bound=stated,
        proof_bound=proof_bound,
        actual_derived_length=series.derived_length,
        excluded_prime=excluded_prime,
        component_cent_counts=tuple(cent_counts),
    )


def _component_prime(G: PermGroup, comp: SubgroupMask) -> int:
    order = comp.order
    d = 2
    while order % d != 0:
        d += 1
    return d
