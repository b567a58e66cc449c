"""Centralizer censuses: cent(G), nacent(G), the center, relative censuses
cent_G(H), and the closed-form nacent counts for PSL(2, q)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constructors import _prime_power
from .perm import CapExceeded, PermGroup, SubgroupMask

CENSUS_CAP = 10 ** 4


@dataclass(frozen=True)
class CensusReport:
    order: int
    center_size: int
    cent_count: int
    nacent_count: int
    abelian_cent_count: int
    is_ac: bool
    is_abelian: bool
    # sorted (centralizer size, multiplicity) pairs over distinct centralizers
    centralizer_size_multiset: tuple

    def as_record(self) -> dict:
        return {
            "order": self.order,
            "center_size": self.center_size,
            "cent_count": self.cent_count,
            "nacent_count": self.nacent_count,
            "abelian_cent_count": self.abelian_cent_count,
            "is_ac": self.is_ac,
            "is_abelian": self.is_abelian,
            "centralizer_size_multiset": list(map(list, self.centralizer_size_multiset)),
        }


@dataclass(frozen=True)
class RelativeCensus:
    cent_H: int
    cent_G_H: int
    cent_G: int

    @property
    def chain_holds(self) -> bool:
        return self.cent_H <= self.cent_G_H <= self.cent_G


def centralizer(G: PermGroup, i: int) -> SubgroupMask:
    """C_G(x) for x = elements[i]: everything commuting with x."""
    if not 0 <= i < G.order:
        raise IndexError(f"element index {i} out of range")
    return SubgroupMask(G, G.commuting_matrix[i].copy())


def center(G: PermGroup) -> SubgroupMask:
    return SubgroupMask(G, G.commuting_matrix.all(axis=1))


def distinct_centralizer_rows(G: PermGroup) -> list[np.ndarray]:
    """Distinct centralizer masks, ordered by least element whose
    centralizer they are (deterministic)."""
    M = G.commuting_matrix
    seen = {}
    out = []
    for i in range(G.order):
        key = M[i].tobytes()
        if key not in seen:
            seen[key] = True
            out.append(M[i])
    return out


def _mask_is_abelian(M: np.ndarray, row: np.ndarray) -> bool:
    idx = np.flatnonzero(row)
    return bool(M[np.ix_(idx, idx)].all())


@lru_cache(maxsize=64)
def cent_census(G: PermGroup, cap: int = CENSUS_CAP) -> CensusReport:
    if G.order > cap:
        raise CapExceeded(f"census cap {cap} exceeded by order {G.order}")
    M = G.commuting_matrix
    rows = distinct_centralizer_rows(G)
    nacent = 0
    sizes = []
    for row in rows:
        sizes.append(int(row.sum()))
        if not _mask_is_abelian(M, row):
            nacent += 1
    cent_count = len(rows)
    size_mult: dict[int, int] = {}
    for s in sizes:
        size_mult[s] = size_mult.get(s, 0) + 1
    multiset = tuple(sorted(size_mult.items()))
    is_abelian = cent_count == 1
    return CensusReport(
        order=G.order,
        center_size=int(M.all(axis=1).sum()),
        cent_count=cent_count,
        nacent_count=nacent,
        abelian_cent_count=cent_count - nacent,
        # abelian groups are vacuously AC; for non-abelian G the criterion
        # is a single non-abelian centralizer
        is_ac=is_abelian or nacent == 1,
        is_abelian=is_abelian,
        centralizer_size_multiset=multiset,
    )


def subgroup_cent_count(G: PermGroup, H: SubgroupMask) -> int:
    """|cent(H)| of H as a standalone group, via C_H(h) = C_G(h) n H."""
    M = G.commuting_matrix
    idx = H.indices()
    sub = M[np.ix_(idx, idx)]
    return len({sub[a].tobytes() for a in range(len(idx))})


def relative_census(G: PermGroup, H: SubgroupMask) -> RelativeCensus:
    if H.parent is not G:
        raise ValueError("mask does not belong to this group")
    if not H.is_closed():
        raise ValueError("mask is not a subgroup")
    M = G.commuting_matrix
    idx = H.indices()
    cent_g_h = len({M[i].tobytes() for i in idx.tolist()})
    cent_g = len({M[i].tobytes() for i in range(G.order)})
    return RelativeCensus(
        cent_H=subgroup_cent_count(G, H),
        cent_G_H=cent_g_h,
        cent_G=cent_g,
    )


def psl2_nacent_formula(q: int) -> int:
    """Closed-form |nacent(PSL(2, q))| for prime powers q > 5.

    q = 0 mod 4 -> 1; q = 1 mod 4 -> (q^2+q+2)/2; q = 3 mod 4 ->
    (q^2-q+2)/2.  No prime power > 2 is 2 mod 4, so that residue is
    rejected as an invalid input rather than assigned a value.
    """
    _prime_power(q)  # raises if q is not a prime power
    if q <= 5:
        raise ValueError("the closed form needs q > 5")
    r = q % 4
    if r == 0:
        return 1
    if r == 1:
        return (q * q + q + 2) // 2
    if r == 3:
        return (q * q - q + 2) // 2
    raise ValueError(f"q = {q} = 2 mod 4 is not a prime power > 2")
