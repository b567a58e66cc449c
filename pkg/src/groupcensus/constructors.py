"""Deterministic builders for every group family in scope.

Each builder returns a fully enumerated :class:`~groupcensus.perm.PermGroup`
and is cached: groups are immutable, so repeated requests share one object
(and its cached commuting matrix).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, factorial

import numpy as np

from .gf import Field, field, is_prime
from .perm import (
    CapExceeded,
    PermGroup,
    close,
    identity_perm,
    perm_from_cycles,
    perm_from_images,
)

PSL_Q_CAP = 81
PSU_SCAN_BUDGET = 1 << 22


# -- group spec AST ------------------------------------------------------

@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    n: int


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class PSL2:
    q: int


@dataclass(frozen=True)
class PSU3:
    q: int


@dataclass(frozen=True)
class Heisenberg:
    p: int


@dataclass(frozen=True)
class Dicyclic:
    # order 4n; n = 2 is the quaternion group
    n: int


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = (
    Cyclic | Dihedral | Symmetric | Alternating | PSL2 | PSU3 | Heisenberg | Dicyclic | Product
)


def build(spec: GroupSpec, cap: int | None = None) -> PermGroup:
    kwargs = {} if cap is None else {"cap": cap}
    match spec:
        case Cyclic(n):
            return cyclic(n)
        case Dihedral(n):
            return dihedral(n)
        case Symmetric(n):
            return symmetric(n, **kwargs)
        case Alternating(n):
            return alternating(n, **kwargs)
        case PSL2(q):
            return psl2(q, **kwargs)
        case PSU3(q):
            return psu3(q)
        case Heisenberg(p):
            return heisenberg(p)
        case Dicyclic(n):
            return dicyclic(n)
        case Product(left, right):
            return direct_product(build(left, cap), build(right, cap), **kwargs)
    raise TypeError(f"unknown group spec node: {spec!r}")


def spec_order(spec: GroupSpec) -> int:
    """Group order predicted from the spec alone (no construction)."""
    match spec:
        case Cyclic(n):
            return n
        case Dihedral(n):
            return 2 * n
        case Symmetric(n):
            return factorial(n)
        case Alternating(n):
            return factorial(n) // 2
        case PSL2(q):
            return q * (q * q - 1) // gcd(2, q - 1)
        case PSU3(q):
            return q ** 3 * (q * q - 1) * (q ** 3 + 1) // (q + 1) // gcd(3, q + 1)
        case Heisenberg(p):
            return p ** 3
        case Dicyclic(n):
            return 4 * n
        case Product(left, right):
            return spec_order(left) * spec_order(right)
    raise TypeError(f"unknown group spec node: {spec!r}")


# -- standard families ---------------------------------------------------

def standard_family(kind: str, n: int, cap: int | None = None) -> PermGroup:
    builders = {
        "cyclic": cyclic,
        "dihedral": dihedral,
        "symmetric": symmetric,
        "alternating": alternating,
    }
    if kind not in builders:
        raise ValueError(f"unknown family kind {kind!r}")
    if kind in ("symmetric", "alternating") and cap is not None:
        return builders[kind](n, cap=cap)
    return builders[kind](n)


@lru_cache(maxsize=None)
def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    if n == 1:
        return close(1, [identity_perm(1)])
    return close(n, [perm_from_cycles(n, [list(range(n))])])


@lru_cache(maxsize=None)
def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on the n vertices of an n-gon.

    Needs n >= 3: for n <= 2 the order-2n group has no faithful action on
    n points.
    """
    if n < 3:
        raise ValueError("dihedral group on n points needs n >= 3")
    rot = perm_from_cycles(n, [list(range(n))])
    refl = perm_from_images([(n - i) % n for i in range(n)])
    G = close(n, [rot, refl])
    assert G.order == 2 * n
    return G


@lru_cache(maxsize=None)
def symmetric(n: int, cap: int | None = None) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    if n == 1:
        return close(1, [identity_perm(1)])
    gens = [perm_from_cycles(n, [[0, 1]])]
    if n > 2:
        gens.append(perm_from_cycles(n, [list(range(n))]))
    G = close(n, gens) if cap is None else close(n, gens, cap=cap)
    assert G.order == factorial(n)
    return G


@lru_cache(maxsize=None)
def alternating(n: int, cap: int | None = None) -> PermGroup:
    if n < 3:
        raise ValueError("alternating group needs n >= 3")
    gens = [perm_from_cycles(n, [[i, i + 1, i + 2]]) for i in range(n - 2)]
    G = close(n, gens) if cap is None else close(n, gens, cap=cap)
    assert G.order == factorial(n) // 2
    return G


# -- PSL(2, q) -----------------------------------------------------------

def _prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    m = 0
    r = q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


def _mobius_perm(F: Field, a, b, c, d) -> np.ndarray:
    """Action of [[a,b],[c,d]] on GF(q) u {inf}; point i < q is the field
    element of canonical index i, point q is infinity."""
    q = F.order
    images = np.empty(q + 1, dtype=np.int32)
    for i in range(q):
        x = F.element(i)
        den = F.add(F.mul(c, x), d)
        if den == F.zero:
            images[i] = q
        else:
            num = F.add(F.mul(a, x), b)
            images[i] = F.index(F.mul(num, F.inv(den)))
    if c == F.zero:
        images[q] = q
    else:
        images[q] = F.index(F.mul(a, F.inv(c)))
    return images


@lru_cache(maxsize=None)
def psl2(q: int, cap: int | None = None) -> PermGroup:
    """PSL(2, q) acting on the q+1 points of the projective line.

    Generated by the Mobius actions of the transvections [[1,t],[0,1]] and
    [[1,0],[t,1]] with t running over the power basis 1, x, ..., x^(m-1)
    of GF(q); for prime q this is just the two elementary transvections.
    """
    if q > PSL_Q_CAP:
        raise ValueError(f"q = {q} exceeds construction cap {PSL_Q_CAP}")
    p, m = _prime_power(q)
    if q < 4:
        raise ValueError("psl2 needs q >= 4")
    F = field(p, m)
    gens = []
    for i in range(m):
        t = F.element(p ** i)  # the basis monomial x^i
        gens.append(_mobius_perm(F, F.one, t, F.zero, F.one))
        gens.append(_mobius_perm(F, F.one, F.zero, t, F.one))
    G = close(q + 1, gens) if cap is None else close(q + 1, gens, cap=cap)
    expected = q * (q * q - 1) // gcd(2, q - 1)
    if G.order != expected:
        raise AssertionError(
            f"psl2({q}) closure produced order {G.order}, expected {expected}"
        )
    return G


# -- PSU(3, q) -----------------------------------------------------------

def _hermitian_norm_index(F: Field, mul, frob, v) -> int:
    # h(v, v) with h(u, v) = u1*frob(v3) + u2*frob(v2) + u3*frob(v1)
    add = F.add_table
    s = mul[v[0], frob[v[2]]]
    s = add[s, mul[v[1], frob[v[1]]]]
    s = add[s, mul[v[2], frob[v[0]]]]
    return int(s)


def _su3_matrix_scan(F: Field, target: int):
    """Scan 3x3 matrices over GF(q^2) in lexicographic order (row-major,
    entries by canonical field index), collecting determinant-1 matrices
    preserving the anti-diagonal Hermitian form, and re-closing whenever a
    candidate enlarges the generated set; stops at the target order."""
    n = F.order
    add, mul, neg, frob = F.add_table, F.mul_table, F.neg_table, F.frob_table
    zero = 0
    one = F.index(F.one)

    def mat_mul(X, Y):
        out = []
        for i in range(3):
            for j in range(3):
                s = zero
                for k in range(3):
                    s = add[s, mul[X[3 * i + k], Y[3 * k + j]]]
                out.append(int(s))
        return tuple(out)

    gens: list[tuple] = []
    group = {tuple([one, 0, 0, 0, one, 0, 0, 0, one])}

    def extend_closure(new_gen):
        gens.append(new_gen)
        frontier = list(group)
        group.add(new_gen)
        frontier.append(new_gen)
        while frontier:
            nxt = []
            for X in frontier:
                for g in gens:
                    Y = mat_mul(X, g)
                    if Y not in group:
                        group.add(Y)
                        nxt.append(Y)
            frontier = nxt

    batch = 1 << 15
    total = n ** 9
    budget = min(total, PSU_SCAN_BUDGET)
    start = 0
    while start < budget and len(group) < target:
        stop = min(start + batch, budget)
        counters = np.arange(start, stop, dtype=np.int64)
        digits = np.empty((len(counters), 9), dtype=np.int64)
        c = counters.copy()
        for pos in range(8, -1, -1):  # row-major lex: last entry varies fastest
            digits[:, pos] = c % n
            c //= n
        a, b, cc, d, e, f, g, h, i = (digits[:, k] for k in range(9))
        det = add[
            add[mul[a, add[mul[e, i], neg[mul[f, h]]]],
                neg[mul[b, add[mul[d, i], neg[mul[f, g]]]]]],
            mul[cc, add[mul[d, h], neg[mul[e, g]]]],
        ]
        ok = det == one
        # (M^T J frob(M))_{rs} = sum_k M[k,r] * frob(M[2-k, s]) must equal J
        for r in range(3):
            for s in range(3):
                want = one if r + s == 2 else zero
                acc = np.full(len(counters), zero, dtype=np.int64)
                for k in range(3):
                    acc = add[acc, mul[digits[:, 3 * k + r],
                                       frob[digits[:, 3 * (2 - k) + s]]]]
                ok &= acc == want
                if not ok.any():
                    break
            if not ok.any():
                break
        for row in np.flatnonzero(ok):
            cand = tuple(int(x) for x in digits[row])
            if cand not in group:
                extend_closure(cand)
                if len(group) >= target:
                    break
        start = stop
    if len(group) != target:
        raise CapExceeded(
            f"unitary matrix scan reached order {len(group)} != target {target} "
            f"within budget {budget}",
            partial=len(group),
        )
    return gens


@lru_cache(maxsize=None)
def psu3(q: int) -> PermGroup:
    """PSU(3, q) acting on the q^3 + 1 isotropic points of the Hermitian
    curve in PG(2, q^2); q = 3 is the instance the censuses need."""
    if not is_prime(q) or q > 5:
        raise ValueError("psu3 supports prime q <= 5")
    p = q
    F = field(p, 2)
    n = F.order
    mul, frob = F.mul_table, F.frob_table
    su_order = q ** 3 * (q * q - 1) * (q ** 3 + 1)
    gens = _su3_matrix_scan(F, su_order)

    # isotropic projective points, first nonzero coordinate normalized to 1,
    # ordered lexicographically by index triple
    points = []
    point_pos = {}
    for v1 in range(n):
        for v2 in range(n):
            for v3 in range(n):
                v = (v1, v2, v3)
                if v == (0, 0, 0):
                    continue
                first = next(x for x in v if x != 0)
                if first != F.index(F.one):
                    continue
                if _hermitian_norm_index(F, mul, frob, v) == 0:
                    point_pos[v] = len(points)
                    points.append(v)
    expected_points = q ** 3 + 1
    if len(points) != expected_points:
        raise AssertionError(
            f"found {len(points)} isotropic points, expected {expected_points}"
        )

    add = F.add_table
    one = F.index(F.one)

    def apply(M, v):
        w = []
        for r in range(3):
            s = 0
            for k in range(3):
                s = add[s, mul[M[3 * r + k], v[k]]]
            w.append(int(s))
        first = next(x for x in w if x != 0)
        if first != one:
            inv = F.index(F.inv(F.element(first)))
            w = [int(mul[x, inv]) for x in w]
        return tuple(w)

    perm_gens = []
    for M in gens:
        images = np.array(
            [point_pos[apply(M, v)] for v in points], dtype=np.int32
        )
        perm_gens.append(images)
    G = close(expected_points, perm_gens)
    expected = su_order // gcd(3, q + 1)
    if G.order != expected:
        raise AssertionError(
            f"psu3({q}) action has order {G.order}, expected {expected}"
        )
    return G


# -- Heisenberg and dicyclic groups (right regular representations) ------

def _regular_group(elements: list, multiply, gens: list) -> PermGroup:
    """Right regular representation on the given (canonically ordered)
    element list."""
    pos = {e: i for i, e in enumerate(elements)}
    perms = []
    for g in gens:
        perms.append(
            perm_from_images([pos[multiply(e, g)] for e in elements])
        )
    G = close(len(elements), perms)
    assert G.order == len(elements)
    return G


@lru_cache(maxsize=None)
def heisenberg(p: int) -> PermGroup:
    """Upper unitriangular 3x3 matrices over GF(p), as permutations of the
    p^3 element tuples (a, b, c); non-abelian of order p^3, class 2."""
    if not is_prime(p) or p == 2 or p > 7:
        raise ValueError("heisenberg needs an odd prime p <= 7")
    elements = [
        (a, b, c) for a in range(p) for b in range(p) for c in range(p)
    ]

    def multiply(u, v):
        a, b, c = u
        d, e, f = v
        return ((a + d) % p, (b + e) % p, (c + f + a * e) % p)

    return _regular_group(elements, multiply, [(1, 0, 0), (0, 1, 0)])


@lru_cache(maxsize=None)
def dicyclic(n: int) -> PermGroup:
    """Dicyclic group of order 4n: <a, b | a^(2n) = 1, b^2 = a^n,
    b a b^-1 = a^-1>; n = 2 gives the quaternion group."""
    if n < 2:
        raise ValueError("dicyclic group needs n >= 2")
    elements = [(i, j) for i in range(2 * n) for j in range(2)]

    def multiply(u, v):
        i, j = u
        k, l = v
        if j == 0:
            i2, j2 = (i + k) % (2 * n), l
        else:
            i2, j2 = (i - k) % (2 * n), 1 + l
        if j2 == 2:
            i2, j2 = (i2 + n) % (2 * n), 0
        return (i2, j2)

    return _regular_group(elements, multiply, [(1, 0), (0, 1)])


# -- direct products -----------------------------------------------------

def direct_product(A: PermGroup, B: PermGroup, cap: int | None = None) -> PermGroup:
    """Product acting on the disjoint union of the factors' point sets."""
    degree = A.degree + B.degree
    gens = []
    for g in A.generators:
        images = np.concatenate([g, A.degree + identity_perm(B.degree)])
        gens.append(images.astype(np.int32))
    for g in B.generators:
        images = np.concatenate([identity_perm(A.degree), A.degree + g])
        gens.append(images.astype(np.int32))
    G = close(degree, gens) if cap is None else close(degree, gens, cap=cap)
    assert G.order == A.order * B.order
    return G
