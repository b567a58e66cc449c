"""Permutation arithmetic, exhaustive group enumeration and index tables.

Every group is stored fully enumerated: a (order, degree) integer array of
image vectors in lexicographic order.  Downstream code works with element
indices into that array; permutation arrays only appear at module
boundaries.  All objects here are immutable after construction.
"""

from __future__ import annotations

from functools import cached_property
from math import lcm

import numpy as np

GROUP_ORDER_CAP = 10 ** 5
TABLE_CAP = 10 ** 4


class CapExceeded(Exception):
    """An enumeration outgrew its configured cap.

    For group closure, ``partial`` carries the element count reached when
    the cap tripped.
    """

    def __init__(self, message: str, partial: int | None = None):
        super().__init__(message)
        self.partial = partial


def identity_perm(degree: int) -> np.ndarray:
    return np.arange(degree, dtype=np.int32)


def perm_from_images(images) -> np.ndarray:
    arr = np.asarray(images, dtype=np.int32)
    check_perm(arr)
    return arr


def perm_from_cycles(degree: int, cycles) -> np.ndarray:
    arr = identity_perm(degree)
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            arr[a] = b
    check_perm(arr)
    return arr


def check_perm(arr: np.ndarray) -> None:
    if arr.ndim != 1:
        raise ValueError("permutation must be a 1-D image vector")
    n = arr.shape[0]
    if not np.array_equal(np.sort(arr), np.arange(n)):
        raise ValueError("image vector is not a bijection")


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(a o b)(i) = a(b(i))."""
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"degree mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a[b]


def invert(a: np.ndarray) -> np.ndarray:
    inv = np.empty_like(a)
    inv[a] = np.arange(a.shape[0], dtype=a.dtype)
    return inv


def perm_order(a: np.ndarray) -> int:
    """Order of a permutation via its cycle type."""
    n = a.shape[0]
    seen = np.zeros(n, dtype=bool)
    result = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        result = lcm(result, length)
    return result


def _lex_sort(elems: np.ndarray) -> np.ndarray:
    order = np.lexsort(elems.T[::-1])
    return np.ascontiguousarray(elems[order])


class PermGroup:
    """Fully enumerated permutation group.

    ``elems`` is the complete element list, lexicographically sorted by
    image vector; ``index`` maps an image vector (as bytes) back to its
    position.  Construct via :func:`close` or :func:`from_elements`.
    """

    def __init__(self, degree: int, generators: list[np.ndarray], elems: np.ndarray):
        self.degree = degree
        self.generators = [np.asarray(g, dtype=np.int32) for g in generators]
        self.elems = np.ascontiguousarray(elems, dtype=np.int32)

    @property
    def order(self) -> int:
        return self.elems.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    @cached_property
    def index(self) -> dict:
        return {row.tobytes(): i for i, row in enumerate(self.elems)}

    @cached_property
    def identity_index(self) -> int:
        return self.index[identity_perm(self.degree).tobytes()]

    def perm(self, i: int) -> np.ndarray:
        return self.elems[i]

    def index_of(self, perm: np.ndarray) -> int:
        key = np.ascontiguousarray(perm, dtype=np.int32).tobytes()
        try:
            return self.index[key]
        except KeyError:
            raise KeyError("permutation is not an element of this group") from None

    def indices_of(self, perms: np.ndarray) -> np.ndarray:
        """Index lookup for a (k, degree) batch of image vectors."""
        perms = np.ascontiguousarray(perms, dtype=np.int32)
        idx = self.index
        return np.fromiter(
            (idx[row.tobytes()] for row in perms), dtype=np.int64, count=len(perms)
        )

    def compose_indices(self, i: int, j: int) -> int:
        return self.index_of(compose(self.elems[i], self.elems[j]))

    def inverse_index(self, i: int) -> int:
        return self.index_of(invert(self.elems[i]))

    @cached_property
    def inverse_indices(self) -> np.ndarray:
        inv = np.empty((self.order, self.degree), dtype=np.int32)
        rng = np.arange(self.degree, dtype=np.int32)
        for i in range(self.order):
            inv[i, self.elems[i]] = rng
        return self.indices_of(inv)

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([perm_order(g) for g in self.elems], dtype=np.int64)

    @cached_property
    def commuting_matrix(self) -> np.ndarray:
        """Boolean (order, order) matrix; entry (i, j) iff elements commute.

        Row i is computed as one vectorized pass: g o h for all h is the
        gather g[elems], h o g for all h is the gather elems[:, g].
        Memory is order^2 bytes, accepted for speed.
        """
        A = self.elems
        n = self.order
        out = np.empty((n, n), dtype=bool)
        for i in range(n):
            g = A[i]
            np.all(g[A] == A[:, g], axis=1, out=out[i])
        return out

    def full_mask(self) -> "SubgroupMask":
        return SubgroupMask(self, np.ones(self.order, dtype=bool))

    def mask_from_indices(self, indices) -> "SubgroupMask":
        bits = np.zeros(self.order, dtype=bool)
        bits[np.asarray(list(indices), dtype=np.int64)] = True
        return SubgroupMask(self, bits)


def close(degree: int, gens: list[np.ndarray], cap: int = GROUP_ORDER_CAP) -> PermGroup:
    """Breadth-first closure of the generators under composition.

    Deterministic: the resulting element list depends only on the generated
    set, never on generator order.
    """
    if not gens:
        raise ValueError("generator list must be nonempty")
    gens = [np.asarray(g, dtype=np.int32) for g in gens]
    for g in gens:
        if g.shape[0] != degree:
            raise ValueError("generator degree mismatch")
        check_perm(g)
    ident = identity_perm(degree)
    seen = {ident.tobytes(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                key = y.tobytes()
                if key not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(
                            f"group closure exceeded cap {cap}", partial=len(seen)
                        )
                    seen[key] = y
                    nxt.append(y)
        frontier = nxt
    elems = _lex_sort(np.stack(list(seen.values())))
    return PermGroup(degree, gens, elems)


def from_elements(degree: int, elems: np.ndarray, generators=None) -> PermGroup:
    """Group from an explicit closed element array (sorted on entry here)."""
    elems = _lex_sort(np.asarray(elems, dtype=np.int32))
    group = PermGroup(degree, list(generators) if generators else [elems[i] for i in range(len(elems))], elems)
    return group


def commutes(G: PermGroup, i: int, j: int) -> bool:
    if not (0 <= i < G.order and 0 <= j < G.order):
        raise IndexError("element index out of range")
    a, b = G.elems[i], G.elems[j]
    return bool(np.array_equal(a[b], b[a]))


class SubgroupMask:
    """Membership bitmask over a parent group's element indices."""

    def __init__(self, parent: PermGroup, bits: np.ndarray):
        self.parent = parent
        self.bits = np.asarray(bits, dtype=bool)
        if self.bits.shape != (parent.order,):
            raise ValueError("mask length must equal parent order")

    @property
    def order(self) -> int:
        return int(self.bits.sum())

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.bits)

    def key(self) -> bytes:
        return np.packbits(self.bits).tobytes()

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupMask)
            and self.parent is other.parent
            and np.array_equal(self.bits, other.bits)
        )

    def __hash__(self):
        return hash((id(self.parent), self.key()))

    def __repr__(self):
        return f"SubgroupMask(order={self.order} of {self.parent.order})"

    def is_closed(self) -> bool:
        """Contains the identity and is closed under products."""
        idx = self.indices()
        if self.parent.identity_index not in idx:
            return False
        A = self.parent.elems
        members = set(idx.tolist())
        for i in idx:
            prods = self.parent.indices_of(A[i][A[idx]])
            if any(p not in members for p in prods.tolist()):
                return False
        return True

    def as_group(self) -> PermGroup:
        """The marked set as a standalone fully enumerated group."""
        idx = self.indices()
        elems = self.parent.elems[idx]
        return PermGroup(self.parent.degree, [self.parent.elems[i] for i in idx], np.ascontiguousarray(elems))


class TableGroup:
    """Abstract group given by an explicit multiplication table on indices.

    For table groups derived from a large permutation group the table is
    built lazily; size and element orders are always available, so cheap
    non-isomorphism certificates never force the k^2 table.
    """

    def __init__(self, size: int, identity: int, table=None, builder=None, orders=None):
        if (table is None) == (builder is None):
            raise ValueError("exactly one of table/builder required")
        self.size = size
        self.identity = identity
        self._table = None if table is None else np.asarray(table, dtype=np.int64)
        self._builder = builder
        self._orders = None if orders is None else np.asarray(orders, dtype=np.int64)

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            self._table = np.asarray(self._builder(), dtype=np.int64)
            self._builder = None
        return self._table

    @property
    def orders(self) -> np.ndarray:
        if self._orders is None:
            T = self.table
            out = np.empty(self.size, dtype=np.int64)
            for i in range(self.size):
                k, x = 1, i
                while x != self.identity:
                    x = T[x, i]
                    k += 1
                out[i] = k
            self._orders = out
        return self._orders

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inverse(self, i: int) -> int:
        return int(np.flatnonzero(self.table[i] == self.identity)[0])

    def is_latin_square(self) -> bool:
        T = self.table
        full = np.arange(self.size)
        return all(
            np.array_equal(np.sort(T[i]), full) and np.array_equal(np.sort(T[:, i]), full)
            for i in range(self.size)
        )

    def regular_representation(self) -> PermGroup:
        """Left regular action; row i of the table is the permutation of i."""
        elems = np.asarray(self.table, dtype=np.int32)
        return from_elements(self.size, elems)

    def __repr__(self):
        return f"TableGroup(size={self.size})"


def multiplication_table(G: PermGroup, cap: int = TABLE_CAP) -> TableGroup:
    if G.order > cap:
        raise CapExceeded(f"table cap {cap} exceeded by order {G.order}")
    A = G.elems

    def build():
        table = np.empty((G.order, G.order), dtype=np.int64)
        for i in range(G.order):
            table[i] = G.indices_of(A[i][A])
        return table

    return TableGroup(
        G.order,
        G.identity_index,
        builder=build,
        orders=G.element_orders,
    )


def table_from_mask(H: SubgroupMask) -> TableGroup:
    """Standalone multiplication table of a subgroup, indices relabelled 0..k-1."""
    idx = H.indices()
    pos = {int(v): i for i, v in enumerate(idx)}
    parent = H.parent
    A = parent.elems
    k = len(idx)
    table = np.empty((k, k), dtype=np.int64)
    for a, i in enumerate(idx):
        prods = parent.indices_of(A[i][A[idx]])
        table[a] = [pos[int(p)] for p in prods]
    return TableGroup(
        k,
        pos[parent.identity_index],
        table=table,
        orders=parent.element_orders[idx],
    )
