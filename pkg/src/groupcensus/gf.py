"""Exact arithmetic in GF(p^m).

Elements are tuples of m residues mod p, low-degree coefficient first,
always fully reduced.  Fields are capped at 2^20 elements; everything in
scope fits in GF(81).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

SIZE_CAP = 1 << 20

FieldElement = tuple  # length-m tuple of ints in [0, p)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomial helpers over GF(p); coefficient lists, low degree first --

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _poly_mod(f, g, p):
    # g monic
    f = list(f)
    dg = len(g) - 1
    while len(f) > dg:
        c = f[-1]
        if c:
            shift = len(f) - 1 - dg
            for i in range(dg):
                f[shift + i] = (f[shift + i] - c * g[i]) % p
        f.pop()
    return _trim(f)


def _poly_powmod(f, e, g, p):
    result = [1]
    base = _poly_mod(f, g, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), g, p)
        base = _poly_mod(_poly_mul(base, base, p), g, p)
        e >>= 1
    return result


def _poly_gcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        lead = g[-1]
        inv = pow(lead, p - 2, p) if lead != 1 else 1
        monic = [(c * inv) % p for c in g]
        f, g = g, _poly_mod(f, monic, p)
    return f


def _is_irreducible(f, p):
    """Rabin test: f of degree m is irreducible over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    x = [0, 1]
    # x^(p^m) == x mod f
    if _poly_powmod(x, p ** m, f, p) != _poly_mod(x, f, p):
        return False
    for ell in range(2, m + 1):
        if m % ell == 0 and is_prime(ell):
            power = _poly_powmod(x, p ** (m // ell), f, p)
            diff = list(power) + [0] * (2 - len(power))
            diff[1] = (diff[1] - 1) % p
            diff = _trim(diff)
            if len(_poly_gcd(f, diff, p)) - 1 != 0:
                return False
    return True


def _least_irreducible(p: int, m: int):
    """Lexicographically least monic irreducible of degree m over GF(p),
    comparing coefficient vectors low-degree-first."""
    for code in range(p ** m):
        coeffs = []
        c = code
        for _ in range(m):
            coeffs.append(c % p)
            c //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(p^m) with a fixed canonical modulus.

    Immutable; element tuples are canonical, so equality and hashing are
    structural.
    """

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if p ** m > SIZE_CAP:
            raise ValueError(f"field size {p}^{m} exceeds cap {SIZE_CAP}")
        self.p = p
        self.m = m
        self.order = p ** m
        if m == 1:
            self.modulus = (0, 1)  # formal x; arithmetic is plain mod p
        else:
            self.modulus = _least_irreducible(p, m)
        self.zero = (0,) * m
        self.one = (1,) + (0,) * (m - 1)

    def __repr__(self):
        return f"Field(p={self.p}, m={self.m}, modulus={self.modulus})"

    # -- element encoding ------------------------------------------------

    def element(self, index: int) -> FieldElement:
        """Element with canonical index sum(c_i * p^i)."""
        if not 0 <= index < self.order:
            raise ValueError(f"element index {index} out of range")
        coeffs = []
        for _ in range(self.m):
            coeffs.append(index % self.p)
            index //= self.p
        return tuple(coeffs)

    def index(self, a: FieldElement) -> int:
        self._check(a)
        idx = 0
        for c in reversed(a):
            idx = idx * self.p + c
        return idx

    def elements(self):
        return [self.element(i) for i in range(self.order)]

    def _check(self, a):
        if len(a) != self.m:
            raise ValueError(f"element length {len(a)} != degree {self.m}")
        if any(not 0 <= c < self.p for c in a):
            raise ValueError(f"coefficients out of range: {a}")

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b) -> FieldElement:
        self._check(a)
        self._check(b)
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a) -> FieldElement:
        self._check(a)
        return tuple((-x) % self.p for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b) -> FieldElement:
        self._check(a)
        self._check(b)
        prod = _poly_mul(list(a), list(b), self.p)
        prod = _poly_mod(prod, list(self.modulus), self.p)
        return tuple(prod) + (0,) * (self.m - len(prod))

    def inv(self, a) -> FieldElement:
        self._check(a)
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero field element")
        # a^(q-2) = a^(-1); extended Euclid would do equally, power is simpler
        return self.pow(a, self.order - 2)

    def pow(self, a, e: int) -> FieldElement:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a) -> FieldElement:
        """The involution x -> x^(p^(m/2)); requires even extension degree."""
        if self.m % 2 != 0:
            raise ValueError("frobenius conjugation needs even extension degree")
        return self.pow(a, self.p ** (self.m // 2))

    # -- index-level operation tables (used by matrix-group scans) -------

    @property
    def add_table(self) -> np.ndarray:
        return self._tables()[0]

    @property
    def mul_table(self) -> np.ndarray:
        return self._tables()[1]

    @property
    def neg_table(self) -> np.ndarray:
        return self._tables()[2]

    @property
    def frob_table(self) -> np.ndarray:
        return self._tables()[3]

    def _tables(self):
        if not hasattr(self, "_cached_tables"):
            n = self.order
            elems = self.elements()
            add = np.zeros((n, n), dtype=np.int64)
            mul = np.zeros((n, n), dtype=np.int64)
            for i, a in enumerate(elems):
                for j, b in enumerate(elems):
                    add[i, j] = self.index(self.add(a, b))
                    mul[i, j] = self.index(self.mul(a, b))
            neg = np.array([self.index(self.neg(a)) for a in elems], dtype=np.int64)
            if self.m % 2 == 0:
                frob = np.array(
                    [self.index(self.frobenius(a)) for a in elems], dtype=np.int64
                )
            else:
                frob = None
            self._cached_tables = (add, mul, neg, frob)
        return self._cached_tables


@lru_cache(maxsize=None)
def field(p: int, m: int = 1) -> Field:
    """Cached constructor; Field is immutable so sharing is safe."""
    return Field(p, m)
