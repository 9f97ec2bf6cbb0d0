"""Finite fields GF(q) and the point-line incidence graph of PG(2, q).

Field elements are the integers ``0..q-1``; element ``a`` stands for the
polynomial whose base-``p`` digits (least significant first) are its
coefficients. Extension fields reduce modulo a fixed irreducible polynomial
per order, so every table is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import NotPrimePower, UnsupportedOrder
from .graph import Graph

MAX_ORDER = 32

# Monic irreducible moduli, coefficients low degree first (Conway polynomials).
MODULI = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (2, 2, 1),  # x^2 + 2x + 2
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 4, 1),  # x^2 + 4x + 2
    27: (1, 2, 0, 1),  # x^3 + 2x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
}


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrimePower(f"{q} has at least two distinct prime factors")
    return p, k


def supported_orders() -> list[int]:
    out = []
    for q in range(2, MAX_ORDER + 1):
        try:
            prime_power(q)
        except NotPrimePower:
            continue
        out.append(q)
    return out


@dataclass(frozen=True, eq=False)
class FiniteField:
    q: int
    p: int
    k: int
    modulus: tuple[int, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @property
    def elements(self) -> range:
        return range(self.q)

    def neg(self, a: int) -> int:
        return self.add[a].index(0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.mul[a].index(1)

    def __repr__(self):
        return f"GF({self.q})"


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _number(digits, p: int) -> int:
    return sum(d * p ** i for i, d in enumerate(digits))


def _poly_mulmod(a, b, modulus, p):
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for i, m in enumerate(modulus):
                prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
    return prod[:k]


@lru_cache(maxsize=None)
def make_field(q: int) -> FiniteField:
    """GF(q) with full addition and multiplication tables."""
    if q < 2:
        raise ValueError("field order must be at least 2")
    p, k = prime_power(q)
    if q > MAX_ORDER:
        raise UnsupportedOrder(f"orders above {MAX_ORDER} are not tabulated")
    modulus = MODULI.get(q, (0, 1))
    digits = [_digits(a, p, k) for a in range(q)]
    add = tuple(
        tuple(_number([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
        for a in range(q)
    )
    if k == 1:
        mul = tuple(tuple(a * b % p for b in range(q)) for a in range(q))
    else:
        mul = tuple(
            tuple(_number(_poly_mulmod(digits[a], digits[b], modulus, p), p) for b in range(q))
            for a in range(q)
        )
    return FiniteField(q, p, k, modulus, add, mul)


def normalize(field: FiniteField, triple) -> tuple[int, int, int]:
    """Scale a nonzero triple so that its first nonzero entry is 1."""
    lead = next((x for x in triple if x), None)
    if lead is None:
        raise ValueError("(0, 0, 0) is not a projective point")
    s = field.inv(lead)
    return tuple(field.mul[s][x] for x in triple)


def projective_points(field: FiniteField) -> list[tuple[int, int, int]]:
    """The q^2+q+1 normalised triples, in lexicographic order."""
    return [t for t in product(field.elements, repeat=3) if any(t) and t[next(i for i in range(3) if t[i])] == 1]


@lru_cache(maxsize=None)
def incidence_graph(q: int) -> Graph:
    """Point-line incidence graph of PG(2, q).

    Points take ids ``0..N-1`` and lines ``N..2N-1`` (``N = q^2+q+1``), both in
    canonical order. Point ``(a,b,c)`` lies on line ``(d,e,f)`` iff
    ``ad + be + cf = 0``.
    """
    F = make_field(q)
    pts = projective_points(F)
    N = len(pts)
    add, mul = F.add, F.mul
    edges = []
    for i, (a, b, c) in enumerate(pts):
        for j, (d, e, f) in enumerate(pts):
            if add[add[mul[a][d]][mul[b][e]]][mul[c][f]] == 0:
                edges.append((i, N + j))
    return Graph(2 * N, edges, parts=["X"] * N + ["Y"] * N)
