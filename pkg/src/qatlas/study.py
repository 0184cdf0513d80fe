"""The quadric S = sum_{i<j} x_i x_j on PG(7,2) and its enneads.

Points are ints 1..255, bit ``i-1`` holding ``x_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial

import numpy as np

from .closure import bfs_closure, unpack

NPTS = 255
POINTS = range(1, 256)
ALL_ONES = 0xFF
STANDARD_ENNEAD = tuple(sorted([1 << i for i in range(8)] + [ALL_ONES]))
S9_ORDER = factorial(9)


class StudyError(ValueError):
    pass


def weight(x: int) -> int:
    return bin(x).count("1")


def quadric_value_direct(x: int) -> int:
    bits = [(x >> i) & 1 for i in range(8)]
    return sum(bits[i] * bits[j] for i in range(8) for j in range(i + 1, 8)) & 1


def quadric_value(x: int) -> int:
    # number of monomials x_i x_j equal to 1 is C(weight, 2)
    return comb(weight(x), 2) & 1


def polar(p: int, q: int) -> int:
    if p == q:
        raise StudyError("polar form is only defined on distinct points")
    return quadric_value(p ^ q) ^ quadric_value(p) ^ quadric_value(q)


QUADRIC = tuple(p for p in POINTS if quadric_value(p) == 0)
OFF_QUADRIC = tuple(p for p in POINTS if quadric_value(p) == 1)


def lines_through(p: int) -> list[tuple[int, int, int]]:
    return [tuple(sorted((p, q, p ^ q))) for q in POINTS if q != p and q < p ^ q]


@dataclass(frozen=True)
class LineCensus:
    point: int
    n0: int
    n1: int
    n2: int


def classify_lines_through(p: int) -> LineCensus:
    if quadric_value(p) == 0:
        raise StudyError(f"point {p} lies on the quadric")
    counts = [0, 0, 0]
    for line in lines_through(p):
        counts[sum(1 for x in line if quadric_value(x) == 0)] += 1
    return LineCensus(p, *counts)


# --- enneads -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _adjacency() -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Non-conjugacy graph on the quadric points as bitmasks over their indices."""
    n = len(QUADRIC)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if polar(QUADRIC[i], QUADRIC[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return QUADRIC, tuple(adj)


def graph_degrees() -> list[int]:
    return [bin(a).count("1") for a in _adjacency()[1]]


def _cliques(adj, size: int):
    """Cliques of exactly ``size`` vertices, each emitted once in index order."""
    out = []

    def grow(clique, cand):
        if len(clique) == size:
            out.append(tuple(clique))
            return
        need = size - len(clique)
        while cand and bin(cand).count("1") >= need:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            clique.append(v)
            grow(clique, cand & adj[v])
            clique.pop()

    grow([], (1 << len(adj)) - 1)
    return out


@lru_cache(maxsize=None)
def _enneads() -> tuple[tuple[int, ...], ...]:
    pts, adj = _adjacency()
    found = [tuple(sorted(pts[i] for i in c)) for c in _cliques(adj, 9)]
    return tuple(sorted(found))


def enneads() -> list[tuple[int, ...]]:
    return list(_enneads())


def is_ennead(points) -> bool:
    pts = list(points)
    return (
        len(set(pts)) == 9
        and all(quadric_value(p) == 0 for p in pts)
        and all(polar(a, b) == 1 for i, a in enumerate(pts) for b in pts[i + 1 :])
        and all(quadric_value(a ^ b) == 1 for i, a in enumerate(pts) for b in pts[i + 1 :])
    )


def is_maximal_clique(points) -> bool:
    pts = set(points)
    return not any(all(polar(x, p) for p in pts) for x in QUADRIC if x not in pts)


# --- coordinate group ------------------------------------------------------------


def _linear_table(columns) -> np.ndarray:
    out = np.zeros(256, dtype=np.uint64)
    for v in range(1, 256):
        low = v & -v
        out[v] = int(out[v ^ low]) ^ columns[low.bit_length() - 1]
    return out


def s9_generators() -> list[tuple[int, ...]]:
    """Adjacent coordinate swaps plus e8 -> e1+...+e8 (fixing e1..e7), as column tuples."""
    gens = []
    for i in range(7):
        cols = [1 << j for j in range(8)]
        cols[i], cols[i + 1] = cols[i + 1], cols[i]
        gens.append(tuple(cols))
    gens.append(tuple([1 << j for j in range(7)] + [ALL_ONES]))
    return gens


def preserves_quadric(columns) -> bool:
    """A linear map preserves S iff S vanishes on the images of the basis and
    the polar form on image pairs matches (polar(e_i, e_j) = 1)."""
    cols = list(columns)
    return all(quadric_value(c) == 0 for c in cols) and all(
        quadric_value(a ^ b) ^ quadric_value(a) ^ quadric_value(b) == 1
        for i, a in enumerate(cols)
        for b in cols[i + 1 :]
    )


class CoordinateGroup:
    def __init__(self, elements: np.ndarray, levels: list[int]):
        self.elements = elements
        self.levels = levels

    @property
    def order(self) -> int:
        return len(self.elements)

    def columns(self, i: int) -> tuple[int, ...]:
        return unpack(int(self.elements[i]), 8, 8)

    def apply(self, i: int, x: int) -> int:
        out = 0
        for j, c in enumerate(self.columns(i)):
            if x >> j & 1:
                out ^= c
        return out

    def column_array(self) -> np.ndarray:
        return np.stack(
            [((self.elements >> np.uint64(8 * j)) & np.uint64(255)).astype(np.int64) for j in range(8)],
            axis=1,
        )

    def all_preserve_quadric(self) -> bool:
        cols = self.column_array()
        s = np.array([quadric_value(x) for x in range(256)], dtype=np.int64)
        if s[cols].any():
            return False
        for i in range(8):
            for j in range(i + 1, 8):
                if not s[cols[:, i] ^ cols[:, j]].all():
                    return False
        return True

    def induced_permutations(self) -> np.ndarray:
        """Row g: images of P1..P9 as indices 0..8; -1 if a point leaves the set."""
        cols = self.column_array()
        nine = np.concatenate([cols, np.bitwise_xor.reduce(cols, axis=1)[:, None]], axis=1)
        index = np.full(256, -1, dtype=np.int64)
        for k in range(8):
            index[1 << k] = k
        index[ALL_ONES] = 8
        return index[nine]


@lru_cache(maxsize=1)
def s9_linear_group(budget: int = 2 * S9_ORDER) -> CoordinateGroup:
    gens = s9_generators()
    for g in gens:
        tab = _linear_table(g)
        if any(quadric_value(int(tab[x])) != quadric_value(x) for x in range(256)):
            raise AssertionError(f"generator {g} does not preserve S")
    elements, levels = bfs_closure([_linear_table(g) for g in gens], 8, 8, budget)
    grp = CoordinateGroup(elements, levels)
    if not grp.all_preserve_quadric():
        raise AssertionError("closure contains an element not preserving S")
    return grp


def distinct_permutation_count(perms: np.ndarray) -> int:
    if (perms < 0).any():
        return -1
    codes = np.zeros(len(perms), dtype=np.int64)
    for k in range(perms.shape[1]):
        codes = codes * 9 + perms[:, k]
    return len(np.unique(codes))


# --- PGammaL(2,8) ----------------------------------------------------------------

# GF(8) = F_2[a]/(a^3 + a + 1), elements as 3-bit ints
_MOD = 0b1011


def gf8_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & 0b1000:
            a ^= _MOD
    return out


def gf8_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(8)")
    return next(b for b in range(1, 8) if gf8_mul(a, b) == 1)


def gf8_frobenius(a: int, k: int) -> int:
    for _ in range(k):
        a = gf8_mul(a, a)
    return a


INFINITY = 8  # label of the point at infinity; field elements are 0..7


def _mobius(a, b, c, d, x):
    if x == INFINITY:
        return INFINITY if c == 0 else gf8_mul(a, gf8_inv(c))
    num = gf8_mul(a, x) ^ b
    den = gf8_mul(c, x) ^ d
    return INFINITY if den == 0 else gf8_mul(num, gf8_inv(den))


@lru_cache(maxsize=1)
def pgammal_2_8() -> frozenset[tuple[int, ...]]:
    """All semilinear fractional maps of the projective line over GF(8), as permutations of 0..8."""
    perms = set()
    for a, b, c, d in product(range(8), repeat=4):
        if gf8_mul(a, d) ^ gf8_mul(b, c) == 0:
            continue
        for k in range(3):
            perms.add(
                tuple(
                    _mobius(a, b, c, d, x if x == INFINITY else gf8_frobenius(x, k))
                    for x in range(9)
                )
            )
    return frozenset(perms)


def transitivity_degree(perms, n: int = 9) -> int:
    """Largest k such that the group is transitive on ordered k-tuples of distinct labels."""
    perms = list(perms)
    k = 0
    while k < n:
        start = tuple(range(k + 1))
        orbit = {tuple(p[i] for i in start) for p in perms}
        total = factorial(n) // factorial(n - k - 1)
        if len(orbit) != total:
            break
        k += 1
    return k


def ennead_labels(ennead=STANDARD_ENNEAD) -> dict[int, int]:
    """Projective-line label of each ennead point: ascending code order to 0..8."""
    return {p: i for i, p in enumerate(sorted(ennead))}
