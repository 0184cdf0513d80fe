"""GF(2) linear algebra on the 6-dimensional symplectic space.

Vectors are plain ints 0..63; bit ``i-1`` holds coordinate ``v_i``.  The
hyperbolic pairs are (1,4), (2,5), (3,6) and the reference even form is
``q0(v) = v1 v4 + v2 v5 + v3 v6``.

A theta characteristic is stored by its shift ``w``; as a function it is
``theta_w(v) = q0(v) + <w, v>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

DIM = 6
NVEC = 1 << DIM
VECTORS = range(NVEC)
NONZERO = range(1, NVEC)


class DimensionError(ValueError):
    pass


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def swap_halves(v: int) -> int:
    """Exchange coordinates (1,2,3) with (4,5,6)."""
    return ((v & 7) << 3) | (v >> 3)


def pairing(u: int, v: int) -> int:
    return parity(u & swap_halves(v))


def q0(v: int) -> int:
    return parity(v & (v >> 3) & 7)


def coords(v: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(DIM))


def from_coords(c) -> int:
    return sum(int(b & 1) << i for i, b in enumerate(c))


def basis(i: int) -> int:
    """The standard basis vector e_i, 1-indexed."""
    return 1 << (i - 1)


@dataclass(frozen=True, order=True)
class Theta:
    shift: int

    def __call__(self, v: int) -> int:
        return q0(v) ^ pairing(self.shift, v)

    @property
    def odd(self) -> bool:
        return arf(self) == 1


def arf(theta: Theta) -> int:
    return q0(theta.shift)


def theta_eval(theta: Theta, v: int) -> int:
    return theta(v)


def theta_translate(theta: Theta, v: int) -> Theta:
    return Theta(theta.shift ^ v)


def theta_sum3(t1: Theta, t2: Theta, t3: Theta) -> Theta:
    return Theta(t1.shift ^ t2.shift ^ t3.shift)


def theta_from_values(values) -> Theta:
    """Recover the theta whose values on e_1..e_6 are ``values``.

    ``<w, e_i>`` is the coordinate of ``w`` paired with slot ``i``, and
    ``q0(e_i) = 0``, so the shift is read off directly.
    """
    w = 0
    for i, bit in enumerate(values):
        if bit & 1:
            w |= 1 << ((i + 3) % DIM)
    return Theta(w)


ALL_THETAS = tuple(Theta(w) for w in VECTORS)


def span(vectors) -> frozenset[int]:
    pts = {0}
    for v in vectors:
        if v not in pts:
            pts |= {p ^ v for p in pts}
    return frozenset(pts)


def echelon(vectors) -> tuple[int, ...]:
    """Reduced echelon basis (pivot = highest bit), ascending."""
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            v = min(v, v ^ r)
        if v:
            rows = [min(r, r ^ v) for r in rows]
            rows.append(v)
    return tuple(sorted(rows))


@dataclass(frozen=True)
class Subspace:
    basis: tuple[int, ...]
    points: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def spanned_by(cls, vectors) -> "Subspace":
        vectors = list(vectors)
        return cls(echelon(vectors), tuple(sorted(span(vectors))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def nonzero(self) -> tuple[int, ...]:
        return self.points[1:]

    @property
    def isotropic(self) -> bool:
        b = self.basis
        return all(pairing(b[i], b[j]) == 0 for i in range(len(b)) for j in range(i + 1, len(b)))

    def __contains__(self, v: int) -> bool:
        return v in self.points

    def sort_key(self):
        return self.points


@lru_cache(maxsize=None)
def _subspaces(k: int, isotropic_only: bool) -> tuple[Subspace, ...]:
    level = {frozenset([0])}
    for _ in range(k):
        nxt = set()
        for pts in level:
            for v in NONZERO:
                if v in pts:
                    continue
                if isotropic_only and any(pairing(v, p) for p in pts):
                    continue
                nxt.add(pts | {p ^ v for p in pts})
        level = nxt
    subs = [Subspace(echelon(sorted(pts)), tuple(sorted(pts))) for pts in level]
    subs.sort(key=Subspace.sort_key)
    return tuple(subs)


def subspaces(k: int, isotropic_only: bool = False) -> list[Subspace]:
    """All ``k``-dimensional subspaces, each once, ordered by sorted point tuple."""
    if not 0 <= k <= DIM:
        raise DimensionError(f"subspace dimension must be in 0..{DIM}, got {k}")
    return list(_subspaces(k, isotropic_only))


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
