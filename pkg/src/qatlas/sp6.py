"""Sp(6,2): transvections, closure, actions on structures, orbits and ranks."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import structures as st
from .closure import BudgetExceeded, bfs_closure
from .f2core import (
    ALL_THETAS,
    DIM,
    NONZERO,
    Subspace,
    Theta,
    arf,
    pairing,
    subspaces,
    theta_from_values,
)

GROUP_ORDER = 1_451_520
DEFAULT_BUDGET = 2_000_000

class TransitivityError(RuntimeError):
    pass


@dataclass(frozen=True)
class SymplecticMap:
    """A 6x6 GF(2) matrix; column j (the image of e_{j+1}) sits at bits 6j..6j+5."""

    code: int

    @classmethod
    def from_columns(cls, cols) -> "SymplecticMap":
        return cls(sum(int(c) << (DIM * j) for j, c in enumerate(cols)))

    @classmethod
    def identity(cls) -> "SymplecticMap":
        return cls.from_columns(1 << j for j in range(DIM))

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple((self.code >> (DIM * j)) & 63 for j in range(DIM))

    @cached_property
    def table(self) -> tuple[int, ...]:
        """Images of all 64 vectors."""
        cols = self.columns
        out = [0] * 64
        for v in range(1, 64):
            low = v & -v
            out[v] = out[v ^ low] ^ cols[low.bit_length() - 1]
        return tuple(out)

    def __call__(self, v: int) -> int:
        return self.table[v]

    def __matmul__(self, other: "SymplecticMap") -> "SymplecticMap":
        return SymplecticMap.from_columns(self(c) for c in other.columns)

    @cached_property
    def _inverse(self) -> "SymplecticMap":
        back = {w: v for v, w in enumerate(self.table)}
        return SymplecticMap.from_columns(back[1 << j] for j in range(DIM))

    def inverse(self) -> "SymplecticMap":
        return self._inverse

    def is_symplectic(self) -> bool:
        cols = self.columns
        return all(
            pairing(cols[i], cols[j]) == pairing(1 << i, 1 << j)
            for i in range(DIM)
            for j in range(DIM)
        )


def transvection(u: int) -> SymplecticMap:
    if not 0 < u < 64:
        raise ValueError(f"transvection needs a nonzero vector, got {u}")
    return SymplecticMap.from_columns(
        (1 << j) ^ (u if pairing(1 << j, u) else 0) for j in range(DIM)
    )


TRANSVECTIONS = tuple(transvection(u) for u in NONZERO)


class Sp6Group:
    """Elements of Sp(6,2) found by BFS over the 63 transvections.

    ``elements`` holds packed codes in discovery order: BFS level by level,
    ascending code inside each level.
    """

    def __init__(self, elements: np.ndarray, levels: list[int]):
        self.elements = elements
        self.levels = levels

    @property
    def order(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> SymplecticMap:
        return SymplecticMap(int(self.elements[i]))

    def random_elements(self, n: int, seed: int = 0) -> list[SymplecticMap]:
        rng = np.random.default_rng(seed)
        return [self[int(i)] for i in rng.integers(0, self.order, n)]

    def __contains__(self, g: SymplecticMap) -> bool:
        s = np.sort(self.elements)
        i = np.searchsorted(s, np.uint64(g.code))
        return bool(i < len(s) and s[i] == g.code)


def group_closure(budget: int = DEFAULT_BUDGET) -> Sp6Group:
    elements, levels = bfs_closure([t.table for t in TRANSVECTIONS], DIM, DIM, budget)
    return Sp6Group(elements, levels)


@lru_cache(maxsize=1)
def sp6() -> Sp6Group:
    return group_closure()


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# --- actions -----------------------------------------------------------------

KINDS = (
    "vector",
    "theta",
    "steiner",
    "gopel",
    "isotropic_plane",
    "nonisotropic_plane",
    "tetrad",
    "heptad",
)


def _act_theta(g: SymplecticMap, t: Theta) -> Theta:
    ginv = g.inverse()
    return theta_from_values(t(ginv(1 << i)) for i in range(DIM))


def _act_thetas(g: SymplecticMap, ts) -> tuple[Theta, ...]:
    ginv = g.inverse()
    return tuple(sorted(theta_from_values(t(ginv(1 << i)) for i in range(DIM)) for t in ts))


def act(g: SymplecticMap, kind: str, s):
    if kind == "vector":
        if not 0 < s < 64:
            raise ValueError(f"not a nonzero vector: {s}")
        return g(s)
    if kind == "theta":
        return _act_theta(g, s)
    if kind == "steiner":
        return st.steiner_complex(g(s.key))
    if kind in ("gopel", "isotropic_plane", "nonisotropic_plane"):
        sub = s.subspace if isinstance(s, st.GopelSubset) else s
        img = Subspace.spanned_by(g(b) for b in sub.basis)
        return st.GopelSubset(img) if isinstance(s, st.GopelSubset) else img
    if kind == "tetrad":
        return st.SyzygeticTetrad(_act_thetas(g, s.members))
    if kind == "heptad":
        if not st.is_heptad(s.members):
            raise st.StructureError("not an Aronhold heptad")
        return st.AronholdHeptad(_act_thetas(g, s.members))
    raise ValueError(f"unknown action kind {kind!r}")


def _key(kind: str, s):
    if kind == "steiner":
        return s.key
    if kind == "gopel":
        return s.subspace
    return s


@lru_cache(maxsize=None)
def domain(kind: str) -> tuple:
    """Every structure of a kind, in canonical order (orbits may be several)."""
    if kind in ("vector", "steiner"):
        return tuple(NONZERO)
    if kind == "theta":
        return ALL_THETAS
    if kind == "gopel":
        return tuple(subspaces(3, isotropic_only=True))
    if kind == "isotropic_plane":
        return tuple(subspaces(2, isotropic_only=True))
    if kind == "nonisotropic_plane":
        return tuple(p for p in subspaces(2) if not p.isotropic)
    if kind == "tetrad":
        return tuple(st.syzygetic_tetrads())
    if kind == "heptad":
        return tuple(st.aronhold_heptads())
    raise ValueError(f"unknown action kind {kind!r}")


def _lift(kind: str, key):
    if kind == "steiner":
        return st.steiner_complex(key)
    if kind == "gopel":
        return st.GopelSubset(key)
    return key


@lru_cache(maxsize=None)
def generator_permutations(kind: str) -> np.ndarray:
    """Row k is the permutation of ``domain(kind)`` induced by the k-th transvection."""
    dom = domain(kind)
    index = {x: i for i, x in enumerate(dom)}
    perms = np.empty((len(TRANSVECTIONS), len(dom)), dtype=np.intp)
    for k, g in enumerate(TRANSVECTIONS):
        for i, x in enumerate(dom):
            perms[k, i] = index[_key(kind, act(g, kind, _lift(kind, x)))]
    return perms


def _bfs(perms: np.ndarray, start: int, size: int) -> np.ndarray:
    seen = np.zeros(size, dtype=bool)
    seen[start] = True
    frontier = np.array([start], dtype=np.intp)
    while len(frontier):
        img = np.unique(perms[:, frontier].ravel())
        frontier = img[~seen[img]]
        seen[frontier] = True
    return np.flatnonzero(seen)


def orbit(kind: str, rep) -> list:
    dom = domain(kind)
    index = {x: i for i, x in enumerate(dom)}
    start = index[_key(kind, rep)]
    return [dom[i] for i in _bfs(generator_permutations(kind), start, len(dom))]


def expected_structures(kind: str, rep) -> list:
    """Keys of the enumeration the orbit of ``rep`` should coincide with."""
    if kind == "theta":
        return st.thetas_by_parity(arf(rep))
    return list(domain(kind))


def orbit_and_stabilizer_order(kind: str, rep, group_order: int = GROUP_ORDER) -> tuple[int, int]:
    orb = orbit(kind, rep)
    if group_order % len(orb):
        raise AssertionError(f"orbit size {len(orb)} does not divide {group_order}")
    if sorted(map(_sort_key, orb)) != sorted(map(_sort_key, expected_structures(kind, rep))):
        raise TransitivityError(f"{kind} orbit of size {len(orb)} is not the full enumeration")
    return len(orb), group_order // len(orb)


def _sort_key(x):
    return x.points if isinstance(x, Subspace) else x


def _restricted_perms(kind: str, rep) -> np.ndarray:
    perms = generator_permutations(kind)
    members = _bfs(perms, domain(kind).index(_key(kind, rep)), perms.shape[1])
    local = np.full(perms.shape[1], -1, dtype=np.intp)
    local[members] = np.arange(len(members))
    sub = local[perms[:, members]]
    if (sub < 0).any():
        raise AssertionError("orbit not closed under the generators")
    return sub


@lru_cache(maxsize=None)
def pair_rank(kind: str, rep=None) -> int:
    """Number of orbits on ordered pairs of the orbit of ``rep``.

    ``rep`` defaults to the first structure of the kind; for thetas pass an
    odd or even one to choose the orbit.
    """
    if rep is None:
        rep = _lift(kind, domain(kind)[0])
    orb = orbit(kind, rep)
    if len(orb) != len(expected_structures(kind, rep)):
        raise TransitivityError(f"action on {kind} is not transitive")
    perms = _restricted_perms(kind, rep)
    n = perms.shape[1]
    pair_perms = (perms[:, :, None] * n + perms[:, None, :]).reshape(len(perms), n * n)
    seen = np.zeros(n * n, dtype=bool)
    count = 0
    for start in range(n * n):
        if seen[start]:
            continue
        seen[_bfs(pair_perms, start, n * n)] = True
        count += 1
    return count


# realized actions: (label, kind, representative, expected stabilizer order)
def realized_actions() -> list[tuple[str, str, object, int]]:
    return [
        ("bitangent", "theta", st.ODD[0], 51840),
        ("octad", "theta", st.EVEN[0], 40320),
        ("steiner", "steiner", st.steiner_complex(1), 23040),
        ("gopel", "gopel", st.gopel_subsets()[0], 10752),
        ("aronhold", "heptad", st.aronhold_heptads()[0], 5040),
        ("syzygetic", "isotropic_plane", subspaces(2, True)[0], 4608),
        ("azygetic", "nonisotropic_plane", domain("nonisotropic_plane")[0], 4320),
    ]
