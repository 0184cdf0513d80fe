"""The classical configurations of odd/even thetas, realized in the symplectic model.

Every enumeration returns its items sorted by their code tuple, so output is
stable across runs.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .f2core import (
    ALL_THETAS,
    NONZERO,
    Subspace,
    Theta,
    arf,
    pairing,
    subspaces,
    theta_sum3,
    theta_translate,
)


class StructureError(ValueError):
    pass


def thetas_by_parity(parity: int) -> list[Theta]:
    return [t for t in ALL_THETAS if arf(t) == parity]


ODD = tuple(thetas_by_parity(1))
EVEN = tuple(thetas_by_parity(0))


@dataclass(frozen=True)
class SteinerComplex:
    key: int
    members: tuple[Theta, ...]
    pairs: tuple[tuple[Theta, Theta], ...]

    def codes(self) -> tuple[int, ...]:
        return tuple(t.shift for t in self.members)


def steiner_complex(v: int) -> SteinerComplex:
    if not 0 < v < 64:
        raise StructureError(f"Steiner complex needs a nonzero vector, got {v}")
    members = tuple(t for t in ODD if t(v) == 0)
    pairs = tuple((t, theta_translate(t, v)) for t in members if t.shift < t.shift ^ v)
    return SteinerComplex(v, members, pairs)


def steiner_from_fibre(v: int) -> frozenset[Theta]:
    """Union of the unordered odd pairs whose shifts differ by ``v``."""
    out = set()
    for a, b in combinations(ODD, 2):
        if a.shift ^ b.shift == v:
            out |= {a, b}
    return frozenset(out)


def triad_type(t1: Theta, t2: Theta, t3: Theta) -> str:
    if len({t1, t2, t3}) != 3:
        raise StructureError("triad members must be distinct")
    if not (t1.odd and t2.odd and t3.odd):
        raise StructureError("triad members must be odd thetas")
    s = arf(t1) ^ arf(t2) ^ arf(t3) ^ arf(theta_sum3(t1, t2, t3))
    return "azygetic" if s else "syzygetic"


@dataclass(frozen=True, order=True)
class SyzygeticTetrad:
    members: tuple[Theta, ...]

    def codes(self) -> tuple[int, ...]:
        return tuple(t.shift for t in self.members)


@lru_cache(maxsize=None)
def _tetrads() -> tuple[SyzygeticTetrad, ...]:
    out = []
    for a, b, c in combinations(ODD, 3):
        d = theta_sum3(a, b, c)
        if d.odd and d.shift > c.shift:
            out.append(SyzygeticTetrad((a, b, c, d)))
    return tuple(sorted(out))


def syzygetic_tetrads() -> list[SyzygeticTetrad]:
    return list(_tetrads())


def tetrad_to_plane(t: SyzygeticTetrad, base: int = 0) -> Subspace:
    b = t.members[base].shift
    return Subspace.spanned_by(m.shift ^ b for m in t.members)


def plane_to_tetrad(p: Subspace) -> SyzygeticTetrad:
    if p.dim != 2 or not p.isotropic:
        raise StructureError("expected an isotropic plane")
    # the four odd thetas of a coset w + p
    for w in range(64):
        coset = [Theta(w ^ x) for x in p.points]
        if all(t.odd for t in coset):
            return SyzygeticTetrad(tuple(sorted(coset)))
    raise AssertionError("isotropic plane with no odd coset")


@dataclass(frozen=True)
class GopelSubset:
    subspace: Subspace

    @property
    def points(self) -> tuple[int, ...]:
        return self.subspace.nonzero


def gopel_subsets() -> list[GopelSubset]:
    return [GopelSubset(s) for s in subspaces(3, isotropic_only=True)]


@dataclass(frozen=True)
class AzygeticTriad:
    plane: Subspace
    complexes: tuple[SteinerComplex, ...]

    def codes(self) -> tuple[int, ...]:
        return self.plane.nonzero


def azygetic_triads() -> list[AzygeticTriad]:
    return [
        AzygeticTriad(p, tuple(steiner_complex(v) for v in p.nonzero))
        for p in subspaces(2)
        if not p.isotropic
    ]


@dataclass(frozen=True, order=True)
class AronholdHeptad:
    members: tuple[Theta, ...]

    def codes(self) -> tuple[int, ...]:
        return tuple(t.shift for t in self.members)


@lru_cache(maxsize=None)
def _heptads() -> tuple[AronholdHeptad, ...]:
    odd = [t.shift for t in ODD]
    out: list[AronholdHeptad] = []

    def extend(chosen: list[int], start: int) -> None:
        if len(chosen) == 7:
            out.append(AronholdHeptad(tuple(Theta(w) for w in chosen)))
            return
        for i in range(start, len(odd)):
            w = odd[i]
            # every new triple containing w must sum to an even theta
            ok = all(
                arf(Theta(a ^ b ^ w)) == 0 for a, b in combinations(chosen, 2)
            )
            if ok:
                chosen.append(w)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    return tuple(out)


def aronhold_heptads() -> list[AronholdHeptad]:
    return list(_heptads())


def is_heptad(members) -> bool:
    members = list(members)
    return (
        len(set(members)) == 7
        and all(t.odd for t in members)
        and all(not theta_sum3(*c).odd for c in combinations(members, 3))
    )


def heptad_even_theta(h: AronholdHeptad) -> Theta:
    if not is_heptad(h.members):
        raise StructureError("not an Aronhold heptad")
    w = 0
    for t in h.members:
        w ^= t.shift
    return Theta(w)


def heptad_fibres() -> dict[Theta, list[AronholdHeptad]]:
    fibres: dict[Theta, list[AronholdHeptad]] = defaultdict(list)
    for h in aronhold_heptads():
        fibres[heptad_even_theta(h)].append(h)
    return dict(sorted(fibres.items()))


def octad_labeling(h: AronholdHeptad) -> dict[tuple[int, int], Theta]:
    """Label the 28 odd thetas by the duads of {1..8}.

    ``{i,8}`` gets the i-th heptad member, ``{i,j}`` gets
    ``even + theta_i + theta_j``.
    """
    even = heptad_even_theta(h)
    m = h.members
    labels = {(i + 1, 8): m[i] for i in range(7)}
    for i, j in combinations(range(7), 2):
        labels[(i + 1, j + 1)] = theta_sum3(even, m[i], m[j])
    if len(set(labels.values())) != 28 or not all(t.odd for t in labels.values()):
        raise AssertionError("duad labelling is not a bijection onto the odd thetas")
    return dict(sorted(labels.items()))


def steiner_pair_type(u: int, v: int) -> str:
    return "syzygetic" if pairing(u, v) == 0 else "azygetic"


def all_steiner_complexes() -> list[SteinerComplex]:
    return [steiner_complex(v) for v in NONZERO]
