"""Octonion basis products from the oriented Fano plane.

Basis units e_0..e_7 are labelled by F_2^3 read as a binary number
``x0 x1 x2`` (so e_(1,0,1) = e_5).  Up to sign, e_x e_y = e_{x+y}; the sign
comes from the cyclic orientation of the Fano line through x and y.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# oriented lines, read off the figure: a -> b -> c -> a
FANO_LINES = (
    (1, 2, 3),
    (6, 1, 7),
    (7, 2, 5),
    (5, 3, 6),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
)

# the printed Cayley-Graves table, row = left factor, column = right factor
PRINTED_TABLE = (
    "+e0 +e1 +e2 +e3 +e4 +e5 +e6 +e7",
    "+e1 -e0 +e3 -e2 +e5 -e4 -e7 +e6",
    "+e2 -e3 -e0 +e1 +e6 +e7 -e4 -e5",
    "+e3 +e2 -e1 -e0 +e7 -e6 +e5 -e4",
    "+e4 -e5 -e6 -e7 -e0 +e1 +e2 +e3",
    "+e5 +e4 -e7 +e6 -e1 -e0 -e3 +e2",
    "+e6 +e7 +e4 -e5 -e2 +e3 -e0 -e1",
    "+e7 +e6 +e5 +e4 -e3 -e2 +e1 -e0",
)


class TableMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class SignedBasisProduct:
    sign: int
    label: int

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}e{self.label}"

    @classmethod
    def parse(cls, text: str) -> "SignedBasisProduct":
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        return cls(sign, int(text.lstrip("+-")[1:]))


def label_bits(label: int) -> tuple[int, int, int]:
    return ((label >> 2) & 1, (label >> 1) & 1, label & 1)


def _cyclic_pairs(lines) -> dict[tuple[int, int], int]:
    signs = {}
    for a, b, c in lines:
        for x, y in ((a, b), (b, c), (c, a)):
            signs[(x, y)] = 1
            signs[(y, x)] = -1
    return signs


def multiply(x: int, y: int, lines=FANO_LINES) -> SignedBasisProduct:
    if x == 0:
        return SignedBasisProduct(1, y)
    if y == 0:
        return SignedBasisProduct(1, x)
    if x == y:
        return SignedBasisProduct(-1, 0)
    return SignedBasisProduct(_cyclic_pairs(lines)[(x, y)], x ^ y)


def full_table(lines=FANO_LINES) -> tuple[tuple[SignedBasisProduct, ...], ...]:
    return tuple(tuple(multiply(x, y, lines) for y in range(8)) for x in range(8))


def printed_table() -> tuple[tuple[SignedBasisProduct, ...], ...]:
    return tuple(tuple(SignedBasisProduct.parse(c) for c in row.split()) for row in PRINTED_TABLE)


def table_mismatches(lines=FANO_LINES) -> list[tuple[int, int, str, str]]:
    gen, ref = full_table(lines), printed_table()
    return [
        (x, y, str(gen[x][y]), str(ref[x][y]))
        for x in range(8)
        for y in range(8)
        if gen[x][y] != ref[x][y]
    ]


def validate_table(lines=FANO_LINES) -> None:
    bad = table_mismatches(lines)
    if bad:
        x, y, got, want = bad[0]
        raise TableMismatch(f"cell (e{x}, e{y}): generated {got}, printed {want} ({len(bad)} bad cells)")


def is_line_set(lines) -> bool:
    unordered = {frozenset(l) for l in lines}
    return (
        len(unordered) == 7
        and all(a ^ b == c for a, b, c in lines)
        and all(sum(x in l for l in lines) == 3 for x in range(1, 8))
    )


# --- integer octonion arithmetic -------------------------------------------------


@lru_cache(maxsize=None)
def _structure() -> tuple[np.ndarray, np.ndarray]:
    tab = full_table()
    sign = np.array([[p.sign for p in row] for row in tab], dtype=np.int64)
    label = np.array([[p.label for p in row] for row in tab], dtype=np.int64)
    return sign, label


def omul(a, b) -> np.ndarray:
    """Product of two integer octonions given as length-8 coefficient vectors."""
    sign, label = _structure()
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros(8, dtype=np.int64)
    np.add.at(out, label.ravel(), (sign * np.outer(a, b)).ravel())
    return out


def norm(a) -> int:
    a = np.asarray(a, dtype=np.int64)
    return int(a @ a)


def unit(i: int) -> np.ndarray:
    v = np.zeros(8, dtype=np.int64)
    v[i] = 1
    return v


@dataclass
class IdentityReport:
    left_alternative: bool
    right_alternative: bool
    norm_multiplicative: bool
    norm_samples: int
    nonassociative_witness: tuple[str, str] | None

    @property
    def passed(self) -> bool:
        return (
            self.left_alternative
            and self.right_alternative
            and self.norm_multiplicative
            and self.nonassociative_witness is not None
        )


def _fmt(v) -> str:
    terms = [f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}e{i}" for i, c in enumerate(v) if c]
    return "".join(terms) or "0"


def identity_checks(samples: int = 1000, seed: int = 0) -> IdentityReport:
    left = right = True
    for i in range(8):
        for j in range(8):
            x, y = unit(i), unit(j)
            xx = omul(x, x)
            left &= bool(np.array_equal(omul(x, omul(x, y)), omul(xx, y)))
            right &= bool(np.array_equal(omul(omul(y, x), x), omul(y, xx)))
    rng = np.random.default_rng(seed)
    mult = True
    for _ in range(samples):
        a, b = rng.integers(-9, 10, 8), rng.integers(-9, 10, 8)
        mult &= norm(omul(a, b)) == norm(a) * norm(b)
    e1, e2, e4 = unit(1), unit(2), unit(4)
    lhs, rhs = omul(omul(e1, e2), e4), omul(e1, omul(e2, e4))
    witness = None if np.array_equal(lhs, rhs) else (_fmt(lhs), _fmt(rhs))
    return IdentityReport(left, right, mult, samples, witness)
