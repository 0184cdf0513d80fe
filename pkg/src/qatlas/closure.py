"""Breadth-first closure of a linear group given by generator lookup tables.

A linear map on F_2^n is packed column by column into one uint64
(``n * ncols <= 64``).  Generators are given as lookup tables of their
action on all ``2**n`` vectors, so left multiplication is a table gather
per column.
"""
from __future__ import annotations

import logging

import numpy as np

log = logging.getLogger(__name__)


class BudgetExceeded(RuntimeError):
    pass


def pack(columns, nbits: int) -> int:
    return sum(int(c) << (nbits * j) for j, c in enumerate(columns))


def unpack(code: int, nbits: int, ncols: int) -> tuple[int, ...]:
    mask = (1 << nbits) - 1
    return tuple((code >> (nbits * j)) & mask for j in range(ncols))


def left_multiply(codes: np.ndarray, table: np.ndarray, nbits: int, ncols: int) -> np.ndarray:
    mask = np.uint64((1 << nbits) - 1)
    out = np.zeros_like(codes)
    for j in range(ncols):
        sh = np.uint64(nbits * j)
        out |= table[((codes >> sh) & mask).astype(np.intp)] << sh
    return out


def bfs_closure(tables, nbits: int, ncols: int, budget: int) -> tuple[np.ndarray, list[int]]:
    """All products of the generators, in BFS order (ascending inside a level).

    Returns the packed elements and the per-level counts.
    """
    tables = [np.asarray(t, dtype=np.uint64) for t in tables]
    ident = np.array([pack((1 << j for j in range(ncols)), nbits)], dtype=np.uint64)
    seen = ident.copy()
    frontier = ident
    found = [ident]
    levels = [1]
    while True:
        cand = np.unique(np.concatenate([left_multiply(frontier, t, nbits, ncols) for t in tables]))
        new = cand[~np.isin(cand, seen, assume_unique=True)]
        if not len(new):
            break
        if len(seen) + len(new) > budget:
            raise BudgetExceeded(f"closure exceeded the element budget of {budget}")
        seen = np.union1d(seen, new)
        found.append(new)
        levels.append(len(new))
        frontier = new
        log.debug("level %d: %d new, %d total", len(levels) - 1, len(new), len(seen))
    return np.concatenate(found), levels
