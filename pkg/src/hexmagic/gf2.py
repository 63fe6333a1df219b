"""GF(2) linear algebra on rows stored as int bitmasks (bit j = column j)."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


def rank(rows: Sequence[int], ncols: int) -> int:
    """Rank via Gaussian elimination; does not modify the input."""
    work = list(rows)
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i] >> col & 1), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i] >> col & 1:
                work[i] ^= work[r]
        r += 1
    return r


def _reduce(work: List[int], ncols: int) -> List[int]:
    """In-place reduced row echelon form; returns the pivot column list."""
    pivot_cols: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i] >> col & 1), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i] >> col & 1:
                work[i] ^= work[r]
        pivot_cols.append(col)
        r += 1
    return pivot_cols


def nullspace_basis(rows: Sequence[int], ncols: int) -> List[int]:
    """Basis of {v : row . v = 0 for every row}, as ncols-bit masks.

    One basis vector per free column, with pivot entries filled by
    back-substitution.  Output order follows ascending free columns, so
    downstream enumeration is stable.
    """
    work = [r for r in rows if r]
    pivot_cols = _reduce(work, ncols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for i, col in enumerate(pivot_cols):
            if work[i] >> free & 1:
                vec |= 1 << col
        basis.append(vec)
    return basis


def solve(rows: Sequence[int], rhs: Sequence[int], ncols: int
          ) -> Tuple[Optional[int], Optional[int]]:
    """Solve row . v = rhs over GF(2).

    Returns ``(solution, None)`` with one particular solution bitmask, or
    ``(None, certificate)`` where certificate is a bitmask of input row
    indices whose XOR gives the contradiction 0 = 1 (machine-checkable
    proof of inconsistency).
    """
    m = len(rows)
    # Augment each row with its RHS bit at column ncols and a combination
    # tag at columns ncols+1..: elimination then tracks proofs for free.
    work = [rows[i] | (rhs[i] & 1) << ncols | 1 << (ncols + 1 + i) for i in range(m)]
    pivot_cols = _reduce(work, ncols)
    r = len(pivot_cols)
    for row in work[r:]:
        if row >> ncols & 1:
            return None, row >> (ncols + 1)
    solution = 0
    for i, col in enumerate(pivot_cols):
        if work[i] >> ncols & 1:
            solution |= 1 << col
    return solution, None
