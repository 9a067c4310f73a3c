"""Exact sparse Gaussian elimination over the coefficient field.

Matrices are lists of sparse rows ``{column: value}``; values are Fractions or
ParamScalars.  Pivots are chosen by smallest textual size to keep coefficient
growth down.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

Row = Dict[int, object]


def _size(v) -> int:
    if isinstance(v, Fraction):
        return v.numerator.bit_length() + v.denominator.bit_length()
    if isinstance(v, int):
        return v.bit_length()
    # ParamScalar: number of stored terms, then total coefficient size
    return 8 * (len(v._num) + len(v._den)) + sum(abs(c).bit_length() for c in v._num.values())


def _axpy(target: Row, row: Row, factor) -> Row:
    """target - factor * row, dropping zeros."""
    out = dict(target)
    for j, v in row.items():
        w = out.get(j)
        w = -factor * v if w is None else w - factor * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return out


def rref(rows: Sequence[Row]):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    pending = [dict(r) for r in rows if r]
    done: List[Row] = []
    pivots: List[int] = []
    while pending:
        # pick the globally smallest nonzero entry as pivot
        best = None
        for ri, r in enumerate(pending):
            for j, v in r.items():
                s = _size(v)
                if best is None or s < best[0] or (s == best[0] and j < best[2]):
                    best = (s, ri, j)
        _, ri, col = best
        prow = pending.pop(ri)
        piv = prow[col]
        inv = 1 / (Fraction(piv) if isinstance(piv, int) else piv)
        prow = {j: v * inv for j, v in prow.items()}
        nxt = []
        for r in pending:
            if col in r:
                r = _axpy(r, prow, r[col])
            if r:
                nxt.append(r)
        pending = nxt
        for k, r in enumerate(done):
            if col in r:
                done[k] = _axpy(r, prow, r[col])
        done.append(prow)
        pivots.append(col)
    return done, pivots


def nullspace(rows: Sequence[Row], ncols: int, one=1) -> List[Dict[int, object]]:
    """Basis of {v : rows . v = 0}, one sparse vector per free column."""
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: one}
        for r, pc in zip(red, pivots):
            v = r.get(free)
            if v:
                vec[pc] = -v
        basis.append(vec)
    return basis


def solve(rows: Sequence[Row], rhs: Sequence, ncols: int, zero=0) -> Optional[Dict[int, object]]:
    """One solution of rows . v = rhs, or None when inconsistent."""
    aug = []
    for r, b in zip(rows, rhs):
        r = dict(r)
        if b:
            r[ncols] = b
        aug.append(r)
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    sol = {}
    for r, pc in zip(red, pivots):
        b = r.get(ncols)
        if b:
            sol[pc] = b
    return sol
