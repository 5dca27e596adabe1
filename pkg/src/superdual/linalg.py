"""Exact linear algebra over the rationals (row reduction, null spaces)."""

from __future__ import annotations

from fractions import Fraction


def rref(matrix, ncols: int | None = None):
    """Reduced row echelon form; returns (rows, pivot_columns).

    ``matrix`` is a list of rows, each a list or a sparse dict {col: value}.
    """
    rows = []
    for row in matrix:
        if isinstance(row, dict):
            rows.append({c: Fraction(v) for c, v in row.items() if v})
        else:
            rows.append({c: Fraction(v) for c, v in enumerate(row) if v})
    pivots = []
    reduced: list[dict] = []
    for row in rows:
        for pr, pc in zip(reduced, pivots):
            if pc in row:
                f = row[pc]
                for c, v in pr.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {c: v * inv for c, v in row.items()}
        for pr in reduced:
            if pc in pr:
                f = pr[pc]
                for c, v in row.items():
                    nv = pr.get(c, 0) - f * v
                    if nv:
                        pr[c] = nv
                    else:
                        pr.pop(c, None)
        reduced.append(row)
        pivots.append(pc)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [reduced[i] for i in order], [pivots[i] for i in order]


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of {v : matrix v = 0} for a matrix with ``ncols`` columns."""
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row.get(f, Fraction(0))
        basis.append(v)
    return basis


def solve(columns, target) -> list[Fraction] | None:
    """Coefficients c with sum c_i columns[i] = target, or None.

    Vectors are sparse dicts keyed by arbitrary hashable coordinates.
    """
    keys = sorted({k for col in columns for k in col} | set(target), key=repr)
    ncols = len(columns)
    # augmented system: one row per coordinate
    rows = []
    for k in keys:
        row = {j: col[k] for j, col in enumerate(columns) if col.get(k)}
        if target.get(k):
            row[ncols] = target[k]
        rows.append(row)
    reduced, pivots = rref(rows)
    if ncols in pivots:
        return None
    coeffs = [Fraction(0)] * ncols
    for row, pc in zip(reduced, pivots):
        coeffs[pc] = row.get(ncols, Fraction(0))
    return coeffs
