"""Exact linear algebra over a table-backed finite field.

Matrices are 2-D numpy integer arrays of encoded field elements.  Row
operations are expressed as table gathers, so elimination runs at numpy
speed with no Python-level per-entry work.
"""

from __future__ import annotations

import numpy as np

from .field import Field


def rref(field: Field, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form.

    Args:
        field: the coefficient field.
        mat: (rows, cols) array of encoded elements; not modified.

    Returns:
        (R, pivot_cols): R in RREF with unit pivots, and the pivot column
        indices in order.
    """
    R = np.array(mat, dtype=np.uint16, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-D matrix")
    n_rows, n_cols = R.shape
    MUL, SUB, INV = field.MUL, field.SUB, field.INV
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        col = R[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = MUL[INV[R[r, c]], R[r]]
        factors = R[:, c].copy()
        factors[r] = 0
        rows_nz = np.nonzero(factors)[0]
        if rows_nz.size:
            R[rows_nz] = SUB[R[rows_nz], MUL[factors[rows_nz, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field: Field, mat: np.ndarray) -> int:
    return len(rref(field, mat)[1])


def kernel_basis(field: Field, mat: np.ndarray) -> np.ndarray:
    """Basis of the right kernel {v : mat @ v = 0}, one vector per row.

    The basis is in the standard RREF parametrization: one vector per free
    column, carrying 1 at that column.  Shape (nullity, cols).
    """
    R, pivots = rref(field, mat)
    n_cols = mat.shape[1]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = np.zeros((len(free), n_cols), dtype=np.uint16)
    NEG = field.NEG
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = NEG[R[i, f]]
    return basis


def matvec(field: Field, mat: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """mat @ vec over the field; vec is 1-D of length cols."""
    v = np.asarray(vec, dtype=np.uint16)
    prods = field.MUL[np.asarray(mat, dtype=np.uint16), v[None, :]]
    ADD = field.ADD
    acc = prods[:, 0]
    for j in range(1, prods.shape[1]):
        acc = ADD[acc, prods[:, j]]
    return acc
