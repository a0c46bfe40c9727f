"""Dense Gaussian elimination over a :class:`FieldContext`.

Matrices are 2-D ``int64`` numpy arrays of field elements.
"""

from __future__ import annotations

import numpy as np

from .fields import FieldContext


def _as_matrix(M, ncols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, ncols or 0), dtype=np.int64)
    return A


def rref(F: FieldContext, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    A = _as_matrix(M)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        if A[r, c] != 1:
            A[r] = F.mul(A[r], F.inv(int(A[r, c])))
        col = A[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            A[hit] = F.sub(A[hit], F.mul(col[hit, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: FieldContext, M) -> int:
    A = _as_matrix(M)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def independent_rows(F: FieldContext, M) -> np.ndarray:
    """Greedy maximal independent subset of the rows, original order kept."""
    A = _as_matrix(M)
    keep: list[int] = []
    basis: list[tuple[int, np.ndarray]] = []
    for i in range(A.shape[0]):
        v = A[i].copy()
        for piv, row in basis:
            if v[piv]:
                v = F.sub(v, F.mul(int(v[piv]), row))
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            continue
        piv = int(nz[0])
        basis.append((piv, F.mul(F.inv(int(v[piv])), v)))
        keep.append(i)
    return A[keep]


def kernel(F: FieldContext, M, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{x : M x^T = 0}``, i.e. the Euclidean dual of the row space."""
    A = _as_matrix(M, ncols)
    n = A.shape[1] if ncols is None else ncols
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(F, A)
    free = [c for c in range(n) if c not in set(pivots)]
    K = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for row, pc in enumerate(pivots):
            K[i, pc] = F.neg(int(R[row, f]))
    return K


def same_row_space(F: FieldContext, A, B) -> bool:
    A = _as_matrix(A)
    B = _as_matrix(B)
    ra, rb = rank(F, A), rank(F, B)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(F, np.vstack([A, B])) == ra


def in_row_space(F: FieldContext, v, M) -> bool:
    M = _as_matrix(M)
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if M.shape[0] == 0:
        return not np.any(v)
    return rank(F, np.vstack([M, v])) == rank(F, M)


def matmul(F: FieldContext, A, B) -> np.ndarray:
    A = _as_matrix(A)
    B = _as_matrix(B)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = F.add(out, F.mul(A[:, t : t + 1], B[t : t + 1, :]))
    return out


def gram(F: FieldContext, G) -> np.ndarray:
    """``G G^T`` under the Euclidean bilinear form."""
    G = _as_matrix(G)
    return matmul(F, G, G.T)
