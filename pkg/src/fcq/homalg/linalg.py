"""Dense linear algebra over F_p on numpy int64 arrays.

Entries are kept in [0, p).  Matrices here stay in the low thousands of rows,
so plain Gaussian elimination with vectorized row updates is adequate.
"""

from __future__ import annotations

import numpy as np

from fcq.exactalg.field import inv_mod


def as_matrix(rows, shape=None) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if shape is not None:
        a = a.reshape(shape)
    return a


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def mod(a: np.ndarray, p: int) -> np.ndarray:
    return np.mod(a, p) if p else a


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or b.shape[0] == 0:
        return zeros(a.shape[0], b.shape[1])
    out = a @ b
    return np.mod(out, p) if p else out


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p and the pivot columns."""
    m = np.mod(np.array(a, dtype=np.int64), p)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * inv_mod(int(m[r, c]), p) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of {x : a x = 0} over F_p."""
    rows, cols = a.shape
    if rows == 0:
        return identity(cols)
    m, piv = rref(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = zeros(cols, len(free))
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(piv):
            basis[pc, j] = (-m[i, f]) % p
    return basis


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis (echelon-reduced) of the image of a."""
    if a.size == 0:
        return zeros(a.shape[0], 0)
    m, piv = rref(a.T, p)
    return m[: len(piv)].T.copy()


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution x of a x = b mod p, or None."""
    rows, cols = a.shape
    b = np.asarray(b, dtype=np.int64).reshape(rows, -1)
    aug = np.concatenate([a, b], axis=1)
    m, piv = rref(aug, p)
    if any(c >= cols for c in piv):
        return None
    x = zeros(cols, b.shape[1])
    for i, c in enumerate(piv):
        x[c] = m[i, cols:]
    return x if b.shape[1] > 1 else x[:, 0]


def kernel_dim(a: np.ndarray, p: int) -> int:
    return a.shape[1] - rank(a, p)
