"""Tate hypercohomology of a bounded complex with mu_p action.

Uses the complete resolution: the double complex with ``M^q`` in every
column ``j``, horizontal maps ``sigma - 1`` out of even columns and ``N`` out
of odd columns, and vertical maps ``(-1)^j d``.  Shifting columns by two is an
isomorphism of double complexes, so total degrees 0 and 1 determine
everything.
"""

from __future__ import annotations

import numpy as np

from fcq.homalg import linalg as la
from fcq.homalg.complexes import CyclicComplex


def _horizontal(M: CyclicComplex, j: int, q: int) -> np.ndarray:
    dim = M.dim(q)
    if j % 2 == 0:
        return la.mod(M.sig(q) - la.identity(dim), M.modulus)
    return M.norm(q)


def _total_differential(M: CyclicComplex, n: int) -> np.ndarray:
    """Matrix of the total differential from total degree n to n + 1."""
    qs = M.degrees
    src = [(n - q, q) for q in qs]
    tgt = [(n + 1 - q, q) for q in qs]
    off_s = np.cumsum([0] + [M.dim(q) for _, q in src])
    off_t = np.cumsum([0] + [M.dim(q) for _, q in tgt])
    out = la.zeros(int(off_t[-1]), int(off_s[-1]))
    pos_t = {b: k for k, b in enumerate(tgt)}
    for k, (j, q) in enumerate(src):
        cs = slice(off_s[k], off_s[k + 1])
        h = pos_t.get((j + 1, q))
        if h is not None:
            out[off_t[h]:off_t[h + 1], cs] += _horizontal(M, j, q)
        v = pos_t.get((j, q + 1))
        if v is not None and M.dim(q + 1):
            out[off_t[v]:off_t[v + 1], cs] += (-1) ** (j % 2) * M.diff(q)
    return la.mod(out, M.modulus)


def tate_degree(M: CyclicComplex, n: int) -> int:
    p = M.modulus
    if not p:
        raise ValueError("Tate hypercohomology is computed over F_p only")
    d_in = _total_differential(M, n - 1)
    d_out = _total_differential(M, n)
    total = d_out.shape[1]
    return total - la.rank(d_out, p) - la.rank(d_in, p)


def tate_hypercohomology(M: CyclicComplex) -> dict[int, int]:
    """Dimensions of the Tate hypercohomology in total degrees 0 and 1 (2-periodic)."""
    if not M.degrees:
        return {0: 0, 1: 0}
    return {0: tate_degree(M, 0), 1: tate_degree(M, 1)}


def tate_dim(M: CyclicComplex, n: int) -> int:
    return tate_hypercohomology(M)[n % 2]
