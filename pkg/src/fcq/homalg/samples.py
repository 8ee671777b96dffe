"""Seeded random complexes and chain maps for property checks."""

from __future__ import annotations

import numpy as np

from fcq.homalg import linalg as la
from fcq.homalg.complexes import ChainMap, Complex
from fcq.homalg.steenrod import additivity_defect, cone_filtration, is_induced, same_cyclic_complex, steenrod_complex
from fcq.report import VerificationReport


def random_complex(rng: np.random.Generator, p: int, total_dim: int, degrees=(0, 1)) -> Complex:
    """A complex concentrated in two adjacent degrees with a random differential."""
    lo, hi = degrees
    a = int(rng.integers(0, total_dim + 1))
    dims = {lo: a, hi: total_dim - a}
    d = {lo: rng.integers(0, p, size=(dims[hi], dims[lo]))} if hi == lo + 1 else {}
    return Complex(dims, d, p)


def random_chain_map(rng: np.random.Generator, A: Complex, B: Complex) -> ChainMap:
    """A uniformly random element of the space of chain maps A -> B."""
    p = A.modulus
    degs = sorted(set(A.dims) & set(B.dims))
    offsets, total = {}, 0
    for n in degs:
        offsets[n] = total
        total += B.dim(n) * A.dim(n)
    if not total:
        return ChainMap(A, B, {})
    rows = []
    # f^{n+1} d_A^n - d_B^n f^n = 0, one row per matrix entry
    for n in sorted(set(A.dims) | set(B.dims)):
        dA, dB = A.diff(n), B.diff(n)
        for i in range(B.dim(n + 1)):
            for j in range(A.dim(n)):
                row = np.zeros(total, dtype=np.int64)
                if n + 1 in offsets:
                    for k in range(A.dim(n + 1)):
                        row[offsets[n + 1] + i * A.dim(n + 1) + k] += dA[k, j]
                if n in offsets:
                    for k in range(B.dim(n)):
                        row[offsets[n] + k * A.dim(n) + j] -= dB[i, k]
                rows.append(row % p)
    K = la.nullspace(np.array(rows, dtype=np.int64), p) if rows else la.identity(total)
    v = la.mod(K @ rng.integers(0, p, size=K.shape[1]), p) if K.shape[1] else np.zeros(total, dtype=np.int64)
    maps = {n: v[offsets[n]: offsets[n] + B.dim(n) * A.dim(n)].reshape(B.dim(n), A.dim(n)) for n in degs}
    f = ChainMap(A, B, maps)
    assert f.is_chain_map()
    return f


def random_parallel_pair(rng: np.random.Generator, p: int, max_total_dim: int = 3) -> tuple[ChainMap, ChainMap]:
    """Two chain maps A -> B with dim A + dim B <= max_total_dim."""
    total = int(rng.integers(2, max_total_dim + 1))
    a = int(rng.integers(1, total))
    A = random_complex(rng, p, a)
    B = random_complex(rng, p, total - a)
    return random_chain_map(rng, A, B), random_chain_map(rng, A, B)


def additivity_report(seed: int, p: int = 3, cases: int = 10, max_total_dim: int = 3) -> VerificationReport:
    rng = np.random.default_rng(seed)
    rep = VerificationReport(f"additivity defect on {cases} random pairs, p={p}, seed={seed}")
    for k in range(cases):
        f, g = random_parallel_pair(rng, p, max_total_dim)
        _, sub = additivity_defect(f, g, p)
        rep.extend(sub, prefix=f"case {k}: ")
    return rep


def semi_split_map(rng: np.random.Generator, p: int, dim_a: int = 2, dim_b: int = 2) -> ChainMap:
    """A random chain map between two-term complexes; its cone is the test object."""
    A = random_complex(rng, p, dim_a)
    B = random_complex(rng, p, dim_b)
    return random_chain_map(rng, A, B)


def cone_filtration_report(f: ChainMap, p: int) -> VerificationReport:
    filt = cone_filtration(f, p)
    rep = VerificationReport(f"cone filtration, p={p}")
    rep.add("every piece is stable under d and sigma", all(filt.is_stable(i) for i in range(p + 1)))
    rep.add("F_0 = St(B)", same_cyclic_complex(filt.piece(0), steenrod_complex(f.target, p)))
    rep.add("F_p is everything", filt.piece(p).dims == filt.complex.dims)
    rep.add("F_p / F_(p-1) = St(suspension of A)",
            same_cyclic_complex(filt.graded(p), steenrod_complex(f.source.suspend(), p)))
    for i in range(1, p):
        free = is_induced(filt.graded(i))
        rep.add(f"graded piece {i} is degreewise free", all(free.values()), witness=free)
    return rep
