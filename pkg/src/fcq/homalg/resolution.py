"""The periodic resolution of the trivial module and the comparison map zeta.

``periodic_resolution(p)`` is the complex

    F_p --N--> F_p[mu_p] --(s-1)--> F_p[mu_p] --N--> ... --(s-1)--> F_p[mu_p]

in degrees ``1-p, ..., 0``.  Shifting it down by one gives the source of
``zeta``; the target ``E`` is the quotient of the p-th tensor power of the
cone of ``id: F_p -> F_p`` by the subcomplex of words with no cone factor.
A word with cone factors at positions ``S`` is written ``1_S``.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from fcq.exactalg.field import require_odd_prime
from fcq.homalg import linalg as la
from fcq.homalg.complexes import ChainMap, Complex, CyclicComplex, cyclic_shift, mapping_cone
from fcq.homalg.steenrod import steenrod_complex
from fcq.report import VerificationReport


def periodic_resolution(p: int) -> tuple[CyclicComplex, ChainMap, ChainMap]:
    """Return (P, aug, top) where aug: P -> F_p and top: P -> F_p[p-1]."""
    require_odd_prime(p)
    lo = 1 - p
    dims = {lo: 1}
    sigma = {lo: la.identity(1)}
    d = {lo: np.ones((p, 1), dtype=np.int64)}
    shift = cyclic_shift(p)
    norm = np.ones((p, p), dtype=np.int64)
    for j in range(lo + 1, 1):
        dims[j] = p
        sigma[j] = shift
        if j < 0:
            d[j] = shift - la.identity(p) if j % 2 else norm
    P = CyclicComplex(dims, d, sigma, p, p)
    aug = ChainMap(P, CyclicComplex.trivial(p, 0), {0: np.ones((1, p), dtype=np.int64)})
    top = ChainMap(P, CyclicComplex.trivial(p, lo), {lo: [[1]]})
    return P, aug, top


def even_runs(T) -> bool:
    """Every maximal run of consecutive integers in T has even length."""
    T = sorted(T)
    run = 0
    for k, t in enumerate(T):
        if k and t == T[k - 1] + 1:
            run += 1
        else:
            if run % 2:
                return False
            run = 1
    return run % 2 == 0


def subset_complex(p: int) -> CyclicComplex:
    """E: the words of St(cone(id_{F_p})) with at least one cone factor.

    In degree -k the basis is the k-subsets S of {1..p}, ordered as the words
    of the tensor power.  Labels are the subsets as sorted tuples.
    """
    require_odd_prime(p)
    point = Complex({0: 1}, {}, p)
    cone = mapping_cone(ChainMap(point, point, {0: [[1]]}))
    st = steenrod_complex(cone, p)
    a_index = [g for g, (n, i) in enumerate(st.base_basis) if cone.label(n, i)[0] == "A"]
    keep = {}
    for n in st.degrees:
        keep[n] = [i for i, w in enumerate(st.words(n)) if any(g in a_index for g in w)]
    E = st.restrict(keep)
    E.labels = {n: [tuple(j + 1 for j, g in enumerate(w) if g in a_index) for w in E.labels[n]]
                for n in E.degrees}
    return E


def subset_complex_direct(p: int) -> CyclicComplex:
    """E from its closed form: d 1_S = sum_j (-1)^j 1_{S - s_j}; sigma shifts S by +1 mod p."""
    subsets = {-k: list(itertools.combinations(range(1, p + 1), k)) for k in range(1, p + 1)}
    index = {n: {S: i for i, S in enumerate(v)} for n, v in subsets.items()}
    d, sigma = {}, {}
    for n, Ss in subsets.items():
        sm = la.zeros(len(Ss), len(Ss))
        for c, S in enumerate(Ss):
            e = -1 if p in S else 0
            sm[index[n][tuple(sorted(s % p + 1 for s in S))], c] = -1 if (e * (n - e)) % 2 else 1
        sigma[n] = sm
        if n + 1 in index:
            dm = la.zeros(len(index[n + 1]), len(Ss))
            for c, S in enumerate(Ss):
                for j, s in enumerate(S):
                    dm[index[n + 1][S[:j] + S[j + 1:]], c] += -1 if j % 2 else 1
            d[n] = dm
    return CyclicComplex({n: len(v) for n, v in subsets.items()}, d, sigma, p, p, subsets)


def zeta_generator_images(p: int) -> dict[int, dict[tuple[int, ...], int]]:
    """Images of the free generators in degrees -1..-(p-1) as integer vectors on subsets."""
    out = {}
    for i in range((p - 1) // 2):
        c = -math.factorial(i)
        out[-(2 * i + 1)] = {(1,) + T: c for T in itertools.combinations(range(2, p + 1), 2 * i)
                             if even_runs(T)}
        out[-(2 * i + 2)] = {(1, 2) + T: c for T in itertools.combinations(range(3, p + 1), 2 * i)
                             if even_runs(T)}
    return out


def zeta_map(p: int, E: CyclicComplex | None = None) -> ChainMap:
    """The equivariant comparison map from the shifted periodic resolution to E.

    Free generators go to the even-run sums; the value on the rank-one bottom
    term is solved from the chain-map condition.
    """
    require_odd_prime(p)
    P, _, _ = periodic_resolution(p)
    src = P.shift(-1)
    E = E or subset_complex(p)
    mats = {}
    for n, vec in zeta_generator_images(p).items():
        pos = {S: i for i, S in enumerate(E.labels[n])}
        g = la.zeros(E.dim(n), 1)
        for S, c in vec.items():
            g[pos[S], 0] = c % p
        cols = [g]
        for _ in range(1, p):
            cols.append(la.matmul(E.sig(n), cols[-1], p))
        mats[n] = np.concatenate(cols, axis=1)
    bottom = -p
    rhs = la.matmul(mats[bottom + 1], src.diff(bottom), p)
    v = la.solve(E.diff(bottom), rhs, p)
    if v is None:
        raise ArithmeticError("no value on the bottom term makes zeta a chain map")
    mats[bottom] = np.asarray(v).reshape(E.dim(bottom), 1)
    return ChainMap(src, E, mats)


def expected_zeta_scalar(p: int) -> int:
    """-((p-1)/2)! as an integer (before reduction mod p)."""
    return -math.factorial((p - 1) // 2)


def verify_zeta(p: int) -> VerificationReport:
    require_odd_prime(p)
    rep = VerificationReport(f"zeta, p={p}")
    E = subset_complex(p)
    direct = subset_complex_direct(p)
    same = E.dims == direct.dims and all(
        np.array_equal(E.diff(n), direct.diff(n)) and np.array_equal(E.sig(n), direct.sig(n))
        and E.labels[n] == direct.labels[n] for n in E.degrees)
    rep.add("target from tensor power matches closed form", same)
    rep.add("target invariants", E.check().passed)
    z = zeta_map(p, E)
    rep.add("zeta is a chain map", z.is_chain_map())
    rep.add("zeta is equivariant", z.is_equivariant())

    # boundary to the suspended unit: each singleton goes to -1
    eps = la.mod(-np.ones((1, E.dim(-1)), dtype=np.int64), p)
    eps_d = la.matmul(eps, E.diff(-2), p) if E.dim(-2) else la.zeros(1, 0)
    rep.add("epsilon is a chain map", not eps_d.any(), witness=eps_d)
    _, aug, _ = periodic_resolution(p)
    comp = la.matmul(eps, z.matrix(-1), p)
    rep.add("epsilon zeta = augmentation", np.array_equal(comp, aug.matrix(0)), witness=comp)

    full = tuple(range(1, p + 1))
    idx = E.labels[-p].index(full)
    scalar = int(z.matrix(-p)[idx, 0]) % p
    expected = expected_zeta_scalar(p)
    rep.add(f"gamma-delta-zeta = {expected}", scalar == expected % p,
            detail=f"{scalar} mod {p}", witness={"got": scalar, "want": expected % p})
    return rep
