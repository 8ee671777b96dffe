"""Chain-level p-th tensor powers with their cyclic symmetry.

The generator sigma sends a word ``b_1 (x) ... (x) b_p`` to
``(-1)^{e(n-e)} b_p (x) b_1 (x) ... (x) b_{p-1}``, where ``e = |b_p|`` and ``n``
is the total degree: the factor moved to the front picks up the Koszul sign
of passing the other ``p - 1`` factors.  The differential is the Koszul-signed
Leibniz rule.  Bases are words over the base complex's global basis, ordered
lexicographically inside each degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from fcq.exactalg.field import require_odd_prime
from fcq.homalg import linalg as la
from fcq.homalg.complexes import ChainMap, Complex, CyclicComplex, mapping_cone
from fcq.report import VerificationReport

Word = tuple[int, ...]


class TensorPower(CyclicComplex):
    """C^{(x)p} with the cyclic action; remembers the base complex and word indexing."""

    def __init__(self, base: Complex, p: int, dims, d, sigma, words: dict[int, list[Word]], basis):
        super().__init__(dims, d, sigma, base.modulus, p, labels=words)
        self.base = base
        self.power = p
        self.base_basis: list[tuple[int, int]] = basis
        self.word_index = {n: {w: i for i, w in enumerate(ws)} for n, ws in words.items()}

    def words(self, n: int) -> list[Word]:
        return self.labels.get(n, []) if self.labels else []


def global_basis(C: Complex) -> list[tuple[int, int]]:
    return [(n, i) for n in C.degrees for i in range(C.dim(n))]


def steenrod_complex(C: Complex, p: int) -> TensorPower:
    """The p-th tensor power of C as a complex with mu_p action."""
    require_odd_prime(p)
    basis = global_basis(C)
    pos = {b: g for g, b in enumerate(basis)}
    deg = [n for n, _ in basis]
    # column of the base differential at each global basis vector
    dcol: list[list[tuple[int, int]]] = []
    for n, i in basis:
        col = C.diff(n)[:, i]
        dcol.append([(pos[(n + 1, int(j))], int(col[j])) for j in np.nonzero(col)[0]])

    words: dict[int, list[Word]] = {}
    for w in itertools.product(range(len(basis)), repeat=p):
        words.setdefault(sum(deg[g] for g in w), []).append(w)
    index = {n: {w: i for i, w in enumerate(ws)} for n, ws in words.items()}
    dims = {n: len(ws) for n, ws in words.items()}

    d: dict[int, np.ndarray] = {}
    sigma: dict[int, np.ndarray] = {}
    for n, ws in words.items():
        tgt = index.get(n + 1, {})
        dm = la.zeros(len(tgt), len(ws)) if tgt else None
        sm = la.zeros(len(ws), len(ws))
        for col, w in enumerate(ws):
            if dm is not None:
                before = 0
                for j, g in enumerate(w):
                    sign = -1 if before % 2 else 1
                    for t, c in dcol[g]:
                        dm[tgt[w[:j] + (t,) + w[j + 1:]], col] += sign * c
                    before += deg[g]
            e = deg[w[-1]]
            sm[index[n][(w[-1],) + w[:-1]], col] = -1 if (e * (n - e)) % 2 else 1
        if dm is not None:
            d[n] = dm
        sigma[n] = sm
    return TensorPower(C, p, dims, d, sigma, words, basis)


def tensor_map(factors: list[ChainMap], src: TensorPower, tgt: TensorPower) -> ChainMap:
    """f_1 (x) ... (x) f_p between tensor powers (all f_j of degree 0, so no Koszul signs)."""
    p = src.power
    if len(factors) != p:
        raise ValueError(f"need {p} factors, got {len(factors)}")
    sb, tb = src.base_basis, tgt.base_basis
    tpos = {b: g for g, b in enumerate(tb)}
    cols: list[list[list[tuple[int, int]]]] = []
    for f in factors:
        per = []
        for n, i in sb:
            col = f.matrix(n)[:, i]
            per.append([(tpos[(n, int(j))], int(col[j])) for j in np.nonzero(col)[0]])
        cols.append(per)
    mats = {}
    for n, ws in (src.labels or {}).items():
        tgt_index = tgt.word_index.get(n)
        if not tgt_index:
            continue
        m = la.zeros(len(tgt_index), len(ws))
        for c, w in enumerate(ws):
            partial = {(): 1}
            for j, g in enumerate(w):
                nxt = {}
                for prefix, v in partial.items():
                    for t, a in cols[j][g]:
                        key = prefix + (t,)
                        nxt[key] = nxt.get(key, 0) + v * a
                partial = nxt
                if not partial:
                    break
            for word, v in partial.items():
                m[tgt_index[word], c] += v
        mats[n] = m
    return ChainMap(src, tgt, mats)


def steenrod_chainmap(f: ChainMap, p: int, src: TensorPower | None = None,
                      tgt: TensorPower | None = None) -> ChainMap:
    """f^{(x)p}: St(A) -> St(B), equivariant for the two cyclic structures."""
    require_odd_prime(p)
    if not f.is_chain_map():
        raise ValueError("input is not a chain map")
    src = src or steenrod_complex(f.source, p)
    tgt = tgt or steenrod_complex(f.target, p)
    return tensor_map([f] * p, src, tgt)


def conjugate_average(h: ChainMap, order: int) -> ChainMap:
    """Av(h) = sum_k sigma^k h sigma^{-k}."""
    src, tgt = h.source, h.target
    mod = h.modulus
    mats = {}
    for n in h.degrees:
        if not (src.dim(n) and tgt.dim(n)):
            continue
        acc = la.zeros(tgt.dim(n), src.dim(n))
        for k in range(order):
            left = tgt.sigma_power(n, k)
            right = src.sigma_power(n, order - k)
            acc = acc + la.matmul(la.matmul(left, h.matrix(n), mod), right, mod)
        mats[n] = la.mod(acc, mod)
    return ChainMap(src, tgt, mats)


def orbit_representatives(p: int) -> list[Word]:
    """Lexicographically least rotations of the non-constant words in {0, 1}^p."""
    reps = set()
    for w in itertools.product((0, 1), repeat=p):
        if len(set(w)) == 1:
            continue
        reps.add(min(w[k:] + w[:k] for k in range(p)))
    return sorted(reps)


def additivity_defect(f: ChainMap, g: ChainMap, p: int) -> tuple[ChainMap, VerificationReport]:
    """A non-equivariant h with Av(h) = St(f+g) - St(f) - St(g).

    h is the sum, over orbit representatives of the mixed words in {f, g}^p,
    of the corresponding tensor products of maps.
    """
    require_odd_prime(p)
    if f.source.dims != g.source.dims or f.target.dims != g.target.dims:
        raise ValueError("f and g are not parallel")
    src = steenrod_complex(f.source, p)
    tgt = steenrod_complex(f.target, p)
    reps = orbit_representatives(p)
    h = None
    for w in reps:
        term = tensor_map([g if x else f for x in w], src, tgt)
        h = term if h is None else h + term
    if h is None:
        h = ChainMap(src, tgt, {})
    st = lambda m: tensor_map([m] * p, src, tgt)
    defect = st(f + g) - st(f) - st(g)
    av = conjugate_average(h, p)
    rep = VerificationReport(f"additivity defect, p={p}")
    rep.add("orbit count = (2^p - 2)/p", len(reps) == (2 ** p - 2) // p, detail=str(len(reps)))
    diffs = {n: (av.matrix(n) - defect.matrix(n)).tolist() for n in av.degrees
             if not np.array_equal(la.mod(av.matrix(n) - defect.matrix(n), av.modulus), la.zeros(*av.matrix(n).shape))}
    rep.add("Av(h) = St(f+g) - St(f) - St(g)", not diffs, witness=diffs)
    return h, rep


def is_induced(M: CyclicComplex) -> dict[int, bool]:
    """Per degree: is M^n free over F_p[mu_p]?

    Tested by dim ker(sigma - 1) == dim / p, i.e. every Jordan block of
    sigma - 1 has full size p.
    """
    p = M.modulus
    if not p:
        raise ValueError("freeness test needs F_p coefficients")
    out = {}
    for n in M.degrees:
        dim = M.dim(n)
        if dim % M.order:
            out[n] = False
            continue
        tau = la.mod(M.sig(n) - la.identity(dim), p)
        out[n] = la.kernel_dim(tau, p) * M.order == dim
    return out


@dataclass
class ConeFiltration:
    """The filtration of St(cone f) by the number of factors taken from A."""

    f: ChainMap
    p: int
    complex: TensorPower
    counts: dict[int, list[int]]

    def indices(self, n: int, lo: int, hi: int) -> list[int]:
        return [i for i, c in enumerate(self.counts.get(n, [])) if lo <= c <= hi]

    def piece(self, i: int) -> CyclicComplex:
        """F_i: words with at most i factors from A."""
        return self.complex.restrict({n: self.indices(n, 0, i) for n in self.complex.degrees})

    def graded(self, i: int) -> CyclicComplex:
        """F_i / F_{i-1}: words with exactly i factors from A."""
        return self.complex.restrict({n: self.indices(n, i, i) for n in self.complex.degrees})

    def quotient_above(self, i: int) -> CyclicComplex:
        """St(cone f) / F_i."""
        return self.complex.restrict({n: self.indices(n, i + 1, self.p) for n in self.complex.degrees})

    def is_stable(self, i: int) -> bool:
        """F_i is closed under d and sigma."""
        C = self.complex
        for n in C.degrees:
            inside = self.indices(n, 0, i)
            outside_next = self.indices(n + 1, i + 1, self.p)
            if inside and outside_next and C.diff(n)[np.ix_(outside_next, inside)].any():
                return False
            outside = self.indices(n, i + 1, self.p)
            if inside and outside and C.sig(n)[np.ix_(outside, inside)].any():
                return False
        return True

    def __len__(self):
        return self.p + 1


def cone_filtration(f: ChainMap, p: int) -> ConeFiltration:
    require_odd_prime(p)
    C = mapping_cone(f)
    st = steenrod_complex(C, p)
    kind = [C.label(n, i)[0] for n, i in st.base_basis]
    counts = {n: [sum(kind[g] == "A" for g in w) for w in st.words(n)] for n in st.degrees}
    return ConeFiltration(f, p, st, counts)


def same_cyclic_complex(a: CyclicComplex, b: CyclicComplex) -> bool:
    """Equality of dimensions, differentials and sigma as matrices."""
    if a.dims != b.dims:
        return False
    for n in a.degrees:
        if not np.array_equal(la.mod(a.diff(n), a.modulus), la.mod(b.diff(n), b.modulus)):
            return False
        if not np.array_equal(a.sig(n), b.sig(n)):
            return False
    return True
