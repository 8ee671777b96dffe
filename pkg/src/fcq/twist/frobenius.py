"""The Frobenius twist A -> A^(1) = ker(1 - sigma) / im(N) on A^{(x)p}.

Everything here is computed on the tensor power itself: the cyclic action is
the Koszul-signed rotation from ``fcq.homalg.steenrod``, classes are reduced
against a fixed echelon basis of im(N), and products go through the
Koszul-signed product of tensor words.  ``sign_factor`` is the closed form the
linear-algebra route is compared against.
"""

from __future__ import annotations

from math import comb

import numpy as np

from fcq.exactalg.field import require_odd_prime
from fcq.homalg import linalg as la
from fcq.homalg.complexes import Complex
from fcq.homalg.steenrod import TensorPower, steenrod_complex
from fcq.twist.algebra import SuperAlgebra, SuperHopf


def sign_factor(i: int, j: int, p: int) -> int:
    """(-1)^{ij p(p-1)/2} for parities (or degrees) i, j."""
    require_odd_prime(p)
    return -1 if (i * j * comb(p, 2)) % 2 else 1


def graded_twist_dims(V: dict[int, int], p: int) -> dict[int, int]:
    """Graded dimensions of the twist of a graded vector space: degree n moves to pn."""
    require_odd_prime(p)
    return {p * n: d for n, d in sorted(V.items()) if d}


def tate_zero_dims(V: dict[int, int], p: int) -> dict[int, int]:
    """ker(1 - sigma)/im N on the p-th tensor power of V, computed degree by degree."""
    C = Complex({n: d for n, d in V.items() if d}, {}, p)
    T = steenrod_complex(C, p)
    out = {}
    for n in T.degrees:
        dim = T.dim(n)
        tau = la.mod(T.sig(n) - la.identity(dim), p)
        k = la.kernel_dim(tau, p) - la.rank(T.norm(n), p)
        if k:
            out[n] = k
    return out


class TateTwist:
    """A^{(x)p} for a graded basis, with class coordinates in the basis [e_i^{(x)p}]."""

    def __init__(self, degrees: list[int], p: int):
        require_odd_prime(p)
        self.p = p
        self.degrees = list(degrees)
        dims: dict[int, int] = {}
        self.slot: list[int] = []
        for d in self.degrees:
            self.slot.append(dims.get(d, 0))
            dims[d] = dims.get(d, 0) + 1
        base = Complex(dims, {}, p)
        self.power: TensorPower = steenrod_complex(base, p)
        gpos = {b: g for g, b in enumerate(self.power.base_basis)}
        # global basis index of algebra basis vector i
        self.glob = [gpos[(d, s)] for d, s in zip(self.degrees, self.slot)]
        self.local = {g: i for i, g in enumerate(self.glob)}
        self._solvers: dict[int, tuple[np.ndarray, list[int]]] = {}

    def diagonal_word(self, i: int) -> tuple[int, ...]:
        return (self.glob[i],) * self.p

    def _system(self, n: int):
        """Columns: diagonal words of degree n, then an echelon basis of im N."""
        if n not in self._solvers:
            T, p = self.power, self.p
            diag = [i for i, d in enumerate(self.degrees) if d * p == n]
            idx = T.word_index[n]
            cols = la.zeros(T.dim(n), len(diag))
            for c, i in enumerate(diag):
                cols[idx[self.diagonal_word(i)], c] = 1
            image = la.column_space(T.norm(n), p)
            self._solvers[n] = (np.concatenate([cols, image], axis=1), diag)
        return self._solvers[n]

    def is_cycle(self, n: int, v: np.ndarray) -> bool:
        T = self.power
        return not la.mod(la.matmul(T.sig(n), v.reshape(-1, 1), self.p).ravel() - v, self.p).any()

    def class_coordinates(self, n: int, v: np.ndarray) -> dict[int, int]:
        """Write a sigma-invariant v in degree n as sum c_i [e_i^{(x)p}] + N(...)."""
        if n not in self.power.word_index:
            if np.asarray(v).any():
                raise ValueError(f"no tensor words in degree {n}")
            return {}
        v = la.mod(np.asarray(v, dtype=np.int64), self.p)
        if not self.is_cycle(n, v):
            raise ValueError("vector is not invariant under the cyclic action")
        system, diag = self._system(n)
        x = la.solve(system, v, self.p)
        if x is None:
            raise ArithmeticError("invariant vector not spanned by diagonal classes and norms")
        return {i: int(x[c]) for c, i in enumerate(diag) if int(x[c])}

    def tensor_vector(self, vectors: list[np.ndarray]) -> tuple[int, np.ndarray]:
        """v_1 (x) ... (x) v_p for homogeneous vectors in the algebra basis."""
        partial = {(): 1}
        for v in vectors:
            nxt = {}
            for word, c in partial.items():
                for i in np.nonzero(v)[0]:
                    key = word + (self.glob[int(i)],)
                    nxt[key] = (nxt.get(key, 0) + c * int(v[i])) % self.p
            partial = {w: c for w, c in nxt.items() if c}
        if not partial:
            return 0, np.zeros(0, dtype=np.int64)
        deg_of = {g: self.degrees[i] for g, i in self.local.items()}
        n = sum(deg_of[g] for g in next(iter(partial)))
        out = np.zeros(self.power.dim(n), dtype=np.int64)
        idx = self.power.word_index[n]
        for w, c in partial.items():
            out[idx[w]] = c
        return n, out


def _word_product(A: SuperAlgebra, a: list[int], b: list[int]) -> tuple[int, list[np.ndarray]]:
    """(a_1 (x) ... (x) a_p)(b_1 (x) ... (x) b_p) as (sign, [a_x b_x]) for basis indices."""
    exponent = sum(A.degrees[a[x]] * A.degrees[b[y]] for x in range(len(a)) for y in range(x))
    sign = -1 if exponent % 2 else 1
    return sign, [A.mult[ax, bx] for ax, bx in zip(a, b)]


def frobenius_twist_algebra(A: SuperAlgebra, p: int | None = None) -> SuperAlgebra:
    """A^(1) with basis [e_i^{(x)p}] in degrees p|e_i|, structure constants from A^{(x)p}."""
    p = p or A.p
    if p != A.p:
        raise ValueError("the twist is taken at the characteristic of the ground field")
    tw = TateTwist(A.degrees, p)
    n = A.dim
    mult = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            sign, factors = _word_product(A, [i] * p, [j] * p)
            deg, vec = tw.tensor_vector(factors)
            if not vec.any():
                continue
            for k, c in tw.class_coordinates(deg, sign * vec).items():
                mult[i, j, k] = c
    deg, uvec = tw.tensor_vector([A.unit] * p)
    unit = np.zeros(n, dtype=np.int64)
    for k, c in tw.class_coordinates(deg, uvec).items():
        unit[k] = c
    names = [f"{s}^(1)" for s in A.names]
    return SuperAlgebra(p, names, [p * d for d in A.degrees], mult, unit, A.commutative)


def twist_morphism(f, A: SuperAlgebra, B: SuperAlgebra) -> np.ndarray:
    """f^(1) on the diagonal class bases: [e_i^{(x)p}] -> class of f(e_i)^{(x)p}."""
    p = A.p
    f = la.mod(np.asarray(f, dtype=np.int64), p)
    tb = TateTwist(B.degrees, p)
    out = np.zeros((B.dim, A.dim), dtype=np.int64)
    for i in range(A.dim):
        deg, vec = tb.tensor_vector([f[:, i]] * p)
        if not vec.any():
            continue
        for k, c in tb.class_coordinates(deg, vec).items():
            out[k, i] = c
    return out


def dual_algebra(H: SuperHopf) -> SuperAlgebra:
    """The algebra on the dual basis whose product is the transpose of Delta."""
    A = H.algebra
    mult = np.transpose(H.comult, (1, 2, 0))
    return SuperAlgebra(A.p, [f"{s}*" for s in A.names], list(A.degrees), mult, H.counit)


def hopf_twist(H: SuperHopf, p: int | None = None) -> SuperHopf:
    """Twist of a Hopf algebra on the identification A^(1) = A with degrees times p.

    m and 1 come from the tensor power; Delta picks up (-1)^{C(p,2)|e_j||e_k|}
    on e_j (x) e_k; the counit is eps^p = eps and the antipode is unchanged.
    """
    p = p or H.p
    rep = H.check()
    if not rep.passed:
        raise ValueError(f"input is not a Hopf algebra: {rep.failures()[0].name}")
    A1 = frobenius_twist_algebra(H.algebra, p)
    deg = H.algebra.degrees
    n = H.algebra.dim
    comult = H.comult.copy()
    for j in range(n):
        for k in range(n):
            if sign_factor(deg[j], deg[k], p) < 0:
                comult[:, j, k] = -comult[:, j, k]
    counit = np.array([pow(int(c), p, p) for c in H.counit], dtype=np.int64)
    return SuperHopf(A1, comult, counit, H.antipode.copy())
