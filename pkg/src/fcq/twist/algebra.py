"""Finite-dimensional Z-graded (super) algebras and Hopf algebras over F_p.

Structure constants are dense integer arrays: ``mult[i, j, k]`` is the
coefficient of ``e_k`` in ``e_i e_j``, ``comult[i, j, k]`` the coefficient of
``e_j (x) e_k`` in ``Delta(e_i)``.  Tensor products of algebras use the Koszul
rule ``(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

import numpy as np

from fcq.exactalg.field import require_odd_prime
from fcq.homalg import linalg as la
from fcq.report import VerificationReport


@dataclass
class SuperAlgebra:
    p: int
    names: list[str]
    degrees: list[int]
    mult: np.ndarray
    unit: np.ndarray
    commutative: bool = False

    def __post_init__(self):
        require_odd_prime(self.p)
        n = len(self.names)
        self.mult = la.mod(np.asarray(self.mult, dtype=np.int64).reshape(n, n, n), self.p)
        self.unit = la.mod(np.asarray(self.unit, dtype=np.int64).reshape(n), self.p)
        if len(self.degrees) != n:
            raise ValueError("one degree per basis element")

    @property
    def dim(self) -> int:
        return len(self.names)

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def mul(self, u, v) -> np.ndarray:
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        return np.einsum("i,j,ijk->k", u, v, self.mult) % self.p

    def homogeneous_degree(self, v) -> int | None:
        degs = {self.degrees[i] for i in np.nonzero(np.asarray(v) % self.p)[0]}
        return degs.pop() if len(degs) == 1 else None

    def graded_dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def check(self) -> VerificationReport:
        rep = VerificationReport("algebra axioms")
        p, n = self.p, self.dim
        left = np.einsum("ijm,mkl->ijkl", self.mult, self.mult) % p
        right = np.einsum("jkm,iml->ijkl", self.mult, self.mult) % p
        bad = np.argwhere(left != right)
        rep.add("associativity", bad.size == 0, witness=bad[:1].tolist())
        ok_unit = all(np.array_equal(self.mul(self.unit, self.basis_vector(i)), self.basis_vector(i))
                      and np.array_equal(self.mul(self.basis_vector(i), self.unit), self.basis_vector(i))
                      for i in range(n))
        rep.add("unit", ok_unit)
        graded = all(self.mult[i, j, k] == 0 or self.degrees[k] == self.degrees[i] + self.degrees[j]
                     for i in range(n) for j in range(n) for k in range(n))
        rep.add("multiplication respects degree", graded)
        rep.add("unit in degree 0", all(self.degrees[i] == 0 for i in np.nonzero(self.unit)[0]))
        if self.commutative:
            rep.add("graded commutative", self.is_graded_commutative())
        return rep

    def is_graded_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(self.dim):
                s = -1 if (self.degrees[i] * self.degrees[j]) % 2 else 1
                if not np.array_equal(self.mult[i, j], (s * self.mult[j, i]) % self.p):
                    return False
        return True

    def is_homomorphism(self, f, target: "SuperAlgebra") -> bool:
        """f given as a (target.dim x self.dim) matrix."""
        f = la.mod(np.asarray(f, dtype=np.int64), self.p)
        if not np.array_equal(f @ self.unit % self.p, target.unit):
            return False
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = f @ self.mult[i, j] % self.p
                rhs = target.mul(f[:, i], f[:, j])
                if not np.array_equal(lhs, rhs):
                    return False
        return True

    def to_json(self) -> dict:
        return {"p": self.p, "basis": list(self.names), "degrees": list(self.degrees),
                "mult": self.mult.tolist(), "unit": self.unit.tolist(),
                "commutative": self.commutative}

    @classmethod
    def from_json(cls, data) -> "SuperAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["p"]), list(data["basis"]), [int(d) for d in data["degrees"]],
                   np.array(data["mult"]), np.array(data["unit"]), bool(data.get("commutative", False)))


def graded_map_ok(f, source_degrees, target_degrees) -> bool:
    f = np.asarray(f)
    return all(f[k, i] == 0 or source_degrees[i] == target_degrees[k]
               for k in range(f.shape[0]) for i in range(f.shape[1]))


# -- a few standard algebras ------------------------------------------------

def ground_field(p: int) -> SuperAlgebra:
    return SuperAlgebra(p, ["1"], [0], [[[1]]], [1], True)


def truncated_polynomial(p: int, k: int, degree: int, name: str = "x") -> SuperAlgebra:
    """F_p[x]/x^k with |x| = degree; for odd x and k > 2 this is associative but not graded commutative."""
    mult = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            if i + j < k:
                mult[i, j, i + j] = 1
    names = ["1"] + [name if i == 1 else f"{name}^{i}" for i in range(1, k)]
    unit = np.eye(k, dtype=np.int64)[0]
    comm = degree % 2 == 0 or k <= 2
    return SuperAlgebra(p, names, [i * degree for i in range(k)], mult, unit, comm)


def exterior(p: int, degrees: list[int]) -> SuperAlgebra:
    """Free graded-commutative algebra on odd generators: basis = subsets in increasing order."""
    if any(d % 2 == 0 for d in degrees):
        raise ValueError("exterior generators must have odd degree")
    g = len(degrees)
    subsets = [tuple(i for i in range(g) if mask >> i & 1) for mask in range(2 ** g)]
    subsets.sort(key=lambda s: (len(s), s))
    pos = {s: i for i, s in enumerate(subsets)}
    n = len(subsets)
    mult = np.zeros((n, n, n), dtype=np.int64)
    for a, S in enumerate(subsets):
        for b, T in enumerate(subsets):
            if set(S) & set(T):
                continue
            inversions = sum(1 for s in S for t in T if s > t)
            mult[a, b, pos[tuple(sorted(S + T))]] = -1 if inversions % 2 else 1
    letters = "xi eta zeta theta".split()
    names = ["1" if not S else "".join(letters[i] if i < len(letters) else f"g{i}" for i in S)
             for S in subsets]
    degs = [sum(degrees[i] for i in S) for S in subsets]
    unit = np.eye(n, dtype=np.int64)[0]
    return SuperAlgebra(p, names, degs, mult, unit, True)


def square_zero(p: int, degrees: list[int]) -> SuperAlgebra:
    """F_p + V with V^2 = 0."""
    n = 1 + len(degrees)
    mult = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        mult[0, i, i] = mult[i, 0, i] = 1
    return SuperAlgebra(p, ["1"] + [f"v{i}" for i in range(1, n)], [0] + list(degrees), mult,
                        np.eye(n, dtype=np.int64)[0], True)


def upper_triangular(p: int) -> SuperAlgebra:
    """2x2 upper triangular matrices, basis E11, E12, E22, all in degree 0."""
    idx = {(0, 0): 0, (0, 1): 1, (1, 1): 2}
    mult = np.zeros((3, 3, 3), dtype=np.int64)
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                mult[i, j, idx[(a, d)]] = 1
    return SuperAlgebra(p, ["E11", "E12", "E22"], [0, 0, 0], mult, np.array([1, 0, 1]), False)


def product_algebra(p: int, k: int) -> SuperAlgebra:
    """F_p^k with componentwise product."""
    mult = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        mult[i, i, i] = 1
    return SuperAlgebra(p, [f"u{i}" for i in range(k)], [0] * k, mult, np.ones(k, dtype=np.int64), True)


def change_basis(A: SuperAlgebra, g: np.ndarray) -> SuperAlgebra:
    """Re-express A in the basis given by the columns of g (must be degree-preserving and invertible)."""
    p = A.p
    g = la.mod(np.asarray(g, dtype=np.int64), p)
    ginv = la.solve(g, la.identity(A.dim), p)
    if ginv is None:
        raise ValueError("basis change is not invertible")
    ginv = np.asarray(ginv).reshape(A.dim, A.dim)
    mult = np.einsum("ai,bj,abc,kc->ijk", g, g, A.mult, ginv) % p
    unit = ginv @ A.unit % p
    return SuperAlgebra(p, [f"b{i}" for i in range(A.dim)], list(A.degrees), mult, unit, A.commutative)


def random_graded_automorphism(rng: random.Random, degrees: list[int], p: int) -> np.ndarray:
    n = len(degrees)
    while True:
        g = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                if degrees[i] == degrees[j]:
                    g[i, j] = rng.randrange(p)
        if la.rank(g, p) == n:
            return g


def random_super_algebra(rng: random.Random, p: int, max_dim: int = 3) -> SuperAlgebra:
    """A random associative unital graded algebra of dimension <= max_dim."""
    choices = ["field", "trunc", "odd-trunc", "square-zero", "product"]
    if max_dim >= 2:
        choices.append("exterior")
    if max_dim >= 3:
        choices.append("triangular")
    kind = rng.choice(choices)
    if kind == "field" or max_dim < 2:
        A = ground_field(p)
    elif kind == "trunc":
        A = truncated_polynomial(p, rng.randint(2, max_dim), 2 * rng.randint(0, 2))
    elif kind == "odd-trunc":
        A = truncated_polynomial(p, rng.randint(2, max_dim), 2 * rng.randint(0, 1) + 1)
    elif kind == "square-zero":
        A = square_zero(p, [rng.randint(0, 4) for _ in range(rng.randint(1, max_dim - 1))])
    elif kind == "product":
        A = product_algebra(p, rng.randint(2, max_dim))
    elif kind == "exterior":
        A = exterior(p, [rng.choice([1, 3])])
    else:
        A = upper_triangular(p)
    return change_basis(A, random_graded_automorphism(rng, A.degrees, p))


@dataclass
class SuperHopf:
    algebra: SuperAlgebra
    comult: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        n, p = self.algebra.dim, self.algebra.p
        self.comult = la.mod(np.asarray(self.comult, dtype=np.int64).reshape(n, n, n), p)
        self.counit = la.mod(np.asarray(self.counit, dtype=np.int64).reshape(n), p)
        self.antipode = la.mod(np.asarray(self.antipode, dtype=np.int64).reshape(n, n), p)

    @property
    def p(self) -> int:
        return self.algebra.p

    def tensor_mult(self) -> np.ndarray:
        """Structure constants of A (x) A on the basis e_i (x) e_j, indexed (i, j)."""
        A, p = self.algebra, self.p
        n = A.dim
        deg = np.array(A.degrees)
        sign = np.where(np.outer(deg, deg) % 2 == 1, -1, 1)  # sign[b, c] = (-1)^{|b||c|}
        # (a(x)b)(c(x)d) = sign[b,c] ac (x) bd
        return np.einsum("bc,ack,bdl->abcdkl", sign, A.mult, A.mult) % p

    def check(self) -> VerificationReport:
        A, p = self.algebra, self.p
        n = A.dim
        rep = VerificationReport("Hopf axioms")
        rep.extend(A.check(), "algebra: ")
        D, e, S = self.comult, self.counit, self.antipode
        left = np.einsum("ijk,jab->iabk", D, D) % p
        right = np.einsum("ijk,kab->ijab", D, D) % p
        rep.add("coassociativity", np.array_equal(left, right))
        l_counit = np.einsum("ijk,j->ik", D, e) % p
        r_counit = np.einsum("ijk,k->ij", D, e) % p
        ident = la.identity(n)
        rep.add("counit", np.array_equal(l_counit, ident) and np.array_equal(r_counit, ident))
        degree_ok = all(D[i, j, k] == 0 or A.degrees[i] == A.degrees[j] + A.degrees[k]
                        for i in range(n) for j in range(n) for k in range(n))
        rep.add("comultiplication respects degree", degree_ok)
        T = self.tensor_mult()
        # Delta(e_a e_c) = Delta(e_a) Delta(e_c)
        lhs = np.einsum("ack,kjl->acjl", A.mult, D) % p
        rhs = np.einsum("axy,czw,xyzwjl->acjl", D, D, T) % p
        rep.add("comultiplication is multiplicative", np.array_equal(lhs, rhs))
        rep.add("counit is multiplicative",
                np.array_equal(np.einsum("ack,k->ac", A.mult, e) % p, np.outer(e, e) % p))
        rep.add("Delta(1) = 1 (x) 1", np.array_equal(np.einsum("i,ijk->jk", A.unit, D) % p,
                                                  np.outer(A.unit, A.unit) % p))
        rep.add("counit(1) = 1", int(e @ A.unit % p) == 1)
        eta_eps = np.outer(A.unit, e) % p  # column i: eps(e_i) * 1
        left_s = np.einsum("ijk,aj,akm->mi", D, S, A.mult) % p
        right_s = np.einsum("ijk,ak,jam->mi", D, S, A.mult) % p
        rep.add("antipode", np.array_equal(left_s, eta_eps) and np.array_equal(right_s, eta_eps))
        return rep

    def to_json(self) -> dict:
        return {"algebra": self.algebra.to_json(), "comult": self.comult.tolist(),
                "counit": self.counit.tolist(), "antipode": self.antipode.tolist()}

    @classmethod
    def from_json(cls, data) -> "SuperHopf":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(SuperAlgebra.from_json(data["algebra"]), np.array(data["comult"]),
                   np.array(data["counit"]), np.array(data["antipode"]))


def group_algebra_cyclic(p: int, order: int) -> SuperHopf:
    """F_p[Z/order] with group-like basis g^0 .. g^{order-1}."""
    n = order
    mult = np.zeros((n, n, n), dtype=np.int64)
    comult = np.zeros((n, n, n), dtype=np.int64)
    S = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        comult[i, i, i] = 1
        S[(-i) % n, i] = 1
        for j in range(n):
            mult[i, j, (i + j) % n] = 1
    names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    A = SuperAlgebra(p, names, [0] * n, mult, np.eye(n, dtype=np.int64)[0], True)
    return SuperHopf(A, comult, np.ones(n, dtype=np.int64), S)


def exterior_hopf(p: int, degrees: list[int]) -> SuperHopf:
    """Exterior algebra with primitive odd generators."""
    A = exterior(p, degrees)
    g = len(degrees)
    subsets = [tuple(i for i in range(g) if mask >> i & 1) for mask in range(2 ** g)]
    subsets.sort(key=lambda s: (len(s), s))
    pos = {s: i for i, s in enumerate(subsets)}
    n = A.dim
    comult = np.zeros((n, n, n), dtype=np.int64)
    S = np.zeros((n, n), dtype=np.int64)
    for a, U in enumerate(subsets):
        # Delta(x_U) = sum over splittings U = V + W of the shuffle sign x_V (x) x_W
        for mask in range(2 ** len(U)):
            V = tuple(u for k, u in enumerate(U) if mask >> k & 1)
            W = tuple(u for k, u in enumerate(U) if not mask >> k & 1)
            inv = sum(1 for v in V for w in W if v > w)
            comult[a, pos[V], pos[W]] += -1 if inv % 2 else 1
        S[a, a] = -1 if len(U) % 2 else 1
    counit = np.eye(n, dtype=np.int64)[0]
    return SuperHopf(A, comult, counit, S)
