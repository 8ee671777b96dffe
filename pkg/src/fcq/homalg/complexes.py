"""Finite cochain complexes, their mu_p-equivariant versions, and chain maps.

Conventions: differentials raise degree, ``d[n]`` is the matrix of
``C^n -> C^{n+1}`` with shape ``(dim C^{n+1}, dim C^n)``.  Coefficients live in
F_p (``modulus=p``) or Z (``modulus=0``).  The suspension shifts down:
``(Sigma C)^n = C^{n+1}`` with differential ``-d``.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

import numpy as np

from fcq.homalg import linalg as la
from fcq.report import VerificationReport


def _clean(mats: Mapping[int, Any]) -> dict[int, np.ndarray]:
    return {int(k): np.asarray(v, dtype=np.int64) for k, v in mats.items()}


class Complex:
    def __init__(self, dims: Mapping[int, int], d: Mapping[int, Any] | None = None,
                 modulus: int = 0, labels: Mapping[int, list] | None = None):
        self.dims = {int(k): int(v) for k, v in dims.items() if v}
        self.modulus = modulus
        self.d: dict[int, np.ndarray] = {}
        for n, m in _clean(d or {}).items():
            m = la.mod(m, modulus)
            expected = (self.dim(n + 1), self.dim(n))
            if m.shape != expected:
                if m.size == 0 and 0 in expected:
                    continue
                raise ValueError(f"d^{n} has shape {m.shape}, expected {expected}")
            if m.any():
                self.d[n] = m
        self.labels = {int(k): list(v) for k, v in labels.items()} if labels else None

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def diff(self, n: int) -> np.ndarray:
        m = self.d.get(n)
        return m if m is not None else la.zeros(self.dim(n + 1), self.dim(n))

    @property
    def degrees(self) -> list[int]:
        return sorted(self.dims)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def label(self, n: int, i: int):
        if self.labels is None:
            return (n, i)
        return self.labels[n][i]

    def index_of(self, n: int, label) -> int:
        return self.labels[n].index(label)

    def is_complex(self) -> bool:
        return all(not la.matmul(self.diff(n + 1), self.diff(n), self.modulus).any() for n in self.degrees)

    def check(self) -> VerificationReport:
        rep = VerificationReport("complex invariants")
        for n in self.degrees:
            dd = la.matmul(self.diff(n + 1), self.diff(n), self.modulus)
            rep.add(f"d^{n + 1} d^{n} = 0", not dd.any(), witness=dd)
        return rep

    def cohomology_dims(self) -> dict[int, int]:
        if not self.modulus:
            raise ValueError("cohomology dimensions need a field of coefficients")
        p = self.modulus
        out = {}
        for n in self.degrees:
            h = la.kernel_dim(self.diff(n), p) - la.rank(self.diff(n - 1), p)
            if h:
                out[n] = h
        return out

    def suspend(self) -> "Complex":
        dims = {n - 1: k for n, k in self.dims.items()}
        d = {n - 1: -m for n, m in self.d.items()}
        labels = {n - 1: v for n, v in self.labels.items()} if self.labels else None
        return Complex(dims, d, self.modulus, labels)

    def direct_sum(self, other: "Complex") -> "Complex":
        _same_ring(self, other)
        dims = {n: self.dim(n) + other.dim(n) for n in set(self.dims) | set(other.dims)}
        d = {}
        for n in dims:
            d[n] = _block_diag(self.diff(n), other.diff(n))
        return Complex(dims, d, self.modulus)

    def identity(self) -> "ChainMap":
        return ChainMap(self, self, {n: la.identity(k) for n, k in self.dims.items()})

    def zero_map(self, target: "Complex") -> "ChainMap":
        return ChainMap(self, target, {})

    def to_json(self) -> dict:
        return {
            "p": self.modulus,
            "degrees": {str(n): self.dims[n] for n in self.degrees},
            "d": {str(n): self.d[n].tolist() for n in sorted(self.d)},
        }

    @classmethod
    def from_json(cls, data) -> "Complex":
        if isinstance(data, str):
            data = json.loads(data)
        if "sigma" in data:
            return CyclicComplex.from_json(data)
        return cls({int(k): v for k, v in data["degrees"].items()},
                   {int(k): v for k, v in data.get("d", {}).items()},
                   int(data.get("p", 0)))

    def __repr__(self):
        ring = f"F_{self.modulus}" if self.modulus else "Z"
        return f"{type(self).__name__}({ring}, dims={ {n: self.dims[n] for n in self.degrees} })"


class CyclicComplex(Complex):
    """A complex with a degreewise automorphism ``sigma`` of order dividing ``order``."""

    def __init__(self, dims, d=None, sigma=None, modulus=0, order=None, labels=None):
        super().__init__(dims, d, modulus, labels)
        if order is None:
            order = modulus
        self.order = order
        self.sigma: dict[int, np.ndarray] = {}
        given = _clean(sigma or {})
        for n in self.degrees:
            m = given.get(n)
            if m is None:
                m = la.identity(self.dim(n))
            m = la.mod(m, modulus)
            if m.shape != (self.dim(n), self.dim(n)):
                raise ValueError(f"sigma^{n} has shape {m.shape}")
            self.sigma[n] = m

    @classmethod
    def trivial(cls, p: int, degree: int = 0, dim: int = 1) -> "CyclicComplex":
        return cls({degree: dim}, {}, {}, p, p)

    @classmethod
    def regular(cls, p: int, degree: int = 0) -> "CyclicComplex":
        return cls({degree: p}, {}, {degree: cyclic_shift(p)}, p, p)

    def sig(self, n: int) -> np.ndarray:
        return self.sigma.get(n, la.zeros(0, 0))

    def sigma_power(self, n: int, k: int) -> np.ndarray:
        k %= self.order
        out = la.identity(self.dim(n))
        for _ in range(k):
            out = la.matmul(self.sig(n), out, self.modulus)
        return out

    def norm(self, n: int) -> np.ndarray:
        out = la.zeros(self.dim(n), self.dim(n))
        for k in range(self.order):
            out = out + self.sigma_power(n, k)
        return la.mod(out, self.modulus)

    def underlying(self) -> Complex:
        return Complex(self.dims, self.d, self.modulus, self.labels)

    def check(self) -> VerificationReport:
        rep = super().check()
        rep.title = "cyclic complex invariants"
        p = self.modulus
        for n in self.degrees:
            sp = self.sigma_power(n, self.order)
            rep.add(f"sigma^{self.order} = id in degree {n}",
                    np.array_equal(sp, la.identity(self.dim(n))), witness=sp)
            lhs = la.matmul(self.sigma.get(n + 1, la.zeros(self.dim(n + 1), self.dim(n + 1))), self.diff(n), p)
            rhs = la.matmul(self.diff(n), self.sig(n), p)
            rep.add(f"sigma d = d sigma in degree {n}", np.array_equal(lhs, rhs), witness=lhs - rhs)
        return rep

    def restrict(self, keep: Mapping[int, list[int]]) -> "CyclicComplex":
        """Subquotient on the coordinate subspaces spanned by the given basis indices.

        No stability check is made here; callers test it separately.
        """
        dims = {n: len(ix) for n, ix in keep.items() if ix}
        d, sig, labels = {}, {}, {}
        for n, ix in keep.items():
            if not ix:
                continue
            nxt = keep.get(n + 1, [])
            if nxt:
                d[n] = self.diff(n)[np.ix_(nxt, ix)]
            sig[n] = self.sig(n)[np.ix_(ix, ix)]
            if self.labels:
                labels[n] = [self.labels[n][i] for i in ix]
        return CyclicComplex(dims, d, sig, self.modulus, self.order, labels or None)

    def shift(self, k: int) -> "CyclicComplex":
        """Relabel degrees n -> n + k without changing signs."""
        labels = {n + k: v for n, v in self.labels.items()} if self.labels else None
        return CyclicComplex({n + k: v for n, v in self.dims.items()},
                             {n + k: m for n, m in self.d.items()},
                             {n + k: m for n, m in self.sigma.items()},
                             self.modulus, self.order, labels)

    def direct_sum(self, other: "CyclicComplex") -> "CyclicComplex":
        base = Complex.direct_sum(self, other)
        sig = {n: _block_diag(self.sigma.get(n, la.zeros(self.dim(n), self.dim(n))),
                              other.sigma.get(n, la.zeros(other.dim(n), other.dim(n))))
               for n in base.dims}
        return CyclicComplex(base.dims, base.d, sig, self.modulus, self.order)

    def to_json(self) -> dict:
        out = super().to_json()
        out["sigma"] = {str(n): self.sigma[n].tolist() for n in self.degrees}
        if self.order != self.modulus:
            out["order"] = self.order
        return out

    @classmethod
    def from_json(cls, data) -> "CyclicComplex":
        if isinstance(data, str):
            data = json.loads(data)
        p = int(data.get("p", 0))
        return cls({int(k): v for k, v in data["degrees"].items()},
                   {int(k): v for k, v in data.get("d", {}).items()},
                   {int(k): v for k, v in data.get("sigma", {}).items()},
                   p, int(data.get("order", p)))


class ChainMap:
    """Degree-0 map of complexes given by per-degree matrices (target x source)."""

    def __init__(self, source: Complex, target: Complex, maps: Mapping[int, Any]):
        _same_ring(source, target)
        self.source = source
        self.target = target
        self.modulus = source.modulus
        self.maps: dict[int, np.ndarray] = {}
        for n, m in _clean(maps).items():
            shape = (target.dim(n), source.dim(n))
            if m.size == 0 and 0 in shape:
                continue
            if m.shape != shape:
                raise ValueError(f"map in degree {n} has shape {m.shape}, expected {shape}")
            m = la.mod(m, self.modulus)
            if m.any():
                self.maps[n] = m

    def matrix(self, n: int) -> np.ndarray:
        m = self.maps.get(n)
        return m if m is not None else la.zeros(self.target.dim(n), self.source.dim(n))

    @property
    def degrees(self) -> list[int]:
        return sorted(set(self.source.dims) | set(self.target.dims))

    def is_chain_map(self) -> bool:
        p = self.modulus
        for n in self.degrees:
            lhs = la.matmul(self.matrix(n + 1), self.source.diff(n), p)
            rhs = la.matmul(self.target.diff(n), self.matrix(n), p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def is_equivariant(self) -> bool:
        if not (isinstance(self.source, CyclicComplex) and isinstance(self.target, CyclicComplex)):
            raise TypeError("equivariance needs cyclic complexes on both sides")
        p = self.modulus
        for n in self.degrees:
            if not (self.source.dim(n) and self.target.dim(n)):
                continue
            lhs = la.matmul(self.matrix(n), self.source.sig(n), p)
            rhs = la.matmul(self.target.sig(n), self.matrix(n), p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def _check_parallel(self, other: "ChainMap") -> None:
        if other.source is not self.source and other.source.dims != self.source.dims:
            raise ValueError("chain maps are not parallel (sources differ)")
        if other.target is not self.target and other.target.dims != self.target.dims:
            raise ValueError("chain maps are not parallel (targets differ)")

    def __add__(self, other: "ChainMap") -> "ChainMap":
        self._check_parallel(other)
        return ChainMap(self.source, self.target, {n: self.matrix(n) + other.matrix(n) for n in self.degrees})

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        self._check_parallel(other)
        return ChainMap(self.source, self.target, {n: self.matrix(n) - other.matrix(n) for n in self.degrees})

    def __neg__(self) -> "ChainMap":
        return self.scale(-1)

    def scale(self, c: int) -> "ChainMap":
        return ChainMap(self.source, self.target, {n: c * m for n, m in self.maps.items()})

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        """Composition: (self @ other) = self after other."""
        if other.target.dims != self.source.dims:
            raise ValueError("maps are not composable")
        p = self.modulus
        return ChainMap(other.source, self.target,
                        {n: la.matmul(self.matrix(n), other.matrix(n), p) for n in other.source.dims})

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        return all(np.array_equal(self.matrix(n), other.matrix(n)) for n in set(self.degrees) | set(other.degrees))

    def __repr__(self):
        return f"ChainMap({ {n: m.tolist() for n, m in sorted(self.maps.items())} })"


def mapping_cone(f: ChainMap) -> Complex:
    """Cone with C^n = A^{n+1} + B^n and differential [[-d_A, 0], [f, d_B]].

    Basis labels are ``("A", i)`` for the i-th basis vector of A^{n+1} and
    ``("B", i)`` for the i-th basis vector of B^n, A-part first.
    """
    A, B = f.source, f.target
    degs = set(n - 1 for n in A.dims) | set(B.dims)
    dims = {n: A.dim(n + 1) + B.dim(n) for n in degs}
    labels = {n: [("A", i) for i in range(A.dim(n + 1))] + [("B", i) for i in range(B.dim(n))] for n in degs}
    d = {}
    for n in degs:
        top = np.concatenate([-A.diff(n + 1), la.zeros(A.dim(n + 2), B.dim(n))], axis=1)
        bot = np.concatenate([f.matrix(n + 1), B.diff(n)], axis=1)
        d[n] = np.concatenate([top, bot], axis=0)
    return Complex(dims, d, A.modulus, labels)


def cyclic_shift(p: int) -> np.ndarray:
    """Matrix of the generator on the regular representation: e_k -> e_{k+1}."""
    m = la.zeros(p, p)
    for k in range(p):
        m[(k + 1) % p, k] = 1
    return m


def _block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = la.zeros(a.shape[0] + b.shape[0], a.shape[1] + b.shape[1])
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0]:, a.shape[1]:] = b
    return out


def _same_ring(a: Complex, b: Complex) -> None:
    if a.modulus != b.modulus:
        raise ValueError(f"coefficient rings differ: mod {a.modulus} vs mod {b.modulus}")
