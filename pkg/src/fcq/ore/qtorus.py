"""The quantum torus Z[q^{+-1}]<x^{+-1}, y^{+-1}>/(yx = qxy) and its rank-one K-theoretic subalgebra.

Elements are sums c_{a,b}(q) x^a y^b in x-before-y normal form, multiplied
with y^b x^c = q^{bc} x^c y^b.  Coefficients are Laurent polynomials in q,
optionally kept reduced modulo a cyclotomic polynomial Phi_n (q a primitive
n-th root of unity).

The subalgebra KA_q(r) has the basis f_m = prod_{i=0}^{mr-1}(1 - y^r q^{-i}) x^m
for m >= 1 and f_m = x^m for m <= 0.
"""

from __future__ import annotations

import json
from typing import Callable, Mapping

from fcq.exactalg.cyclotomic import cyclotomic, poly_reduce
from fcq.exactalg.poly import Poly
from fcq.ore.weyl import format_terms
from fcq.report import VerificationReport

Q = ("q",)


def _qpoly(c) -> Poly:
    if isinstance(c, Poly):
        return c if c.vars == Q else c.embed(Q)
    return Poly.const(Q, int(c))


class QTorusElement:
    __slots__ = ("terms", "cyc")

    def __init__(self, terms: Mapping[tuple[int, int], Poly | int] | None = None, cyc: int = 0):
        self.cyc = cyc
        phi = cyclotomic(cyc) if cyc else None
        clean: dict[tuple[int, int], Poly] = {}
        for (a, b), c in (terms or {}).items():
            c = _qpoly(c)
            key = (int(a), int(b))
            clean[key] = clean[key] + c if key in clean else c
        out = {}
        for k, c in clean.items():
            if phi is not None:
                c = poly_reduce(c, phi)
            if c:
                out[k] = c
        self.terms = out

    @classmethod
    def const(cls, c, cyc: int = 0) -> "QTorusElement":
        return cls({(0, 0): c}, cyc)

    @classmethod
    def x(cls, k: int = 1, cyc: int = 0) -> "QTorusElement":
        return cls({(k, 0): 1}, cyc)

    @classmethod
    def y(cls, k: int = 1, cyc: int = 0) -> "QTorusElement":
        return cls({(0, k): 1}, cyc)

    @classmethod
    def q(cls, k: int = 1, cyc: int = 0) -> "QTorusElement":
        return cls({(0, 0): Poly.monomial(Q, (k,))}, cyc)

    def _coerce(self, other) -> "QTorusElement":
        if isinstance(other, QTorusElement):
            if other.cyc != self.cyc:
                raise ValueError("coefficient rings differ")
            return other
        if isinstance(other, (int, Poly)):
            return QTorusElement.const(other, self.cyc)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return QTorusElement(out, self.cyc)

    __radd__ = __add__

    def __neg__(self):
        return QTorusElement({k: -c for k, c in self.terms.items()}, self.cyc)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        acc: dict[tuple[int, int], dict[int, int]] = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in o.terms.items():
                shift = b * c
                slot = acc.setdefault((a + c, b + d), {})
                for (e1,), v1 in c1.terms.items():
                    for (e2,), v2 in c2.terms.items():
                        k = e1 + e2 + shift
                        slot[k] = slot.get(k, 0) + v1 * v2
        return QTorusElement({key: Poly(Q, {(e,): v for e, v in s.items()}) for key, s in acc.items()}, self.cyc)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) == 1:
                (a, b), c = next(iter(self.terms.items()))
                if len(c.terms) == 1 and next(iter(c.terms.values())) in (1, -1):
                    inv = QTorusElement({(-a, -b): c ** -1}, self.cyc)
                    # (c x^a y^b)^{-1} = c^{-1} y^{-b} x^{-a} = c^{-1} q^{ab} x^{-a} y^{-b}
                    inv = inv * QTorusElement.q(a * b, self.cyc)
                    return inv ** (-k)
            raise ValueError("only unit monomials are invertible")
        out = QTorusElement.const(1, self.cyc)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTorusElement.const(other, self.cyc)
        if not isinstance(other, QTorusElement):
            return NotImplemented
        return self.cyc == other.cyc and self.terms == other.terms

    def __hash__(self):
        return hash((self.cyc, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def at_root(self, n: int) -> "QTorusElement":
        """Reduce coefficients modulo Phi_n."""
        return QTorusElement(self.terms, n)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0], t[0][1]), reverse=True)

    def __str__(self):
        def mono(a, b):
            parts = [f"x^{a}" if a != 1 else "x"] if a else []
            parts += [f"y^{b}" if b != 1 else "y"] if b else []
            return "*".join(parts)
        return format_terms([(mono(a, b), c) for (a, b), c in self.sorted_terms()])

    def __repr__(self):
        return f"QTorusElement({self})"

    def to_json(self) -> dict:
        ring = {"base": "Z", "vars": ["q"], "laurent": True}
        if self.cyc:
            ring["cyclotomic"] = self.cyc
        return {"alg": "qtorus", "coeff_ring": ring,
                "terms": [{"x": a, "y": b, "c": c.to_json()} for (a, b), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "QTorusElement":
        if isinstance(data, str):
            data = json.loads(data)
        cyc = int(data["coeff_ring"].get("cyclotomic", 0))
        return cls({(int(t["x"]), int(t["y"])): Poly.from_json(t["c"]) for t in data["terms"]}, cyc)


def qtorus_mul(u: QTorusElement, v: QTorusElement) -> QTorusElement:
    return u * v


def qtorus_commutator(u: QTorusElement, v: QTorusElement) -> QTorusElement:
    return u * v - v * u


def falling_q_product(r: int, length: int, cyc: int = 0, shift: int = 0) -> QTorusElement:
    """prod_{i=shift}^{shift+length-1} (1 - y^r q^{-i}) as an element of the torus."""
    out = QTorusElement.const(1, cyc)
    yr = QTorusElement.y(r, cyc)
    for i in range(shift, shift + length):
        out = out * (1 - yr * QTorusElement.q(-i, cyc))
    return out


def k_basis(r: int, m: int, cyc: int = 0) -> QTorusElement:
    """f_m: prod_{i=0}^{mr-1}(1 - y^r q^{-i}) x^m for m >= 1, x^m for m <= 0."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if m <= 0:
        return QTorusElement.x(m, cyc)
    return falling_q_product(r, m * r, cyc) * QTorusElement.x(m, cyc)


def k_generators(r: int, cyc: int = 0) -> dict[str, QTorusElement]:
    return {"x^-1": QTorusElement.x(-1, cyc), "f(1)": k_basis(r, 1, cyc),
            "y": QTorusElement.y(1, cyc), "q": QTorusElement.q(1, cyc)}


def k_central_map(r: int, n: int) -> dict[str, QTorusElement]:
    """Images of x^{-1}, y and the class of (1 - y^r)^r x, with q a primitive n-th root of unity."""
    if n < 1:
        raise ValueError("n must be positive")
    one_minus = (1 - QTorusElement.y(n * r, n)) ** r
    return {"x^-1": QTorusElement.x(-n, n), "y": QTorusElement.y(n, n),
            "f(1)": one_minus * QTorusElement.x(n, n)}


def cyclotomic_identity(r: int, n: int) -> tuple[bool, QTorusElement, QTorusElement]:
    """(1 - y^{nr})^r against prod_{i<nr}(1 - y^r q^{-i}) modulo Phi_n."""
    lhs = (1 - QTorusElement.y(n * r, n)) ** r
    rhs = falling_q_product(r, n * r, n)
    return lhs == rhs, lhs, rhs


def adams(f: Poly, n: int, var: str = "y") -> Poly:
    """psi^n: y^k -> y^{nk}, a ring endomorphism of Laurent polynomials in y."""
    if n < 1:
        raise ValueError("n must be positive")
    return f.map_exponents(var, n)


def centrality_report(images: Mapping[str, object], generators: Mapping[str, object],
                      reduce: Callable | None = None, title: str = "centrality") -> VerificationReport:
    """All commutators [image, generator], reduced, must vanish."""
    rep = VerificationReport(title)
    for iname, a in images.items():
        for gname, g in generators.items():
            c = a * g - g * a
            if reduce is not None:
                c = reduce(c)
            rep.add(f"[{iname}, {gname}] = 0", c.is_zero(), witness=str(c))
    return rep


def k_centrality_report(r: int, n: int) -> VerificationReport:
    rep = centrality_report(k_central_map(r, n), k_generators(r, n),
                            title=f"root-of-unity central map, r={r}, n={n}")
    ok, lhs, rhs = cyclotomic_identity(r, n)
    rep.add("(1 - y^{nr})^r = prod (1 - y^r q^-i) mod Phi_n", ok, witness={"lhs": str(lhs), "rhs": str(rhs)})
    rep.add("image of f(1) is f(n) mod Phi_n", k_central_map(r, n)["f(1)"] == k_basis(r, n, n))
    return rep


def k_product_coefficient(r: int, n: int, m: int, cyc: int = 0) -> QTorusElement:
    """The y-polynomial c with f_n f_m = c f_{n+m}; c = 1 unless n and m have opposite signs."""
    if n * m >= 0:
        return QTorusElement.const(1, cyc)
    if n > 0:
        return falling_q_product(r, min(n, -m) * r, cyc, shift=max(n + m, 0) * r)
    return falling_q_product(r, min(-n, m) * r, cyc, shift=n * r)


def k_product_rule_report(r: int, lo: int = -3, hi: int = 3, literal: bool = True) -> VerificationReport:
    """f_n f_m against f_{n+m} (literal) or against c f_{n+m} with the mixed-sign correction."""
    what = "f_n f_m = f_(n+m)" if literal else "f_n f_m = c(n,m) f_(n+m)"
    rep = VerificationReport(f"quantum torus basis products {what}, r={r}")
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            lhs = k_basis(r, n) * k_basis(r, m)
            rhs = k_basis(r, n + m)
            if not literal:
                rhs = k_product_coefficient(r, n, m) * rhs
            rep.add(f"f({n})*f({m})", lhs == rhs, witness=None if lhs == rhs else {"lhs": str(lhs), "rhs": str(rhs)})
    return rep
