"""Rank-one quantum Coulomb branches A_h(r) and their Frobenius-constant map.

Inside the Weyl algebra (w-form, w = x d) the algebra has the left
F[w, h]-basis

    e_n = prod_{i=1}^{nr} (r w - i h) x^n   (n >= 1),      e_n = x^n   (n <= 0).

Products are computed over Z: e_n e_m = P_n(w) P_m(w - n h) x^{n+m}, divided
exactly by P_{n+m}, and only then reduced mod p, so the case p | r (where the
basis dies in the mod-p Weyl algebra) goes through the same code.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from fcq.exactalg.field import require_odd_prime
from fcq.exactalg.poly import NotDivisible, Poly
from fcq.ore.weyl import WH, WForm, WeylElement, format_terms, from_wform, shift_w, to_wform
from fcq.report import VerificationReport

# presentation of the commutative algebra A(r): u = class of e_1, v = class of x^{-1}
AR_VARS = ("w", "u", "v")
SYMBOLS = {"xinv": "v", "e1": "u", "w": "w"}


class CoulombBasisError(ArithmeticError):
    """A product failed to re-expand in the basis; this indicates a bug."""


class NotInCoulomb(ValueError):
    def __init__(self, n: int, msg: str):
        super().__init__(msg)
        self.n = n


@lru_cache(maxsize=None)
def basis_poly(r: int, n: int, modulus: int = 0) -> Poly:
    """P_n(w, h) = prod_{i=1}^{nr} (r w - i h) for n >= 1, and 1 otherwise."""
    w, h = Poly.gens(WH, modulus)
    out = Poly.const(WH, 1, modulus)
    for i in range(1, max(n, 0) * r + 1):
        out = out * (w.scale(r) - h.scale(i))
    return out


def coulomb_basis(r: int, n: int) -> WeylElement:
    """e_n as an element of the integral Weyl algebra."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return from_wform(WForm({n: basis_poly(r, n)}, 0))


@lru_cache(maxsize=None)
def basis_product(r: int, n: int, m: int) -> Poly:
    """q with e_n e_m = q(w, h) e_{n+m}, over Z[w, h]."""
    num = basis_poly(r, n) * shift_w(basis_poly(r, m), n)
    den = basis_poly(r, n + m)
    if den == Poly.const(WH, 1):
        return num
    try:
        return num.exact_div(den, "w")
    except NotDivisible as exc:
        raise CoulombBasisError(f"e_{n} e_{m} does not re-expand over e_{n + m} (r={r})") from exc


class CoulombElement:
    """sum_n g_n(w, h) e_n with coefficients in F_p[w, h] (or Z[w, h] when p = 0)."""

    __slots__ = ("r", "p", "terms")

    def __init__(self, r: int, p: int, terms: Mapping[int, Poly | int] | None = None):
        if r < 0:
            raise ValueError("r must be nonnegative")
        if p:
            require_odd_prime(p)
        self.r, self.p = r, p
        clean: dict[int, Poly] = {}
        for n, g in (terms or {}).items():
            if isinstance(g, int):
                g = Poly.const(WH, g, p)
            else:
                g = g.embed(WH)
                g = g.reduce(p) if p and g.modulus != p else g
            if g:
                clean[int(n)] = clean[int(n)] + g if int(n) in clean else g
                if not clean[int(n)]:
                    del clean[int(n)]
        self.terms = clean

    @classmethod
    def e(cls, r: int, p: int, n: int) -> "CoulombElement":
        return cls(r, p, {n: 1})

    @classmethod
    def const(cls, r: int, p: int, c: int | Poly) -> "CoulombElement":
        return cls(r, p, {0: c})

    @classmethod
    def w(cls, r: int, p: int) -> "CoulombElement":
        return cls(r, p, {0: Poly.var(WH, "w", p)})

    @classmethod
    def hbar(cls, r: int, p: int) -> "CoulombElement":
        return cls(r, p, {0: Poly.var(WH, "h", p)})

    def _coerce(self, other) -> "CoulombElement":
        if isinstance(other, CoulombElement):
            if (other.r, other.p) != (self.r, self.p):
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, Poly)):
            return CoulombElement.const(self.r, self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for n, g in o.terms.items():
            out[n] = out[n] + g if n in out else g
        return CoulombElement(self.r, self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return CoulombElement(self.r, self.p, {n: -g for n, g in self.terms.items()})

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
        p = self.p
        acc: dict[int, Poly] = {}
        for n, f in self.terms.items():
            for m, g in o.terms.items():
                q = basis_product(self.r, n, m)
                if p:
                    q = q.reduce(p)
                t = f * shift_w(g, n) * q
                acc[n + m] = acc[n + m] + t if n + m in acc else t
        return CoulombElement(self.r, p, acc)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = CoulombElement.const(self.r, self.p, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = CoulombElement.const(self.r, self.p, other)
        if not isinstance(other, CoulombElement):
            return NotImplemented
        return (self.r, self.p) == (other.r, other.p) and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, self.p, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def at_hbar(self, value: int) -> "CoulombElement":
        return CoulombElement(self.r, self.p, {n: g.subs({"h": value}, vars=WH) for n, g in self.terms.items()})

    def to_wform(self) -> WForm:
        return WForm({n: g * basis_poly(self.r, n, self.p) for n, g in self.terms.items()}, self.p)

    def to_weyl(self) -> WeylElement:
        return from_wform(self.to_wform())

    def __str__(self):
        return format_terms([(f"e({n})", g) for n, g in sorted(self.terms.items(), reverse=True)])

    def __repr__(self):
        return f"CoulombElement(r={self.r}, p={self.p}: {self})"

    def to_json(self) -> dict:
        return {"alg": "coulomb", "r": self.r, "p": self.p,
                "terms": [{"n": n, "c": g.rename({"h": "hbar"}).to_json()}
                          for n, g in sorted(self.terms.items(), reverse=True)]}


def coulomb_mul(u: CoulombElement, v: CoulombElement) -> CoulombElement:
    return u * v


def coulomb_membership(u: WeylElement, r: int) -> CoulombElement:
    """Write a mod-p Weyl element in the e_n basis, or raise NotInCoulomb."""
    p = u.modulus
    require_odd_prime(p)
    if r and r % p == 0:
        raise ValueError(f"p={p} divides r={r}: the basis does not embed in the mod-p Weyl algebra")
    wf = to_wform(u)
    out = {}
    for n in sorted(wf.terms):
        g = wf.terms[n]
        if n <= 0:
            out[n] = g
            continue
        q, rem = g.divmod_var(basis_poly(r, n, p), "w")
        if rem:
            raise NotInCoulomb(n, f"coefficient of x^{n} is not divisible by P_{n}")
        out[n] = q
    return CoulombElement(r, p, out)


# -- the Frobenius-constant map -----------------------------------------------

def falling_poly(p: int, modulus: int) -> Poly:
    """prod_{i<p} (w - i h) in the (w, h) ring."""
    w, h = Poly.gens(WH, modulus)
    out = Poly.const(WH, 1, modulus)
    for i in range(p):
        out = out * (w - h.scale(i))
    return out


def coulomb_frobenius(r: int, p: int, symbol: str) -> CoulombElement:
    """Image of a generator of A(r): 'xinv' -> e_{-p}, 'e1' -> e_p, 'w' -> prod (w - i h)."""
    require_odd_prime(p)
    if symbol == "xinv":
        return CoulombElement.e(r, p, -p)
    if symbol == "e1":
        return CoulombElement.e(r, p, p)
    if symbol == "w":
        return CoulombElement(r, p, {0: falling_poly(p, p)})
    raise ValueError(f"unknown generator {symbol!r}; expected one of {sorted(SYMBOLS)}")


def ar_element(terms: Mapping[tuple[int, int, int], int], p: int) -> Poly:
    """An element of A(r) as a polynomial in (w, u, v) over F_p."""
    return Poly(AR_VARS, terms, p)


def frobenius_on(r: int, p: int, f: Poly) -> CoulombElement:
    """Multiplicative extension: w^k u^a v^b -> F(w)^k F(u)^a F(v)^b."""
    if f.vars != AR_VARS:
        f = f.embed(AR_VARS)
    images = {s: coulomb_frobenius(r, p, k) for k, s in SYMBOLS.items()}
    out = CoulombElement(r, p)
    for (k, a, b), c in f.terms.items():
        term = CoulombElement.const(r, p, c)
        term = term * images["w"] ** k * images["u"] ** a * images["v"] ** b
        out = out + term
    return out


def classical(r: int, p: int, f: Poly) -> CoulombElement:
    """The h = 0 algebra: u -> e_1, v -> e_{-1}, w -> w, evaluated with h = 0."""
    if f.vars != AR_VARS:
        f = f.embed(AR_VARS)
    gens = {"w": CoulombElement.w(r, p), "u": CoulombElement.e(r, p, 1), "v": CoulombElement.e(r, p, -1)}
    out = CoulombElement(r, p)
    for (k, a, b), c in f.terms.items():
        out = out + CoulombElement.const(r, p, c) * gens["w"] ** k * gens["u"] ** a * gens["v"] ** b
    return out.at_hbar(0)


def relation_check(r: int, p: int) -> tuple[bool, CoulombElement, CoulombElement]:
    """F(e_1) F(x^{-1}) against F((r w)^r) = r^r F(w)^r."""
    lhs = coulomb_frobenius(r, p, "e1") * coulomb_frobenius(r, p, "xinv")
    rhs = coulomb_frobenius(r, p, "w") ** r * (r ** r)
    return lhs == rhs, lhs, rhs


def coulomb_generators(r: int, p: int) -> dict[str, CoulombElement]:
    return {"x^-1": CoulombElement.e(r, p, -1), "e(1)": CoulombElement.e(r, p, 1),
            "w": CoulombElement.w(r, p), "h": CoulombElement.hbar(r, p)}


def coulomb_frobenius_report(r: int, p: int) -> VerificationReport:
    rep = VerificationReport(f"Frobenius-constant map on A(r), r={r}, p={p}")
    ok, lhs, rhs = relation_check(r, p)
    rep.add("F(e1) F(x^-1) = F((r w)^r)", ok, witness={"lhs": str(lhs), "rhs": str(rhs)})
    images = {s: coulomb_frobenius(r, p, s) for s in SYMBOLS}
    for s, img in images.items():
        for gname, g in coulomb_generators(r, p).items():
            c = img * g - g * img
            rep.add(f"[F({s}), {gname}] = 0", c.is_zero(), witness=str(c))
    return rep


def frobenius_structure_report(r: int, p: int, max_exp: int = 2) -> VerificationReport:
    """F(1) = 1, F mod h is the p-th power, F multiplicative on monomials."""
    rep = VerificationReport(f"F unit / mod h / multiplicativity, r={r}, p={p}")
    one = ar_element({(0, 0, 0): 1}, p)
    rep.add("F(1) = 1", frobenius_on(r, p, one) == CoulombElement.const(r, p, 1))
    monos = [(k, a, b) for k in range(max_exp + 1) for a in range(max_exp + 1) for b in range(max_exp + 1)
             if k + a + b <= max_exp]
    bad = []
    for e in monos:
        f = ar_element({e: 1}, p)
        got = frobenius_on(r, p, f).at_hbar(0)
        want = classical(r, p, f) ** p
        want = want.at_hbar(0)
        if got != want:
            bad.append(e)
    rep.add("F at h = 0 is the p-th power", not bad, witness=bad)
    bad = []
    for e1 in monos:
        for e2 in monos:
            f1, f2 = ar_element({e1: 1}, p), ar_element({e2: 1}, p)
            if frobenius_on(r, p, f1 * f2) != frobenius_on(r, p, f1) * frobenius_on(r, p, f2):
                bad.append((e1, e2))
    rep.add("F(m1 m2) = F(m1) F(m2) on monomials", not bad, witness=bad[:3])
    return rep
