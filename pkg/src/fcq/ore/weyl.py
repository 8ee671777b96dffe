"""The Weyl algebra R[h]<x^{+-1}, d>/([d, x] = h) in two normal forms.

``WeylElement`` stores sum c_{a,b}(h) x^a d^b with every x left of every d and
multiplies with the rewrite

    d^b x^c = sum_k C(b, k) (c)_k h^k x^{c-k} d^{b-k},

which holds for every integer c ((c)_k is the falling factorial).

``WForm`` stores sum g_n(w, h) x^n with w = x d and the coefficient on the
left; there the product is (f x^n)(g x^m) = f(w) g(w - n h) x^{n+m}.  The two
forms are independent implementations of the same algebra and convert into
each other with x^a d^b = prod_{i<b}(w - (a - b + i) h) x^{a-b}.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from fcq.exactalg.poly import Poly

H = ("h",)
WH = ("w", "h")


def falling(c: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= c - i
    return out


def _hpoly(c, modulus: int) -> Poly:
    if isinstance(c, Poly):
        if c.vars != H:
            c = c.embed(H)
        return c.reduce(modulus) if modulus and c.modulus != modulus else c
    return Poly.const(H, int(c), modulus)


class WeylElement:
    __slots__ = ("terms", "modulus")

    def __init__(self, terms: Mapping[tuple[int, int], Poly | int] | None = None, modulus: int = 0):
        self.modulus = modulus
        clean: dict[tuple[int, int], Poly] = {}
        for (a, b), c in (terms or {}).items():
            if b < 0:
                raise ValueError("negative power of d")
            c = _hpoly(c, modulus)
            if c:
                key = (int(a), int(b))
                clean[key] = clean[key] + c if key in clean else c
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, c: int | Poly, modulus: int = 0) -> "WeylElement":
        return cls({(0, 0): c}, modulus)

    @classmethod
    def x(cls, k: int = 1, modulus: int = 0) -> "WeylElement":
        return cls({(k, 0): 1}, modulus)

    @classmethod
    def d(cls, k: int = 1, modulus: int = 0) -> "WeylElement":
        return cls({(0, k): 1}, modulus)

    @classmethod
    def hbar(cls, modulus: int = 0) -> "WeylElement":
        return cls({(0, 0): Poly.var(H, "h", modulus)}, modulus)

    @classmethod
    def w(cls, modulus: int = 0) -> "WeylElement":
        return cls({(1, 1): 1}, modulus)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            if other.modulus != self.modulus:
                raise ValueError("coefficient rings differ")
            return other
        if isinstance(other, (int, Poly)):
            return WeylElement.const(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return WeylElement(out, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement({k: -c for k, c in self.terms.items()}, self.modulus)

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
        m = self.modulus
        acc: dict[tuple[int, int], dict[int, int]] = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in o.terms.items():
                prod = c1 * c2
                for k in range(b + 1):
                    s = comb(b, k) * falling(c, k)
                    if not s or (m and s % m == 0):
                        continue
                    slot = acc.setdefault((a + c - k, b - k + d), {})
                    for (e,), v in prod.terms.items():
                        slot[e + k] = slot.get(e + k, 0) + s * v
        return WeylElement({key: Poly(H, {(e,): v for e, v in hs.items()}, m) for key, hs in acc.items()}, m)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) == 1:
                (a, b), c = next(iter(self.terms.items()))
                if b == 0 and c.is_constant() and c.constant_term() in (1, -1):
                    return WeylElement({(a * k, 0): c ** (-k)}, self.modulus)
            raise ValueError("only monomials in x with unit coefficient are invertible")
        out = WeylElement.const(1, self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = WeylElement.const(other, self.modulus)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.modulus == other.modulus and self.terms == other.terms

    def __hash__(self):
        return hash((self.modulus, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def reduce(self, p: int) -> "WeylElement":
        return WeylElement({k: c.reduce(p) for k, c in self.terms.items()}, p)

    def lift(self) -> "WeylElement":
        return WeylElement({k: c.lift() for k, c in self.terms.items()}, 0)

    def subs_hbar(self, value: int) -> "WeylElement":
        return WeylElement({k: Poly.const(H, c.subs({"h": value}, vars=H).constant_term(), self.modulus)
                            for k, c in self.terms.items()}, self.modulus)

    def hbar_degree(self) -> int:
        return max((c.degree() for c in self.terms.values()), default=-1)

    # -- display --------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][1], t[0][0]), reverse=True)

    def __str__(self):
        return format_terms([(_monomial("x", a, "d", b), c) for (a, b), c in self.sorted_terms()])

    def __repr__(self):
        return f"WeylElement({self})"

    def to_json(self) -> dict:
        base = {"base": f"F_{self.modulus}" if self.modulus else "Z", "vars": ["hbar"]}
        return {"alg": "weyl", "coeff_ring": base,
                "terms": [{"x": a, "d": b, "c": c.rename({"h": "hbar"}).to_json()} for (a, b), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "WeylElement":
        if isinstance(data, str):
            data = json.loads(data)
        base = data["coeff_ring"]["base"]
        m = 0 if base == "Z" else int(base.split("_")[1])
        terms = {}
        for t in data["terms"]:
            terms[(int(t["x"]), int(t["d"]))] = Poly.from_json(t["c"]).rename({"hbar": "h"})
        return cls(terms, m)


def weyl_mul(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v


def weyl_commutator(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v - v * u


def frobenius_weyl(a: int, b: int, p: int) -> WeylElement:
    """Image of x^a y^b: x^{pa} d^{pb} over F_p[h]."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    return WeylElement({(p * a, p * b): 1}, p)


def falling_w(p: int, modulus: int = 0) -> WeylElement:
    """prod_{i<p} (x d - i h) as a Weyl element."""
    w = WeylElement.w(modulus)
    h = WeylElement.hbar(modulus)
    out = WeylElement.const(1, modulus)
    for i in range(p):
        out = out * (w - h * i)
    return out


# -- w-form -------------------------------------------------------------------

def _whpoly(c, modulus: int) -> Poly:
    if isinstance(c, Poly):
        if c.vars != WH:
            c = c.embed(WH)
        return c.reduce(modulus) if modulus and c.modulus != modulus else c
    return Poly.const(WH, int(c), modulus)


@lru_cache(maxsize=None)
def _shift_images(n: int, modulus: int) -> Poly:
    w, h = Poly.gens(WH, modulus)
    return w - h.scale(n)


def shift_w(g: Poly, n: int) -> Poly:
    """g(w - n h)."""
    if n == 0 or g.degree("w") <= 0:
        return g
    return g.subs({"w": _shift_images(n, g.modulus)}, vars=WH)


class WForm:
    """sum_n g_n(w, h) x^n, coefficients on the left."""

    __slots__ = ("terms", "modulus")

    def __init__(self, terms: Mapping[int, Poly | int] | None = None, modulus: int = 0):
        self.modulus = modulus
        clean = {}
        for n, g in (terms or {}).items():
            g = _whpoly(g, modulus)
            if g:
                clean[int(n)] = clean[int(n)] + g if int(n) in clean else g
                if not clean[int(n)]:
                    del clean[int(n)]
        self.terms = clean

    def __add__(self, other: "WForm") -> "WForm":
        out = dict(self.terms)
        for n, g in other.terms.items():
            out[n] = out[n] + g if n in out else g
        return WForm(out, self.modulus)

    def __neg__(self):
        return WForm({n: -g for n, g in self.terms.items()}, self.modulus)

    def __sub__(self, other: "WForm") -> "WForm":
        return self + (-other)

    def __mul__(self, other: "WForm") -> "WForm":
        acc: dict[int, Poly] = {}
        for n, f in self.terms.items():
            for m, g in other.terms.items():
                t = f * shift_w(g, n)
                acc[n + m] = acc[n + m] + t if n + m in acc else t
        return WForm(acc, self.modulus)

    def __eq__(self, other):
        return isinstance(other, WForm) and self.modulus == other.modulus and self.terms == other.terms

    def __hash__(self):
        return hash((self.modulus, frozenset(self.terms.items())))

    def reduce(self, p: int) -> "WForm":
        return WForm({n: g.reduce(p) for n, g in self.terms.items()}, p)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        return format_terms([(_monomial("x", n), g) for n, g in sorted(self.terms.items(), reverse=True)])


def to_wform(u: WeylElement) -> WForm:
    m = u.modulus
    w, h = Poly.gens(WH, m)
    acc: dict[int, Poly] = {}
    for (a, b), c in u.terms.items():
        f = c.embed(WH)
        for i in range(b):
            f = f * (w - h.scale(a - b + i))
        n = a - b
        acc[n] = acc[n] + f if n in acc else f
    return WForm(acc, m)


def from_wform(f: WForm) -> WeylElement:
    m = f.modulus
    out = WeylElement({}, m)
    wpow = {0: WeylElement.const(1, m)}
    w = WeylElement.w(m)
    for n, g in f.terms.items():
        xn = WeylElement.x(n, m)
        for (k, j), c in g.terms.items():
            while k not in wpow:
                top = max(wpow)
                wpow[top + 1] = wpow[top] * w
            out = out + wpow[k] * xn * Poly(H, {(j,): c}, m)
    return out


# -- shared display helpers ---------------------------------------------------

def _monomial(*pairs) -> str:
    parts = []
    it = iter(pairs)
    for name in it:
        k = next(it, 1)
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_terms(terms: Iterable[tuple[str, Poly]], names: Mapping[str, str] | None = None) -> str:
    """Join coefficient*monomial pairs into a readable sum."""
    pieces: list[tuple[int, str]] = []
    for mono, c in terms:
        if c.is_zero():
            continue
        if len(c.terms) == 1:
            (e, v), = c.terms.items()
            sign = -1 if v < 0 else 1
            body = Poly(c.vars, {e: abs(v)}, 0).format(names)
            if mono:
                body = mono if body == "1" else f"{body}*{mono}"
        else:
            sign = 1
            body = c.format(names)
            body = f"({body})*{mono}" if mono else body
            if not mono:
                # a bare multi-term coefficient: split its own signs
                pieces.append((1, body))
                continue
        pieces.append((sign, body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        if body.startswith("-"):
            out += " - " + body[1:]
        else:
            out += (" - " if sign < 0 else " + ") + body
    return out
