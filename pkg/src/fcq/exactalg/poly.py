"""Sparse multivariate (Laurent) polynomials with integer or F_p coefficients.

A :class:`Poly` is a finite map from exponent tuples to nonzero coefficients
over a fixed, ordered tuple of variable names.  Exponents may be negative,
which gives Laurent polynomials for free; operations that need ordinary
polynomials (division, reduction) say so.  Coefficients are Python ints, so
integer arithmetic never overflows.  ``modulus=0`` means Z, a prime ``p``
means F_p with residues kept in ``[0, p)``.

Values are immutable after construction.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Union

from fcq.exactalg.field import inv_mod

Exp = tuple[int, ...]
Scalar = int


class VariableMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class Poly:
    __slots__ = ("vars", "terms", "modulus", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping[Exp, int] | None = None, modulus: int = 0):
        vars = tuple(vars)
        n = len(vars)
        clean: dict[Exp, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match variables {vars}")
            c = int(c)
            if modulus:
                c %= modulus
            if c:
                clean[e] = clean.get(e, 0) + c
        if modulus:
            clean = {e: c % modulus for e, c in clean.items() if c % modulus}
        self.vars = vars
        self.terms = clean
        self.modulus = modulus
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exp, int], modulus: int) -> "Poly":
        out = object.__new__(cls)
        out.vars = vars
        out.terms = terms
        out.modulus = modulus
        out._hash = None
        return out

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, vars: Iterable[str], c: int, modulus: int = 0) -> "Poly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c}, modulus)

    @classmethod
    def zero(cls, vars: Iterable[str], modulus: int = 0) -> "Poly":
        return cls(tuple(vars), {}, modulus)

    @classmethod
    def var(cls, vars: Iterable[str], name: str, modulus: int = 0) -> "Poly":
        vars = tuple(vars)
        if name not in vars:
            raise VariableMismatch(f"{name!r} not among {vars}")
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {e: 1}, modulus)

    @classmethod
    def monomial(cls, vars: Iterable[str], exp: Exp, c: int = 1, modulus: int = 0) -> "Poly":
        return cls(tuple(vars), {tuple(exp): c}, modulus)

    @classmethod
    def gens(cls, vars: Iterable[str], modulus: int = 0) -> tuple["Poly", ...]:
        vars = tuple(vars)
        return tuple(cls.var(vars, v, modulus) for v in vars)

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise VariableMismatch(f"variables {self.vars} vs {other.vars}")
            if other.modulus != self.modulus:
                raise ValueError(f"coefficient rings differ: mod {self.modulus} vs mod {other.modulus}")
            return other
        if isinstance(other, int):
            return Poly.const(self.vars, other, self.modulus)
        return NotImplemented

    def _norm(self, c: int) -> int:
        return c % self.modulus if self.modulus else c

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        m = self.modulus
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if m:
                v %= m
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.vars, out, m)

    __radd__ = __add__

    def __neg__(self):
        m = self.modulus
        return Poly._raw(self.vars, {e: (-c % m if m else -c) for e, c in self.terms.items()}, m)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly._raw(self.vars, {}, self.modulus)
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        m = self.modulus
        out: dict[Exp, int] = {}
        if len(self.vars) == 1:
            for (a,), c in self.terms.items():
                for (b,), d in o.terms.items():
                    k = (a + b,)
                    out[k] = out.get(k, 0) + c * d
        else:
            for e, c in self.terms.items():
                for f, d in o.terms.items():
                    k = tuple(x + y for x, y in zip(e, f))
                    out[k] = out.get(k, 0) + c * d
        if m:
            out = {e: c % m for e, c in out.items() if c % m}
        else:
            out = {e: c for e, c in out.items() if c}
        return Poly._raw(self.vars, out, m)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        m = self.modulus
        if m:
            c %= m
            return Poly._raw(self.vars, {e: v * c % m for e, v in self.terms.items() if v * c % m}, m)
        if c == 0:
            return Poly._raw(self.vars, {}, 0)
        return Poly._raw(self.vars, {e: v * c for e, v in self.terms.items()}, 0)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) != 1:
                raise ArithmeticError("only monomials can be raised to negative powers")
            (e, c), = self.terms.items()
            if self.modulus:
                ci = inv_mod(c, self.modulus)
            elif c in (1, -1):
                ci = c
            else:
                raise ArithmeticError(f"coefficient {c} is not a unit")
            return Poly._raw(self.vars, {tuple(-x for x in e): ci}, self.modulus) ** (-k)
        result = Poly.const(self.vars, 1, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.vars, other, self.modulus)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.modulus == other.modulus and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.modulus, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection -----------------------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise VariableMismatch(f"{name!r} not among {self.vars}") from None

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.vars), 0)

    def degree(self, name: str | None = None) -> int:
        """Degree in one variable, or total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.index(name)
        return max(e[i] for e in self.terms)

    def min_degree(self, name: str) -> int:
        i = self.index(name)
        return min((e[i] for e in self.terms), default=0)

    def is_homogeneous(self, weights: Mapping[str, int] | None = None) -> bool:
        w = [1 if weights is None else weights.get(v, 0) for v in self.vars]
        degs = {sum(a * b for a, b in zip(e, w)) for e in self.terms}
        return len(degs) <= 1

    def weighted_degree(self, weights: Mapping[str, int]) -> int:
        w = [weights.get(v, 0) for v in self.vars]
        degs = {sum(a * b for a, b in zip(e, w)) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def by_var(self, name: str) -> dict[int, "Poly"]:
        """Split as sum_k c_k * name^k with c_k free of ``name``."""
        i = self.index(name)
        parts: dict[int, dict[Exp, int]] = {}
        for e, c in self.terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Poly._raw(self.vars, t, self.modulus) for k, t in parts.items()}

    def coeff(self, name: str, k: int) -> "Poly":
        return self.by_var(name).get(k, Poly._raw(self.vars, {}, self.modulus))

    def coefficient(self, exp: Exp) -> int:
        return self.terms.get(tuple(exp), 0)

    # -- change of ring -------------------------------------------------------

    def reduce(self, p: int) -> "Poly":
        if self.modulus and self.modulus != p:
            raise ValueError(f"cannot reduce mod {p} a polynomial already mod {self.modulus}")
        return Poly(self.vars, self.terms, p)

    def lift(self) -> "Poly":
        """Integer polynomial with the same residues (identity over Z)."""
        return Poly._raw(self.vars, dict(self.terms), 0)

    def embed(self, vars: Iterable[str]) -> "Poly":
        """Re-express over another variable tuple containing every used variable."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        used = [i for i in range(len(self.vars)) if any(e[i] for e in self.terms)]
        for i in used:
            if self.vars[i] not in pos:
                raise VariableMismatch(f"{self.vars[i]!r} missing from {vars}")
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(vars)
            for i in used:
                f[pos[self.vars[i]]] = e[i]
            out[tuple(f)] = c
        return Poly._raw(vars, out, self.modulus)

    def rename(self, mapping: Mapping[str, str]) -> "Poly":
        return Poly._raw(tuple(mapping.get(v, v) for v in self.vars), dict(self.terms), self.modulus)

    def map_exponents(self, name: str, factor: int) -> "Poly":
        """Substitute ``name -> name**factor`` (used for Adams operations)."""
        i = self.index(name)
        out = {}
        for e, c in self.terms.items():
            out[e[:i] + (e[i] * factor,) + e[i + 1:]] = c
        return Poly._raw(self.vars, out, self.modulus)

    def subs(self, values: Mapping[str, Union["Poly", int]], vars: Iterable[str] | None = None) -> "Poly":
        """Ring-homomorphic substitution of variables.

        Unsubstituted variables are carried over by name into the result's
        variable tuple, which is ``vars`` if given, else the variables of the
        first polynomial value, else ``self.vars``.
        """
        if vars is None:
            vars = next((v.vars for v in values.values() if isinstance(v, Poly)), self.vars)
        vars = tuple(vars)
        m = self.modulus
        for v in values.values():
            if isinstance(v, Poly) and v.modulus != m:
                raise ValueError("substituted value lives over a different coefficient ring")
        vals = {k: (v.embed(vars) if isinstance(v, Poly) else Poly.const(vars, v, m)) for k, v in values.items()}
        keep = [i for i, v in enumerate(self.vars) if v not in vals]
        pos = {v: i for i, v in enumerate(vars)}
        for i in keep:
            if self.vars[i] not in pos and any(e[i] for e in self.terms):
                raise VariableMismatch(f"{self.vars[i]!r} has no place in {vars}")
        sub_idx = [(i, self.vars[i]) for i, v in enumerate(self.vars) if v in vals]
        cache: dict[tuple[str, int], Poly] = {}

        def power(name: str, k: int) -> Poly:
            key = (name, k)
            if key not in cache:
                cache[key] = vals[name] ** k
            return cache[key]

        acc: dict[Exp, int] = {}
        for e, c in self.terms.items():
            f = [0] * len(vars)
            for i in keep:
                if e[i]:
                    f[pos[self.vars[i]]] = e[i]
            term = Poly._raw(vars, {tuple(f): c}, m)
            for i, name in sub_idx:
                if e[i]:
                    term = term * power(name, e[i])
            for g, d in term.terms.items():
                acc[g] = acc.get(g, 0) + d
        return Poly(vars, acc, m)

    # -- division -------------------------------------------------------------

    def divmod_var(self, divisor: "Poly", name: str) -> tuple["Poly", "Poly"]:
        """Long division in ``name`` by a divisor whose leading coefficient is a constant.

        Over F_p the constant must be nonzero; over Z each quotient step must
        divide exactly, otherwise :class:`NotDivisible` is raised.  The
        remainder collects every term of ``name``-degree below the divisor's.
        """
        divisor = self._coerce(divisor)
        d = divisor.degree(name)
        if d < 0:
            raise ZeroDivisionError("division by zero polynomial")
        parts = divisor.by_var(name)
        lead = parts[d]
        if not lead.is_constant():
            raise ValueError("leading coefficient of divisor must be constant")
        lc = lead.constant_term()
        m = self.modulus
        lc_inv = inv_mod(lc, m) if m else None
        i = self.index(name)
        rem = dict(self.terms)
        quot: dict[Exp, int] = {}
        while True:
            top = max((e[i] for e in rem), default=None)
            if top is None or top < d:
                break
            for e in [e for e in rem if e[i] == top]:
                c = rem.get(e)
                if not c:
                    continue
                if m:
                    qc = c * lc_inv % m
                else:
                    if c % lc:
                        raise NotDivisible(f"coefficient {c} not divisible by {lc}")
                    qc = c // lc
                qe = e[:i] + (top - d,) + e[i + 1:]
                quot[qe] = quot.get(qe, 0) + qc
                for f, dc in divisor.terms.items():
                    g = tuple(a + b for a, b in zip(qe, f))
                    v = rem.get(g, 0) - qc * dc
                    if m:
                        v %= m
                    if v:
                        rem[g] = v
                    else:
                        rem.pop(g, None)
        return Poly(self.vars, quot, m), Poly._raw(self.vars, rem, m)

    def exact_div(self, divisor: "Poly", name: str) -> "Poly":
        q, r = self.divmod_var(divisor, name)
        if r:
            raise NotDivisible(f"{self} is not divisible by {divisor}")
        return q

    # -- display and serialization -------------------------------------------

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def format(self, names: Mapping[str, str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or {}
        pieces: list[tuple[int, str]] = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (names.get(v, v) if k == 1 else f"{names.get(v, v)}^{k}")
                for v, k in zip(self.vars, e)
                if k
            )
            sign = -1 if c < 0 else 1
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += (" - " if sign < 0 else " + ") + body
        return out

    def is_monomial_like(self) -> bool:
        """True when the printed form needs no parentheses as a factor."""
        if len(self.terms) != 1:
            return False
        return next(iter(self.terms.values())) > 0

    def __str__(self):
        return self.format()

    def __repr__(self):
        ring = f"F_{self.modulus}" if self.modulus else "Z"
        return f"Poly({self.format()!r} in {ring}[{', '.join(self.vars)}])"

    def to_json(self) -> dict:
        out: dict = {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }
        if self.modulus:
            out["modulus"] = self.modulus
        return out

    @classmethod
    def from_json(cls, data: Mapping | str) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[Exp, int] = {}
        for t in data["terms"]:
            e = tuple(int(x) for x in t["exp"])
            terms[e] = terms.get(e, 0) + int(t["coeff"])
        return cls(data["vars"], terms, int(data.get("modulus", 0)))
