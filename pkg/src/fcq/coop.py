"""Total power operation and Steenrod operations on polynomial cohomology rings.

A :class:`CohomRing` is F_p[g_1, ..., g_m] with even-degree generators.  The
internal total power ``st_in`` is the ring map into ``R[a, h]`` (|a| = 1,
|h| = 2, a^2 = 0) determined on degree-2 generators by

    g  ->  g^p - h^{p-1} g + a h^{p-2} beta(g).

The Bockstein slot is kept but every ring handled here has beta = 0, since
an odd class cannot live in a commutative polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from fcq.exactalg.field import factorial_mod, inv_mod, require_odd_prime
from fcq.exactalg.poly import Poly
from fcq.homalg import linalg as la
from fcq.report import VerificationReport

A_VAR = "a"
H_VAR = "h"


@dataclass
class CohomRing:
    p: int
    gens: dict[str, int] = field(default_factory=lambda: {"b": 2})
    bockstein: dict[str, Poly | None] = field(default_factory=dict)

    def __post_init__(self):
        require_odd_prime(self.p)
        for g, d in self.gens.items():
            if g in (A_VAR, H_VAR):
                raise ValueError(f"generator name {g!r} is reserved")
            if d % 2:
                raise ValueError(f"generator {g} has odd degree {d}; only even generators are supported")
            if d <= 0:
                raise ValueError(f"generator {g} must have positive degree")
        for g, v in self.bockstein.items():
            if v is not None and not v.is_zero():
                raise ValueError(f"nonzero Bockstein on {g} would need an odd class")

    @property
    def vars(self) -> tuple[str, ...]:
        return tuple(self.gens)

    @property
    def image_vars(self) -> tuple[str, ...]:
        return self.vars + (A_VAR, H_VAR)

    def gen(self, name: str) -> Poly:
        return Poly.var(self.vars, name, self.p)

    def element(self, terms: dict | int) -> Poly:
        if isinstance(terms, int):
            return Poly.const(self.vars, terms, self.p)
        return Poly(self.vars, terms, self.p)

    def degree(self, f: Poly) -> int:
        """Cohomological degree of a homogeneous element (ValueError otherwise)."""
        if f.is_zero():
            return 0
        w = {g: d for g, d in self.gens.items()}
        if not f.is_homogeneous(w):
            raise ValueError("element is not homogeneous")
        return f.weighted_degree(w)

    def beta(self, name: str) -> Poly:
        return Poly.zero(self.vars, self.p)


@dataclass(frozen=True)
class OperationImage:
    """An element of R[a, h] with a^2 = 0, split into its a^0 and a^1 parts."""

    poly: Poly

    @classmethod
    def of(cls, poly: Poly) -> "OperationImage":
        i = poly.index(A_VAR)
        return cls(Poly(poly.vars, {e: c for e, c in poly.terms.items() if e[i] <= 1}, poly.modulus))

    @property
    def even(self) -> Poly:
        return self.poly.coeff(A_VAR, 0)

    @property
    def odd(self) -> Poly:
        return self.poly.coeff(A_VAR, 1)

    def hbar_coefficient(self, m: int, odd: bool = False) -> Poly:
        part = self.odd if odd else self.even
        return part.coeff(H_VAR, m)

    def __mul__(self, other: "OperationImage") -> "OperationImage":
        return OperationImage.of(self.poly * other.poly)

    def __eq__(self, other):
        return isinstance(other, OperationImage) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return self.poly.format({H_VAR: "hbar"})


def _generator_image(R: CohomRing, g: str) -> Poly:
    if R.gens[g] != 2:
        raise ValueError(f"the total power is only given on degree-2 generators ({g} has degree {R.gens[g]})")
    p = R.p
    V = R.image_vars
    x = Poly.var(V, g, p)
    a = Poly.var(V, A_VAR, p)
    h = Poly.var(V, H_VAR, p)
    return x ** p - h ** (p - 1) * x + a * h ** (p - 2) * R.beta(g).embed(V)


def st_in(R: CohomRing, x: Poly) -> OperationImage:
    """The total power of x: a ring map, determined on generators."""
    if x.vars != R.vars or x.modulus != R.p:
        raise ValueError("element does not belong to this ring")
    images = {g: _generator_image(R, g) for g in R.gens if x.degree(g) > 0}
    return OperationImage.of(x.subs(images, vars=R.image_vars))


def as_hbar(f: Poly, coords: list[str] | None = None, hbar: str = H_VAR) -> Poly:
    """The h-Artin-Schreier ring map x_i -> x_i^p - h^{p-1} x_i into F_p[x, h]."""
    p = f.modulus
    require_odd_prime(p)
    if hbar in f.vars:
        raise ValueError(f"{hbar!r} already used as a variable")
    coords = list(coords) if coords is not None else list(f.vars)
    V = f.vars + (hbar,)
    h = Poly.var(V, hbar, p)
    images = {}
    for c in coords:
        x = Poly.var(V, c, p)
        images[c] = x ** p - h ** (p - 1) * x
    return f.subs(images, vars=V)


def normalization(n: int, p: int) -> int:
    """(-1)^{q n(n-1)/2} (q!)^{-n} mod p with q = (p-1)/2."""
    q = (p - 1) // 2
    sign = -1 if (q * n * (n - 1) // 2) % 2 else 1
    return sign * pow(inv_mod(factorial_mod(q, p), p), n, p) % p


def total_operations(R: CohomRing, f: Poly) -> list[Poly]:
    """[P^0(f), ..., P^k(f)] for homogeneous f of degree 2k, all read off one total power."""
    p = R.p
    n = R.degree(f)
    if n % 2:
        raise ValueError(f"odd degree {n}")
    if f.is_zero():
        return []
    k = n // 2
    total = st_in(R, f).even.scale(normalization(n, p))
    ops = []
    for s in range(k + 1):
        coeff = total.coeff(H_VAR, (p - 1) * (k - s))
        # the a and h slots are zero after taking the coefficient
        terms = {e[: len(R.vars)]: c for e, c in coeff.terms.items()}
        ops.append(Poly(R.vars, terms, p).scale(-1 if s % 2 else 1))
    return ops


def steenrod_P(R: CohomRing, s: int, f: Poly) -> Poly:
    """P^s(f), read off from the normalized total power of a homogeneous f."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    ops = total_operations(R, f)
    return ops[s] if s < len(ops) else Poly.zero(R.vars, R.p)


def steenrod_P_monomial_formula(R: CohomRing, s: int, k: int, g: str = "b") -> Poly:
    """C(k, s) g^{k + s(p-1)}: the closed form for a power of a degree-2 class."""
    p = R.p
    exp = tuple((k + s * (p - 1)) if v == g else 0 for v in R.vars)
    return Poly(R.vars, {exp: comb(k, s)}, p)


def hbar_multiple_vanishing(p: int) -> VerificationReport:
    """St_in(b) dies on b = t h, and is the only degree-2p element doing so that lifts b^p."""
    require_odd_prime(p)
    rep = VerificationReport(f"total power at b = t*hbar, p={p}")
    R = CohomRing(p)
    st = st_in(R, R.gen("b")).even
    h = Poly.var(R.image_vars, H_VAR, p)
    for t in range(p):
        val = st.subs({"b": h.scale(t)}, vars=R.image_vars)
        rep.add(f"St_in(b) at b = {t}*hbar vanishes", val.is_zero(), witness=val)

    # unknowns c_i for monomials b^i h^{p-i}, i = 0..p; rows: t = 0..p-1, then c_p = 1
    rows = [[pow(t, i, p) if (t or i) else 1 for i in range(p + 1)] for t in range(p)]
    rows.append([0] * p + [1])
    M = la.as_matrix(rows)
    rhs = la.as_matrix([0] * p + [1])
    unique = la.rank(M, p) == p + 1
    sol = la.solve(M, rhs, p)
    rep.add("linear system has a unique solution", unique and sol is not None)
    if sol is not None:
        want = [0] * (p + 1)
        want[p] = 1
        want[1] = p - 1
        rep.add("solution is b^p - hbar^(p-1) b", [int(c) for c in sol] == want,
                witness=[int(c) for c in sol])
    return rep


def cartan_check(R: CohomRing, f: Poly, g: Poly) -> bool:
    opf, opg, opfg = total_operations(R, f), total_operations(R, g), total_operations(R, f * g)
    zero = Poly.zero(R.vars, R.p)
    for s in range(max(len(opfg), len(opf) + len(opg)) + 1):
        rhs = zero
        for i in range(s + 1):
            if i < len(opf) and s - i < len(opg):
                rhs = rhs + opf[i] * opg[s - i]
        if (opfg[s] if s < len(opfg) else zero) != rhs:
            return False
    return True


def unstability_check(R: CohomRing, f: Poly) -> bool:
    """P^s(f) = 0 for 2s > deg f and P^(deg f / 2)(f) = f^p.

    The first part holds when every hbar exponent in the total power is a multiple of p - 1
    no larger than (p - 1) deg f / 2, so that is what gets checked.
    """
    p = R.p
    k = R.degree(f) // 2
    hpos = R.image_vars.index(H_VAR)
    exps = {e[hpos] for e in st_in(R, f).even.terms}
    if any(e % (p - 1) or e > (p - 1) * k for e in exps):
        return False
    return total_operations(R, f)[-1] == f ** p
