"""Cyclotomic polynomials and reduction of (Laurent) polynomials modulo them."""

from __future__ import annotations

from functools import lru_cache
from typing import Union

from fcq.exactalg.field import is_prime
from fcq.exactalg.poly import Poly, VariableMismatch


@lru_cache(maxsize=None)
def _cyclotomic_terms(n: int) -> tuple[tuple[tuple[int], int], ...]:
    num = Poly(("q",), {(n,): 1, (0,): -1})
    for d in range(1, n):
        if n % d == 0:
            num = num.exact_div(cyclotomic(d), "q")
    return tuple(num.terms.items())


def cyclotomic(n: int, var: str = "q") -> Poly:
    """The n-th cyclotomic polynomial Phi_n, computed as (q^n - 1) / prod_{d|n, d<n} Phi_d.

    >>> str(cyclotomic(6))
    'q^2 - q + 1'
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic index must be a positive integer, got {n!r}")
    return Poly((var,), dict(_cyclotomic_terms(n)))


def _univariate_var(m: Poly) -> str:
    used = [v for i, v in enumerate(m.vars) if any(e[i] for e in m.terms)]
    if len(used) != 1:
        raise ValueError(f"modulus must involve exactly one variable, got {m}")
    return used[0]


def _inverse_of_var(m: Poly, var: str) -> Poly:
    """var^{-1} modulo m, which needs the constant term of m to be a unit."""
    c0 = m.constant_term()
    if m.modulus:
        if c0 % m.modulus == 0:
            raise ArithmeticError(f"{var} is not invertible modulo {m}")
        from fcq.exactalg.field import inv_mod

        c0_inv = inv_mod(c0, m.modulus)
    elif c0 in (1, -1):
        c0_inv = c0
    else:
        raise ArithmeticError(f"{var} is not invertible modulo {m}")
    i = m.index(var)
    # m = var*Q + c0  =>  var * (-Q/c0) = 1 (mod m)
    q_terms = {}
    for e, c in m.terms.items():
        if e[i] > 0:
            q_terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = -c * c0_inv
    return Poly(m.vars, q_terms, m.modulus)


def poly_reduce(x: Poly, modulus: Union[int, Poly]) -> Poly:
    """Canonical representative of x modulo a prime or a monic univariate polynomial.

    A prime modulus reduces coefficients.  A polynomial modulus (e.g. Phi_n or
    q^n - 1) reduces in its variable, which must occur in ``x``; negative
    powers of that variable are first rewritten through its inverse modulo
    the modulus.
    """
    if isinstance(modulus, int):
        if not is_prime(modulus):
            raise ValueError(f"{modulus} is not prime")
        return x.reduce(modulus)
    if not isinstance(modulus, Poly):
        raise TypeError("modulus must be a prime or a Poly")
    var = _univariate_var(modulus)
    if var not in x.vars:
        raise VariableMismatch(f"modulus variable {var!r} not among {x.vars}")
    m = modulus.embed(x.vars)
    if m.modulus != x.modulus:
        m = m.reduce(x.modulus) if x.modulus and not m.modulus else m
    lead = m.by_var(var)[m.degree(var)]
    if not lead.is_constant() or lead.constant_term() not in (1, -1) and not x.modulus:
        raise ValueError(f"modulus {modulus} must be monic")
    low = x.min_degree(var)
    if low < 0:
        shift = Poly.monomial(x.vars, tuple(-low if v == var else 0 for v in x.vars), 1, x.modulus)
        body = (x * shift).divmod_var(m, var)[1]
        inv = _inverse_of_var(m, var) ** (-low)
        return (body * inv).divmod_var(m, var)[1]
    return x.divmod_var(m, var)[1]


class CyclotomicRing:
    """Z[q]/Phi_n(q) (or F_p[q]/Phi_n(q)): the ring where q is a primitive n-th root of unity.

    Elements are plain :class:`Poly` values; this object only knows how to
    put them in canonical form (degree below phi(n) in ``q``).
    """

    def __init__(self, n: int, var: str = "q", modulus: int = 0):
        self.n = n
        self.var = var
        self.modulus = modulus
        phi = cyclotomic(n, var)
        self.phi = phi.reduce(modulus) if modulus else phi

    def __repr__(self):
        return f"CyclotomicRing(n={self.n})"

    def reduce(self, x: Poly) -> Poly:
        return poly_reduce(x, self.phi)

    __call__ = reduce

    def is_zero(self, x: Poly) -> bool:
        return self.reduce(x).is_zero()

    def equal(self, a: Poly, b: Poly) -> bool:
        return self.is_zero(a - b)

    @property
    def degree(self) -> int:
        return self.phi.degree(self.var)
