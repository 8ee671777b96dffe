"""Exact scalar arithmetic: prime fields, sparse (Laurent) polynomials, cyclotomic quotients."""

from fcq.exactalg.cyclotomic import CyclotomicRing, cyclotomic, poly_reduce
from fcq.exactalg.field import PrimeField, factorial_mod, inv_mod, is_prime, require_odd_prime
from fcq.exactalg.identities import falling_factorial_identity, falling_product
from fcq.exactalg.poly import NotDivisible, Poly, VariableMismatch

__all__ = [
    "CyclotomicRing",
    "NotDivisible",
    "Poly",
    "PrimeField",
    "VariableMismatch",
    "cyclotomic",
    "factorial_mod",
    "falling_factorial_identity",
    "falling_product",
    "inv_mod",
    "is_prime",
    "poly_reduce",
    "require_odd_prime",
]
