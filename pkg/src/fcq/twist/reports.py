"""Verification reports for the Frobenius twist."""

from __future__ import annotations

import random

import numpy as np

from fcq.exactalg.field import require_odd_prime
from fcq.homalg import linalg as la
from fcq.twist.algebra import SuperAlgebra, exterior, exterior_hopf, group_algebra_cyclic, random_super_algebra
from fcq.twist.frobenius import (
    dual_algebra,
    frobenius_twist_algebra,
    graded_twist_dims,
    hopf_twist,
    sign_factor,
    tate_zero_dims,
)
from fcq.report import VerificationReport


def predicted_constants(A: SuperAlgebra, p: int) -> np.ndarray:
    """sign_factor(|e_i|, |e_j|) times the structure constants of A."""
    signs = np.array([[sign_factor(a, b, p) for b in A.degrees] for a in A.degrees], dtype=np.int64)
    return la.mod(A.mult * signs[:, :, None], p)


def twist_algebra_report(A: SuperAlgebra, p: int, label: str = "A") -> VerificationReport:
    rep = VerificationReport(f"twist of {label}, p={p}")
    A1 = frobenius_twist_algebra(A, p)
    rep.add("dim A^(1) = dim A", A1.dim == A.dim, witness=[A1.dim, A.dim])
    rep.add("degrees multiply by p", A1.degrees == [p * d for d in A.degrees])
    dims = tate_zero_dims(A.graded_dims(), p)
    rep.add("graded dims of ker/im match the p-dilation", dims == graded_twist_dims(A.graded_dims(), p),
            witness=dims)
    rep.add("A^(1) is an algebra", A1.check().passed)
    rep.add("structure constants = sign factor times original",
            np.array_equal(la.mod(A1.mult, p), predicted_constants(A, p)))
    rep.add("unit maps to unit", np.array_equal(la.mod(A1.unit, p), la.mod(A.unit, p)))
    return rep


def random_twist_report(seed: int, p: int, count: int = 5, max_dim: int = 3) -> VerificationReport:
    require_odd_prime(p)
    rng = random.Random(seed)
    rep = VerificationReport(f"twist of {count} random algebras, p={p}, seed={seed}")
    for k in range(count):
        A = random_super_algebra(rng, p, max_dim)
        rep.extend(twist_algebra_report(A, p), prefix=f"algebra {k} (degrees {A.degrees}): ")
    return rep


def sign_lemma_report(p: int) -> VerificationReport:
    """xi^(1) eta^(1) in the twist of the exterior algebra on two degree-1 classes."""
    require_odd_prime(p)
    A = exterior(p, [1, 1])
    A1 = frobenius_twist_algebra(A, p)
    xi, eta, xieta = A.names.index("xi"), A.names.index("eta"), A.names.index("xieta")
    expected = -1 if p % 4 == 3 else 1
    got = int(A1.mult[xi, eta, xieta]) % p
    got = got - p if got > p // 2 else got
    rep = VerificationReport(f"sign on odd*odd products, p={p}")
    rep.add(f"xi^(1) eta^(1) = {expected} (xi eta)^(1)", got == expected, witness=got)
    rep.add(f"sign_factor(1, 1, {p}) = {expected}", sign_factor(1, 1, p) == expected)
    rep.add("twisted exterior algebra is graded commutative", A1.is_graded_commutative())
    return rep


def hopf_twist_report(p: int) -> VerificationReport:
    rep = VerificationReport(f"Hopf twist, p={p}")
    for label, H in (("group algebra of Z/2", group_algebra_cyclic(p, 2)),
                     ("exterior Hopf algebra on two odd classes", exterior_hopf(p, [1, 1]))):
        H1 = hopf_twist(H, p)
        rep.add(f"{label}: twist is a Hopf algebra", H1.check().passed)
        # the twisted coproduct is the transpose of the product of the twisted dual
        D1 = frobenius_twist_algebra(dual_algebra(H), p)
        rep.add(f"{label}: coproduct agrees with the twist of the dual",
                np.array_equal(la.mod(np.transpose(D1.mult, (2, 0, 1)), p), la.mod(H1.comult, p)))
    return rep
