"""Named verification checks, shared by the command line and the test suite.

Each entry of ``REGISTRY`` knows which grid parameters it ranges over
(``p``, ``r``, ``n``), how to build a :class:`VerificationReport` for one
grid point, and a short statement of what it certifies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from fcq.coop import (
    CohomRing,
    as_hbar,
    cartan_check,
    hbar_multiple_vanishing,
    steenrod_P,
    steenrod_P_monomial_formula,
    unstability_check,
)
from fcq.exactalg.field import require_odd_prime
from fcq.exactalg.identities import falling_factorial_identity
from fcq.exactalg.poly import Poly
from fcq.homalg.complexes import CyclicComplex
from fcq.homalg.resolution import verify_zeta
from fcq.homalg.samples import additivity_report, cone_filtration_report, semi_split_map
from fcq.homalg.tate import tate_hypercohomology
from fcq.ore.coulomb import (
    CoulombElement,
    NotInCoulomb,
    basis_product,
    coulomb_basis,
    coulomb_frobenius,
    coulomb_frobenius_report,
    coulomb_membership,
    frobenius_structure_report,
)
from fcq.ore.qtorus import adams, centrality_report, k_centrality_report, k_product_rule_report
from fcq.ore.weyl import WeylElement, falling_w, frobenius_weyl, to_wform
from fcq.report import VerificationReport
from fcq.twist.reports import hopf_twist_report, random_twist_report, sign_lemma_report


# -- ore: Weyl algebra ----------------------------------------------------------

def weyl_frobenius_report(p: int) -> VerificationReport:
    require_odd_prime(p)
    rep = VerificationReport(f"x^p d^p against the falling product, p={p}")
    over_z = WeylElement({(p, p): 1}) == falling_w(p)
    rep.add("x^p d^p = prod (x d - i h) over Z[h]", over_z)
    w, h = WeylElement.w(p), WeylElement.hbar(p)
    as_form = w ** p - h ** (p - 1) * w
    rep.add("prod (x d - i h) = (x d)^p - h^(p-1) x d mod p", falling_w(p, p) == as_form)
    rep.add("Frobenius image of x y is x^p d^p", frobenius_weyl(1, 1, p) == falling_w(p, p))
    return rep


def weyl_centrality_report(p: int) -> VerificationReport:
    require_odd_prime(p)
    images = {"x^p": WeylElement.x(p, p), "x^-p": WeylElement.x(-p, p), "d^p": WeylElement.d(p, p),
              "prod (x d - i h)": falling_w(p, p)}
    gens = {"x": WeylElement.x(1, p), "x^-1": WeylElement.x(-1, p), "d": WeylElement.d(1, p)}
    return centrality_report(images, gens, title=f"central p-th powers in the Weyl algebra, p={p}")


# -- ore: Coulomb branch --------------------------------------------------------

def coulomb_product_report(r: int, max_n: int = 4) -> VerificationReport:
    rep = VerificationReport(f"e_n e_m = e_(n+m) over Z[h], r={r}, 0 <= n, m <= {max_n}")
    basis = {n: coulomb_basis(r, n) for n in range(2 * max_n + 1)}
    for n in range(max_n + 1):
        for m in range(max_n + 1):
            lhs = basis[n] * basis[m]
            ok = lhs == basis[n + m] and basis_product(r, n, m) == Poly.const(("w", "h"), 1)
            rep.add(f"e({n})*e({m}) = e({n + m})", ok, witness=None if ok else str(lhs))
    return rep


def coulomb_membership_report(r: int, p: int, max_n: int = 3) -> VerificationReport:
    rep = VerificationReport(f"Weyl membership round trips, r={r}, p={p}")
    if r and r % p == 0:
        # the embedding degenerates: both routes to e_1 e_-1 vanish mod p
        lift = coulomb_basis(r, 1) * coulomb_basis(r, -1)
        rep.add("lift of e(1)*e(-1) vanishes mod p", lift.reduce(p).is_zero())
        prod = CoulombElement.e(r, p, 1) * CoulombElement.e(r, p, -1)
        rep.add("e(1)*e(-1) = 0 in the basis mod p", prod.is_zero(), witness=str(prod))
        return rep
    for n in range(-max_n, max_n + 1):
        u = coulomb_basis(r, n).reduce(p)
        back = coulomb_membership(u, r)
        rep.add(f"e({n}) round trip", back == CoulombElement.e(r, p, n), witness=str(back))
    try:
        coulomb_membership(WeylElement.x(1, p), r)
        rejected = None
    except NotInCoulomb as exc:
        rejected = exc.n
    rep.add("x alone is rejected at n = 1" if r else "x alone is accepted at r = 0",
            rejected == 1 if r else rejected is None, witness=rejected)
    return rep


# -- twist / homalg -------------------------------------------------------------

def tate_report(p: int) -> VerificationReport:
    rep = VerificationReport(f"Tate cohomology of cyclic modules, p={p}")
    reg = tate_hypercohomology(CyclicComplex.regular(p))
    rep.add("regular module has no Tate cohomology", reg == {0: 0, 1: 0}, witness=reg)
    triv = tate_hypercohomology(CyclicComplex.trivial(p))
    rep.add("trivial module has Tate cohomology F_p in each degree", triv == {0: 1, 1: 1}, witness=triv)
    return rep


def cone_report(p: int, seed: int) -> VerificationReport:
    rng = np.random.default_rng(seed)
    return cone_filtration_report(semi_split_map(rng, p), p)


# -- coop -------------------------------------------------------------------------

def steenrod_operations_report(p: int, max_degree: int = 20) -> VerificationReport:
    R = CohomRing(p)
    b = R.gen("b")
    top = max_degree // 2
    rep = VerificationReport(f"Steenrod operations on F_{p}[b], degree <= {max_degree}")
    rep.add("P^0(b) = b", steenrod_P(R, 0, b) == b)
    rep.add("P^1(b) = b^p", steenrod_P(R, 1, b) == b ** p)
    bad = [(s, k) for k in range(1, top + 1) for s in range(k + 2)
           if steenrod_P(R, s, b ** k) != steenrod_P_monomial_formula(R, s, k)]
    rep.add("P^s(b^k) = C(k, s) b^(k + s(p-1))", not bad, witness=bad[:5])
    bad = [(i, j) for i in range(1, top) for j in range(1, top + 1 - i) if not cartan_check(R, b ** i, b ** j)]
    rep.add("Cartan formula on b^i b^j", not bad, witness=bad[:5])
    bad = [k for k in range(1, top + 1) if not unstability_check(R, b ** k)]
    rep.add("unstability: P^s(b^k) = 0 for 2s > 2k and P^k(b^k) = b^(pk)", not bad, witness=bad)
    return rep


def as_hbar_weyl_report(p: int) -> VerificationReport:
    """AS_h on one coordinate, pushed into the Weyl algebra with w -> x d, against F(w)."""
    rep = VerificationReport(f"AS_h(w) against the Frobenius image of w, p={p}")
    f = as_hbar(Poly.var(("w",), "w", p))
    w, h = WeylElement.w(p), WeylElement.hbar(p)
    pushed = WeylElement.const(0, p)
    for (a, k), c in f.terms.items():
        pushed = pushed + w ** a * h ** k * c
    image = coulomb_frobenius(1, p, "w").to_weyl()
    rep.add("AS_h(w) at w = x d equals F(w) in the Weyl algebra", pushed == image,
            witness={"as": str(pushed), "F": str(image)})
    rep.add("w-forms agree", to_wform(pushed) == to_wform(image))
    return rep


def adams_report(seed: int, trials: int = 20) -> VerificationReport:
    rng = random.Random(seed)
    Y = ("y",)
    rep = VerificationReport(f"Adams operations on Z[y, 1/y], seed={seed}")

    def rand_laurent() -> Poly:
        return Poly(Y, {(rng.randint(-3, 3),): rng.randint(-4, 4) for _ in range(rng.randint(1, 4))})

    pairs = [(rand_laurent(), rand_laurent()) for _ in range(trials)]
    bad = [(str(f), str(g), n) for f, g in pairs for n in range(1, 5)
           if adams(f * g, n) != adams(f, n) * adams(g, n) or adams(f + g, n) != adams(f, n) + adams(g, n)]
    rep.add("psi^n is a ring map", not bad, witness=bad[:3])
    rep.add("psi^n(1) = 1", all(adams(Poly.const(Y, 1), n) == Poly.const(Y, 1) for n in range(1, 5)))
    rep.add("psi^1 = id", all(adams(f, 1) == f for f, _ in pairs))
    bad = [(str(f), n, m) for f, _ in pairs for n in range(1, 5) for m in range(1, 5)
           if adams(adams(f, m), n) != adams(f, n * m)]
    rep.add("psi^n psi^m = psi^(nm)", not bad, witness=bad[:3])
    y = Poly.var(Y, "y")
    rep.add("psi^2(y + 1/y) = y^2 + 1/y^2", adams(y + y ** -1, 2) == y ** 2 + y ** -2)
    return rep


# -- registry -----------------------------------------------------------------------

@dataclass(frozen=True)
class CheckSpec:
    id: str
    grid: tuple[str, ...]
    run: Callable[..., VerificationReport]
    summary: str
    statement: str
    extra: tuple[str, ...] = field(default_factory=tuple)


def _hbar_vanishing(p: int) -> VerificationReport:
    return hbar_multiple_vanishing(p)


REGISTRY: dict[str, CheckSpec] = {}


def _register(id, grid, run, summary, statement, extra=()):
    REGISTRY[id] = CheckSpec(id, tuple(grid), run, summary, statement, tuple(extra))


_register("fermat-falling-factorial", ["p"], lambda p: falling_factorial_identity(p),
          "falling factorial in characteristic p",
          "prod_{i=0}^{p-1} (T - i h) = T^p - h^(p-1) T in F_p[T, h]; with T = x d this is "
          "(x d)^p - h^(p-1) x d = x^p d^p")
_register("weyl-frobenius", ["p"], weyl_frobenius_report,
          "p-th powers in the Weyl algebra",
          "x^p d^p = prod_{i<p} (x d - i h) over Z[h], and = (x d)^p - h^(p-1) x d mod p")
_register("weyl-centrality", ["p"], weyl_centrality_report,
          "central elements of the mod-p Weyl algebra",
          "[x^(+-p), g] = [d^p, g] = [prod (x d - i h), g] = 0 mod p for g in {x, 1/x, d}")
_register("coulomb-product", ["r"], lambda r, max_degree=None: coulomb_product_report(r, max_degree or 4),
          "product rule for the rank-one Coulomb basis",
          "e_n = prod_{i=1}^{nr} (r x d - i h) x^n satisfies e_n e_m = e_(n+m) over Z[h] for n, m >= 0",
          extra=("max_degree",))
_register("coulomb-membership", ["r", "p"], coulomb_membership_report,
          "mod-p Weyl membership test for the Coulomb basis",
          "u = sum g_n(w, h) x^n lies in the span of the e_n iff prod_{i=1}^{nr}(r w - i h) divides g_n; "
          "when p | r the product e_1 e_-1 vanishes mod p")
_register("coulomb-frobenius", ["r", "p"], coulomb_frobenius_report,
          "Frobenius-constant map on the rank-one Coulomb branch",
          "1/x -> x^-p, e_1 -> e_p, w -> prod_{i<p}(w - i h); F(e_1) F(1/x) = F((r w)^r) and all images are central")
_register("frobenius-structure", ["r", "p"], frobenius_structure_report,
          "unit, h = 0 and multiplicativity of the Frobenius-constant map",
          "F(1) = 1; F at h = 0 is the p-th power map of the commutative algebra; F(m m') = F(m) F(m') on monomials")
_register("qtorus-product", ["r"], lambda r: k_product_rule_report(r, literal=True),
          "product rule f_n f_m = f_(n+m) in the quantum torus",
          "f_m = prod_{i=0}^{mr-1}(1 - y^r q^-i) x^m (m >= 1), x^m (m <= 0); f_n f_m = f_(n+m) for -3 <= n, m <= 3")
_register("qtorus-product-corrected", ["r"], lambda r: k_product_rule_report(r, literal=False),
          "product rule in the quantum torus with the mixed-sign coefficient",
          "f_n f_m = c(n, m) f_(n+m) where c is 1 for same signs and a product of factors (1 - y^r q^k) otherwise")
_register("root-of-unity-centrality", ["r", "n"], k_centrality_report,
          "central map of the quantum torus at a root of unity",
          "1/x -> x^-n, y -> y^n, (1 - y^r)^r x -> (1 - y^(nr))^r x^n are central mod Phi_n(q); "
          "(1 - y^(nr))^r = prod_{i<nr}(1 - y^r q^-i) mod Phi_n")
_register("tate-regular", ["p"], tate_report,
          "Tate cohomology of the regular and trivial modules",
          "H^*(mu_p, F_p[mu_p]) = 0 and H^*(mu_p, F_p) = F_p in each degree, via the complete resolution")
_register("frobenius-twist", ["p"], lambda p, seed=0: random_twist_report(seed, p),
          "Frobenius twist of random graded algebras",
          "A^(1) = ker(1 - sigma)/im(N) on A^(x)p has dim A, degrees times p, and structure constants "
          "(-1)^(|a||b| p(p-1)/2) times those of A", extra=("seed",))
_register("sign-lemma", ["p"], sign_lemma_report,
          "sign of odd*odd products after the twist",
          "a^(1) b^(1) = (-1)^(|a||b| C(p, 2)) (a b)^(1); -1 for p = 3 mod 4, +1 for p = 1 mod 4")
_register("hopf-twist", ["p"], hopf_twist_report,
          "Frobenius twist of Hopf algebras",
          "the twist carries a Hopf structure; its coproduct equals the transpose of the product of the twisted dual")
_register("steenrod-additivity", ["p"], lambda p, seed=0: additivity_report(seed, p),
          "additivity defect of the Steenrod tensor power",
          "St(f + g) - St(f) - St(g) = sum_{x in mu_p} x h x^-1 with h the sum over orbit representatives of mixed words",
          extra=("seed",))
_register("cone-filtration", ["p"], lambda p, seed=0: cone_report(p, seed),
          "filtration of St(cone f) by number of source factors",
          "each F_i is stable, F_0 = St(B), F_p / F_(p-1) = St(suspension of A), and F_i / F_(i-1) is free for 0 < i < p",
          extra=("seed",))
_register("zeta", ["p"], verify_zeta,
          "the comparison map from the periodic resolution",
          "zeta is an equivariant chain map, epsilon zeta is the augmentation, and the top component of zeta "
          "is -((p-1)/2)! times the projection")
_register("steenrod-operations", ["p"], lambda p, max_degree=None: steenrod_operations_report(p, max_degree or 20),
          "Steenrod operations from the normalized total power",
          "P^s(b^k) = C(k, s) b^(k + s(p-1)) with Cartan formula and unstability, from St(b) = b^p - h^(p-1) b",
          extra=("max_degree",))
_register("hbar-vanishing", ["p"], _hbar_vanishing,
          "vanishing of the total power on multiples of h",
          "b^p - h^(p-1) b vanishes at b = t h for every t in F_p and is the unique such lift of b^p")
_register("as-hbar-weyl", ["p"], as_hbar_weyl_report,
          "Artin-Schreier map against the Weyl algebra",
          "AS_h(w) = w^p - h^(p-1) w at w = x d equals prod_{i<p}(x d - i h) = x^p d^p")
_register("adams", [], lambda seed=0: adams_report(seed),
          "Adams operations on Laurent polynomials",
          "psi^n(sum c_k y^k) = sum c_k y^(nk) is a ring map with psi^1 = id and psi^n psi^m = psi^(nm)",
          extra=("seed",))


def run_check(check_id: str, params: dict, seed: int = 0, max_degree: int | None = None) -> VerificationReport:
    spec = REGISTRY[check_id]
    kwargs = dict(params)
    if "seed" in spec.extra:
        kwargs["seed"] = seed
    if "max_degree" in spec.extra:
        kwargs["max_degree"] = max_degree
    return spec.run(**kwargs)


__all__ = [
    "REGISTRY",
    "CheckSpec",
    "adams_report",
    "as_hbar_weyl_report",
    "coulomb_membership_report",
    "coulomb_product_report",
    "run_check",
    "steenrod_operations_report",
    "tate_report",
    "weyl_centrality_report",
    "weyl_frobenius_report",
]
