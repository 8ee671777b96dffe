"""End-to-end acceptance criteria. Each test prints one PASS/FAIL line and enforces its time limit."""

import time
from math import factorial

import pytest

from fcq.checks import (
    adams_report,
    as_hbar_weyl_report,
    coulomb_product_report,
    cone_report,
    steenrod_operations_report,
    tate_report,
    weyl_centrality_report,
    weyl_frobenius_report,
)
from fcq.coop import hbar_multiple_vanishing
from fcq.exactalg.identities import falling_factorial_identity
from fcq.homalg import verify_zeta
from fcq.homalg.samples import additivity_report
from fcq.ore import coulomb_frobenius_report, frobenius_structure_report, k_centrality_report, k_product_rule_report
from fcq.report import VerificationReport
from fcq.twist.reports import random_twist_report, sign_lemma_report

SEED = 0
RESULTS: list[str] = []


def run_criterion(number: int, title: str, limit: float, build) -> None:
    start = time.perf_counter()
    reports: list[VerificationReport] = build()
    elapsed = time.perf_counter() - start
    failures = [f"{rep.title}: {c.name}" for rep in reports for c in rep.failures()]
    ok = not failures and elapsed < limit
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d} {title} ({elapsed:.2f}s, limit {limit:g}s)"
    if failures:
        line += f" [{len(failures)} failing checks, first: {failures[0]}]"
    RESULTS.append(line)
    print(line)
    assert not failures, "\n".join(failures[:10])
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def test_criterion_01_falling_factorial():
    run_criterion(1, "falling factorial identity", 1,
                  lambda: [falling_factorial_identity(p) for p in (3, 5, 7)])


def test_criterion_02_weyl_identity():
    run_criterion(2, "Weyl x^p d^p identity and Frobenius form", 1,
                  lambda: [weyl_frobenius_report(p) for p in (3, 5, 7)])


def test_criterion_03_weyl_centrality():
    run_criterion(3, "Weyl central p-th powers", 1,
                  lambda: [weyl_centrality_report(p) for p in (3, 5, 7)])


def test_criterion_04_coulomb_product():
    run_criterion(4, "Coulomb basis products over Z[h]", 5,
                  lambda: [coulomb_product_report(r, 4) for r in (1, 2, 3)])


def test_criterion_05_coulomb_frobenius():
    run_criterion(5, "Coulomb Frobenius relation and centrality", 10,
                  lambda: [coulomb_frobenius_report(r, p) for p in (3, 5) for r in (1, 2, 3)])


def test_criterion_06_frobenius_structure():
    run_criterion(6, "Frobenius unit, h = 0 and multiplicativity", 5,
                  lambda: [frobenius_structure_report(r, p) for p in (3, 5) for r in (1, 2, 3)])


def test_criterion_07_qtorus_product_rule():
    # the literal rule f_n f_m = f_(n+m); mixed-sign pairs pick up a y-polynomial factor
    run_criterion(7, "quantum torus product rule f_n f_m = f_(n+m)", 2,
                  lambda: [k_product_rule_report(r, -3, 3, literal=True) for r in (1, 2)])


def test_criterion_08_root_of_unity_centrality():
    run_criterion(8, "root-of-unity centrality and cyclotomic identity", 5,
                  lambda: [k_centrality_report(r, n) for n in (2, 3, 4, 6) for r in (1, 2)])


def test_criterion_09_tate_construction():
    def build():
        reps = []
        for p in (3, 5):
            reps += [tate_report(p), random_twist_report(SEED, p, count=5, max_dim=3), sign_lemma_report(p)]
        return reps

    run_criterion(9, "Tate construction, twist dimensions and sign lemma", 10, build)
    assert sign_lemma_report(3).checks[0].name == "xi^(1) eta^(1) = -1 (xi eta)^(1)"
    assert sign_lemma_report(5).checks[0].name == "xi^(1) eta^(1) = 1 (xi eta)^(1)"


def test_criterion_10_steenrod_chain_engine():
    run_criterion(10, "additivity defect and cone filtration", 30,
                  lambda: [additivity_report(SEED, 3, cases=10, max_total_dim=3)]
                  + [cone_report(p, SEED) for p in (3, 5)])


@pytest.mark.parametrize("p", [3, 5, 7])
def test_zeta_scalar_values(p):
    want = {3: -1, 5: -2, 7: -6}[p]
    assert -factorial((p - 1) // 2) == want
    names = [c.name for c in verify_zeta(p).checks]
    assert f"gamma-delta-zeta = {want}" in names


def test_criterion_11_zeta():
    run_criterion(11, "zeta chain map, augmentation and composite scalar", 30,
                  lambda: [verify_zeta(p) for p in (3, 5, 7)])


def test_criterion_12_cohomology_operations():
    run_criterion(12, "Steenrod operations, vanishing at b = t h and uniqueness", 2,
                  lambda: [steenrod_operations_report(p, 20) for p in (3, 5)]
                  + [hbar_multiple_vanishing(p) for p in (3, 5)])


def test_criterion_13_cross_module():
    run_criterion(13, "AS_h agrees with the Frobenius image of w", 1,
                  lambda: [as_hbar_weyl_report(p) for p in (3, 5, 7)])


def test_criterion_14_adams():
    run_criterion(14, "Adams operations", 1, lambda: [adams_report(SEED)])
