from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fcq.coop import (
    CohomRing,
    OperationImage,
    as_hbar,
    cartan_check,
    hbar_multiple_vanishing,
    normalization,
    st_in,
    steenrod_P,
    steenrod_P_monomial_formula,
    total_operations,
    unstability_check,
)
from fcq.exactalg.field import factorial_mod, inv_mod
from fcq.exactalg.poly import Poly


def sympy_total_power(exps: dict, p: int):
    """Total power of a monomial in b, c via sympy: substitute g -> g^p - h^(p-1) g."""
    b, c, h = sympy.symbols("b c h")
    expr = 1
    for sym, k in zip((b, c), exps):
        expr *= (sym ** p - h ** (p - 1) * sym) ** k
    return sympy.Poly(sympy.expand(expr), b, c, h, modulus=p)


def test_total_power_of_generator():
    R = CohomRing(3)
    img = st_in(R, R.gen("b"))
    assert str(img) == "b^3 + 2*b*hbar^2"
    assert img.odd.is_zero()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(0, 3), st.integers(0, 3))
def test_total_power_matches_sympy(p, i, j):
    R = CohomRing(p, {"b": 2, "c": 2})
    f = R.element({(i, j): 1})
    got = st_in(R, f).even
    want = sympy_total_power((i, j), p)
    terms = {(e[0], e[1], e[3]): c for e, c in got.terms.items()}
    assert terms == {m: int(c) % p for m, c in want.terms()}


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_total_power_is_multiplicative(p, a, b, c, d):
    R = CohomRing(p, {"b": 2, "c": 2})
    f, g = R.element({(a, b): 1}), R.element({(c, d): 2})
    assert st_in(R, f * g) == st_in(R, f) * st_in(R, g)


def test_generator_degrees_enforced():
    with pytest.raises(ValueError):
        CohomRing(3, {"b": 3})
    R = CohomRing(3, {"b": 4})
    with pytest.raises(ValueError):
        st_in(R, R.gen("b"))
    with pytest.raises(ValueError):
        CohomRing(3, {"b": 2}, {"b": Poly.const(("b",), 1, 3)})


def test_as_hbar_matches_definition():
    p = 5
    x, y = Poly.gens(("x", "y"), p)
    f = x * y + 3 * x ** 2
    got = as_hbar(f)
    X, Y, h = Poly.gens(("x", "y", "h"), p)
    ax, ay = X ** p - h ** (p - 1) * X, Y ** p - h ** (p - 1) * Y
    assert got == ax * ay + 3 * ax ** 2
    # h = 0 gives the Frobenius, h = 1 gives Artin-Schreier
    assert got.subs({"h": 0}) == (X ** p * Y ** p + 3 * X ** (2 * p))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_normalization(p):
    q = (p - 1) // 2
    for n in range(0, 9):
        want = (-1) ** (q * n * (n - 1) // 2) * pow(inv_mod(factorial_mod(q, p), p), n, p) % p
        assert normalization(n, p) == want


@pytest.mark.parametrize("p", [3, 5])
def test_low_operations(p):
    R = CohomRing(p)
    b = R.gen("b")
    assert steenrod_P(R, 0, b) == b
    assert steenrod_P(R, 1, b) == b ** p
    assert steenrod_P(R, 2, b).is_zero()


@pytest.mark.parametrize("p", [3, 5])
def test_operations_on_powers(p):
    R = CohomRing(p)
    b = R.gen("b")
    for k in range(1, 11):
        for s in range(k + 2):
            got = steenrod_P(R, s, b ** k)
            want = Poly(R.vars, {(k + s * (p - 1),): comb(k, s)}, p)
            assert got == want == steenrod_P_monomial_formula(R, s, k)


def test_example_value():
    R = CohomRing(3)
    b = R.gen("b")
    assert steenrod_P(R, 1, b ** 2) == b ** 4 * 2


@pytest.mark.parametrize("p", [3, 5])
def test_cartan_and_unstability_two_variables(p):
    R = CohomRing(p, {"b": 2, "c": 2})
    b, c = R.gen("b"), R.gen("c")
    for f, g in [(b, c), (b ** 2, c), (b * c, b + c), (b ** 2 + c ** 2, b)]:
        assert cartan_check(R, f, g)
    for f in [b * c, b ** 2 * c, b + c, b ** 3 + b * c ** 2]:
        assert unstability_check(R, f)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_vanishing_on_hbar_multiples(p):
    rep = hbar_multiple_vanishing(p)
    assert rep.passed, str(rep)


def test_operation_image_truncates_a_squared():
    V = ("b", "a", "h")
    a = Poly.var(V, "a", 3)
    img = OperationImage.of(a)
    assert (img * img).poly.is_zero()


@pytest.mark.parametrize("p", [3, 5])
def test_total_operations_match_single_operations(p):
    R = CohomRing(p, {"b": 2, "c": 2})
    b, c = R.gen("b"), R.gen("c")
    f = b ** 2 * c + 2 * c ** 3
    ops = total_operations(R, f)
    assert len(ops) == 4
    assert ops == [steenrod_P(R, s, f) for s in range(4)]
    assert ops[0] == f
    assert total_operations(R, R.element({})) == []
