import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fcq.exactalg import PrimeField, cyclotomic, falling_factorial_identity, inv_mod, poly_reduce
from fcq.exactalg.cyclotomic import CyclotomicRing
from fcq.exactalg.identities import falling_product
from fcq.exactalg.poly import NotDivisible, Poly


XY = ("x", "y")


def polys(vars=XY, modulus=0, laurent=False):
    lo = -2 if laurent else 0
    exps = st.tuples(*[st.integers(lo, 3) for _ in vars])
    return st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(lambda t: Poly(vars, t, modulus))


def to_sympy(f: Poly):
    syms = sympy.symbols(f.vars)
    expr = 0
    for e, c in f.terms.items():
        term = c
        for s, k in zip(syms, e):
            term *= s ** k
        expr += term
    return sympy.expand(expr)


@given(polys(), polys(), polys())
def test_ring_axioms_over_z(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == Poly.zero(XY)


@given(polys(modulus=7), polys(modulus=7), polys(modulus=7))
def test_ring_axioms_mod_p(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c


@given(polys(laurent=True), polys(laurent=True))
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(polys(), polys())
def test_reduction_is_a_homomorphism(a, b):
    assert (a * b).reduce(5) == a.reduce(5) * b.reduce(5)
    assert (a + b).reduce(5) == a.reduce(5) + b.reduce(5)


def test_coefficients_do_not_overflow():
    x = Poly.var(("x",), "x")
    big = (x + 1) ** 80
    assert big.coefficient((40,)) == sympy.binomial(80, 40)


def test_json_round_trip():
    f = Poly(("q",), {(2,): 3, (-1,): -12345678901234567890})
    assert Poly.from_json(f.to_json()) == f
    assert f.to_json()["terms"][0]["coeff"] in {"3", "-12345678901234567890"}


def test_exact_division():
    w, h = Poly.gens(("w", "h"))
    f = (w - h) * (w - 2 * h)
    assert (f * (w + 3)).exact_div(f, "w") == w + 3
    with pytest.raises(NotDivisible):
        (f + 1).exact_div(f, "w")


def test_prime_field():
    a = PrimeField(3, 7)
    assert a * a.inverse() == 1
    assert a ** 6 == 1
    assert inv_mod(3, 7) == 5


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_matches_sympy(n):
    q = sympy.Symbol("q")
    assert sympy.expand(to_sympy(cyclotomic(n)) - sympy.cyclotomic_poly(n, q)) == 0


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_product(n):
    q = Poly.var(("q",), "q")
    prod = Poly.const(("q",), 1)
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == q ** n - 1


def test_cyclotomic_examples():
    q = Poly.var(("q",), "q")
    assert cyclotomic(1) == q - 1
    assert cyclotomic(2) == q + 1
    assert cyclotomic(6) == q ** 2 - q + 1


def test_reduce_modulo_cyclotomic_handles_negative_powers():
    q = Poly.var(("q",), "q")
    assert poly_reduce(q ** -1, cyclotomic(2)) == Poly.const(("q",), -1)
    # q^-1 = q^2 when q^3 = 1, and q^2 = -q - 1 mod Phi_3
    assert poly_reduce(q ** -1, cyclotomic(3)) == -q - 1
    assert poly_reduce(q ** 3, cyclotomic(3)) == Poly.const(("q",), 1)


@given(polys(("q",), laurent=True), polys(("q",), laurent=True), st.sampled_from([2, 3, 4, 6, 12]))
def test_cyclotomic_reduction_is_a_homomorphism(a, b, n):
    R = CyclotomicRing(n)
    assert R.reduce(a * b) == R.reduce(R.reduce(a) * R.reduce(b))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_falling_factorial(p):
    assert falling_factorial_identity(p).passed


def test_falling_factorial_p3_expansion():
    T, h = Poly.gens(("T", "h"))
    assert falling_product(3, 0) == T ** 3 - 3 * h * T ** 2 + 2 * h ** 2 * T


@settings(max_examples=20)
@given(st.sampled_from([3, 5, 7]), st.integers(0, 20), st.integers(0, 20))
def test_falling_factorial_pointwise(p, t, hv):
    # evaluate both sides at integers: a product over a full residue system
    val = 1
    for i in range(p):
        val *= t - i * hv
    assert (val - (t ** p - hv ** (p - 1) * t)) % p == 0
