from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symgen.exactalg import (
    P_ONE,
    P_ZERO,
    Poly,
    PoleAtRootOfUnity,
    Q,
    RF_ONE,
    RF_ZERO,
    RatFunc,
    T,
    CycloElem,
    ZeroDenominator,
    ZeroPolynomial,
    cyclo_ring,
    cyclotomic_multiplicity,
    cyclotomic_poly,
    euler_phi,
    poly_exact_div,
    poly_gcd,
    ratfunc_reduce,
    specialize_root_of_unity,
    try_exact_div,
)


def t_pow(k):
    return Poly.t(k)


def phi_factorial(r):
    out = P_ONE
    for j in range(1, r + 1):
        out = out * (P_ONE - t_pow(j))
    return out


# ---------------------------------------------------------------------------
# ratfunc_reduce
# ---------------------------------------------------------------------------

def test_reduce_telescoping():
    assert ratfunc_reduce(P_ONE - t_pow(2), P_ONE - T) == RatFunc.make(P_ONE + T)


def test_reduce_content_normalization():
    r = ratfunc_reduce(Poly.const(2) * T, Poly.const(4))
    assert r.scale == Fraction(1, 2)
    assert r.num == T
    assert r.den == P_ONE


def test_reduce_cleared_inverse_powers():
    # (1-t^3) * t * (1-1/t) cleared to polynomials is (1-t^3)(t-1);
    # over (1-t)^2 it reduces to -(1 + t + t^2)
    num = (P_ONE - t_pow(3)) * (T - P_ONE)
    den = (P_ONE - T) ** 2
    reduced = ratfunc_reduce(num, den)
    assert reduced == RatFunc.make(-(P_ONE + T + t_pow(2)))
    # cross-checked two ways: at t=2 and at t=-1
    assert reduced.eval_rational(t=2) == Fraction(-7)
    assert reduced.eval_rational(t=-1) == Fraction(-1)


def test_reduce_zero_denominator():
    with pytest.raises(ZeroDenominator):
        ratfunc_reduce(P_ONE, P_ZERO)


def test_cancel_common_factor_invariant():
    # reduce(num*g, den*g) == reduce(num, den), structurally
    samples = [
        (P_ONE - t_pow(2), P_ONE - T),
        (Poly.const(3) * T + 1, Poly.const(2) * (P_ONE - T)),
        ((P_ONE - Q) * (P_ONE + T), P_ONE - Q * T),
    ]
    gs = [P_ONE + T, Poly.const(2) * T, (P_ONE - Q * T) * T, Q + T]
    for num, den in samples:
        base = ratfunc_reduce(num, den)
        for g in gs:
            assert ratfunc_reduce(num * g, den * g) == base


# ---------------------------------------------------------------------------
# gcd and exact division
# ---------------------------------------------------------------------------

def test_exact_division_failure_detected():
    assert try_exact_div(T + 1, T - 1) is None
    assert poly_exact_div((T + 1) * (T - 1), T - 1) == T + 1


def test_gcd_bivariate():
    a = (P_ONE - Q * T) * (P_ONE + T)
    b = (P_ONE - Q * T) * (Q + 2)
    g = poly_gcd(a, b)
    assert g in (P_ONE - Q * T, (Q * T - P_ONE))
    # gcd is primitive with positive graded-lex leading coefficient
    assert g.leading()[1] > 0


def test_gcd_univariate_and_monomial_content():
    a = Poly.const(6) * T * (P_ONE - T)
    b = Poly.const(4) * t_pow(2) * (P_ONE - T) ** 2
    g = poly_gcd(a, b)
    assert g == (T * (P_ONE - T)).primitive() * -1 or g == (T * (P_ONE - T) * -1).primitive()
    # up to the canonical sign: t(1-t) ~ t^2 - t with positive leading
    assert g == (t_pow(2) - T)


# ---------------------------------------------------------------------------
# cyclotomic multiplicity
# ---------------------------------------------------------------------------

def test_multiplicity_phi5_at_k2():
    assert cyclotomic_multiplicity(phi_factorial(5), 2) == 2
    # independent check by explicit division
    phi2 = cyclotomic_poly(2)
    once = poly_exact_div(phi_factorial(5), phi2)
    twice = poly_exact_div(once, phi2)
    assert try_exact_div(twice, phi2) is None


def test_multiplicity_examples():
    assert cyclotomic_multiplicity(P_ONE - t_pow(6), 3) == 1
    assert cyclotomic_multiplicity(P_ONE - T, 2) == 0


def test_multiplicity_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        cyclotomic_multiplicity(P_ZERO, 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_multiplicity_characterizes_exact_power(k):
    phi_k = cyclotomic_poly(k)
    for m in range(3):
        p = (phi_k**m) * (T + 2)
        assert cyclotomic_multiplicity(p, k) == m
        reduced = p
        for _ in range(m):
            reduced = poly_exact_div(reduced, phi_k)
        assert try_exact_div(reduced, phi_k) is None


def test_product_of_cyclotomics_is_t_power_minus_one():
    for n in (1, 2, 3, 4, 6, 12):
        prod = P_ONE
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == t_pow(n) - 1


# ---------------------------------------------------------------------------
# root-of-unity specialization
# ---------------------------------------------------------------------------

def test_specialize_numerator_vanishes():
    assert specialize_root_of_unity(RatFunc.make(P_ONE + T), 2).is_zero()


def test_specialize_hl_one_row():
    # (1-t^2)/(1-t) = 1+t vanishes at t=-1
    f = ratfunc_reduce(P_ONE - t_pow(2), P_ONE - T)
    assert specialize_root_of_unity(f, 2).is_zero()


def test_specialize_exact_value():
    f = ratfunc_reduce((P_ONE - t_pow(3)) * (T - P_ONE), (P_ONE - T) ** 2)
    assert specialize_root_of_unity(f, 2).as_fraction() == -1


def test_specialize_pole_detected():
    f = RatFunc.make(T + 2, P_ONE + T)
    with pytest.raises(PoleAtRootOfUnity):
        specialize_root_of_unity(f, 2)


def test_specialize_cancels_common_phi_power():
    phi3 = cyclotomic_poly(3)
    f = RatFunc.make(phi3 * (T + 2), phi3 * (T + 3), Fraction(5))
    got = specialize_root_of_unity(f, 3)
    want = (
        CycloElem.from_poly(T + 2, 3)
        / CycloElem.from_poly(T + 3, 3)
        * CycloElem.from_fraction(5, 3)
    )
    assert got == want


small_fracs = st.fractions(
    min_value=-3, max_value=3, max_denominator=3
)


@st.composite
def pole_free_ratfuncs(draw, k):
    """Rational functions with denominators coprime to Phi_k."""
    def small_poly():
        coeffs = draw(st.lists(small_fracs, min_size=1, max_size=4))
        return Poly({(0, i): c for i, c in enumerate(coeffs) if c})

    num = small_poly()
    den = T + draw(st.sampled_from([2, 3, 5]))
    return RatFunc.make(num, den) if not num.is_zero() else RF_ZERO


@settings(max_examples=60, deadline=None)
@given(data=st.data(), k=st.sampled_from([2, 3, 4]))
def test_specialization_is_ring_homomorphism(data, k):
    f = data.draw(pole_free_ratfuncs(k))
    g = data.draw(pole_free_ratfuncs(k))
    sf, sg = specialize_root_of_unity(f, k), specialize_root_of_unity(g, k)
    assert specialize_root_of_unity(f + g, k) == sf + sg
    assert specialize_root_of_unity(f * g, k) == sf * sg


@pytest.mark.parametrize("k,value", [(1, Fraction(1)), (2, Fraction(-1))])
def test_low_order_cyclo_matches_rational_arithmetic(k, value):
    f = ratfunc_reduce((P_ONE - t_pow(3)) * (T - P_ONE), (P_ONE - T) ** 2)
    g = RatFunc.make(T + 2, Poly.const(3))
    for func in (f, g, f * g, f + g):
        got = specialize_root_of_unity(func, k)
        assert got.as_fraction() == func.eval_rational(t=value)


def test_cyclo_inverse_roundtrip():
    x = CycloElem.from_poly(t_pow(2) + T + 1, 5)
    assert x * x.inverse() == CycloElem.one(5)
    assert (x / x) == CycloElem.one(5)


def test_cyclo_zero_test_is_vector_zero():
    ring = cyclo_ring(4)
    assert ring.is_zero(CycloElem.zero(4))
    assert not ring.is_zero(CycloElem.from_poly(T, 4))


def test_euler_phi_degrees():
    assert [euler_phi(k) for k in (1, 2, 3, 4, 5, 6, 12)] == [1, 1, 2, 2, 4, 2, 4]


# ---------------------------------------------------------------------------
# ring laws for RatFunc (random small inputs)
# ---------------------------------------------------------------------------

@st.composite
def small_ratfuncs(draw):
    def small_poly(allow_zero):
        terms = {}
        for _ in range(draw(st.integers(0 if allow_zero else 1, 3))):
            dq = draw(st.integers(0, 2))
            dt = draw(st.integers(0, 2))
            c = draw(st.integers(-3, 3))
            if c:
                terms[(dq, dt)] = terms.get((dq, dt), 0) + c
        return Poly({k: Fraction(v) for k, v in terms.items() if v})

    num = small_poly(allow_zero=True)
    den = small_poly(allow_zero=False)
    while den.is_zero():
        den = Poly.const(draw(st.integers(1, 3)))
    return RatFunc.make(num, den)


@settings(max_examples=80, deadline=None)
@given(a=small_ratfuncs(), b=small_ratfuncs(), c=small_ratfuncs())
def test_ratfunc_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + RF_ZERO == a
    assert a * RF_ONE == a
    if not b.is_zero():
        assert (a / b) * b == a


def test_rendering_grammar():
    assert (P_ONE - Q * T).render() == "-q*t + 1"
    assert ((P_ONE - Q) * (P_ONE + T)).render() == "-q*t + t - q + 1"
    f = ratfunc_reduce((P_ONE - Q) * (P_ONE + T), P_ONE - Q * T)
    assert f.render() == "(q*t - t + q - 1)/(q*t - 1)"
    assert RF_ZERO.render() == "(0)"
    assert RatFunc.make(T, Poly.const(2)).render() == "(1/2*t)"
    assert ratfunc_reduce(P_ONE - t_pow(2), P_ONE - T).render() == "(t + 1)"


def test_canonical_form_invariants():
    f = ratfunc_reduce((P_ONE - Q) * (P_ONE + T), P_ONE - Q * T)
    # num and den are coprime primitive integer polynomials
    assert poly_gcd(f.num, f.den) == P_ONE
    for poly in (f.num, f.den):
        assert all(c.denominator == 1 for c in poly.terms.values())
    # den's graded-lex leading coefficient is positive
    assert f.den.leading()[1] > 0
    assert f.num.leading()[1] > 0
