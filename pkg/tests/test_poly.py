"""Division, S-polynomials and Buchberger, pinned to the two worked reduced
bases and to the division contract."""

import random
from fractions import Fraction

import pytest

from catalogs import random_homogeneous_ideal
from grostrata import (
    GREVLEX,
    LEX,
    DomainError,
    Poly,
    buchberger,
    leading_data,
    normal_form,
    s_polynomial,
)
from grostrata.orders import divides
from grostrata.textio import parse_polynomial, parse_polynomial_list

XYZ = ["x", "y", "z"]
XYZW = ["x", "y", "z", "w"]


def p3(text):
    return parse_polynomial(text, XYZ)


def p4(text):
    return parse_polynomial(text, XYZW)


COUNTEREXAMPLE_GENS = [p3("x^2+y^2-z^2"), p3("x*y-z^2")]
COUNTEREXAMPLE_GB = [
    p3("x^2+y^2-z^2"), p3("x*y-z^2"), p3("y^4-y^2*z^2+z^4"), p3("x*z^2+y^3-y*z^2")]
CI_GENS = [p4("y-7*z-2*w"), p4("3*x*y-21*x*z+54*z^2+6*w^2"), p4("4*x*w+2*y*w-14*z*w+36*z^2")]
CI_GB = [p4("x*w+9*z^2+w^2"), p4("y-7*z-2*w")]


# -- arithmetic -----------------------------------------------------------------


def test_poly_add_cancels():
    f = p3("x^2+y^2")
    g = p3("-x^2+z")
    assert (f + g) == p3("y^2+z")
    assert not (f - f)


def test_poly_mul():
    assert p3("x+y") * p3("x-y") == p3("x^2-y^2")


def test_homogeneity():
    assert p3("x^2+y*z").is_homogeneous()
    assert not p3("x^2+y").is_homogeneous()
    assert p3("x^2+y*z").homogeneous_degree() == 2


def test_primitive_clears_denominators():
    f = Poly(2, {(1, 0): Fraction(2, 3), (0, 1): Fraction(4, 9)})
    g = f.primitive()
    assert g.terms == {(1, 0): Fraction(3), (0, 1): Fraction(2)}


# -- leading data ----------------------------------------------------------------


def test_leading_data_examples():
    le, lc, _ = leading_data(p3("x^2+y^2-z^2"), LEX)
    assert (le, lc) == ((2, 0, 0), 1)
    le, lc, _ = leading_data(Poly.constant(3, 5), LEX)
    assert (le, lc) == ((0, 0, 0), 5)
    le, lc, _ = leading_data(p3("x*z^2+y^3-y*z^2"), LEX)
    assert le == (1, 0, 2)


def test_leading_data_zero_rejected():
    with pytest.raises(DomainError):
        leading_data(Poly.zero(3), LEX)


# -- normal form -------------------------------------------------------------------


def test_normal_form_x_squared():
    r = normal_form(p3("x^2"), COUNTEREXAMPLE_GB, LEX)
    assert r == p3("z^2-y^2")


def test_normal_form_fixes_standard_support():
    f = p3("y^3+z")
    assert normal_form(f, COUNTEREXAMPLE_GB, LEX) == f


def test_normal_form_of_member_is_zero():
    member = COUNTEREXAMPLE_GENS[0] * p3("y") - COUNTEREXAMPLE_GENS[1] * p3("x-z")
    assert not normal_form(member, COUNTEREXAMPLE_GB, LEX)


def test_normal_form_rejects_zero_divisor():
    with pytest.raises(DomainError):
        normal_form(p3("x"), [Poly.zero(3)], LEX)


def test_division_contract_random():
    rng = random.Random(53)
    gb = buchberger(COUNTEREXAMPLE_GENS, LEX)
    leads = gb.leading_exponents()
    for _ in range(25):
        f = Poly(3, {tuple(rng.randint(0, 3) for _ in range(3)): Fraction(rng.randint(-5, 5))
                     for _ in range(rng.randint(1, 5))})
        r = normal_form(f, gb.generators, LEX)
        assert not normal_form(f - r, gb.generators, LEX)
        for e in r.terms:
            assert not any(divides(le, e) for le in leads)


# -- S-polynomials --------------------------------------------------------------------


def test_s_polynomial_hand_expansion():
    s = s_polynomial(p3("x*y-z^2"), p3("x^2+y^2-z^2"), LEX)
    assert s == p3("-x*z^2-y^3+y*z^2")


def test_s_polynomial_of_equal_inputs_is_zero():
    f = p3("x*y-z^2")
    assert not s_polynomial(f, f, LEX)


def test_s_polynomial_coprime_leads_reduces_to_zero():
    f, g = p3("x^2+z"), p3("y^2-z")
    assert not normal_form(s_polynomial(f, g, LEX), [f, g], LEX)


# -- Buchberger --------------------------------------------------------------------------


def test_buchberger_counterexample_basis():
    gb = buchberger(COUNTEREXAMPLE_GENS, LEX)
    assert set(gb.generators) == set(COUNTEREXAMPLE_GB)
    assert gb.reduced


def test_buchberger_complete_intersection_basis():
    gb = buchberger(CI_GENS, LEX)
    assert set(gb.generators) == set(CI_GB)


def test_buchberger_single_monomial():
    gb = buchberger([p3("x^2")], LEX)
    assert gb.generators == (p3("x^2"),)


def test_buchberger_zero_ideal_flagged():
    gb = buchberger([Poly.zero(2)], LEX)
    assert gb.is_zero_ideal()
    assert gb.generators == ()


def test_buchberger_output_unique_under_permutation_and_scaling():
    rng = random.Random(59)
    for _ in range(10):
        gens = random_homogeneous_ideal(rng, 3)
        reference = buchberger(gens, LEX).generators
        shuffled = gens[:]
        rng.shuffle(shuffled)
        shuffled = [g.scale(Fraction(rng.choice([2, -3, 5]), rng.choice([1, 7])))
                    for g in shuffled]
        assert buchberger(shuffled, LEX).generators == reference


def test_buchberger_grevlex_also_works():
    gb = buchberger(COUNTEREXAMPLE_GENS, GREVLEX)
    for f in gb.generators:
        for g in gb.generators:
            if f is not g:
                assert not normal_form(s_polynomial(f, g, GREVLEX), gb.generators, GREVLEX)


def test_parse_list_shares_ring():
    polys, names = parse_polynomial_list("x^2+y^2-z^2; x*y-z^2", XYZ)
    assert [p.dim for p in polys] == [3, 3]
    assert names == XYZ
