from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringel_ladders.cheby import (
    RecurrenceSpec,
    chebyshev_u,
    chebyshev_u_coefficient_identity_check,
    closed_form_eval,
    particular_residual,
    scaled_u_expansion,
    solve_constants,
)
from ringel_ladders.distributions import COEFFS, family_spec, recurrence_poly
from ringel_ladders.exact_poly import ExactPoly, parse_poly
from ringel_ladders.families import Family

small = st.lists(st.integers(-4, 4), max_size=3).map(ExactPoly)


def test_u_examples():
    assert chebyshev_u(0) == ExactPoly([1])
    assert chebyshev_u(1) == ExactPoly([0, 2])
    assert chebyshev_u(2) == parse_poly("4x^2-1", "x")
    assert chebyshev_u(4) == parse_poly("16x^4-12x^2+1", "x")
    assert chebyshev_u(5) == parse_poly("32x^5-32x^3+6x", "x")
    with pytest.raises(ValueError):
        chebyshev_u(-1)


@pytest.mark.parametrize("k", range(31))
def test_u_binomial_identity(k):
    assert chebyshev_u_coefficient_identity_check(k)
    if k >= 2:
        x2 = ExactPoly([0, 2])
        assert chebyshev_u(k) == x2 * chebyshev_u(k - 1) - chebyshev_u(k - 2)


def test_scaled_examples():
    a1, a2 = ExactPoly([1, 4]), ExactPoly([0, 0, 16])
    assert scaled_u_expansion(0, a1, a2) == ExactPoly([1])
    assert scaled_u_expansion(1, a1, a2) == a1
    assert scaled_u_expansion(-1, a1, a2) == ExactPoly()
    assert scaled_u_expansion(2, a1, a2) == a1 * a1 + a2
    assert scaled_u_expansion(3, ExactPoly([1]), ExactPoly([0, 0, 8])) == ExactPoly([1, 0, 16])


@given(small, small, st.integers(2, 9))
def test_scaled_expansion_recurrence(a1, a2, k):
    s = lambda j: scaled_u_expansion(j, a1, a2)  # noqa: E731
    assert s(k) == a1 * s(k - 1) + a2 * s(k - 2)


def test_fitted_multipliers():
    half = Fraction(1, 2)
    expected = {
        Family.O: (ExactPoly(), ExactPoly([0, 0, -1])),
        Family.L: (ExactPoly([0, -1]), ExactPoly([0, 0, -2])),
        Family.P: (ExactPoly([-half, 0, -half]), ExactPoly([half, 0, -17 * half])),
        Family.R: (ExactPoly([-half, -7 * half, -1]), ExactPoly([half, half, -17])),
    }
    for fam, (b, c) in expected.items():
        consts = solve_constants(family_spec(fam, recurrence_poly))
        assert (consts.b, consts.c) == (b, c), fam


@pytest.mark.parametrize("fam", list(Family))
def test_constants_reproduce_initials(fam):
    spec = family_spec(fam, recurrence_poly)
    consts = solve_constants(spec)
    for k, v in spec.initials.items():
        assert closed_form_eval(spec, consts, k) == v


@pytest.mark.parametrize("fam", [Family.P, Family.R])
def test_particular_solutions(fam):
    spec = family_spec(fam, recurrence_poly)
    for k in range(spec.base_index + 2, 30):
        assert particular_residual(spec, k).is_zero()


def test_closed_form_examples():
    for fam, k, text in [
        (Family.P, 3, "7z^2+1"),
        (Family.R, 2, "4z^2+3z+1"),
        (Family.R, 4, "208z^4+212z^3+80z^2+11z+1"),
    ]:
        spec = family_spec(fam, recurrence_poly)
        assert closed_form_eval(spec, solve_constants(spec), k) == parse_poly(text)


def test_recurrence_validation():
    one = ExactPoly([1])
    with pytest.raises(ValueError):
        RecurrenceSpec(one, ExactPoly(), {1: one, 2: one})
    with pytest.raises(ValueError):
        RecurrenceSpec(one, one, {1: one, 3: one}).base_index


@given(small, small.filter(lambda p: not p.is_zero()), st.integers(1, 6))
def test_casoratian_never_vanishes(a1, a2, k0):
    # the 2x2 determinant is (-a2)^(k0-1), so SingularSystemError needs a2 = 0
    one = ExactPoly([1])
    spec = RecurrenceSpec(a1, a2, {k0: one, k0 + 1: one})
    assert solve_constants(spec).denom == (a2 * -1) ** (k0 - 1)


def test_coeffs_table():
    assert COEFFS[Family.R] == (ExactPoly([1, 4]), ExactPoly([0, 0, 16]))
