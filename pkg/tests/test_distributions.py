from fractions import Fraction

import pytest

from ringel_ladders import distributions as d
from ringel_ladders.exact_poly import ExactPoly, TotalPoly, parse_poly
from ringel_ladders.families import Family


@pytest.mark.parametrize(
    "fam,k,text",
    [
        (Family.P, 4, "12z^4+19z^2+1"),
        (Family.P, 5, "92z^4+35z^2+1"),
        (Family.R, 3, "28z^3+28z^2+7z+1"),
        (Family.O, 1, "1"),
        (Family.L, 3, "12z^3+14z^2+5z+1"),
    ],
)
def test_recurrence_examples(fam, k, text):
    assert d.recurrence_poly(fam, k) == parse_poly(text)


def test_coefficient_examples():
    assert d.coeff_O_closed(3, 2) == 3
    assert d.coeff_O_closed(2, 2) == 1
    assert all(d.coeff_O_closed(n, m) == 0 for n in range(1, 20) for m in range(1, n + 1, 2))
    assert d.coeff_L_closed(2, 2) == 4
    assert d.coeff_L_closed(3, 2) == 14
    assert d.coeff_L_closed(1, 0) == 1
    assert d.coeff_P_closed(3, 2) == 7
    assert d.coeff_P_closed(4, 4) == 12
    assert d.coeff_P_closed(5, 4) == 92
    assert d.coeff_R_closed(3, 1) == 7
    assert d.coeff_R_closed(3, 3) == 28
    assert d.coeff_R_closed(4, 4) == 208


def test_binom_convention():
    assert d.binom(3, 5) == 0 and d.binom(-1, 0) == 0 and d.binom(2, -1) == 0
    assert d.binom(5, 2) == 10


@pytest.mark.parametrize("fam", list(Family))
def test_three_routes_agree(fam):
    for k in range(fam.min_index, 31):
        rec = d.recurrence_poly(fam, k)
        assert d.closed_poly(fam, k) == rec
        assert d.chebyshev_poly(fam, k) == rec
        assert rec(1) == 1 << fam.domain_bits(k)


def test_r_formula_has_half_integer_terms():
    # the integrality check has teeth: individual terms are not integers
    four = Fraction(4)
    term = Fraction(7, 2) * four ** 0
    assert term.denominator == 2
    assert d.coeff_R_rational(3, 1) == 7


def test_index_errors():
    with pytest.raises(ValueError):
        d.recurrence_poly(Family.P, 1)
    with pytest.raises(ValueError):
        d.coeff_L_closed(2, 3)
    with pytest.raises(ValueError):
        d.family_poly(Family.O, 3, "magic")


def test_rank_distribution_labels():
    r = d.rank_distribution(Family.R, 2, "closed")
    assert r.method == "closed_form" and r.counts == (1, 7, 28, 28)
    assert d.rank_distribution(Family.R, 2, "bruteforce").counts == r.counts
    assert d.family_poly(Family.R, 3, "bruteforce") == d.recurrence_poly(Family.R, 3)


def test_orientable_part():
    assert d.orientable_part(2) == ExactPoly([2, 14])
    assert d.orientable_part(3) == ExactPoly([2, 38, 24])
    assert d.orientable_part(5) == ExactPoly([2, 118, 648, 256])
    assert d.orientable_part(6) == ExactPoly([2, 198, 1656, 2240])
    with pytest.raises(ValueError):
        d.orientable_part(1)


def test_total_examples():
    assert d.total_embedding_poly(2) == TotalPoly.parse("2+14x+14y+42y^2+56y^3")
    assert d.total_embedding_poly(3) == TotalPoly.parse("2+38x+24x^2+22y+122y^2+424y^3+392y^4")


@pytest.mark.parametrize("n", range(2, 41))
def test_counting_and_degree_bounds(n):
    t = d.total_embedding_poly(n)
    assert t.genus_sum == 2 ** (2 * n)
    assert t.crosscap_sum == (2 ** (n + 1) - 1) * 2 ** (2 * n)
    assert t.crosscap.degree <= n + 1
    assert t.genus.degree <= (n + 1) // 2


def test_assemble_rejects_inconsistent_inputs():
    p = d.recurrence_poly(Family.P, 3)
    with pytest.raises(d.InvariantError):
        d.assemble_total(p, ExactPoly([1]))


def test_closed_route_integrality_error():
    with pytest.raises(d.InvariantError):
        d._as_int(Fraction(1, 2), "x")
