"""Rank-distribution polynomials of the O, L, P, R families and the total
embedding polynomial of Ringel ladders.

Three independent routes produce each family polynomial:

* ``recurrence``: step the second-order recurrences from printed initials;
* ``closed``: coefficient-by-coefficient binomial formulas;
* ``chebyshev``: the ``S_k`` expansion from :mod:`.cheby` with fitted constants.

Brute-force enumeration (:mod:`.overlap_enum`) and face tracing
(:mod:`.rotation_oracle`) are the other two.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .cheby import RecurrenceSpec, closed_form_eval, iterate, solve_constants
from .exact_poly import ExactPoly, TotalPoly
from .families import Family
from .overlap_enum import RankDistribution, brute_rank_distribution

METHODS = ("recurrence", "closed", "chebyshev", "bruteforce")


class InvariantError(AssertionError):
    """A cross-family consistency check failed."""


def _p(*coeffs) -> ExactPoly:
    return ExactPoly(coeffs)


INITIALS = {
    Family.O: {1: _p(1), 2: _p(1, 0, 1)},
    Family.L: {1: _p(1, 1), 2: _p(1, 3, 4)},
    Family.P: {2: _p(1, 0, 1), 3: _p(1, 0, 7)},
    Family.R: {2: _p(1, 3, 4), 3: _p(1, 7, 28, 28)},
}

COEFFS = {
    Family.O: (_p(1), _p(0, 0, 2)),
    Family.L: (_p(1, 2), _p(0, 0, 4)),
    Family.P: (_p(1), _p(0, 0, 8)),
    Family.R: (_p(1, 4), _p(0, 0, 16)),
}


def family_spec(family: Family, inner: Callable[[Family, int], ExactPoly]) -> RecurrenceSpec:
    """Recurrence data for ``family``; ``inner`` supplies the O / L polynomials
    that feed the P / R forcing terms and particular solutions."""
    a1, a2 = COEFFS[family]
    forcing = particular = None
    z2 = ExactPoly.monomial(1, 2)
    if family is Family.P:
        # P_{n+1} = P_n + 8z^2 P_{n-1} + 2^{n-1} z^2 O_{n-1}
        forcing = lambda k: z2 * inner(Family.O, k - 2) * 2 ** (k - 2)  # noqa: E731
        particular = lambda k: z2 * inner(Family.O, k - 1) * 2 ** (k - 1)  # noqa: E731
    elif family is Family.R:
        # R_{n+1} = (4z+1) R_n + 16z^2 R_{n-1} + 2^n z^2 L_{n-1}
        forcing = lambda k: z2 * inner(Family.L, k - 2) * 2 ** (k - 1)  # noqa: E731
        particular = lambda k: z2 * inner(Family.L, k - 1) * 2 ** k  # noqa: E731
    return RecurrenceSpec(a1, a2, INITIALS[family], particular=particular, forcing=forcing)


def _check_index(family: Family, k: int) -> None:
    if k < family.min_index:
        raise ValueError(f"{family.value}_{k} undefined; index must be >= {family.min_index}")


@lru_cache(maxsize=None)
def recurrence_poly(family: Family | str, k: int) -> ExactPoly:
    fam = Family.parse(family)
    _check_index(fam, k)
    return iterate(family_spec(fam, recurrence_poly), k)


@lru_cache(maxsize=None)
def _closed_constants(family: Family):
    spec = family_spec(family, chebyshev_poly)
    return spec, solve_constants(spec)


@lru_cache(maxsize=None)
def chebyshev_poly(family: Family | str, k: int) -> ExactPoly:
    fam = Family.parse(family)
    _check_index(fam, k)
    spec, consts = _closed_constants(fam)
    return closed_form_eval(spec, consts, k)


# -- coefficient formulas ------------------------------------------------

def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever ``a < 0``, ``b < 0`` or ``b > a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _as_int(value: Fraction, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise InvariantError(f"{what} is not an integer: {value}")
    return value.numerator


def _check_coeff_args(family: Family, n: int, m: int) -> None:
    _check_index(family, n)
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")


def coeff_O_closed(n: int, m: int) -> int:
    """Coefficient of ``z^m`` in ``O_n``: zero for odd ``m``."""
    _check_coeff_args(Family.O, n, m)
    if m % 2:
        return 0
    h = m // 2
    val = binom(n - h, h) * Fraction(2) ** h - binom(n - h - 1, h - 1) * Fraction(2) ** (h - 1)
    return _as_int(val, f"O_{n}({m})")


def l_coefficient_terms(n: int, m: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three binomial sums of the L coefficient formula, unsigned."""
    two = Fraction(2)
    t1 = two ** m * sum(binom(n - j, j) * binom(n - 2 * j, n - m) for j in range(m // 2 + 1))
    t2 = two ** (m - 1) * sum(
        binom(n - 1 - j, j) * binom(n - 1 - 2 * j, n - m) for j in range((m - 1) // 2 + 1)
    )
    t3 = two ** (m - 1) * sum(
        binom(n - 2 - j, j) * binom(n - 2 - 2 * j, n - m) for j in range((m - 2) // 2 + 1)
    )
    return t1, t2, t3


def coeff_L_closed(n: int, m: int) -> int:
    """Coefficient of ``z^m`` in ``L_n``."""
    _check_coeff_args(Family.L, n, m)
    t1, t2, t3 = l_coefficient_terms(n, m)
    return _as_int(t1 - t2 - t3, f"L_{n}({m})")


def _t8(k: int, r: int) -> int:
    # [z^r] sum_j C(k-j, j) (8 z^2)^j
    if r < 0 or r % 2:
        return 0
    return binom(k - r // 2, r // 2) * 8 ** (r // 2)


def coeff_P_closed(n: int, m: int) -> int:
    """Coefficient of ``z^m`` in ``P_n``, read off the S-expansion with
    multipliers ``1, -(z^2+1)/2, -(17z^2-1)/2`` plus ``2^{n-1} z^2 O_{n-1}``."""
    _check_coeff_args(Family.P, n, m)
    half = Fraction(1, 2)
    val = (
        Fraction(_t8(n, m))
        - half * (_t8(n - 1, m - 2) + _t8(n - 1, m))
        - half * (17 * _t8(n - 2, m - 2) - _t8(n - 2, m))
    )
    if m >= 2:
        val += 2 ** (n - 1) * coeff_O_closed(n - 1, m - 2)
    return _as_int(val, f"P_{n}({m})")


def coeff_R_rational(n: int, m: int) -> Fraction:
    """The eight-term R coefficient formula evaluated in exact rationals."""
    _check_coeff_args(Family.R, n, m)
    four = Fraction(4)
    half = Fraction(1, 2)

    def s(shift: int, top: int, upper: int) -> int:
        return sum(
            binom(n - shift - j, j) * binom(n - shift - 2 * j, top) for j in range(upper + 1)
        )

    val = (
        s(0, n - m, m // 2) * four ** m
        - s(1, n - m + 1, (m - 2) // 2) * four ** (m - 2)
        - Fraction(7, 2) * s(1, n - m, (m - 1) // 2) * four ** (m - 1)
        - half * s(1, n - m - 1, m // 2) * four ** m
        - 17 * s(2, n - m, (m - 2) // 2) * four ** (m - 2)
        + half * s(2, n - m - 1, (m - 1) // 2) * four ** (m - 1)
        + half * s(2, n - m - 2, m // 2) * four ** m
    )
    if m >= 2:
        val += 2 ** n * coeff_L_closed(n - 1, m - 2)
    return val


def coeff_R_closed(n: int, m: int) -> int:
    """Coefficient of ``z^m`` in ``R_n``."""
    return _as_int(coeff_R_rational(n, m), f"R_{n}({m})")


CLOSED_COEFF = {
    Family.O: lambda n, m: coeff_O_closed(n, m),
    Family.L: lambda n, m: coeff_L_closed(n, m),
    Family.P: lambda n, m: coeff_P_closed(n, m),
    Family.R: lambda n, m: coeff_R_closed(n, m),
}


def closed_poly(family: Family | str, k: int) -> ExactPoly:
    fam = Family.parse(family)
    _check_index(fam, k)
    return ExactPoly(CLOSED_COEFF[fam](k, m) for m in range(k + 1))


def family_poly(family: Family | str, k: int, method: str = "recurrence", workers: int = 1) -> ExactPoly:
    """The ``k``-th polynomial of ``family`` (``k`` = matrix dimension) by ``method``."""
    fam = Family.parse(family)
    if method == "recurrence":
        return recurrence_poly(fam, k)
    if method == "closed":
        return closed_poly(fam, k)
    if method == "chebyshev":
        return chebyshev_poly(fam, k)
    if method == "bruteforce":
        _check_index(fam, k)
        return brute_rank_distribution(fam, fam.param_for(k), workers=workers).poly
    raise ValueError(f"unknown method {method!r}")


def rank_distribution(family: Family | str, n: int, method: str = "recurrence", workers: int = 1) -> RankDistribution:
    """Distribution record for enumeration parameter ``n`` (see :class:`RankDistribution`)."""
    fam = Family.parse(family)
    if method == "bruteforce":
        return brute_rank_distribution(fam, n, workers=workers)
    poly = family_poly(fam, fam.index_for(n), method)
    label = "closed_form" if method in ("closed", "chebyshev") else method
    dist = RankDistribution.from_poly(fam, n, poly, label)
    dist.check()
    return dist


# -- total embedding polynomial -----------------------------------------

def orientable_from_p(p_poly: ExactPoly) -> ExactPoly:
    """Genus polynomial: each zero-diagonal matrix of rank 2g has two colourings."""
    return ExactPoly(2 * p_poly[2 * g] for g in range(p_poly.degree // 2 + 1))


def assemble_total(p_poly: ExactPoly, r_poly: ExactPoly) -> TotalPoly:
    genus = orientable_from_p(p_poly)
    crosscap = r_poly * 2 - genus.substitute_square()
    if any(c < 0 for c in crosscap) or crosscap[0] != 0:
        raise InvariantError(f"P and R are inconsistent: crosscap part {crosscap!r}")
    return TotalPoly(genus, crosscap)


def orientable_part(n: int, method: str = "recurrence") -> ExactPoly:
    """Genus polynomial of ``R_{n-1}``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return orientable_from_p(family_poly(Family.P, n + 1, method))


def total_embedding_poly(n: int, method: str = "recurrence", workers: int = 1) -> TotalPoly:
    """Total embedding polynomial of the Ringel ladder ``R_{n-1}``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    p = family_poly(Family.P, n + 1, method, workers)
    r = family_poly(Family.R, n + 1, method, workers)
    return assemble_total(p, r)
