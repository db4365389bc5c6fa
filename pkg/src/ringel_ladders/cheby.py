"""Chebyshev U polynomials and closed forms of second-order polynomial recurrences.

For ``P_k = a1 P_{k-1} + a2 P_{k-2}`` the homogeneous solutions are spanned by

    S_k = sum_j C(k-j, j) a1^(k-2j) a2^j,

which is ``(i sqrt(a2))^k U_k(a1 / (2 i sqrt(a2)))`` written without any
complex numbers or radicals. A closed form is then

    P_k = S_k + B S_{k-1} + C S_{k-2} + Y_k

with ``Y`` a particular solution and ``B``, ``C`` fixed by two initial
values. Everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Mapping, Optional

from .exact_poly import ONE, ExactPoly

PolySeq = Callable[[int], ExactPoly]


@lru_cache(maxsize=None)
def chebyshev_u(k: int) -> ExactPoly:
    """``U_k`` from ``U_k = 2x U_{k-1} - U_{k-2}``, ``U_0 = 1``, ``U_1 = 2x``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return ONE
    if k == 1:
        return ExactPoly([0, 2])
    return chebyshev_u(k - 1).shift(1) * 2 - chebyshev_u(k - 2)


def chebyshev_u_binomial(k: int) -> ExactPoly:
    """``U_k`` from the explicit sum ``sum_j C(k-j, j) (-1)^j (2x)^(k-2j)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = [0] * (k + 1)
    for j in range(k // 2 + 1):
        out[k - 2 * j] += comb(k - j, j) * (-1) ** j * 2 ** (k - 2 * j)
    return ExactPoly(out)


def chebyshev_u_coefficient_identity_check(k: int) -> bool:
    return chebyshev_u(k) == chebyshev_u_binomial(k)


def scaled_u_expansion(k: int, a1: ExactPoly, a2: ExactPoly) -> ExactPoly:
    """``sum_j C(k-j, j) a1^(k-2j) a2^j``; ``k = -1`` gives 0 (``U_{-1} = 0``)."""
    if k == -1:
        return ExactPoly()
    if k < -1:
        raise ValueError("k must be >= -1")
    out = ExactPoly()
    for j in range(k // 2 + 1):
        out = out + (a1 ** (k - 2 * j)) * (a2 ** j) * comb(k - j, j)
    return out


class SingularSystemError(ArithmeticError):
    pass


@dataclass(frozen=True)
class RecurrenceSpec:
    """``P_k = a1 P_{k-1} + a2 P_{k-2} + forcing(k)`` with known initial values.

    ``particular`` is a closed-form particular solution ``Y_k`` of the
    inhomogeneous recurrence (``None`` for homogeneous problems).
    """

    a1: ExactPoly
    a2: ExactPoly
    initials: Mapping[int, ExactPoly]
    particular: Optional[PolySeq] = field(default=None, compare=False)
    forcing: Optional[PolySeq] = field(default=None, compare=False)

    def __post_init__(self):
        if self.a2.is_zero():
            raise ValueError("a2 must not be identically zero")
        if self.base_index < 1:
            raise ValueError("initial indices must be >= 1")

    @property
    def base_index(self) -> int:
        for k in sorted(self.initials):
            if k + 1 in self.initials:
                return k
        raise ValueError("need initial values at two consecutive indices")

    def particular_at(self, k: int) -> ExactPoly:
        return self.particular(k) if self.particular else ExactPoly()

    def forcing_at(self, k: int) -> ExactPoly:
        return self.forcing(k) if self.forcing else ExactPoly()


@dataclass(frozen=True)
class ClosedFormConstants:
    """``B = b_num / denom`` and ``C = c_num / denom`` with ``A = 1``."""

    base_index: int
    a: ExactPoly
    b_num: ExactPoly
    c_num: ExactPoly
    denom: ExactPoly

    def _reduce(self, num: ExactPoly) -> Optional[ExactPoly]:
        q, r = num.divmod(self.denom)
        return q if r.is_zero() else None

    @property
    def b(self) -> Optional[ExactPoly]:
        """Multiplier of ``S_{k-1}`` as a polynomial, if it is one."""
        return self._reduce(self.b_num)

    @property
    def c(self) -> Optional[ExactPoly]:
        return self._reduce(self.c_num)


def solve_constants(spec: RecurrenceSpec) -> ClosedFormConstants:
    """Fit ``B``, ``C`` so the closed form hits the first two consecutive initials."""
    k0 = spec.base_index
    a1, a2 = spec.a1, spec.a2

    def s(k: int) -> ExactPoly:
        return scaled_u_expansion(k, a1, a2)

    r0 = spec.initials[k0] - spec.particular_at(k0) - s(k0)
    r1 = spec.initials[k0 + 1] - spec.particular_at(k0 + 1) - s(k0 + 1)
    # B s(k0-1) + C s(k0-2) = r0 ;  B s(k0) + C s(k0-1) = r1
    p, q = s(k0 - 1), s(k0 - 2)
    det = p * p - s(k0) * q
    if det.is_zero():
        raise SingularSystemError("initial conditions do not determine B and C")
    return ClosedFormConstants(
        base_index=k0,
        a=ONE,
        b_num=r0 * p - r1 * q,
        c_num=p * r1 - s(k0) * r0,
        denom=det,
    )


def closed_form_eval(spec: RecurrenceSpec, constants: ClosedFormConstants, n: int) -> ExactPoly:
    if n < constants.base_index:
        raise ValueError(f"n must be >= {constants.base_index}")
    a1, a2 = spec.a1, spec.a2
    num = (
        scaled_u_expansion(n, a1, a2) * constants.denom
        + constants.b_num * scaled_u_expansion(n - 1, a1, a2)
        + constants.c_num * scaled_u_expansion(n - 2, a1, a2)
    )
    return num.exact_div(constants.denom) * constants.a + spec.particular_at(n)


def iterate(spec: RecurrenceSpec, n: int) -> ExactPoly:
    """Step the recurrence from its initial values up to index ``n``."""
    if n in spec.initials:
        return spec.initials[n]
    k0 = spec.base_index
    if n < k0:
        raise ValueError(f"n must be >= {k0}")
    prev, cur = spec.initials[k0], spec.initials[k0 + 1]
    for k in range(k0 + 2, n + 1):
        nxt = spec.initials.get(k)
        if nxt is None:
            nxt = spec.a1 * cur + spec.a2 * prev + spec.forcing_at(k)
        prev, cur = cur, nxt
    return cur


def particular_residual(spec: RecurrenceSpec, k: int) -> ExactPoly:
    """``Y_k - a1 Y_{k-1} - a2 Y_{k-2} - forcing(k)``; zero when ``Y`` is a particular solution."""
    y = spec.particular_at
    return y(k) - spec.a1 * y(k - 1) - spec.a2 * y(k - 2) - spec.forcing_at(k)
