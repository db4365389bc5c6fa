"""Printed-formula audit.

Each entry evaluates a formula exactly as printed next to an independent
oracle (the recurrences, which brute force confirms) and searches for the
smallest disagreement. Nothing is asserted by hand: an entry whose printed
form turns out to be right reports that no witness was found.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Optional

from .cheby import scaled_u_expansion
from .distributions import (
    COEFFS,
    l_coefficient_terms,
    coeff_L_closed,
    coeff_O_closed,
    coeff_R_rational,
    recurrence_poly,
)
from .exact_poly import Z, ExactPoly
from .families import Family

DEFAULT_LIMIT = 60


@dataclass
class ErrataEntry:
    key: str
    location: str
    printed: str
    corrected: str
    searched: str
    limit: int
    witness: Optional[dict] = None
    corrected_holds: Optional[bool] = None
    note: str = field(default="")

    @property
    def summary(self) -> str:
        if self.witness is None:
            return f"no witness <= {self.limit}"
        w = self.witness
        where = ", ".join(f"{k}={v}" for k, v in w.items() if k not in ("printed", "correct"))
        return f"witness {where}: printed {w['printed']}, correct {w['correct']}"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["summary"] = self.summary
        return d


def _fmt(v) -> str:
    if isinstance(v, ExactPoly):
        return v.render(descending=False)
    return str(v)


def _first(pairs: Iterable[tuple[dict, object, object]]) -> Optional[dict]:
    for where, printed, correct in pairs:
        if printed != correct:
            return {**where, "printed": _fmt(printed), "correct": _fmt(correct)}
    return None


def _all_equal(pairs: Iterable[tuple[object, object]]) -> bool:
    return all(a == b for a, b in pairs)


def _s(k: int, family: Family, a1_scale: int = 1) -> ExactPoly:
    a1, a2 = COEFFS[family]
    return scaled_u_expansion(k, a1 * a1_scale, a2)


def _l_printed(k: int) -> ExactPoly:
    # (2iz)^k [U_k + (i/2) U_{k-1} - (1/2) U_{k-2}] with U at (1+2z)/(4iz)
    z2 = ExactPoly.monomial(1, 2)
    return _s(k, Family.L) - Z * _s(k - 1, Family.L) + z2 * 2 * _s(k - 2, Family.L)


def _r_expansion(k: int, b_sign: int, c_sign: int) -> ExactPoly:
    half = Fraction(1, 2)
    b = ExactPoly([1, 7, 2]) * (half * b_sign)
    c = ExactPoly([-1, -1, 34]) * (half * c_sign)
    tail = ExactPoly.monomial(2 ** k, 2) * recurrence_poly(Family.L, k - 1)
    return _s(k, Family.R) + b * _s(k - 1, Family.R) + c * _s(k - 2, Family.R) + tail


def _p_expansion(k: int, a1_scale: int) -> ExactPoly:
    half = Fraction(1, 2)
    b = ExactPoly([1, 0, 1]) * (-half)
    c = ExactPoly([-1, 0, 17]) * (-half)
    s = lambda j: _s(j, Family.P, a1_scale)  # noqa: E731
    tail = ExactPoly.monomial(2 ** (k - 1), 2) * recurrence_poly(Family.O, k - 1)
    return s(k) + b * s(k - 1) + c * s(k - 2) + tail


def _l_coefficient_sign(limit: int) -> ErrataEntry:
    def printed(n, m):
        t1, t2, t3 = l_coefficient_terms(n, m)
        return t1 - t2 + t3

    grid = [(n, m) for n in range(1, limit + 1) for m in range(n + 1)]
    truth = lambda n, m: recurrence_poly(Family.L, n)[m]  # noqa: E731
    return ErrataEntry(
        key="L-coefficient-third-term-sign",
        location="closed-end ladder coefficient formula D_n(m), third sum",
        printed="+2^{m-1} sum_j C(n-2-j, j) C(n-2-2j, n-m)",
        corrected="-2^{m-1} sum_j C(n-2-j, j) C(n-2-2j, n-m)",
        limit=limit,
        searched=f"1 <= n <= {limit}, 0 <= m <= n",
        witness=_first(({"n": n, "m": m}, printed(n, m), truth(n, m)) for n, m in grid),
        corrected_holds=_all_equal((coeff_L_closed(n, m), truth(n, m)) for n, m in grid),
    )


def _l_closed_form_constant(limit: int) -> ErrataEntry:
    ks = range(1, limit + 1)
    truth = lambda k: recurrence_poly(Family.L, k)  # noqa: E731
    corrected = lambda k: (  # noqa: E731
        _s(k, Family.L) - Z * _s(k - 1, Family.L)
        - ExactPoly.monomial(2, 2) * _s(k - 2, Family.L)
    )
    return ErrataEntry(
        key="L-closed-form-constant",
        location="closed form of L_n, coefficient of U_{n-2}",
        printed="-1/2 U_{n-2}((1+2z)/(4iz))  (real multiplier +2z^2)",
        corrected="+1/2 U_{n-2}((1+2z)/(4iz))  (real multiplier -2z^2)",
        limit=limit,
        searched=f"1 <= n <= {limit}",
        witness=_first(({"n": k}, _l_printed(k), truth(k)) for k in ks),
        corrected_holds=_all_equal((corrected(k), truth(k)) for k in ks),
    )


def _r_expansion_sign(limit: int) -> ErrataEntry:
    ks = range(2, limit + 1)
    truth = lambda k: recurrence_poly(Family.R, k)  # noqa: E731
    return ErrataEntry(
        key="R-expansion-third-sign",
        location="real expansion of R_n, multiplier of the S_{n-2} sum",
        printed="+(34z^2-z-1)/2",
        corrected="-(34z^2-z-1)/2",
        limit=limit,
        searched=f"2 <= n <= {limit}",
        witness=_first(({"n": k}, _r_expansion(k, -1, +1), truth(k)) for k in ks),
        corrected_holds=_all_equal((_r_expansion(k, -1, -1), truth(k)) for k in ks),
    )


def _r_proof_b(limit: int) -> ErrataEntry:
    ks = range(2, limit + 1)
    truth = lambda k: recurrence_poly(Family.R, k)  # noqa: E731
    return ErrataEntry(
        key="R-proof-B-sign",
        location="R closed-form proof, solved value of B",
        printed="B = -(-2z^2-7z-1)/(8iz)  (real multiplier +(2z^2+7z+1)/2)",
        corrected="B = -(2z^2+7z+1)/(8iz)  (real multiplier -(2z^2+7z+1)/2)",
        limit=limit,
        searched=f"2 <= n <= {limit}",
        witness=_first(({"n": k}, _r_expansion(k, +1, -1), truth(k)) for k in ks),
        corrected_holds=_all_equal((_r_expansion(k, -1, -1), truth(k)) for k in ks),
    )


def _eq4(limit: int) -> ErrataEntry:
    a1, a2 = COEFFS[Family.R]

    def printed(k):
        out = ExactPoly()
        for j in range(k // 2 + 1):
            out = out + a1 ** (k - 2 * j) * comb(k - j, j)
        return out

    # independent oracle: S_k = a1 S_{k-1} + a2 S_{k-2}, S_0 = 1, S_1 = a1
    seq = [ExactPoly([1]), a1]
    for k in range(2, limit + 1):
        seq.append(a1 * seq[-1] + a2 * seq[-2])
    ks = range(0, limit + 1)
    return ErrataEntry(
        key="scaled-U-missing-a2-factor",
        location="binomial expansion of (i sqrt(a2))^n U_n(a1 / (2 sqrt(a2) i))",
        printed="sum_j C(n-j, j) a1^(n-2j)",
        corrected="sum_j C(n-j, j) a1^(n-2j) a2^j",
        limit=limit,
        searched=f"0 <= k <= {limit} with a1 = 1+4z, a2 = 16z^2",
        witness=_first(({"k": k, "a2": "16z^2"}, printed(k), seq[k]) for k in ks),
        corrected_holds=_all_equal((scaled_u_expansion(k, a1, a2), seq[k]) for k in ks),
    )


def _r_coefficient_formula(limit: int) -> ErrataEntry:
    grid = [(n, m) for n in range(2, limit + 1) for m in range(n + 1)]
    truth = lambda n, m: recurrence_poly(Family.R, n)[m]  # noqa: E731
    witness = _first(({"n": n, "m": m}, coeff_R_rational(n, m), truth(n, m)) for n, m in grid)
    return ErrataEntry(
        key="R-coefficient-formula",
        location="Ringel coefficient formula C_n(m), all eight terms as printed",
        printed="eight-term sum + 2^n D_{n-1}(m-2), D as in the closed-end formula",
        corrected="unchanged (with the corrected D_{n-1})",
        limit=limit,
        searched=f"2 <= n <= {limit}, 0 <= m <= n",
        witness=witness,
        corrected_holds=witness is None,
    )


def _dimensions(limit: int) -> ErrataEntry:
    ns = range(2, limit + 1)
    printed = lambda n: 2 ** (n + (n - 1) + (n - 1))  # noqa: E731
    enumerated = lambda n: recurrence_poly(Family.R, n + 1)(1)  # noqa: E731
    return ErrataEntry(
        key="ringel-variable-dimensions",
        location="bordered overlap matrix: stated lengths of X and Z",
        printed="X in GF(2)^n, Z in GF(2)^{n-1}  (domain 2^{3n-2})",
        corrected="X = (x_0..x_n) in GF(2)^{n+1}, Z = (z_1..z_n) in GF(2)^n  (domain 2^{3n})",
        limit=limit,
        searched=f"2 <= n <= {limit}, domain size vs R_(n+1)(1)",
        witness=_first(({"n": n}, printed(n), enumerated(n)) for n in ns),
        corrected_holds=_all_equal((2 ** (3 * n), enumerated(n)) for n in ns),
    )


def _o_coefficient_range(limit: int) -> ErrataEntry:
    def uncovered():
        for n in range(1, limit + 1):
            poly = recurrence_poly(Family.O, n)
            for m in range(n // 2 + 1):
                literal = m <= 1  # "1 >= m" and "m <= [n/2]"
                if poly[2 * m] and not literal:
                    yield {"n": n, "m": m}, "outside stated range", f"O_n(2m) = {poly[2 * m]}"

    grid = [(n, m) for n in range(1, limit + 1) for m in range(n // 2 + 1)]
    return ErrataEntry(
        key="O-coefficient-range",
        location="range condition of the O_n coefficient formula",
        printed="1 >= m <= [n/2]",
        corrected="1 <= m <= floor(n/2)  (the formula also holds at m = 0)",
        limit=limit,
        searched=f"1 <= n <= {limit}",
        witness=_first(uncovered()),
        corrected_holds=_all_equal(
            (coeff_O_closed(n, 2 * m), recurrence_poly(Family.O, n)[2 * m]) for n, m in grid
        ),
    )


def _p_proof_argument(limit: int) -> ErrataEntry:
    ks = range(2, limit + 1)
    truth = lambda k: recurrence_poly(Family.P, k)  # noqa: E731
    return ErrataEntry(
        key="P-proof-chebyshev-argument",
        location="P closed-form proof, argument of U",
        printed="U(1/(2 sqrt(2) i z))  (equivalent to a1 = 2)",
        corrected="U(1/(4 sqrt(2) i z))  (a1 = 1, matching the stated closed form)",
        limit=limit,
        searched=f"2 <= n <= {limit}",
        witness=_first(({"n": k}, _p_expansion(k, 2), truth(k)) for k in ks),
        corrected_holds=_all_equal((_p_expansion(k, 1), truth(k)) for k in ks),
    )


def _p_proof_o_recurrence(limit: int) -> ErrataEntry:
    seq = {1: ExactPoly([1]), 2: ExactPoly([1, 0, 1])}
    for k in range(3, limit + 1):
        seq[k] = ExactPoly([1, 2]) * seq[k - 1] + ExactPoly.monomial(4, 2) * seq[k - 2]
    return ErrataEntry(
        key="P-proof-O-recurrence",
        location="P closed-form proof, recurrence quoted for O_n",
        printed="O_n = (1+2z) O_{n-1} + 4z^2 O_{n-2}",
        corrected="O_n = O_{n-1} + 2z^2 O_{n-2}",
        limit=limit,
        searched=f"1 <= n <= {limit}",
        witness=_first(({"n": k}, seq[k], recurrence_poly(Family.O, k)) for k in sorted(seq)),
        corrected_holds=_all_equal(
            (coeff_O_closed(k, m), recurrence_poly(Family.O, k)[m])
            for k in range(1, limit + 1) for m in range(k + 1)
        ),
    )


ENTRIES: tuple[Callable[[int], ErrataEntry], ...] = (
    _l_coefficient_sign,
    _l_closed_form_constant,
    _r_expansion_sign,
    _eq4,
    _r_coefficient_formula,
    _dimensions,
    _o_coefficient_range,
    _p_proof_argument,
    _p_proof_o_recurrence,
    _r_proof_b,
)


def errata_report(limit: int = DEFAULT_LIMIT) -> list[ErrataEntry]:
    return [build(limit) for build in ENTRIES]


def render_report(entries: list[ErrataEntry]) -> str:
    lines = []
    for e in entries:
        lines.append(f"[{e.key}] {e.location}")
        lines.append(f"  printed:   {e.printed}")
        lines.append(f"  corrected: {e.corrected}")
        lines.append(f"  searched:  {e.searched}")
        lines.append(f"  result:    {e.summary}")
        if e.corrected_holds is not None:
            lines.append(f"  corrected form verified: {'yes' if e.corrected_holds else 'NO'}")
    return "\n".join(lines) + "\n"
