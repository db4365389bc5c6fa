"""Dense univariate polynomials with exact integer / rational coefficients.

Coefficients are Python ``int`` whenever they are integral and
:class:`fractions.Fraction` otherwise, so integer-only work never pays for
rational arithmetic while intermediate half-integers stay exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _norm(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if hasattr(c, "__index__"):  # numpy integers
        return int(c)
    raise TypeError(f"non-exact coefficient {c!r}")


class ExactPoly:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``z**k``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_norm(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Scalar, ...] = tuple(c)

    @classmethod
    def monomial(cls, coeff, power: int) -> ExactPoly:
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coeff])

    @classmethod
    def constant(cls, c) -> ExactPoly:
        return cls([c])

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, k: int) -> Scalar:
        if 0 <= k < len(self._c):
            return self._c[k]
        return 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    # ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> ExactPoly:
        if isinstance(other, ExactPoly):
            return other
        return ExactPoly([other])

    def __add__(self, other) -> ExactPoly:
        o = self._coerce(other)
        n = max(len(self._c), len(o._c))
        return ExactPoly(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> ExactPoly:
        return ExactPoly(-c for c in self._c)

    def __sub__(self, other) -> ExactPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> ExactPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> ExactPoly:
        if not isinstance(other, ExactPoly):
            s = _norm(other)
            return ExactPoly(c * s for c in self._c)
        if not self._c or not other._c:
            return ExactPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def scale(self, s) -> ExactPoly:
        return self * s

    def __pow__(self, k: int) -> ExactPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ExactPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> ExactPoly:
        """Multiply by ``z**k``."""
        if not self._c:
            return self
        return ExactPoly([0] * k + list(self._c))

    def substitute_square(self) -> ExactPoly:
        """Return ``p(z**2)``."""
        out = [0] * (2 * len(self._c))
        out[::2] = self._c
        return ExactPoly(out)

    def divmod(self, divisor: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
        """Long division over the rationals."""
        d = self._coerce(divisor)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self._c]
        lead = Fraction(d._c[-1])
        dd = d.degree
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / lead
            if q:
                quot[k - dd] = q
                for j, c in enumerate(d._c):
                    rem[k - dd + j] -= q * c
        return ExactPoly(quot), ExactPoly(rem[:dd] if dd > 0 else [])

    def exact_div(self, divisor) -> ExactPoly:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    def __call__(self, value):
        acc = 0
        for c in reversed(self._c):
            acc = acc * value + c
        return acc

    # comparisons -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ExactPoly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    def to_ints(self, length: int | None = None) -> list[int]:
        """Integer coefficient list, optionally zero-padded to ``length``."""
        if not self.is_integral():
            raise ArithmeticError(f"non-integral polynomial {self}")
        out = list(self._c)
        if length is not None:
            if length < len(out):
                raise ValueError("length shorter than polynomial")
            out += [0] * (length - len(out))
        return out

    # text ------------------------------------------------------------

    def render(self, var: str = "z", descending: bool = True) -> str:
        """Compact text such as ``28z^3+28z^2+7z+1``."""
        terms = [(k, c) for k, c in enumerate(self._c) if c != 0]
        if not terms:
            return "0"
        if descending:
            terms.reverse()
        parts = []
        for k, c in terms:
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = str(a)
            else:
                mon = var if k == 1 else f"{var}^{k}"
                if a == 1:
                    body = mon
                elif isinstance(a, Fraction):
                    body = f"({a}){mon}"
                else:
                    body = f"{a}{mon}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ExactPoly({list(self._c)!r})"


Z = ExactPoly([0, 1])
ONE = ExactPoly([1])


_TERM = re.compile(r"([+-]?)(\d*)(?:([a-z])(?:\^(\d+))?)?")


def parse_terms(text: str) -> list[tuple[str | None, int, int]]:
    """Split ``2+14x-3y^2`` into ``(var, power, coeff)`` triples."""
    s = text.replace(" ", "")
    pos, out = 0, []
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, digits, var, power = m.groups()
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        p = 0 if var is None else int(power or 1)
        out.append((var, p, coeff))
        pos = m.end()
    return out


def parse_poly(text: str, var: str = "z") -> ExactPoly:
    acc: dict[int, int] = {}
    for v, p, c in parse_terms(text):
        if v not in (None, var):
            raise ValueError(f"unexpected variable {v!r} in {text!r}")
        acc[p] = acc.get(p, 0) + c
    top = max(acc, default=-1)
    return ExactPoly(acc.get(k, 0) for k in range(top + 1))


@dataclass(frozen=True)
class TotalPoly:
    """Total embedding polynomial ``genus(x) + crosscap(y)``.

    ``crosscap`` has no constant term: there is no surface with zero
    crosscaps.
    """

    genus: ExactPoly
    crosscap: ExactPoly

    def __post_init__(self):
        for part in (self.genus, self.crosscap):
            if not part.is_integral() or any(c < 0 for c in part):
                raise ValueError(f"coefficients must be nonnegative integers: {part!r}")
        if self.crosscap[0] != 0:
            raise ValueError("crosscap part must have zero constant term")

    @property
    def genus_sum(self) -> int:
        return sum(self.genus)

    @property
    def crosscap_sum(self) -> int:
        return sum(self.crosscap)

    @property
    def total(self) -> int:
        return self.genus_sum + self.crosscap_sum

    def render(self) -> str:
        """Ascending, genus terms first: ``2+14x+14y+42y^2+56y^3``."""
        g = self.genus.render("x", descending=False)
        f = self.crosscap.render("y", descending=False)
        if self.crosscap.is_zero():
            return g
        if self.genus.is_zero():
            return f
        return f"{g}+{f}"

    __str__ = render

    @classmethod
    def parse(cls, text: str) -> TotalPoly:
        g: dict[int, int] = {}
        f: dict[int, int] = {}
        for v, p, c in parse_terms(text):
            if v == "y":
                f[p] = f.get(p, 0) + c
            elif v in (None, "x"):
                g[p] = g.get(p, 0) + c
            else:
                raise ValueError(f"unexpected variable {v!r}")

        def build(d: dict[int, int]) -> ExactPoly:
            return ExactPoly(d.get(k, 0) for k in range(max(d, default=-1) + 1))

        return cls(build(g), build(f))

