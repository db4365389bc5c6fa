"""The four matrix families and their index conventions.

``O`` and ``L`` are tridiagonal ``k x k`` families (``O`` with zero
diagonal). ``P`` and ``R`` are the bordered ``(n+1) x (n+1)`` Ringel
families (``P`` with zero diagonal). Polynomial subscripts are always the
matrix dimension; the graph parameter ``n`` of ``R_{n-1}`` pairs with
``P_{n+1}`` and ``R_{n+1}``.
"""

from __future__ import annotations

from enum import Enum


class Family(str, Enum):
    O = "O"
    L = "L"
    P = "P"
    R = "R"

    @classmethod
    def parse(cls, value: str | Family) -> Family:
        try:
            return cls(value.upper() if isinstance(value, str) else value)
        except ValueError:
            raise ValueError(f"unknown family {value!r}; expected one of O, L, P, R") from None

    @property
    def min_index(self) -> int:
        return 1 if self in (Family.O, Family.L) else 2

    @property
    def zero_diagonal(self) -> bool:
        return self in (Family.O, Family.P)

    @property
    def bordered(self) -> bool:
        return self in (Family.P, Family.R)

    def index_for(self, n: int) -> int:
        """Polynomial subscript (matrix dimension) for enumeration parameter ``n``."""
        return n + 1 if self.bordered else n

    def param_for(self, index: int) -> int:
        return index - 1 if self.bordered else index

    def domain_bits(self, index: int) -> int:
        """log2 of the number of assignments behind the ``index``-th polynomial."""
        k = index
        return {Family.O: k - 1, Family.L: 2 * k - 1, Family.P: 2 * k - 3, Family.R: 3 * k - 3}[self]
