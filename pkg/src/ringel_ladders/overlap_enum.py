"""Overlap-matrix families and their brute-force rank distributions.

Every assignment is packed into one integer so the enumeration domain is
the contiguous range ``[0, 2**bits)``. Bit layouts, low bit first:

* ``L`` (dim n):  ``x_1..x_n`` then ``y_1..y_{n-1}``
* ``O`` (dim n):  ``y_1..y_{n-1}``  (x fixed to 0)
* ``R`` (dim n+1): ``x_0..x_n`` then ``y_1..y_{n-1}`` then ``z_1..z_n``
* ``P`` (dim n+1): ``y_1..y_{n-1}`` then ``z_1..z_n``  (x fixed to 0)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exact_poly import ExactPoly
from .families import Family
from .gf2 import Gf2SymMatrix, rank_batch
from .parallel import batches, map_ranges

DEFAULT_MAX_DOMAIN_BITS = 32


class InfeasibleError(ValueError):
    """Requested size exceeds an enumeration budget."""


def _bits(code: int, start: int, length: int) -> tuple[int, ...]:
    return tuple(code >> (start + i) & 1 for i in range(length))


def _pack(*parts: Sequence[int]) -> int:
    code, shift = 0, 0
    for part in parts:
        for b in part:
            code |= (int(b) & 1) << shift
            shift += 1
    return code


@dataclass(frozen=True)
class LadderAssignment:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        if len(self.x) < 1 or len(self.y) != len(self.x) - 1:
            raise ValueError("need len(x) = n >= 1 and len(y) = n - 1")

    @property
    def n(self) -> int:
        return len(self.x)

    def encode(self) -> int:
        return _pack(self.x, self.y)

    @classmethod
    def decode(cls, n: int, code: int) -> LadderAssignment:
        return cls(_bits(code, 0, n), _bits(code, n, n - 1))


@dataclass(frozen=True)
class RingelAssignment:
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]

    def __post_init__(self):
        n = len(self.z)
        if n < 1 or len(self.x) != n + 1 or len(self.y) != n - 1:
            raise ValueError("need len(x) = n + 1, len(y) = n - 1, len(z) = n")

    @property
    def n(self) -> int:
        return len(self.z)

    def encode(self) -> int:
        return _pack(self.x, self.y, self.z)

    @classmethod
    def decode(cls, n: int, code: int) -> RingelAssignment:
        return cls(_bits(code, 0, n + 1), _bits(code, n + 1, n - 1), _bits(code, 2 * n, n))


def build_ladder_matrix(a: LadderAssignment) -> Gf2SymMatrix:
    """Tridiagonal matrix with diagonal ``x`` and off-diagonal ``y``."""
    n = a.n
    rows = []
    for i in range(n):
        r = a.x[i] << i
        if i >= 1:
            r |= a.y[i - 1] << (i - 1)
        if i + 1 < n:
            r |= a.y[i] << (i + 1)
        rows.append(r)
    return Gf2SymMatrix(n, tuple(rows))


def build_ringel_matrix(a: RingelAssignment) -> Gf2SymMatrix:
    """Row/column 0 is ``(x_0, z_1..z_n)``; the rest is the x/y tridiagonal block."""
    n = a.n
    rows = [a.x[0] | sum(a.z[k - 1] << k for k in range(1, n + 1))]
    for i in range(1, n + 1):
        r = a.z[i - 1] | a.x[i] << i
        if i >= 2:
            r |= a.y[i - 2] << (i - 1)
        if i <= n - 1:
            r |= a.y[i - 1] << (i + 1)
        rows.append(r)
    return Gf2SymMatrix(n + 1, tuple(rows))


# -- vectorised builders ------------------------------------------------

def _bit_columns(codes: np.ndarray, start: int, length: int) -> np.ndarray:
    if length <= 0:
        return np.zeros((codes.shape[0], 0), dtype=np.uint64)
    shifts = np.arange(start, start + length, dtype=np.uint64)
    return (codes[:, None] >> shifts[None, :]) & np.uint64(1)


def ladder_rows(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Row words for a stack of tridiagonal matrices; ``x`` is (N, n), ``y`` is (N, n-1)."""
    n_mat, n = x.shape
    rows = np.zeros((n_mat, n), dtype=np.uint64)
    for i in range(n):
        r = x[:, i] << np.uint64(i)
        if i >= 1:
            r = r | (y[:, i - 1] << np.uint64(i - 1))
        if i + 1 < n:
            r = r | (y[:, i] << np.uint64(i + 1))
        rows[:, i] = r
    return rows


def ringel_rows(x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Row words for bordered matrices; shapes (N, n+1), (N, n-1), (N, n)."""
    n_mat, n = z.shape
    rows = np.zeros((n_mat, n + 1), dtype=np.uint64)
    rows[:, 1:] = ladder_rows(x[:, 1:], y) << np.uint64(1)
    first = x[:, 0].copy()
    for k in range(1, n + 1):
        first |= z[:, k - 1] << np.uint64(k)
        rows[:, k] |= z[:, k - 1]
    rows[:, 0] = first
    return rows


def family_rows(family: Family, n: int, codes: np.ndarray) -> np.ndarray:
    """Matrices for packed assignment codes; ``n`` is the enumeration parameter."""
    codes = np.asarray(codes, dtype=np.uint64)
    zeros = np.zeros((codes.shape[0], n + 1), dtype=np.uint64)
    if family is Family.L:
        return ladder_rows(_bit_columns(codes, 0, n), _bit_columns(codes, n, n - 1))
    if family is Family.O:
        return ladder_rows(zeros[:, :n], _bit_columns(codes, 0, n - 1))
    if family is Family.R:
        x = _bit_columns(codes, 0, n + 1)
        y = _bit_columns(codes, n + 1, n - 1)
        z = _bit_columns(codes, 2 * n, n)
        return ringel_rows(x, y, z)
    y = _bit_columns(codes, 0, n - 1)
    z = _bit_columns(codes, n - 1, n)
    return ringel_rows(zeros, y, z)


def ringel_codes_from_family(family: Family, n: int, codes: np.ndarray) -> np.ndarray:
    """Re-pack ``P`` codes as ``R`` codes (x = 0); ``R`` codes pass through."""
    codes = np.asarray(codes, dtype=np.uint64)
    if family is Family.R:
        return codes
    if family is not Family.P:
        raise ValueError("only bordered families embed into R")
    return codes << np.uint64(n + 1)


# -- rank distributions -------------------------------------------------

@dataclass(frozen=True)
class RankDistribution:
    """Count of assignments per rank ``0..dim``.

    ``n`` is the enumeration parameter: the polynomial is ``O_n``/``L_n``
    or ``P_{n+1}``/``R_{n+1}``.
    """

    family: Family
    n: int
    counts: tuple[int, ...]
    method: str

    @property
    def index(self) -> int:
        return self.family.index_for(self.n)

    @property
    def dim(self) -> int:
        return self.index

    @property
    def domain_size(self) -> int:
        return 1 << self.family.domain_bits(self.index)

    @property
    def poly(self) -> ExactPoly:
        return ExactPoly(self.counts)

    def check(self) -> None:
        if len(self.counts) != self.dim + 1:
            raise ValueError("counts must cover ranks 0..dim")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")
        if sum(self.counts) != self.domain_size:
            raise ValueError(f"counts sum to {sum(self.counts)}, expected {self.domain_size}")

    @classmethod
    def from_poly(cls, family: Family, n: int, poly: ExactPoly, method: str) -> RankDistribution:
        dim = family.index_for(n)
        return cls(family, n, tuple(poly.to_ints(dim + 1)), method)


def _count_ranks(family: Family, n: int, start: int, stop: int) -> list[int]:
    dim = family.index_for(n)
    total = np.zeros(dim + 1, dtype=np.int64)
    for lo, hi in batches(start, stop):
        codes = np.arange(lo, hi, dtype=np.uint64)
        ranks = rank_batch(family_rows(family, n, codes), dim)
        total += np.bincount(ranks, minlength=dim + 1)
    return [int(c) for c in total]


def brute_rank_distribution(
    family: Family | str,
    n: int,
    workers: int = 1,
    max_domain_bits: int = DEFAULT_MAX_DOMAIN_BITS,
) -> RankDistribution:
    """Exact rank counts by enumerating every assignment."""
    fam = Family.parse(family)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bits = fam.domain_bits(fam.index_for(n))
    if bits > max_domain_bits:
        raise InfeasibleError(
            f"{fam.value} at n={n} needs 2^{bits} assignments; bound is 2^{max_domain_bits}"
        )
    parts = map_ranges(_count_ranks, 1 << bits, workers, fam, n)
    counts = [sum(col) for col in zip(*parts)]
    dist = RankDistribution(fam, n, tuple(counts), "bruteforce")
    dist.check()
    return dist
