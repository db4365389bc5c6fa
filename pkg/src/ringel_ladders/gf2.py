"""Symmetric GF(2) matrices with one machine word per row.

Row ``i`` is an integer whose bit ``j`` is entry ``(i, j)``. The scalar
:func:`rank` works on Python ints; :func:`rank_batch` does the same
elimination on a whole stack of matrices at once with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_DIM = 64


@dataclass(frozen=True)
class Gf2SymMatrix:
    dim: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be in 0..{MAX_DIM}, got {self.dim}")
        if len(self.rows) != self.dim:
            raise ValueError("need exactly one row word per dimension")
        mask = (1 << self.dim) - 1
        for i, r in enumerate(self.rows):
            if r & ~mask:
                raise ValueError(f"row {i} has bits outside 0..{self.dim - 1}")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise ValueError(f"not symmetric at ({i}, {j})")

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]]) -> Gf2SymMatrix:
        rows = tuple(
            sum((int(v) & 1) << j for j, v in enumerate(row)) for row in entries
        )
        return cls(len(rows), rows)

    @classmethod
    def zero(cls, dim: int) -> Gf2SymMatrix:
        return cls(dim, (0,) * dim)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def to_dense(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def transpose(self) -> Gf2SymMatrix:
        t = [0] * self.dim
        for i, r in enumerate(self.rows):
            for j in range(self.dim):
                if r >> j & 1:
                    t[j] |= 1 << i
        return Gf2SymMatrix(self.dim, tuple(t))

    def permuted(self, perm: Sequence[int]) -> Gf2SymMatrix:
        """Simultaneous row/column permutation: new (i, j) = old (perm[i], perm[j])."""
        if sorted(perm) != list(range(self.dim)):
            raise ValueError("not a permutation")
        return Gf2SymMatrix.from_dense(
            [[self.entry(perm[i], perm[j]) for j in range(self.dim)] for i in range(self.dim)]
        )

    def render(self) -> str:
        return "\n".join(
            " ".join(str(self.entry(i, j)) for j in range(self.dim)) for i in range(self.dim)
        )

    def rank(self) -> int:
        return rank(self)


def rank_rows(rows: Sequence[int]) -> int:
    """GF(2) rank of the matrix whose rows are the given bit words."""
    work = list(rows)
    r = 0
    n = len(work)
    for col in range(MAX_DIM):
        bit = 1 << col
        piv = next((i for i in range(r, n) if work[i] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r]
        for i in range(n):
            if i != r and work[i] & bit:
                work[i] ^= p
        r += 1
        if r == n:
            break
    return r


def rank(m: Gf2SymMatrix) -> int:
    return rank_rows(m.rows)


def _word_dtype(dim: int) -> np.dtype:
    for dt in (np.uint8, np.uint16, np.uint32):
        if dim <= np.iinfo(dt).bits:
            return np.dtype(dt)
    return np.dtype(np.uint64)


def rank_batch(rows: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Ranks of a stack of matrices.

    ``rows`` has shape ``(N, dim)`` with unsigned-integer row words. The
    input is not modified. Returns an ``int64`` array of length ``N``.
    """
    work = np.asarray(rows)
    if work.ndim != 2:
        raise ValueError("rows must have shape (N, dim)")
    n_mat, n_rows = work.shape
    if dim is None:
        dim = n_rows
    if dim > MAX_DIM:
        raise ValueError(f"dim > {MAX_DIM}")
    word = _word_dtype(dim)
    work = work.astype(word, copy=True)
    ranks = np.zeros(n_mat, dtype=np.int64)
    if n_mat == 0 or n_rows == 0:
        return ranks
    used = np.zeros((n_mat, n_rows), dtype=bool)
    idx = np.arange(n_mat)
    row_ids = np.arange(n_rows)
    one = word.type(1)
    zero = word.type(0)
    for col in range(dim):
        bits = ((work >> word.type(col)) & one).astype(bool)
        cand = bits & ~used
        has = cand.any(axis=1)
        piv = cand.argmax(axis=1)
        prow = work[idx, piv]
        clear = bits & (row_ids[None, :] != piv[:, None]) & has[:, None]
        work ^= np.where(clear, prow[:, None], zero)
        used[idx[has], piv[has]] = True
        ranks += has
    return ranks
