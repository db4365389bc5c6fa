"""Independent reference implementations used only by the tests."""

from __future__ import annotations


def schoolbook_rank(dense: list[list[int]]) -> int:
    """Row reduction on a list-of-lists 0/1 matrix, one entry at a time."""
    a = [list(r) for r in dense]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c] % 2:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(rows):
            if i != r and a[i][c] % 2:
                a[i] = [(u + v) % 2 for u, v in zip(a[i], a[r])]
        r += 1
    return r


def random_symmetric(rng, dim: int, zero_diagonal: bool = False) -> list[list[int]]:
    m = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            v = rng.getrandbits(1)
            if i == j and zero_diagonal:
                v = 0
            m[i][j] = m[j][i] = v
    return m
