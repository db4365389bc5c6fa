"""Embedding-level ground truth for Ringel ladders.

A T-rotation system of a cubic graph is a colour per vertex (black keeps
the planar clockwise order of the drawing, white reverses it) and a twist
bit per cotree edge; tree edges are never twisted. Faces are found by the
signed face-tracing walk over ``(dart, orientation)`` states: crossing a
twisted edge flips the orientation, and a flipped walker turns the other
way at each vertex. Every face shows up as two orbits (one per direction).

Nothing here looks at overlap-matrix ranks except the explicit checks
(:func:`trace_audit`), which compare the two.

System codes pack the vertex colours (``g.vertices`` order) in the low
``|V|`` bits and the cotree twists (``g.cotree_edges`` order) above them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .exact_poly import ExactPoly, TotalPoly
from .families import Family
from .gf2 import Gf2SymMatrix, rank_batch
from .graph_model import LadderGraph, build_ringel
from .overlap_enum import InfeasibleError, RingelAssignment, build_ringel_matrix, family_rows
from .parallel import batches, map_ranges

DEFAULT_MAX_TRACE_N = 8


@dataclass(frozen=True)
class SurfaceClass:
    orientable: bool
    genus_or_crosscap: int

    def __post_init__(self):
        if not self.orientable and self.genus_or_crosscap < 1:
            raise ValueError("nonorientable surfaces have at least one crosscap")
        if self.genus_or_crosscap < 0:
            raise ValueError("negative genus")

    @classmethod
    def from_euler(cls, chi: int, orientable: bool) -> SurfaceClass:
        if orientable:
            if chi % 2:
                raise ValueError(f"orientable surface with odd Euler characteristic {chi}")
            return cls(True, (2 - chi) // 2)
        return cls(False, 2 - chi)

    @property
    def euler_characteristic(self) -> int:
        k = self.genus_or_crosscap
        return 2 - 2 * k if self.orientable else 2 - k


@dataclass(frozen=True)
class RotationSystem:
    colors: tuple[int, ...]
    twists: tuple[int, ...]

    def encode(self) -> int:
        code = 0
        for i, b in enumerate(self.colors + self.twists):
            code |= (b & 1) << i
        return code

    @classmethod
    def decode(cls, g: LadderGraph, code: int) -> RotationSystem:
        nv, nc = g.num_vertices, len(g.cotree_edges)
        return cls(
            tuple(code >> i & 1 for i in range(nv)),
            tuple(code >> (nv + i) & 1 for i in range(nc)),
        )

    def edge_twist(self, g: LadderGraph, label: str) -> int:
        if label in g.tree_edges:
            return 0
        return self.twists[g.cotree_index(label)]


def num_systems(g: LadderGraph) -> int:
    """``2^beta * prod (deg - 1)!`` for a cubic graph."""
    return 1 << (g.betti + g.num_vertices)


def enumerate_systems(g: LadderGraph) -> Iterator[RotationSystem]:
    if not g.is_cubic():
        raise ValueError("rotation systems here are defined for cubic graphs only")
    for code in range(num_systems(g)):
        yield RotationSystem.decode(g, code)


def _neighbours(g: LadderGraph):
    succ = [0] * (2 * g.num_edges)
    pred = [0] * (2 * g.num_edges)
    for rot in g.rotation:
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % len(rot)]
            pred[d] = rot[i - 1]
    return succ, pred


def _count_orbits(num_darts: int, step) -> int:
    seen = set()
    orbits = 0
    for start in ((d, o) for d in range(num_darts) for o in (0, 1)):
        if start in seen:
            continue
        orbits += 1
        s = start
        while s not in seen:
            seen.add(s)
            s = step(s)
    return orbits


def trace_faces(g: LadderGraph, rho: RotationSystem) -> tuple[int, SurfaceClass]:
    """Face count and surface of the embedding given by ``rho``."""
    succ, pred = _neighbours(g)
    twist = [rho.edge_twist(g, e.label) for e in g.edges]
    colors = rho.colors

    def step(state):
        d, o = state
        back = d ^ 1
        o ^= twist[d >> 1]
        turn = o ^ colors[g.dart_vertex(back)]
        return (pred[back] if turn else succ[back]), o

    orbits = _count_orbits(2 * g.num_edges, step)
    if orbits % 2:
        raise AssertionError("face orbits must pair up")
    faces = orbits // 2
    chi = g.num_vertices - g.num_edges + faces
    return faces, SurfaceClass.from_euler(chi, not any(rho.twists))


def _require_ringel(g: LadderGraph) -> None:
    if g.kind != "ringel":
        raise ValueError("overlap matrices are defined for Ringel ladders")


def ringel_assignment_of(g: LadderGraph, rho: RotationSystem) -> RingelAssignment:
    """Matrix variables: x from twists, y_j / z_k from whether b_j / c_k is unmatched."""
    _require_ringel(g)
    n = g.n

    def unmatched(label: str) -> int:
        e = g.edge(label)
        return rho.colors[e.tail] ^ rho.colors[e.head]

    return RingelAssignment(
        x=tuple(rho.twists),
        y=tuple(unmatched(f"b{j}") for j in range(1, n)),
        z=tuple(unmatched(f"c{k}") for k in range(1, n + 1)),
    )


def overlap_matrix_of(g: LadderGraph, rho: RotationSystem) -> Gf2SymMatrix:
    return build_ringel_matrix(ringel_assignment_of(g, rho))


def _restricted_genus(g: LadderGraph, rho: RotationSystem, keep: set[int]) -> int:
    """Genus of the pure rotation system restricted to the edges ``keep``."""
    succ = {}
    for v, rot in enumerate(g.rotation):
        order = [d for d in rot if d >> 1 in keep]
        if rho.colors[v]:
            order.reverse()
        for i, d in enumerate(order):
            succ[d] = order[(i + 1) % len(order)]
    darts = sorted(succ)
    seen, faces = set(), 0
    for d in darts:
        if d in seen:
            continue
        faces += 1
        while d not in seen:
            seen.add(d)
            d = succ[d ^ 1]
    chi = g.num_vertices - len(keep) + faces
    return (2 - chi) // 2


def overlap_matrix_by_definition(g: LadderGraph, rho: RotationSystem) -> Gf2SymMatrix:
    """Overlap matrix straight from its definition: off-diagonal (i, j) is 1 iff
    the tree plus cotree edges i and j is nonplanar under the pure rotation."""
    tree = {g.edge_index(lab) for lab in g.tree_edges}
    cot = [g.edge_index(lab) for lab in g.cotree_edges]
    dim = len(cot)
    dense = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        dense[i][i] = rho.twists[i]
        for j in range(i + 1, dim):
            bit = int(_restricted_genus(g, rho, tree | {cot[i], cot[j]}) > 0)
            dense[i][j] = dense[j][i] = bit
    return Gf2SymMatrix.from_dense(dense)


# -- vectorised tracing ---------------------------------------------------

@dataclass(frozen=True)
class _Tables:
    num_vertices: int
    num_cotree: int
    num_states: int
    out_orient: np.ndarray  # o for each state
    twist_col: np.ndarray   # column in padded twist matrix for edge of d
    arrive_vertex: np.ndarray
    succ_back: np.ndarray
    pred_back: np.ndarray
    b_ends: np.ndarray      # (n-1, 2) vertex indices
    c_ends: np.ndarray      # (n, 2)


def _tables(g: LadderGraph) -> _Tables:
    succ, pred = _neighbours(g)
    nc = len(g.cotree_edges)
    col_of_edge = [
        g.cotree_index(e.label) if e.label not in g.tree_edges else nc for e in g.edges
    ]
    states = np.arange(4 * g.num_edges)
    d = states >> 1
    back = d ^ 1
    ends = lambda labs: np.array(  # noqa: E731
        [(g.edge(lab).tail, g.edge(lab).head) for lab in labs], dtype=np.int64
    ).reshape(-1, 2)
    n = g.n if g.kind == "ringel" else 0
    return _Tables(
        num_vertices=g.num_vertices,
        num_cotree=nc,
        num_states=len(states),
        out_orient=(states & 1).astype(np.int8),
        twist_col=np.array(col_of_edge)[d >> 1],
        arrive_vertex=np.array([g.dart_vertex(x) for x in back]),
        succ_back=np.array(succ)[back],
        pred_back=np.array(pred)[back],
        b_ends=ends([f"b{j}" for j in range(1, n)]),
        c_ends=ends([f"c{k}" for k in range(1, n + 1)]),
    )


def _split_codes(t: _Tables, codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    shifts_v = np.arange(t.num_vertices, dtype=np.uint64)
    shifts_c = np.arange(t.num_vertices, t.num_vertices + t.num_cotree, dtype=np.uint64)
    colors = ((codes[:, None] >> shifts_v) & np.uint64(1)).astype(np.int8)
    twists = ((codes[:, None] >> shifts_c) & np.uint64(1)).astype(np.int8)
    return colors, twists


def _count_cycles(perm: np.ndarray) -> np.ndarray:
    """Number of cycles of each row permutation, by min-label pointer doubling."""
    n_rows, size = perm.shape
    ident = np.arange(size, dtype=perm.dtype)
    label = np.broadcast_to(ident, perm.shape).copy()
    f = perm
    span = 1
    while span < size:
        label = np.minimum(label, np.take_along_axis(label, f, axis=1))
        f = np.take_along_axis(f, f, axis=1)
        span *= 2
    return (label == ident).sum(axis=1)


def batch_faces(t: _Tables, colors: np.ndarray, twists: np.ndarray) -> np.ndarray:
    pad = np.zeros((twists.shape[0], 1), dtype=np.int8)
    tw = np.concatenate([twists, pad], axis=1)[:, t.twist_col]
    o = t.out_orient[None, :] ^ tw
    turn = o ^ colors[:, t.arrive_vertex]
    nxt = np.where(turn.astype(bool), t.pred_back[None, :], t.succ_back[None, :])
    perm = (2 * nxt + o).astype(np.intp)
    orbits = _count_cycles(perm)
    if np.any(orbits % 2):
        raise AssertionError("face orbits must pair up")
    return orbits // 2


def batch_ringel_codes(t: _Tables, n: int, colors: np.ndarray, twists: np.ndarray) -> np.ndarray:
    """Packed R-family assignment codes of the overlap matrices of a batch of systems."""
    y = colors[:, t.b_ends[:, 0]] ^ colors[:, t.b_ends[:, 1]]
    z = colors[:, t.c_ends[:, 0]] ^ colors[:, t.c_ends[:, 1]]
    bits = np.concatenate([twists, y, z], axis=1).astype(np.uint64)
    shifts = np.arange(bits.shape[1], dtype=np.uint64)
    return (bits << shifts).sum(axis=1, dtype=np.uint64)


@dataclass(frozen=True)
class TraceAudit:
    """Outcome of tracing every T-rotation system of ``R_{n-1}``.

    ``preimage_histogram`` maps "number of systems giving a matrix" to
    "number of matrices"; the two-to-one colouring correspondence makes it ``{2: 2^(3n)}``.
    """

    n: int
    systems: int
    total: TotalPoly
    mohar_exceptions: int | None = None
    first_exception: int | None = None
    preimage_histogram: tuple[tuple[int, int], ...] | None = None


def _audit_chunk(n: int, checks: bool, start: int, stop: int):
    g = build_ringel(n)
    t = _tables(g)
    genus = np.zeros(n + 2, dtype=np.int64)
    cross = np.zeros(n + 3, dtype=np.int64)
    bad, first = 0, None
    pre = np.zeros(1 << (3 * n), dtype=np.int64) if checks else None
    for lo, hi in batches(start, stop):
        codes = np.arange(lo, hi, dtype=np.uint64)
        colors, twists = _split_codes(t, codes)
        faces = batch_faces(t, colors, twists)
        excess = 2 - (g.num_vertices - g.num_edges + faces)  # 2 - chi
        orient = ~twists.any(axis=1)
        genus += np.bincount(excess[orient] // 2, minlength=n + 2)
        cross += np.bincount(excess[~orient], minlength=n + 3)
        if checks:
            mcodes = batch_ringel_codes(t, n, colors, twists)
            ranks = rank_batch(family_rows(Family.R, n, mcodes), n + 1)
            miss = np.flatnonzero(ranks != excess)
            if miss.size:
                bad += int(miss.size)
                if first is None:
                    first = int(codes[miss[0]])
            pre += np.bincount(mcodes.astype(np.int64), minlength=pre.size)
    return genus, cross, bad, first, pre


def trace_audit(n: int, workers: int = 1, checks: bool = True,
                max_n: int = DEFAULT_MAX_TRACE_N, orientable_only: bool = False) -> TraceAudit:
    """Trace all systems; optionally compare every overlap-matrix rank with
    ``2 - chi`` and count preimages of every matrix."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > max_n:
        raise InfeasibleError(f"tracing 2^{3 * n + 1} systems exceeds the cap n <= {max_n}")
    if orientable_only and checks:
        raise ValueError("matrix checks need the full system range")
    total = 1 << (2 * n if orientable_only else 3 * n + 1)
    parts = map_ranges(_audit_chunk, total, workers, n, checks)
    genus = sum(p[0] for p in parts)
    cross = sum(p[1] for p in parts)
    poly = TotalPoly(ExactPoly(int(c) for c in genus), ExactPoly(int(c) for c in cross))
    if not checks:
        return TraceAudit(n, total, poly)
    firsts = [p[3] for p in parts if p[3] is not None]
    pre = sum(p[4] for p in parts)
    hist = np.bincount(pre)
    return TraceAudit(
        n,
        total,
        poly,
        mohar_exceptions=sum(p[2] for p in parts),
        first_exception=firsts[0] if firsts else None,
        preimage_histogram=tuple((k, int(v)) for k, v in enumerate(hist) if v),
    )


def total_poly_by_tracing(n: int, workers: int = 1, max_n: int = DEFAULT_MAX_TRACE_N,
                          orientable_only: bool = False) -> TotalPoly:
    return trace_audit(n, workers, checks=False, max_n=max_n, orientable_only=orientable_only).total
