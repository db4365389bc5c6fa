"""Labeled Ringel ladders and closed-end ladders.

Ringel ladder ``R_{n-1}`` for parameter ``n``::

       e (arc over the top, v_1 -- v_{n+1})
     v_1 -c_1- v_2 -c_2- v_3 ... v_n -c_n- v_{n+1}
       \\        |b_1     |b_2        |b_{n-1} /
        a_1     u_2 -a_2- u_3 ... u_n  -a_n-

The spanning tree is every ``b_i`` and ``c_i``; the cotree edges are
``e, a_1, ..., a_n`` in that order, which fixes the overlap-matrix rows.

Edge ``k`` owns darts ``2k`` (at ``edges[k].tail``) and ``2k + 1`` (at
``edges[k].head``), so ``d ^ 1`` is the opposite end of dart ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

Kind = Literal["ringel", "closed_end"]


@dataclass(frozen=True)
class Edge:
    label: str
    tail: int
    head: int


@dataclass(frozen=True)
class LadderGraph:
    n: int
    kind: Kind
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    tree_edges: frozenset[str]
    cotree_edges: tuple[str, ...]
    # Darts around each vertex in clockwise order of the planar drawing.
    rotation: tuple[tuple[int, ...], ...]
    positions: tuple[tuple[float, float], ...] = field(repr=False, default=())

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def betti(self) -> int:
        return self.num_edges - self.num_vertices + 1

    def vertex_index(self, label: str) -> int:
        return self.vertices.index(label)

    def edge_index(self, label: str) -> int:
        for k, e in enumerate(self.edges):
            if e.label == label:
                return k
        raise KeyError(label)

    def edge(self, label: str) -> Edge:
        return self.edges[self.edge_index(label)]

    def dart_vertex(self, d: int) -> int:
        e = self.edges[d >> 1]
        return e.head if d & 1 else e.tail

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for e in self.edges:
            deg[e.tail] += 1
            deg[e.head] += 1
        return deg

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees())

    def cotree_index(self, label: str) -> int:
        return self.cotree_edges.index(label)

    def check(self) -> None:
        """Raise ``ValueError`` if any structural invariant fails."""
        labels = [e.label for e in self.edges]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate edge labels")
        if set(self.cotree_edges) != set(labels) - self.tree_edges:
            raise ValueError("cotree edges must be exactly the non-tree edges")
        if not self.tree_edges <= set(labels):
            raise ValueError("unknown tree edge")
        if len(self.tree_edges) != self.num_vertices - 1:
            raise ValueError("tree has the wrong number of edges")
        parent = list(range(self.num_vertices))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.edges:
            if e.label in self.tree_edges:
                ra, rb = find(e.tail), find(e.head)
                if ra == rb:
                    raise ValueError(f"tree edge {e.label} closes a cycle")
                parent[ra] = rb
        darts = sorted(d for rot in self.rotation for d in rot)
        if darts != list(range(2 * self.num_edges)):
            raise ValueError("every dart must appear in exactly one rotation")
        for v, rot in enumerate(self.rotation):
            if any(self.dart_vertex(d) != v for d in rot):
                raise ValueError(f"rotation at {self.vertices[v]} uses a foreign dart")
        if self.kind == "ringel":
            if self.cotree_edges[0] != "e":
                raise ValueError("first cotree edge must be e")
            if not self.is_cubic():
                raise ValueError("Ringel ladder must be cubic")


def _assemble(n, kind, vertices, edge_list, tree, cotree, cw, positions) -> LadderGraph:
    vidx = {v: i for i, v in enumerate(vertices)}
    edges = tuple(Edge(lab, vidx[a], vidx[b]) for lab, a, b in edge_list)
    eidx = {e.label: k for k, e in enumerate(edges)}

    def dart(label: str, at: str) -> int:
        k = eidx[label]
        e = edges[k]
        if e.tail == vidx[at]:
            return 2 * k
        if e.head == vidx[at]:
            return 2 * k + 1
        raise ValueError(f"{label} does not meet {at}")

    rotation = tuple(tuple(dart(lab, v) for lab in cw[v]) for v in vertices)
    g = LadderGraph(
        n=n,
        kind=kind,
        vertices=tuple(vertices),
        edges=edges,
        tree_edges=frozenset(tree),
        cotree_edges=tuple(cotree),
        rotation=rotation,
        positions=tuple(positions[v] for v in vertices),
    )
    g.check()
    return g


def build_ringel(n: int) -> LadderGraph:
    """Ringel ladder ``R_{n-1}``: 2n vertices, 3n edges, Betti number n + 1."""
    if n < 2:
        raise ValueError(f"Ringel ladder needs n >= 2, got {n}")
    v = [f"v{i}" for i in range(1, n + 2)]
    u = {i: f"u{i}" for i in range(2, n + 1)}
    vertices = v + [u[i] for i in range(2, n + 1)]

    def top(i: int) -> str:
        return v[i - 1]

    edges = [("e", top(1), top(n + 1))]
    for i in range(1, n + 1):
        lo = top(1) if i == 1 else u[i]
        hi = top(n + 1) if i == n else u[i + 1]
        edges.append((f"a{i}", lo, hi))
    for i in range(1, n):
        edges.append((f"b{i}", top(i + 1), u[i + 1]))
    for i in range(1, n + 1):
        edges.append((f"c{i}", top(i), top(i + 1)))

    tree = [f"b{i}" for i in range(1, n)] + [f"c{i}" for i in range(1, n + 1)]
    cotree = ["e"] + [f"a{i}" for i in range(1, n + 1)]

    # Clockwise neighbour order in the planar layout (e arcs above everything).
    cw = {top(1): ("e", "c1", "a1"), top(n + 1): (f"a{n}", f"c{n}", "e")}
    for i in range(1, n):
        cw[top(i + 1)] = (f"c{i}", f"c{i + 1}", f"b{i}")
        cw[u[i + 1]] = (f"a{i}", f"b{i}", f"a{i + 1}")

    pos = {top(1): (-1.5, -0.75), top(n + 1): (1.5 * (n - 1), -0.75)}
    for i in range(2, n + 1):
        pos[top(i)] = (1.5 * (i - 2), 0.0)
        pos[u[i]] = (1.5 * (i - 2), -1.5)
    return _assemble(n, "ringel", vertices, edges, tree, cotree, cw, pos)


def build_closed_end(k: int) -> LadderGraph:
    """Closed-end ladder ``L_k``: a k-rung ladder with both end rungs doubled."""
    if k < 1:
        raise ValueError(f"closed-end ladder needs k >= 1, got {k}")
    t = [f"t{i}" for i in range(1, k + 1)]
    s = [f"s{i}" for i in range(1, k + 1)]
    vertices = t + s
    edges = [(f"r{i}", t[i - 1], s[i - 1]) for i in range(1, k + 1)]
    edges += [(f"p{i}", t[i - 1], t[i]) for i in range(1, k)]
    edges += [(f"q{i}", s[i - 1], s[i]) for i in range(1, k)]
    edges += [("d1", t[0], s[0]), ("d2", t[-1], s[-1])]
    tree = [f"r{i}" for i in range(1, k + 1)] + [f"p{i}" for i in range(1, k)]
    cotree = [f"q{i}" for i in range(1, k)] + ["d1", "d2"]

    # Planar drawing: d1 bulges left, d2 bulges right.
    cw: dict[str, tuple[str, ...]] = {}
    for i in range(1, k + 1):
        top_l = "d1" if i == 1 else f"p{i - 1}"
        top_r = "d2" if i == k else f"p{i}"
        bot_l = "d1" if i == 1 else f"q{i - 1}"
        bot_r = "d2" if i == k else f"q{i}"
        cw[t[i - 1]] = (top_l, top_r, f"r{i}")
        cw[s[i - 1]] = (bot_l, f"r{i}", bot_r)
    pos = {}
    for i in range(1, k + 1):
        pos[t[i - 1]] = (1.5 * (i - 1), 0.0)
        pos[s[i - 1]] = (1.5 * (i - 1), -1.5)
    return _assemble(k, "closed_end", vertices, edges, tree, cotree, cw, pos)


def to_dot(g: LadderGraph) -> str:
    """Graphviz text: edges labeled, tree edges bold, vertices pinned to the drawing."""
    lines = [f'graph "{g.kind}_{g.n}" {{', "  node [shape=point];"]
    for name, (x, y) in zip(g.vertices, g.positions):
        lines.append(f'  "{name}" [pos="{x:g},{y:g}!", xlabel="{name}"];')
    for e in g.edges:
        style = ", style=bold" if e.label in g.tree_edges else ""
        lines.append(
            f'  "{g.vertices[e.tail]}" -- "{g.vertices[e.head]}" [label="{e.label}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
