"""The parabolic quantum Bruhat graph.

Vertices are the minimal coset representatives for a parabolic quotient of
the finite Weyl group.  For a vertex ``w`` and a positive root ``beta``
outside the parabolic subsystem there is an edge from ``w`` to the minimal
representative of ``w*r_beta`` when the length either goes up by one (a
Bruhat edge) or drops by twice the rho-pairing of the label minus one (a
quantum edge).  Arrows are stored source-to-target in that orientation; all
"distance from y to x" queries traverse the stored arrows starting at y.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InternalInconsistencyError
from .rootsys import RootSystem, RootVec, WeightVec
from .weylgroup import (
    WeylElem,
    enumerate_minimal_reps,
    min_coset_rep,
    reflection_of_root,
)

BRUHAT = "bruhat"
QUANTUM = "quantum"


@dataclass(frozen=True)
class QbgEdge:
    source: WeylElem
    target: WeylElem
    label: RootVec
    kind: str  # "bruhat" | "quantum"


@dataclass(eq=False)
class Qbg:
    """A built quantum Bruhat graph with its all-pairs distance table.

    ``dist[x][y]`` is the length of a shortest directed path from vertex
    ``y`` to vertex ``x`` (``None`` when unreachable, which does not occur
    for the types exercised here).  Immutable after construction.
    """

    rs: RootSystem = field(repr=False)
    J: frozenset[int]
    vertices: tuple[WeylElem, ...]
    edges: tuple[QbgEdge, ...]
    dist: tuple[tuple[Optional[int], ...], ...] = field(repr=False)
    _index: dict[WeylElem, int] = field(repr=False)
    _out: tuple[tuple[int, ...], ...] = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Qbg):
            return NotImplemented
        return (
            self.rs.cartan == other.rs.cartan
            and self.J == other.J
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def vertex_index(self, w: WeylElem) -> int:
        try:
            return self._index[w]
        except KeyError:
            raise ValueError(f"{w!r} is not a vertex of this graph") from None

    @property
    def strongly_connected(self) -> bool:
        return all(d is not None for row in self.dist for d in row)

    def bruhat_edges(self) -> tuple[QbgEdge, ...]:
        return tuple(e for e in self.edges if e.kind == BRUHAT)

    def quantum_edges(self) -> tuple[QbgEdge, ...]:
        return tuple(e for e in self.edges if e.kind == QUANTUM)


def classify_edge(
    rs: RootSystem, J: Iterable[int], w: WeylElem, beta: RootVec
) -> Optional[str]:
    """Classify the candidate edge at ``(w, beta)``.

    Returns ``"bruhat"``, ``"quantum"`` or ``None``.  Whenever the quantum
    length condition holds, the equivalent characterization through the full
    (unprojected) length drop is cross-checked and a mismatch raises
    :class:`InternalInconsistencyError`.
    """
    Jset = rs.normalize_parabolic(J)
    if min_coset_rep(w, Jset) != w:
        raise ValueError("w is not a minimal coset representative")
    if not rs.is_positive_root(beta):
        raise ValueError(f"{beta} is not a positive root")
    if beta in rs.parabolic_positive_roots(Jset):
        raise ValueError(f"label {beta} lies in the parabolic subsystem")
    full = w * reflection_of_root(rs, beta)
    proj = min_coset_rep(full, Jset)
    if proj.length == w.length + 1:
        return BRUHAT
    two_rho = 2 * Fraction(rs.rho_pairing(Jset, beta))
    if two_rho.denominator != 1:
        raise InternalInconsistencyError(
            f"2<rho - rho_J, {beta}^v> is not an integer"
        )
    if proj.length == w.length - int(two_rho) + 1:
        coht = sum(rs.coroot(beta))
        if full.length != w.length - 2 * coht + 1:
            raise InternalInconsistencyError(
                f"quantum edge at ({w!r}, {beta}) fails the unprojected "
                "length condition"
            )
        return QUANTUM
    return None


def build_qbg(rs: RootSystem, J: Iterable[int]) -> Qbg:
    """Construct the graph by classifying every (vertex, label) pair."""
    Jset = rs.normalize_parabolic(J)
    vertices = enumerate_minimal_reps(rs, Jset)
    labels = rs.positive_roots_outside(Jset)
    edges = []
    for w in vertices:
        for beta in labels:
            kind = classify_edge(rs, Jset, w, beta)
            if kind is not None:
                target = min_coset_rep(w * reflection_of_root(rs, beta), Jset)
                edges.append(QbgEdge(w, target, beta, kind))
    return assemble_qbg(rs, Jset, vertices, tuple(edges))


def assemble_qbg(
    rs: RootSystem,
    J: frozenset[int],
    vertices: tuple[WeylElem, ...],
    edges: tuple[QbgEdge, ...],
) -> Qbg:
    """Wire up adjacency and the all-pairs BFS distance table."""
    index = {w: i for i, w in enumerate(vertices)}
    out: list[list[int]] = [[] for _ in vertices]
    for k, e in enumerate(edges):
        out[index[e.source]].append(k)
    n = len(vertices)
    dist: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for y in range(n):
        dist[y][y] = 0
        queue = deque([y])
        reached = {y: 0}
        while queue:
            v = queue.popleft()
            for k in out[v]:
                t = index[edges[k].target]
                if t not in reached:
                    reached[t] = reached[v] + 1
                    queue.append(t)
        for x, d in reached.items():
            dist[x][y] = d
    return Qbg(
        rs,
        J,
        vertices,
        edges,
        tuple(tuple(row) for row in dist),
        index,
        tuple(tuple(ks) for ks in out),
    )


def qbg_distance(g: Qbg, x: WeylElem, y: WeylElem) -> Optional[int]:
    """Length of a shortest directed path from ``y`` to ``x``."""
    return g.dist[g.vertex_index(x)][g.vertex_index(y)]


def _usable(g: Qbg, Lambda: WeightVec, sigma: Fraction, edge: QbgEdge) -> bool:
    return (sigma * Fraction(g.rs.pairing(Lambda, edge.label))).denominator == 1


def sigma_reachable(
    g: Qbg, Lambda: WeightVec, sigma, x: WeylElem, y: WeylElem
) -> Optional[int]:
    """Shortest length of a directed sigma-path from ``y`` to ``x``.

    Only edges whose label pairs with ``Lambda`` to a multiple of 1/sigma
    may be used; returns ``None`` when no such path exists.
    """
    sigma = Fraction(sigma)
    if not 0 < sigma < 1:
        raise ValueError(f"sigma must lie strictly between 0 and 1, got {sigma}")
    xi, yi = g.vertex_index(x), g.vertex_index(y)
    reached = {yi: 0}
    queue = deque([yi])
    while queue:
        v = queue.popleft()
        if v == xi:
            return reached[v]
        for k in g._out[v]:
            e = g.edges[k]
            if _usable(g, Lambda, sigma, e):
                t = g.vertex_index(e.target)
                if t not in reached:
                    reached[t] = reached[v] + 1
                    queue.append(t)
    return reached.get(xi)


def sigma_path_witness(
    g: Qbg, Lambda: WeightVec, sigma, x: WeylElem, y: WeylElem
) -> Optional[tuple[QbgEdge, ...]]:
    """A shortest directed sigma-path from ``y`` to ``x``, as an edge list.

    The edges are returned in traversal order starting at ``y``; an empty
    tuple means ``x == y``.  Returns ``None`` when no path exists.
    """
    sigma = Fraction(sigma)
    if not 0 < sigma < 1:
        raise ValueError(f"sigma must lie strictly between 0 and 1, got {sigma}")
    xi, yi = g.vertex_index(x), g.vertex_index(y)
    parent: dict[int, tuple[int, int]] = {yi: (-1, -1)}
    queue = deque([yi])
    while queue and xi not in parent:
        v = queue.popleft()
        for k in g._out[v]:
            e = g.edges[k]
            if _usable(g, Lambda, sigma, e):
                t = g.vertex_index(e.target)
                if t not in parent:
                    parent[t] = (v, k)
                    queue.append(t)
    if xi not in parent:
        return None
    path = []
    v = xi
    while v != yi:
        v, k = parent[v]
        path.append(g.edges[k])
    return tuple(reversed(path))
