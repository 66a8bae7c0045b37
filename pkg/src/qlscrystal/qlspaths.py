"""Quantum Lakshmibai-Seshadri paths for a level-zero dominant shape weight.

A rational path is a sequence of minimal coset representatives together with
rational turning times; it is identified with the piecewise-linear path
whose directions are the representatives applied to the shape weight.
Membership comes in two variants: "tilde" asks each turning time to admit a
directed sigma-path in the quantum Bruhat graph between the neighbouring
representatives, "hat" additionally asks for one of shortest possible
length.

The lowering operator is implemented twice on purpose: once generically
through the piecewise-linear surgery of :mod:`qlscrystal.pathcore`, and once
combinatorially by rewriting the coset/time sequences through a four-way
case split on (whether the pre-window coset already equals the reflected
first window coset, whether the window closes exactly on a turning time).
The two implementations are required to agree and the test suite holds them
to that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import InternalInconsistencyError, NodeCapError
from .pathcore import PLPath, _first_hit, h_function, pl_path, root_e, root_f
from .qbg import Qbg, build_qbg, qbg_distance, sigma_reachable
from .rootsys import RootSystem, WeightVec
from .weylgroup import (
    WeylElem,
    identity,
    min_coset_rep,
    reflection_of_root,
    simple_reflection,
)

VARIANTS = ("tilde", "hat")


@dataclass(frozen=True, eq=False)
class RationalPath:
    """A coset sequence with strictly increasing rational turning times."""

    cosets: tuple[WeylElem, ...]
    times: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "times", tuple(Fraction(t) for t in self.times))
        object.__setattr__(self, "cosets", tuple(self.cosets))
        if len(self.times) != len(self.cosets) + 1:
            raise ValueError("need exactly one more time than cosets")
        if self.times[0] != 0 or self.times[-1] != 1:
            raise ValueError("times must start at 0 and end at 1")
        if any(a >= b for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")
        if any(a == b for a, b in zip(self.cosets, self.cosets[1:])):
            raise ValueError("adjacent cosets must differ")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPath):
            return NotImplemented
        return self.cosets == other.cosets and self.times == other.times

    def __hash__(self) -> int:
        return hash((self.cosets, self.times))

    def __repr__(self) -> str:
        ws = ", ".join(
            "e" if not w.reduced_word else "".join(f"s{j}" for j in w.reduced_word)
            for w in self.cosets
        )
        ts = ", ".join(str(t) for t in self.times)
        return f"({ws}; {ts})"


class ShapeData:
    """Everything attached to one level-zero dominant shape weight.

    Holds the stabilizer index set J, the quantum Bruhat graph on the
    corresponding minimal representatives, the bound on turning-time
    denominators, and the bijection between representatives and directions.
    Immutable after construction.
    """

    def __init__(self, rs: RootSystem, weight: WeightVec):
        weight = tuple(weight)
        if len(weight) != rs.rank:
            raise ValueError(f"weight {weight} has wrong rank for {rs.cartan}")
        if not all(isinstance(c, int) and c >= 0 for c in weight):
            raise ValueError(
                f"shape weight must have nonnegative integer coordinates, got {weight}"
            )
        self.rs = rs
        self.weight = weight
        self.J = frozenset(j for j in range(1, rs.rank + 1) if weight[j - 1] == 0)
        self.qbg: Qbg = build_qbg(rs, self.J)
        labels = rs.positive_roots_outside(self.J)
        self.denom_bound = max((int(rs.pairing(weight, b)) for b in labels), default=0)
        self.vertex_weight = {x: x.act_weight(weight) for x in self.qbg.vertices}
        self.weight_vertex = {mu: x for x, mu in self.vertex_weight.items()}
        if len(self.weight_vertex) != len(self.qbg.vertices):
            raise InternalInconsistencyError(
                "representatives do not act freely on the shape weight"
            )
        self.indices = tuple(range(0, rs.rank + 1))

    def __repr__(self) -> str:
        return f"ShapeData({self.rs.cartan}, {self.weight})"


def shape_of(rs: RootSystem, weight: Iterable[int]) -> ShapeData:
    return ShapeData(rs, tuple(weight))


def eta_straight(shape: ShapeData, x: WeylElem) -> RationalPath:
    """The one-segment path in the direction of ``x`` applied to the weight."""
    if x not in shape.vertex_weight:
        raise ValueError(f"{x!r} is not a minimal representative for this shape")
    return RationalPath((x,), (Fraction(0), Fraction(1)))


def seed_path(shape: ShapeData) -> RationalPath:
    return eta_straight(shape, identity(shape.rs))


def to_pl_path(shape: ShapeData, eta: RationalPath) -> PLPath:
    dirs = []
    for x, a, b in zip(eta.cosets, eta.times, eta.times[1:]):
        if x not in shape.vertex_weight:
            raise ValueError(f"{x!r} is not a minimal representative for this shape")
        dirs.append((shape.vertex_weight[x], b - a))
    return pl_path(shape.rs, dirs)


def from_pl_path(shape: ShapeData, path: PLPath) -> RationalPath:
    """Re-segment a path whose directions all lie in the orbit of the weight."""
    cosets = []
    for direction, _ in path.segments:
        x = shape.weight_vertex.get(direction)
        if x is None:
            raise InternalInconsistencyError(
                f"direction {direction} is not in the orbit of the shape weight"
            )
        cosets.append(x)
    return RationalPath(tuple(cosets), path.breakpoints)


def weight_of(shape: ShapeData, eta: RationalPath) -> WeightVec:
    return to_pl_path(shape, eta).weight()


def is_member(shape: ShapeData, eta: RationalPath, variant: str) -> bool:
    """Membership test for one of the two defining variants.

    For every interior turning time ``sigma_k`` there must be a directed
    sigma_k-path in the quantum Bruhat graph from the later coset to the
    earlier one; the "hat" variant also requires its length to equal the
    unrestricted graph distance.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if any(x not in shape.vertex_weight for x in eta.cosets):
        raise ValueError("path uses cosets that are not minimal representatives")
    Lam = shape.weight
    for k in range(1, len(eta.cosets)):
        x_k, x_k1 = eta.cosets[k - 1], eta.cosets[k]
        n = sigma_reachable(shape.qbg, Lam, eta.times[k], x_k, x_k1)
        if n is None:
            return False
        if variant == "hat" and n != qbg_distance(shape.qbg, x_k, x_k1):
            return False
    return True


def admissible_times(shape: ShapeData) -> tuple[Fraction, ...]:
    """All rationals in (0,1) whose denominator divides some label pairing.

    Any interior turning time of a member must be of this form, since its
    sigma-path needs at least one usable edge; this is what makes the
    brute-force enumeration below exhaustive.
    """
    denoms: set[int] = set()
    for b in shape.rs.positive_roots_outside(shape.J):
        v = int(shape.rs.pairing(shape.weight, b))
        denoms.update(q for q in range(2, v + 1) if v % q == 0)
    times = {Fraction(p, q) for q in denoms for p in range(1, q)}
    return tuple(sorted(times))


def _coset_sequences(
    vertices: tuple[WeylElem, ...], length: int
) -> Iterator[tuple[WeylElem, ...]]:
    if length == 1:
        for v in vertices:
            yield (v,)
        return
    for prefix in _coset_sequences(vertices, length - 1):
        for v in vertices:
            if v != prefix[-1]:
                yield prefix + (v,)


def enumerate_paths(
    shape: ShapeData, variant: str, cap: int = 1_000_000
) -> list[RationalPath]:
    """All members of the given variant, in a fixed deterministic order.

    Candidates are generated by number of segments, then by time sequence,
    then by coset sequence in graph-vertex order, and filtered through
    :func:`is_member`.  Raises :class:`NodeCapError` past ``cap`` candidates.
    """
    times = admissible_times(shape)
    vertices = shape.qbg.vertices
    out = []
    examined = 0
    for k in range(0, len(times) + 1):
        for interior in combinations(times, k):
            full = (Fraction(0),) + interior + (Fraction(1),)
            for cosets in _coset_sequences(vertices, k + 1):
                examined += 1
                if examined > cap:
                    raise NodeCapError(
                        f"enumeration examined more than {cap} candidates"
                    )
                eta = RationalPath(cosets, full)
                if is_member(shape, eta, variant):
                    out.append(eta)
    return out


# -- root operators on rational paths ----------------------------------------


def _mirror(shape: ShapeData, j: int) -> WeylElem:
    if j == 0:
        return reflection_of_root(shape.rs, shape.rs.highest_root)
    return simple_reflection(shape.rs, j)


def f_on_rational(shape: ShapeData, eta: RationalPath, j: int) -> Optional[RationalPath]:
    """Generic lowering operator, through the piecewise-linear surgery."""
    out = root_f(to_pl_path(shape, eta), j)
    return None if out is None else from_pl_path(shape, out)


def e_on_rational(shape: ShapeData, eta: RationalPath, j: int) -> Optional[RationalPath]:
    """Generic raising operator, through the piecewise-linear surgery."""
    out = root_e(to_pl_path(shape, eta), j)
    return None if out is None else from_pl_path(shape, out)


def combinatorial_f(
    shape: ShapeData, eta: RationalPath, j: int
) -> Optional[RationalPath]:
    """Lowering operator by direct rewriting of the coset/time sequences.

    The folding window (t0, t1) is located on the exact height function; t0
    is always a turning time sigma_u, and t1 lands in the segment of some
    later index m.  Which of the four rewritings applies is decided by two
    booleans: whether the coset before the window already equals the
    reflected projection of the first window coset (then the first turning
    time of the window disappears), and whether t1 equals the next turning
    time (then no new turning time appears).  Output paths always satisfy
    the structural invariants; a violation raises
    :class:`InternalInconsistencyError` since it would mean the case split
    itself is wrong.
    """
    if not is_member(shape, eta, "tilde"):
        raise ValueError("path is not a quantum LS path of this shape")
    h = h_function(to_pl_path(shape, eta), j)
    m_val = h.min_value
    if h.values[-1] - m_val == 0:
        return None
    # The path has one segment per coset, so the height-function breakpoints
    # are exactly the turning times and the minimum is attained at one.
    u = max(k for k, v in enumerate(h.values) if v == m_val)
    if h.breakpoints[u] != eta.times[u]:
        raise InternalInconsistencyError(
            f"breakpoints of {eta!r} drifted from its turning times"
        )
    t1 = _first_hit(h, u, m_val + 1)
    m_idx = max(k for k in range(len(eta.times) - 1) if eta.times[k] < t1)
    window_closes_on_time = t1 == eta.times[m_idx + 1]

    mirror = _mirror(shape, j)

    def bent(x: WeylElem) -> WeylElem:
        return min_coset_rep(mirror * x, shape.J)

    c = list(eta.cosets)
    t = list(eta.times)
    merges_at_u = u >= 1 and c[u - 1] == bent(c[u])

    if not merges_at_u and not window_closes_on_time:
        new_c = c[:u] + [bent(c[p]) for p in range(u, m_idx + 1)] + [c[m_idx]] + c[m_idx + 1:]
        new_t = t[: m_idx + 1] + [t1] + t[m_idx + 1:]
    elif not merges_at_u and window_closes_on_time:
        new_c = c[:u] + [bent(c[p]) for p in range(u, m_idx + 1)] + c[m_idx + 1:]
        new_t = t
    elif merges_at_u and not window_closes_on_time:
        new_c = c[:u] + [bent(c[p]) for p in range(u + 1, m_idx + 1)] + [c[m_idx]] + c[m_idx + 1:]
        new_t = t[:u] + t[u + 1 : m_idx + 1] + [t1] + t[m_idx + 1:]
    else:
        new_c = c[:u] + [bent(c[p]) for p in range(u + 1, m_idx + 1)] + c[m_idx + 1:]
        new_t = t[:u] + t[u + 1:]

    try:
        return RationalPath(tuple(new_c), tuple(new_t))
    except ValueError as exc:
        raise InternalInconsistencyError(
            f"case rewriting produced a malformed path from {eta!r}: {exc}"
        ) from exc
