"""Finite root systems: Cartan data, roots, coroots, weights, reflections.

Conventions used throughout the package:

* Roots are integer tuples in simple-root coordinates.
* Weights are tuples in fundamental-weight coordinates: entry ``i-1`` is the
  pairing of the weight with the ``i``-th simple coroot.  Entries are ``int``
  or ``fractions.Fraction``; every computation is exact.
* ``cartan_matrix[i][j]`` is the pairing of simple root ``j+1`` with simple
  coroot ``i+1``, so a simple reflection acts on roots through a row of the
  matrix and on weights through a column.
* Simple roots are numbered 1..rank following Bourbaki in every family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Union

from .errors import InternalInconsistencyError

RootVec = tuple[int, ...]
WeightVec = tuple[Union[int, Fraction], ...]

# Legal rank range per family (inclusive; None means unbounded above).
_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    """A finite Cartan type such as A2, C2 or E6."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        bounds = _RANK_RANGES.get(self.family)
        if bounds is None:
            raise ValueError(f"unknown Cartan family {self.family!r}")
        lo, hi = bounds
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(
                f"rank {self.rank} is not valid for family {self.family}"
            )

    @classmethod
    def parse(cls, name: str) -> "CartanType":
        """Parse a string such as ``"A2"`` or ``"c2"``.

        >>> CartanType.parse("C2")
        CartanType(family='C', rank=2)
        """
        name = name.strip()
        if len(name) < 2 or not name[1:].isdigit():
            raise ValueError(f"cannot parse Cartan type {name!r}")
        return cls(name[0].upper(), int(name[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        # 1-based node indices
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    fam = ct.family
    if fam in ("A", "B", "C"):
        for i in range(1, n):
            bond(i, i + 1)
        if fam == "B":
            bond(n - 1, n, -1, -2)  # alpha_n short
        elif fam == "C":
            bond(n - 1, n, -2, -1)  # alpha_n long
    elif fam == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif fam == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(2, 4)
    elif fam == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)  # alpha_3, alpha_4 short
        bond(3, 4)
    elif fam == "G":
        bond(1, 2, -3, -1)  # alpha_1 short
    return tuple(tuple(row) for row in a)


def _symmetrizer(a: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Minimal positive integers d with d[i]*a[i][j] == d[j]*a[j][i]."""
    n = len(a)
    d: list[Fraction] = [Fraction(0)] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and a[i][j] != 0 and d[j] == 0:
                d[j] = d[i] * a[i][j] / a[j][i]
                todo.append(j)
    if any(x <= 0 for x in d):
        raise InternalInconsistencyError("Dynkin diagram is not connected")
    mult = lcm(*(x.denominator for x in d))
    ints = [int(x * mult) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


class RootSystem:
    """Immutable container for the combinatorics of a finite root system.

    Instances are interned by :func:`build_root_system`; they are never
    mutated after construction and are safe to share across threads.
    """

    def __init__(self, cartan: CartanType):
        self.cartan = cartan
        self.rank = cartan.rank
        self.cartan_matrix = _cartan_matrix(cartan)
        self.symmetrizer = _symmetrizer(self.cartan_matrix)
        self._enumerate_roots()
        self._inverse_cartan = _invert(self.cartan_matrix)

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan})"

    # -- construction -----------------------------------------------------

    def _enumerate_roots(self) -> None:
        n = self.rank
        a = self.cartan_matrix
        coroot: dict[RootVec, tuple[int, ...]] = {}
        frontier: list[tuple[RootVec, tuple[int, ...]]] = []
        for k in range(n):
            e = tuple(int(i == k) for i in range(n))
            coroot[e] = e
            frontier.append((e, e))
        # Breadth-first closure under simple reflections, keeping positives.
        while frontier:
            new: list[tuple[RootVec, tuple[int, ...]]] = []
            for b, bv in frontier:
                for i in range(n):
                    p = sum(a[i][j] * b[j] for j in range(n))
                    rb = tuple(b[j] - (p if j == i else 0) for j in range(n))
                    q = sum(a[j][i] * bv[j] for j in range(n))
                    rbv = tuple(bv[j] - (q if j == i else 0) for j in range(n))
                    if all(c >= 0 for c in rb) and rb not in coroot:
                        coroot[rb] = rbv
                        new.append((rb, rbv))
            frontier = new
        order = sorted(coroot, key=lambda b: (sum(b), b))
        self.positive_roots: tuple[RootVec, ...] = tuple(order)
        self.coroot_table: dict[RootVec, tuple[int, ...]] = {
            b: coroot[b] for b in order
        }
        top = max(sum(b) for b in order)
        highest = [b for b in order if sum(b) == top]
        if len(highest) != 1:
            raise InternalInconsistencyError("highest root is not unique")
        self.highest_root: RootVec = highest[0]

        # Squared-length data (beta, beta)/2 per positive root, and a
        # cross-check of the reflection-generated coroots against the
        # symmetrizer formula beta^v_j = d_j * beta_j / d_beta.
        d = self.symmetrizer
        self.half_norms: dict[RootVec, Fraction] = {}
        for b, bv in self.coroot_table.items():
            norm = sum(
                b[i] * b[j] * d[i] * a[i][j] for i in range(n) for j in range(n)
            )
            d_b = Fraction(norm, 2)
            self.half_norms[b] = d_b
            for j in range(n):
                if Fraction(d[j] * b[j]) / d_b != bv[j]:
                    raise InternalInconsistencyError(
                        f"coroot of {b} disagrees with the symmetrizer"
                    )

    # -- basic queries -----------------------------------------------------

    def simple_root(self, j: int) -> RootVec:
        if not 1 <= j <= self.rank:
            raise ValueError(f"simple index {j} out of range 1..{self.rank}")
        return tuple(int(i == j - 1) for i in range(self.rank))

    def fundamental_weight(self, i: int) -> WeightVec:
        if not 1 <= i <= self.rank:
            raise ValueError(f"weight index {i} out of range 1..{self.rank}")
        return tuple(int(k == i - 1) for k in range(self.rank))

    @property
    def rho(self) -> WeightVec:
        return (1,) * self.rank

    def zero_weight(self) -> WeightVec:
        return (0,) * self.rank

    def is_positive_root(self, beta: RootVec) -> bool:
        return tuple(beta) in self.coroot_table

    def is_root(self, beta: RootVec) -> bool:
        b = tuple(beta)
        return b in self.coroot_table or tuple(-c for c in b) in self.coroot_table

    def coroot(self, beta: RootVec) -> tuple[int, ...]:
        """Coroot of ``beta`` in simple-coroot coordinates; sign-aware."""
        b = tuple(beta)
        if b in self.coroot_table:
            return self.coroot_table[b]
        neg = tuple(-c for c in b)
        if neg in self.coroot_table:
            return tuple(-c for c in self.coroot_table[neg])
        raise ValueError(f"{beta} is not a root of {self.cartan}")

    # -- pairings and reflections -------------------------------------------

    def pairing(self, mu: WeightVec, beta: RootVec):
        """Pairing of the weight ``mu`` with the coroot of ``beta``."""
        bv = self.coroot(beta)
        return sum(m * c for m, c in zip(mu, bv))

    def root_in_weight_coords(self, beta: Iterable[int]) -> WeightVec:
        """Fundamental-weight coordinates of a root-lattice vector."""
        a = self.cartan_matrix
        b = tuple(beta)
        return tuple(
            sum(a[i][j] * b[j] for j in range(self.rank)) for i in range(self.rank)
        )

    def weight_in_root_coords(self, mu: WeightVec) -> tuple[Fraction, ...]:
        """Simple-root coordinates of a weight (rational in general)."""
        inv = self._inverse_cartan
        return tuple(
            sum(inv[i][j] * Fraction(mu[j]) for j in range(self.rank))
            for i in range(self.rank)
        )

    def reflect(self, mu: WeightVec, beta: RootVec) -> WeightVec:
        """Reflect the weight ``mu`` in the hyperplane of the root ``beta``."""
        c = self.pairing(mu, beta)
        bw = self.root_in_weight_coords(beta)
        return tuple(m - c * x for m, x in zip(mu, bw))

    # -- parabolic data -----------------------------------------------------

    def normalize_parabolic(self, J: Iterable[int]) -> frozenset[int]:
        Jset = frozenset(J)
        if not all(isinstance(j, int) and 1 <= j <= self.rank for j in Jset):
            raise ValueError(f"parabolic indices {sorted(Jset)} out of range")
        return Jset

    def parabolic_positive_roots(self, J: Iterable[int]) -> tuple[RootVec, ...]:
        """Positive roots supported on the parabolic index set."""
        Jset = self.normalize_parabolic(J)
        outside = [j for j in range(self.rank) if (j + 1) not in Jset]
        return tuple(
            b for b in self.positive_roots if all(b[j] == 0 for j in outside)
        )

    def positive_roots_outside(self, J: Iterable[int]) -> tuple[RootVec, ...]:
        """Positive roots with support not contained in the parabolic set."""
        inside = set(self.parabolic_positive_roots(J))
        return tuple(b for b in self.positive_roots if b not in inside)

    def rho_parabolic(self, J: Iterable[int]) -> WeightVec:
        """Half-sum of the positive roots supported on ``J``."""
        total = [Fraction(0)] * self.rank
        for b in self.parabolic_positive_roots(J):
            for i, x in enumerate(self.root_in_weight_coords(b)):
                total[i] += x
        return tuple(x / 2 for x in total)

    def rho_pairing(self, J: Iterable[int], beta: RootVec):
        """Pairing of rho - rho_J with the coroot of ``beta``.

        ``beta`` must be a positive root outside the parabolic subsystem;
        these are exactly the admissible edge labels of the parabolic quantum
        Bruhat graph.
        """
        Jset = self.normalize_parabolic(J)
        if not self.is_positive_root(beta):
            raise ValueError(f"{beta} is not a positive root")
        if beta in self.parabolic_positive_roots(Jset):
            raise ValueError(f"{beta} lies in the parabolic subsystem {sorted(Jset)}")
        return self.pairing(self.rho, beta) - self.pairing(
            self.rho_parabolic(Jset), beta
        )


def _invert(a: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a small integer matrix (Gauss-Jordan over Fraction)."""
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


@lru_cache(maxsize=None)
def build_root_system(cartan: CartanType) -> RootSystem:
    """Build (and intern) the root system of the given Cartan type."""
    return RootSystem(cartan)


def root_system(name: Union[str, CartanType]) -> RootSystem:
    """Convenience factory accepting ``"A2"``-style names.

    >>> root_system("A2").highest_root
    (1, 1)
    """
    if isinstance(name, CartanType):
        return build_root_system(name)
    return build_root_system(CartanType.parse(name))
