"""The finite Weyl group: elements, lengths, actions, coset combinatorics.

An element is canonicalized by the images of the simple roots under its
action on the root lattice.  Reduced words are derived on demand by
stripping right descents, which also powers inversion and the action on
weights without any matrix inversion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable

from .errors import InternalInconsistencyError
from .rootsys import RootSystem, RootVec, WeightVec

ParabolicJ = frozenset[int]


def _is_negative(beta: RootVec) -> bool:
    return all(c <= 0 for c in beta)


@dataclass(frozen=True, eq=False)
class WeylElem:
    """A Weyl group element, keyed by its action on the simple roots."""

    rs: RootSystem = field(repr=False)
    root_images: tuple[RootVec, ...]
    length: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElem):
            return NotImplemented
        return (
            self.rs.cartan == other.rs.cartan
            and self.root_images == other.root_images
        )

    def __hash__(self) -> int:
        return hash((self.rs.cartan, self.root_images))

    def __repr__(self) -> str:
        word = self.reduced_word
        return "WeylElem(e)" if not word else f"WeylElem({'*'.join(f's{j}' for j in word)})"

    # -- actions ------------------------------------------------------------

    def act_root(self, beta: RootVec) -> RootVec:
        """Image of a root-lattice vector."""
        n = self.rs.rank
        out = [0] * n
        for j, c in enumerate(beta):
            if c:
                img = self.root_images[j]
                for i in range(n):
                    out[i] += c * img[i]
        return tuple(out)

    def act_weight(self, mu: WeightVec) -> WeightVec:
        """Image of a weight in fundamental coordinates."""
        a = self.rs.cartan_matrix
        n = self.rs.rank
        cur = tuple(mu)
        for j in reversed(self.reduced_word):
            c = cur[j - 1]
            if c:
                cur = tuple(cur[i] - c * a[i][j - 1] for i in range(n))
        return cur

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word (1-based indices), derived by descent stripping."""
        a = self.rs.cartan_matrix
        n = self.rs.rank
        imgs = list(self.root_images)
        collected: list[int] = []
        while True:
            j0 = next((k for k in range(n) if _is_negative(imgs[k])), None)
            if j0 is None:
                break
            collected.append(j0 + 1)
            old = imgs
            imgs = [
                tuple(old[k][i] - a[j0][k] * old[j0][i] for i in range(n))
                for k in range(n)
            ]
        if len(collected) != self.length:
            raise InternalInconsistencyError("descent stripping lost its way")
        return tuple(reversed(collected))

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        if self.rs is not other.rs:
            raise ValueError("cannot multiply elements of different root systems")
        images = tuple(self.act_root(img) for img in other.root_images)
        return _make(self.rs, images)

    def inverse(self) -> "WeylElem":
        w = identity(self.rs)
        for j in reversed(self.reduced_word):
            w = w * simple_reflection(self.rs, j)
        return w

    def has_right_descent(self, j: int) -> bool:
        """Whether multiplying by the j-th simple reflection drops the length."""
        return _is_negative(self.root_images[j - 1])


def _make(rs: RootSystem, images: tuple[RootVec, ...]) -> WeylElem:
    length = 0
    for b in rs.positive_roots:
        img = [0] * rs.rank
        for j, c in enumerate(b):
            if c:
                col = images[j]
                for i in range(rs.rank):
                    img[i] += c * col[i]
        if all(c <= 0 for c in img):
            length += 1
    return WeylElem(rs, images, length)


def identity(rs: RootSystem) -> WeylElem:
    images = tuple(rs.simple_root(j) for j in range(1, rs.rank + 1))
    return WeylElem(rs, images, 0)


def simple_reflection(rs: RootSystem, j: int) -> WeylElem:
    """The simple reflection attached to the j-th simple root.

    >>> from qlscrystal.rootsys import root_system
    >>> simple_reflection(root_system("A2"), 1).act_root((1, 0))
    (-1, 0)
    """
    if not 1 <= j <= rs.rank:
        raise ValueError(f"simple index {j} out of range 1..{rs.rank}")
    a = rs.cartan_matrix
    images = []
    for k in range(rs.rank):
        img = list(rs.simple_root(k + 1))
        img[j - 1] -= a[j - 1][k]
        images.append(tuple(img))
    return WeylElem(rs, tuple(images), 1)


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElem:
    """Product of simple reflections, leftmost factor first."""
    w = identity(rs)
    for j in word:
        w = w * simple_reflection(rs, j)
    return w


def reflection_of_root(rs: RootSystem, beta: RootVec) -> WeylElem:
    """The reflection in the hyperplane of a positive root."""
    if not rs.is_positive_root(beta):
        raise ValueError(f"{beta} is not a positive root of {rs.cartan}")
    a = rs.cartan_matrix
    bv = rs.coroot(beta)
    n = rs.rank
    images = []
    for k in range(n):
        c = sum(a[i][k] * bv[i] for i in range(n))  # pairing of alpha_{k+1} with coroot
        images.append(tuple(int(i == k) - c * beta[i] for i in range(n)))
    return _make(rs, tuple(images))


def min_coset_rep(w: WeylElem, J: Iterable[int]) -> WeylElem:
    """Shortest element of the coset w*W_J, by right-descent stripping."""
    Jset = sorted(w.rs.normalize_parabolic(J))
    while True:
        j = next((j for j in Jset if w.has_right_descent(j)), None)
        if j is None:
            return w
        w = w * simple_reflection(w.rs, j)


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> tuple[WeylElem, ...]:
    """All elements, sorted by (length, lexicographic canonical form)."""
    gens = [simple_reflection(rs, j) for j in range(1, rs.rank + 1)]
    seen = {identity(rs)}
    frontier = [identity(rs)]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                x = w * g
                if x not in seen:
                    seen.add(x)
                    new.append(x)
        frontier = new
    return tuple(sorted(seen, key=lambda w: (w.length, w.root_images)))


def enumerate_minimal_reps(rs: RootSystem, J: Iterable[int]) -> tuple[WeylElem, ...]:
    """Minimal coset representatives, sorted by (length, canonical form)."""
    Jset = rs.normalize_parabolic(J)
    return tuple(
        w
        for w in weyl_group(rs)
        if not any(w.has_right_descent(j) for j in Jset)
    )
