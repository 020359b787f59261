"""Finite topological spaces over points {0..n-1}, stored as bitmask families.

A point set is an int whose bit i is set iff point i belongs to the set.
A space is the full family of its open sets; everything else (clopen
algebra, components, quasi-components, zero-dimensionality) is derived.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    CapExceeded,
    EmptySpace,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    PointOutOfRange,
)

ENUMERATION_CAP = 4  # labeled-topology counts explode past n=4


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(points: Iterable[int], n: int) -> int:
    m = 0
    for p in points:
        if not 0 <= p < n:
            raise PointOutOfRange(f"point {p} outside 0..{n - 1}")
        m |= 1 << p
    return m


def points_of(mask: int) -> list[int]:
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return out


@dataclass(frozen=True)
class FiniteSpace:
    """A topology on {0..n-1}: the family of all open sets, as bitmasks."""

    n: int
    opens: tuple[int, ...]

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set()

    def is_clopen(self, mask: int) -> bool:
        opens = self._open_set()
        return mask in opens and (self.full & ~mask) in opens

    def _open_set(self) -> frozenset[int]:
        return _open_lookup(self)


@lru_cache(maxsize=None)
def _open_lookup(space: FiniteSpace) -> frozenset[int]:
    return frozenset(space.opens)


@dataclass(frozen=True)
class ClopenAlgebra:
    """The Boolean algebra of clopen sets of a space."""

    n: int
    sets: tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """Pairwise-disjoint nonempty blocks covering {0..n-1}."""

    n: int
    blocks: tuple[int, ...]

    def block_of(self, x: int) -> int:
        bit = 1 << x
        for b in self.blocks:
            if b & bit:
                return b
        raise PointOutOfRange(f"point {x} not in any block")

    def index_of(self, x: int) -> int:
        bit = 1 << x
        for i, b in enumerate(self.blocks):
            if b & bit:
                return i
        raise PointOutOfRange(f"point {x} not in any block")


def validate_topology(candidate: Iterable[int], n: int) -> FiniteSpace:
    """Check the topology axioms and return the space; reject, never repair."""
    members = sorted(set(candidate))
    full = full_mask(n)
    for m in members:
        if m & ~full:
            raise PointOutOfRange(f"member {m:#x} has bits outside 0..{n - 1}")
    have = set(members)
    if 0 not in have or full not in have:
        raise MissingEmptyOrFull("topology must contain the empty set and the full set")
    for a, b in itertools.combinations(members, 2):
        if a | b not in have:
            raise NotClosedUnderUnion(a, b)
        if a & b not in have:
            raise NotClosedUnderIntersection(a, b)
    return FiniteSpace(n=n, opens=tuple(members))


def minimal_open_nbhd(space: FiniteSpace, x: int) -> int:
    """Intersection of all open sets containing x (itself open at finite size)."""
    if not 0 <= x < space.n:
        raise PointOutOfRange(f"point {x} outside 0..{space.n - 1}")
    return _minimal_nbhds(space)[x]


@lru_cache(maxsize=None)
def _minimal_nbhds(space: FiniteSpace) -> tuple[int, ...]:
    out = []
    for x in range(space.n):
        bit = 1 << x
        acc = space.full
        for u in space.opens:
            if u & bit:
                acc &= u
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def clopen_algebra(space: FiniteSpace) -> ClopenAlgebra:
    """All open sets whose complement is also open."""
    sets = tuple(u for u in space.opens if space.is_open(space.full & ~u))
    return ClopenAlgebra(n=space.n, sets=sets)


@lru_cache(maxsize=None)
def quasi_components(space: FiniteSpace) -> Partition:
    """Blocks Q[x] = intersection of all clopen sets containing x.

    Computed as classes of "every clopen set contains both x and y or
    neither", which are exactly the atoms of the clopen algebra.
    """
    if space.n == 0:
        raise EmptySpace("no quasi-components on the empty space")
    clopens = clopen_algebra(space).sets
    # signature of x = which clopens contain it; equal signature <=> same block
    sigs: dict[tuple[bool, ...], int] = {}
    for x in range(space.n):
        sig = tuple(bool(c & (1 << x)) for c in clopens)
        sigs[sig] = sigs.get(sig, 0) | (1 << x)
    blocks = sorted(sigs.values(), key=lambda b: (b & -b))
    return Partition(n=space.n, blocks=tuple(blocks))


@lru_cache(maxsize=None)
def components(space: FiniteSpace) -> Partition:
    """Maximal connected subsets.

    In a finite space x and y land in one component iff they are linked by
    a chain of minimal-neighborhood overlaps, so a union-find over the
    relation "y lies in the minimal open neighborhood of x" suffices.
    """
    if space.n == 0:
        raise EmptySpace("no components on the empty space")
    parent = list(range(space.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    nbhds = _minimal_nbhds(space)
    for x in range(space.n):
        for y in points_of(nbhds[x]):
            union(x, y)
    groups: dict[int, int] = {}
    for x in range(space.n):
        r = find(x)
        groups[r] = groups.get(r, 0) | (1 << x)
    blocks = sorted(groups.values(), key=lambda b: (b & -b))
    return Partition(n=space.n, blocks=tuple(blocks))


def is_connected(space: FiniteSpace) -> bool:
    return space.n >= 1 and len(components(space).blocks) == 1


@lru_cache(maxsize=None)
def is_zero_dimensional(space: FiniteSpace) -> bool:
    """True iff the clopen sets form a base.

    Finite shortcut: it is enough that every minimal open neighborhood is
    clopen, since any open set is the union of the minimal neighborhoods
    of its points.
    """
    return all(space.is_clopen(u) for u in _minimal_nbhds(space))


def enumerate_topologies(n: int, mode: str = "labeled") -> Iterator[FiniteSpace]:
    """Yield every labeled topology on {0..n-1}, deterministically ordered.

    Order is lexicographic on the sorted bitmask family. Capped at n=4
    (355 topologies); beyond that the count explodes.
    """
    if mode != "labeled":
        raise ValueError(f"unsupported enumeration mode {mode!r}")
    if not 0 <= n <= ENUMERATION_CAP:
        raise CapExceeded(f"topology enumeration capped at n={ENUMERATION_CAP}, got {n}")
    full = full_mask(n)
    if n == 0:
        yield FiniteSpace(n=0, opens=(0,))
        return
    middles = [m for m in range(1, full)]
    found: list[tuple[int, ...]] = []
    for r in range(len(middles) + 1):
        for combo in itertools.combinations(middles, r):
            fam = set(combo)
            fam.add(0)
            fam.add(full)
            if _is_closed(fam):
                found.append(tuple(sorted(fam)))
    for fam in sorted(found):
        yield FiniteSpace(n=n, opens=fam)


def _is_closed(family: set[int]) -> bool:
    members = sorted(family)
    for a, b in itertools.combinations(members, 2):
        if a | b not in family or a & b not in family:
            return False
    return True


def discrete_space(n: int) -> FiniteSpace:
    """All subsets open."""
    return FiniteSpace(n=n, opens=tuple(range(full_mask(n) + 1)))


def sierpinski_space() -> FiniteSpace:
    return FiniteSpace(n=2, opens=(0, 1, 3))
