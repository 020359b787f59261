"""Cover families and the reflection / selection-basis relations.

Covers are tuples of bitmasks sorted ascending; a cover family is compared
elementwise as frozensets of masks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapExceeded, EmptySpace
from .topology import FiniteSpace, clopen_algebra, quasi_components

DEFAULT_CAP = 10**6

Menu = tuple[int, ...]  # nonempty family of point sets, sorted ascending


@dataclass(frozen=True)
class Cover:
    """A deduplicated open (or clopen) cover, as a sorted tuple of masks."""

    members: tuple[int, ...]
    kind: str  # "open" | "clopen"


@dataclass(frozen=True)
class MenuFamily:
    """Alice's legal moves: each round she picks any one menu of the family."""

    menus: tuple[Menu, ...]
    label: str  # "O" | "C_O" | "P_X" | "C_X" | "Q_X" | "custom"


def _kind_sets(space: FiniteSpace, kind: str) -> list[int]:
    if kind == "open":
        pool = space.opens
    elif kind == "clopen":
        pool = clopen_algebra(space).sets
    else:
        raise ValueError(f"unknown cover kind {kind!r}")
    return [m for m in pool if m != 0]


def _is_cover(members: Sequence[int], full: int) -> bool:
    acc = 0
    for m in members:
        acc |= m
    return acc == full


def _is_irredundant(members: Sequence[int]) -> bool:
    # every member owns a point no other member covers
    for i, m in enumerate(members):
        rest = 0
        for j, other in enumerate(members):
            if j != i:
                rest |= other
        if not m & ~rest:
            return False
    return True


@lru_cache(maxsize=None)
def _reduced_covers_cached(space: FiniteSpace, kind: str, cap: int) -> tuple[Cover, ...]:
    pool = sorted(_kind_sets(space, kind))
    full = space.full
    found: list[tuple[int, ...]] = []
    if space.n == 0:
        return (Cover(members=(), kind=kind),)
    # an irredundant cover has at most n members (each owns a private point)
    for r in range(1, space.n + 1):
        for combo in itertools.combinations(pool, r):
            if _is_cover(combo, full) and _is_irredundant(combo):
                found.append(combo)
                if len(found) > cap:
                    raise CapExceeded(f"more than {cap} irredundant covers")
    found.sort(key=lambda c: (len(c), c))
    return tuple(Cover(members=c, kind=kind) for c in found)


def reduced_covers(space: FiniteSpace, kind: str, cap: int = DEFAULT_CAP) -> list[Cover]:
    """All irredundant covers of the given kind, deterministically ordered."""
    return list(_reduced_covers_cached(space, kind, cap))


def all_covers(space: FiniteSpace, kind: str, cap: int = DEFAULT_CAP) -> list[Cover]:
    """All deduplicated covers of the given kind (exponential; keep n small)."""
    pool = sorted(_kind_sets(space, kind))
    full = space.full
    if space.n == 0:
        return [Cover(members=(), kind=kind)]
    found = []
    for r in range(1, len(pool) + 1):
        for combo in itertools.combinations(pool, r):
            if _is_cover(combo, full):
                found.append(combo)
                if len(found) > cap:
                    raise CapExceeded(f"more than {cap} covers")
    found.sort(key=lambda c: (len(c), c))
    return [Cover(members=c, kind=kind) for c in found]


def cover_menu_family(space: FiniteSpace, kind: str, cap: int = DEFAULT_CAP) -> MenuFamily:
    """Irredundant covers packaged as menus; the empty-space cover is dropped
    (Alice then has no move and the game ends immediately)."""
    label = "O" if kind == "open" else "C_O"
    menus = tuple(c.members for c in reduced_covers(space, kind, cap) if c.members)
    return MenuFamily(menus=menus, label=label)


def point_base_family(space: FiniteSpace, kind: str) -> MenuFamily:
    """One menu per point: all nonempty opens (or clopens) containing it."""
    if space.n == 0:
        raise EmptySpace("no point bases on the empty space")
    pool = sorted(_kind_sets(space, kind))
    menus = []
    for x in range(space.n):
        bit = 1 << x
        menus.append(tuple(m for m in pool if m & bit))
    label = "P_X" if kind == "open" else "C_X"
    return MenuFamily(menus=tuple(menus), label=label)


def quasi_component_family(space: FiniteSpace) -> MenuFamily:
    """One menu per quasi-component block: all clopen supersets of it."""
    if space.n == 0:
        raise EmptySpace("no quasi-components on the empty space")
    clopens = sorted(m for m in clopen_algebra(space).sets if m != 0)
    blocks = quasi_components(space).blocks
    menus = tuple(tuple(c for c in clopens if c & block == block) for block in blocks)
    return MenuFamily(menus=menus, label="Q_X")


def choice_ranges(family: MenuFamily, cap: int = DEFAULT_CAP) -> set[frozenset[int]]:
    """Ranges of all choice functions: one selected member per menu."""
    size = 1
    for menu in family.menus:
        size *= len(menu)
        if size > cap:
            raise CapExceeded(f"more than {cap} choice functions")
    ranges = set()
    for pick in itertools.product(*family.menus):
        ranges.add(frozenset(pick))
    return ranges


def _as_sets(family: Iterable) -> set[frozenset[int]]:
    out = set()
    for cover in family:
        members = cover.members if isinstance(cover, Cover) else cover
        out.add(frozenset(members))
    return out


def is_selection_basis(candidate: Iterable, target: Iterable) -> bool:
    """Coinitial-under-subset check: candidate within target, and every
    target cover has a subset-cover in candidate."""
    cand = _as_sets(candidate)
    targ = _as_sets(target)
    if not cand <= targ:
        return False
    return all(any(x <= y for x in cand) for y in targ)


def is_reflection(family: MenuFamily, target: Iterable, cap: int = DEFAULT_CAP) -> bool:
    """True iff the choice-function ranges of the family form a selection
    basis for the target cover family."""
    ranges = choice_ranges(family, cap)
    return is_selection_basis(ranges, target)
