"""Independent brute-force oracles the implementation is checked against.

Each oracle deliberately takes a different computational route than the
production code: topologies come from specialization preorders rather than
family closure, components from definitional split search, the game value
from an unabstracted history tree.
"""

from __future__ import annotations

import itertools

from topogame.games import GameSpec
from topogame.topology import FiniteSpace, full_mask


def topologies_via_preorders(n: int) -> set[tuple[int, ...]]:
    """Labeled topologies as up-set families of reflexive transitive
    relations (the finite-space/preorder correspondence)."""
    if n == 0:
        return {(0,)}
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    out: set[tuple[int, ...]] = set()
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        rel = {(i, i) for i in range(n)}
        rel |= {p for p, b in zip(pairs, bits) if b}
        if not _transitive(rel, n):
            continue
        opens = []
        for mask in range(full_mask(n) + 1):
            if _is_up_set(mask, rel, n):
                opens.append(mask)
        out.add(tuple(sorted(opens)))
    return out


def _transitive(rel: set, n: int) -> bool:
    return all(
        (i, k) in rel
        for i, j in rel
        for j2, k in rel
        if j == j2
    )


def _is_up_set(mask: int, rel: set, n: int) -> bool:
    for i in range(n):
        if mask & (1 << i):
            for j in range(n):
                if (i, j) in rel and not mask & (1 << j):
                    return False
    return True


def is_connected_subset(space: FiniteSpace, s: int) -> bool:
    """No split of s into two nonempty disjoint relatively-open parts."""
    if s == 0:
        return True
    for u in space.opens:
        for v in space.opens:
            a, b = s & u, s & v
            if a and b and not a & b and (a | b) == s:
                return False
    return True


def components_by_split_search(space: FiniteSpace) -> list[int]:
    """Maximal connected subsets, straight from the definition."""
    conn = [s for s in range(1, space.full + 1) if is_connected_subset(space, s)]
    blocks = []
    for x in range(space.n):
        bit = 1 << x
        best = max((s for s in conn if s & bit), key=lambda s: bin(s).count("1"))
        if best not in blocks:
            blocks.append(best)
    return sorted(blocks, key=lambda b: b & -b)


def clopen_atoms(space: FiniteSpace) -> list[int]:
    """Minimal nonzero elements of the clopen algebra."""
    from topogame.topology import clopen_algebra

    sets = [c for c in clopen_algebra(space).sets if c]
    atoms = [c for c in sets if not any(o and o != c and o & c == o for o in sets)]
    return sorted(atoms, key=lambda b: b & -b)


def zero_dimensional_by_definition(space: FiniteSpace) -> bool:
    """Every open set is a union of clopen sets."""
    from topogame.topology import clopen_algebra

    clopens = clopen_algebra(space).sets
    for u in space.opens:
        acc = 0
        for c in clopens:
            if c & u == c:
                acc |= c
        if acc != u:
            return False
    return True


def irredundant_covers_by_subset_test(space: FiniteSpace, kind: str) -> list[tuple[int, ...]]:
    """Irredundant covers filtered from all covers by the removability test."""
    from topogame.covers import all_covers

    covers = [c.members for c in all_covers(space, kind)]
    out = []
    for members in covers:
        if all(
            _union(m for j, m in enumerate(members) if j != i) != space.full
            for i in range(len(members))
        ):
            out.append(members)
    return sorted(out, key=lambda c: (len(c), c))


def _union(masks) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def history_tree_winner(game: GameSpec) -> str:
    """Game value with no state abstraction: plain recursion on the full
    move history, target evaluated on the selection set at the leaves."""
    menus = game.menus.menus

    def value(selections: tuple, rnd: int) -> str:
        if rnd >= game.horizon or not menus:
            return "bob" if game.bob_wins_outcome(frozenset(selections)) else "alice"
        for menu in menus:
            if all(value(selections + (b,), rnd + 1) == "alice" for b in menu):
                return "alice"
        return "bob"

    return value((), 0)
