"""Bounded-horizon selection games and their exact solvers.

A game round: Alice picks one menu from the menu family (her move is the
menu's index), Bob picks one member of that menu (his move is the member's
bitmask). After `horizon` rounds Bob's selections are tested against the
target; with `negated` set, Bob wins exactly when the selections fail it.

The main solver does backward induction on the abstract state
(covered-mask, round) for cover targets, or (selection-set, round) for
explicit-family targets. Restricted strategy classes (predetermined Alice,
Markov Bob) are decided by a knowledge-set search: the restricted player
pre-commits, so the opponent's reachable states are tracked as a set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .covers import (
    MenuFamily,
    cover_menu_family,
    point_base_family,
    quasi_component_family,
)
from .errors import CapExceeded, EmptySpace, IllegalMove
from .topology import FiniteSpace, quasi_components

ALICE = "alice"
BOB = "bob"

FULL = "full"
MARKOV = "markov"
PRE = "pre"

STATE_CAP = 10**7
WITNESS_CAP = 200_000  # max history-keyed table entries before witness is skipped

COVER_TARGET = "cover"
FAMILY_TARGET = "family"


@dataclass(frozen=True)
class TargetPredicate:
    """Bob's goal: either "the selections cover the space" or membership of
    the selection set in an explicit family."""

    form: str  # COVER_TARGET | FAMILY_TARGET
    family: frozenset[frozenset[int]] = frozenset()

    def satisfied(self, space: FiniteSpace, selections: frozenset[int]) -> bool:
        if self.form == COVER_TARGET:
            acc = 0
            for s in selections:
                acc |= s
            return acc == space.full
        return selections in self.family


@dataclass(frozen=True)
class GameSpec:
    space: FiniteSpace
    menus: MenuFamily
    target: TargetPredicate
    negated: bool
    horizon: int

    def __post_init__(self):
        if self.horizon < 0:
            raise ValueError("horizon must be >= 0")
        if any(not menu for menu in self.menus.menus):
            raise ValueError("every menu must be nonempty")

    def bob_wins_outcome(self, selections: frozenset[int]) -> bool:
        return self.target.satisfied(self.space, selections) != self.negated


@dataclass(frozen=True)
class Strategy:
    """A finite decision table.

    Context keys by class:
      Alice full:  tuple of Bob's prior moves (masks)
      Alice pre:   round number
      Bob full:    tuple of Alice's moves up to and including this round
      Bob markov:  (Alice's current move, round number)
    Moves: Alice -> menu index, Bob -> member mask.
    """

    player: str
    klass: str
    table: dict = field(hash=False)

    def move_for(self, context):
        try:
            return self.table[context]
        except KeyError:
            raise IllegalMove(context) from None


@dataclass(frozen=True)
class Verdict:
    winner: str
    witness: Optional[Strategy]
    horizon: int
    stats: int  # explored abstract states


@dataclass(frozen=True)
class Transcript:
    rounds: tuple[tuple[int, int], ...]  # (alice menu index, bob mask)
    outcome: str


# ---------------------------------------------------------------------------
# game constructors


def make_rothberger(space: FiniteSpace, horizon: int, cap: int = 10**6) -> GameSpec:
    """Alice plays open covers, Bob selects members, Bob wins iff they cover."""
    return GameSpec(
        space=space,
        menus=cover_menu_family(space, "open", cap),
        target=TargetPredicate(COVER_TARGET),
        negated=False,
        horizon=horizon,
    )


def make_mildly_rothberger(space: FiniteSpace, horizon: int, cap: int = 10**6) -> GameSpec:
    """Clopen-cover variant of the Rothberger game."""
    return GameSpec(
        space=space,
        menus=cover_menu_family(space, "clopen", cap),
        target=TargetPredicate(COVER_TARGET),
        negated=False,
        horizon=horizon,
    )


def make_point_open(space: FiniteSpace, horizon: int) -> GameSpec:
    """Alice names points, Bob answers open neighborhoods; Alice wins iff
    the answers cover."""
    return GameSpec(
        space=space,
        menus=point_base_family(space, "open"),
        target=TargetPredicate(COVER_TARGET),
        negated=True,
        horizon=horizon,
    )


def make_point_clopen(space: FiniteSpace, horizon: int) -> GameSpec:
    """Alice names points, Bob answers clopen neighborhoods; Alice wins iff
    the answers cover."""
    return GameSpec(
        space=space,
        menus=point_base_family(space, "clopen"),
        target=TargetPredicate(COVER_TARGET),
        negated=True,
        horizon=horizon,
    )


def make_quasi_component_clopen(space: FiniteSpace, horizon: int) -> GameSpec:
    """Alice names quasi-components, Bob answers clopen supersets; Alice
    wins iff the answers cover."""
    return GameSpec(
        space=space,
        menus=quasi_component_family(space),
        target=TargetPredicate(COVER_TARGET),
        negated=True,
        horizon=horizon,
    )


GAME_BUILDERS: dict[str, Callable[[FiniteSpace, int], GameSpec]] = {
    "rothberger": make_rothberger,
    "mildly-rothberger": make_mildly_rothberger,
    "point-open": make_point_open,
    "point-clopen": make_point_clopen,
    "quasi-component-clopen": make_quasi_component_clopen,
}


def saturating_horizon(space: FiniteSpace) -> int:
    """Horizon beyond which the winner of a cover game cannot change: a
    cover of an n-point space never needs more than n sets."""
    return space.n


# ---------------------------------------------------------------------------
# abstract-state solver


def _initial_state(game: GameSpec):
    return 0 if game.target.form == COVER_TARGET else frozenset()


def _advance(game: GameSpec, state, move_mask: int):
    if game.target.form == COVER_TARGET:
        return state | move_mask
    return state | {move_mask}


def _terminal_bob_wins(game: GameSpec, state) -> bool:
    if game.target.form == COVER_TARGET:
        return (state == game.space.full) != game.negated
    return game.bob_wins_outcome(state)


class _Solver:
    def __init__(self, game: GameSpec, reverse: bool = False, state_cap: int = STATE_CAP):
        self.game = game
        self.reverse = reverse
        self.state_cap = state_cap
        self.memo: dict = {}

    def value(self, state, rnd: int) -> str:
        game = self.game
        if rnd >= game.horizon or not game.menus.menus:
            return BOB if _terminal_bob_wins(game, state) else ALICE
        if game.target.form == COVER_TARGET and state == game.space.full:
            # union can only grow; the outcome is already decided
            return ALICE if game.negated else BOB
        key = (state, rnd)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(self.memo) > self.state_cap:
            raise CapExceeded(f"solver state cap {self.state_cap} exceeded")
        menus = game.menus.menus
        order = range(len(menus) - 1, -1, -1) if self.reverse else range(len(menus))
        result = BOB
        for mi in order:
            menu = menus[mi] if not self.reverse else menus[mi]
            members = reversed(menu) if self.reverse else menu
            alice_wins_menu = True
            for b in members:
                if self.value(_advance(game, state, b), rnd + 1) == BOB:
                    alice_wins_menu = False
                    break
            if alice_wins_menu:
                result = ALICE
                break
        self.memo[key] = result
        return result


def solve(
    game: GameSpec,
    want_witness: bool = True,
    reverse: bool = False,
    state_cap: int = STATE_CAP,
) -> Verdict:
    """Exact game value under optimal play, with a witness strategy for the
    winner when the history tree is small enough to tabulate."""
    solver = _Solver(game, reverse=reverse, state_cap=state_cap)
    winner = solver.value(_initial_state(game), 0)
    witness = None
    if want_witness:
        witness = _extract_witness(game, solver, winner)
    return Verdict(winner=winner, witness=witness, horizon=game.horizon, stats=len(solver.memo))


def _extract_witness(game: GameSpec, solver: _Solver, winner: str) -> Optional[Strategy]:
    """History-keyed table for the winner; least optimal move everywhere,
    branching over every legal line of the loser. Returns None when the
    table would exceed WITNESS_CAP entries."""
    table: dict = {}
    menus = game.menus.menus
    if not menus:
        return Strategy(player=winner, klass=FULL, table={})

    def overflow() -> bool:
        return len(table) > WITNESS_CAP

    if winner == ALICE:

        def walk(state, rnd, bob_moves: tuple) -> bool:
            if rnd >= game.horizon:
                return True
            choice = None
            for mi, menu in enumerate(menus):
                if all(solver.value(_advance(game, state, b), rnd + 1) == ALICE for b in menu):
                    choice = mi
                    break
            if choice is None:
                # decided position (e.g. already saturated); any move keeps the win
                choice = 0
            table[bob_moves] = choice
            if overflow():
                return False
            for b in menus[choice]:
                if not walk(_advance(game, state, b), rnd + 1, bob_moves + (b,)):
                    return False
            return True

        ok = walk(_initial_state(game), 0, ())
    else:

        def walk(state, rnd, alice_moves: tuple) -> bool:
            if rnd >= game.horizon:
                return True
            for mi, menu in enumerate(menus):
                choice = None
                for b in menu:
                    if solver.value(_advance(game, state, b), rnd + 1) == BOB:
                        choice = b
                        break
                if choice is None:
                    choice = menu[0]
                ctx = alice_moves + (mi,)
                table[ctx] = choice
                if overflow():
                    return False
                if not walk(_advance(game, state, choice), rnd + 1, ctx):
                    return False
            return True

        ok = walk(_initial_state(game), 0, ())
    if not ok:
        return None
    return Strategy(player=winner, klass=FULL, table=table)


# ---------------------------------------------------------------------------
# restricted strategy classes


def _reduce_states(game: GameSpec, states: frozenset, favor_bob: bool) -> frozenset:
    """Drop dominated covered-masks from a knowledge set.

    For cover targets Bob's goal is monotone in the covered mask (antitone
    when negated); only the extremes on the relevant side matter.
    """
    if game.target.form != COVER_TARGET:
        return states
    keep_max = favor_bob != game.negated
    out = []
    for s in states:
        dominated = False
        for t in states:
            if t != s and ((s | t == t) if keep_max else (t | s == s)):
                dominated = True
                break
        if not dominated:
            out.append(s)
    return frozenset(out)


def predetermined_alice_search(game: GameSpec) -> tuple[bool, Optional[list[int]]]:
    """Does Alice have a winning strategy that only looks at the round
    number? Bob plays with full information against the fixed menu list."""
    menus = game.menus.menus
    if not menus:
        winner = BOB if _terminal_bob_wins(game, _initial_state(game)) else ALICE
        return winner == ALICE, ([] if winner == ALICE else None)
    memo: dict = {}

    def wins(states: frozenset, rnd: int) -> Optional[int]:
        # returns a winning menu index for this round, or None
        if rnd >= game.horizon:
            return None
        key = (states, rnd)
        if key in memo:
            return memo[key]
        result = None
        for mi, menu in enumerate(menus):
            nxt = frozenset(_advance(game, s, b) for s in states for b in menu)
            nxt = _reduce_states(game, nxt, favor_bob=True)
            if rnd + 1 >= game.horizon:
                good = not any(_terminal_bob_wins(game, s) for s in nxt)
            else:
                good = wins(nxt, rnd + 1) is not None
            if good:
                result = mi
                break
        memo[key] = result
        return result

    start = frozenset([_initial_state(game)])
    if game.horizon == 0:
        won = not _terminal_bob_wins(game, _initial_state(game))
        return won, ([] if won else None)
    first = wins(start, 0)
    if first is None:
        return False, None
    # unroll the recorded choices into the move list
    seq = []
    states, rnd = start, 0
    while rnd < game.horizon:
        mi = wins(states, rnd)
        assert mi is not None
        seq.append(mi)
        states = _reduce_states(
            game,
            frozenset(_advance(game, s, b) for s in states for b in menus[mi]),
            favor_bob=True,
        )
        rnd += 1
    return True, seq


def markov_bob_search(game: GameSpec) -> tuple[bool, Optional[dict]]:
    """Does Bob have a winning strategy that only looks at Alice's current
    move and the round number? Alice plays with full information against
    the committed table."""
    menus = game.menus.menus
    if not menus:
        winner = BOB if _terminal_bob_wins(game, _initial_state(game)) else ALICE
        return winner == BOB, ({} if winner == BOB else None)
    memo: dict = {}

    def wins(states: frozenset, rnd: int) -> Optional[tuple[int, ...]]:
        # returns a winning per-menu choice vector for this round, or None
        if rnd >= game.horizon:
            return None
        key = (states, rnd)
        if key in memo:
            return memo[key]
        result = None
        for vector in itertools.product(*menus):
            nxt = frozenset(
                _advance(game, s, vector[mi]) for s in states for mi in range(len(menus))
            )
            nxt = _reduce_states(game, nxt, favor_bob=False)
            if rnd + 1 >= game.horizon:
                good = all(_terminal_bob_wins(game, s) for s in nxt)
            else:
                good = wins(nxt, rnd + 1) is not None
            if good:
                result = vector
                break
        memo[key] = result
        return result

    start = frozenset([_initial_state(game)])
    if game.horizon == 0:
        won = _terminal_bob_wins(game, _initial_state(game))
        return won, ({} if won else None)
    if wins(start, 0) is None:
        return False, None
    table: dict = {}
    states, rnd = start, 0
    while rnd < game.horizon:
        vector = wins(states, rnd)
        assert vector is not None
        for mi in range(len(menus)):
            table[(mi, rnd)] = vector[mi]
        states = _reduce_states(
            game,
            frozenset(_advance(game, s, vector[mi]) for s in states for mi in range(len(menus))),
            favor_bob=False,
        )
        rnd += 1
    return True, table


def solve_restricted(game: GameSpec, alice_class: str = FULL, bob_class: str = FULL) -> Verdict:
    """Decide the game with one player limited to a restricted class.

    The restricted player is the existential one: Alice pre vs full-info
    Bob, or Bob markov vs full-info Alice. At most one side may be
    restricted per call.
    """
    if alice_class == FULL and bob_class == FULL:
        return solve(game)
    if alice_class == PRE and bob_class == FULL:
        won, seq = predetermined_alice_search(game)
        witness = (
            Strategy(player=ALICE, klass=PRE, table={r: mi for r, mi in enumerate(seq)})
            if won
            else None
        )
        return Verdict(winner=ALICE if won else BOB, witness=witness, horizon=game.horizon, stats=0)
    if bob_class == MARKOV and alice_class == FULL:
        won, table = markov_bob_search(game)
        witness = Strategy(player=BOB, klass=MARKOV, table=table) if won else None
        return Verdict(winner=BOB if won else ALICE, witness=witness, horizon=game.horizon, stats=0)
    raise ValueError(f"unsupported class pair ({alice_class}, {bob_class})")


def alice_wins(game: GameSpec) -> bool:
    return solve(game, want_witness=False).winner == ALICE


def alice_pre_wins(game: GameSpec) -> bool:
    return predetermined_alice_search(game)[0]


def bob_markov_wins(game: GameSpec) -> bool:
    return markov_bob_search(game)[0]


def min_win_horizon(
    game_at: Callable[[int], GameSpec], player: str, cap: int
) -> Optional[int]:
    """Least horizon k <= cap at which the named player wins; horizon
    monotonicity of cover games keeps the win stable for larger k."""
    for k in range(cap + 1):
        game = game_at(k)
        if game.target.form != COVER_TARGET:
            raise ValueError("min_win_horizon requires a cover target")
        if solve(game, want_witness=False).winner == player:
            return k
    return None


# ---------------------------------------------------------------------------
# playout and verification


def alice_context(bob_moves: tuple) -> tuple:
    return bob_moves


def bob_context(alice_moves: tuple) -> tuple:
    return alice_moves


def _lookup_alice(s: Strategy, bob_moves: tuple, rnd: int) -> int:
    if s.klass == PRE:
        return s.move_for(rnd)
    return s.move_for(bob_moves)


def _lookup_bob(s: Strategy, alice_moves: tuple, rnd: int) -> int:
    if s.klass == MARKOV:
        return s.move_for((alice_moves[-1], rnd))
    return s.move_for(alice_moves)


def playout(game: GameSpec, alice: Strategy, bob: Strategy) -> Transcript:
    """Deterministic replay of two strategy tables."""
    menus = game.menus.menus
    rounds = []
    bob_moves: tuple = ()
    alice_moves: tuple = ()
    selections: frozenset = frozenset()
    state = _initial_state(game)
    for rnd in range(game.horizon if menus else 0):
        mi = _lookup_alice(alice, bob_moves, rnd)
        if not 0 <= mi < len(menus):
            raise IllegalMove(bob_moves, mi)
        alice_moves = alice_moves + (mi,)
        b = _lookup_bob(bob, alice_moves, rnd)
        if b not in menus[mi]:
            raise IllegalMove(alice_moves, b)
        bob_moves = bob_moves + (b,)
        state = _advance(game, state, b)
        rounds.append((mi, b))
    outcome = BOB if _terminal_bob_wins(game, state) else ALICE
    return Transcript(rounds=tuple(rounds), outcome=outcome)


def verify_winning(game: GameSpec, s: Strategy, state_cap: int = STATE_CAP) -> bool:
    """Exhaustively play s against every legal opponent line."""
    menus = game.menus.menus
    counter = [0]

    def check(state, rnd, alice_moves: tuple, bob_moves: tuple) -> bool:
        counter[0] += 1
        if counter[0] > state_cap:
            raise CapExceeded(f"verification cap {state_cap} exceeded")
        if rnd >= game.horizon or not menus:
            winner = BOB if _terminal_bob_wins(game, state) else ALICE
            return winner == s.player
        if game.target.form == COVER_TARGET and state == game.space.full:
            winner = ALICE if game.negated else BOB
            return winner == s.player
        if s.player == ALICE:
            try:
                mi = _lookup_alice(s, bob_moves, rnd)
            except IllegalMove:
                return False
            if not 0 <= mi < len(menus):
                return False
            return all(
                check(_advance(game, state, b), rnd + 1, alice_moves + (mi,), bob_moves + (b,))
                for b in menus[mi]
            )
        for mi, menu in enumerate(menus):
            ctx = alice_moves + (mi,)
            try:
                b = _lookup_bob(s, ctx, rnd)
            except IllegalMove:
                return False
            if b not in menu:
                return False
            if not check(_advance(game, state, b), rnd + 1, ctx, bob_moves + (b,)):
                return False
        return True

    return check(_initial_state(game), 0, (), ())


def optimal_move(game: GameSpec, history_bob: tuple, history_alice: tuple, rnd: int, menu_index: Optional[int] = None):
    """Best move for the player to act, given the play so far.

    With menu_index None it is Alice's turn (returns a menu index);
    otherwise Bob answers from that menu (returns a mask). Prefers a
    winning move, least in move order; falls back to the least legal move.
    """
    solver = _Solver(game)
    state = _initial_state(game)
    for b in history_bob:
        state = _advance(game, state, b)
    menus = game.menus.menus
    if menu_index is None:
        for mi, menu in enumerate(menus):
            if all(solver.value(_advance(game, state, b), rnd + 1) == ALICE for b in menu):
                return mi
        return 0
    menu = menus[menu_index]
    for b in menu:
        if solver.value(_advance(game, state, b), rnd + 1) == BOB:
            return b
    return menu[0]


def bridge_s1(game_at: Callable[[int], GameSpec], cap: int) -> tuple[bool, bool]:
    """Independent comparison of "Alice has no predetermined win at any
    horizon <= cap" with the direct finite selection-principle check."""
    no_pre = all(not alice_pre_wins(game_at(k)) for k in range(cap + 1))
    principle = all(_selection_principle(game_at(k)) for k in range(cap + 1))
    return no_pre, principle


def _selection_principle(game: GameSpec) -> bool:
    """Direct check: every length-k sequence of menus admits a selection
    satisfying Bob's goal."""
    menus = game.menus.menus
    if not menus or game.horizon == 0:
        return _terminal_bob_wins(game, _initial_state(game))
    for seq in itertools.product(range(len(menus)), repeat=game.horizon):
        ok = False
        for picks in itertools.product(*(menus[mi] for mi in seq)):
            state = _initial_state(game)
            for b in picks:
                state = _advance(game, state, b)
            if _terminal_bob_wins(game, state):
                ok = True
                break
        if not ok:
            return False
    return True
