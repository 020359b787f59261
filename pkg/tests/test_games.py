import pytest

from oracles import history_tree_winner
from topogame.covers import MenuFamily, all_covers, reduced_covers
from topogame.errors import IllegalMove
from topogame.games import (
    ALICE,
    BOB,
    FULL,
    MARKOV,
    PRE,
    COVER_TARGET,
    FAMILY_TARGET,
    GameSpec,
    Strategy,
    TargetPredicate,
    alice_pre_wins,
    bob_markov_wins,
    bridge_s1,
    make_mildly_rothberger,
    make_point_clopen,
    make_point_open,
    make_quasi_component_clopen,
    make_rothberger,
    min_win_horizon,
    playout,
    saturating_horizon,
    solve,
    solve_restricted,
    verify_winning,
)
from topogame.topology import discrete_space, validate_topology

ALL_GAMES = [
    make_rothberger,
    make_mildly_rothberger,
    make_point_open,
    make_point_clopen,
    make_quasi_component_clopen,
]


class TestConstructors:
    def test_rothberger_examples(self, sierpinski):
        assert solve(make_rothberger(sierpinski, 1)).winner == BOB
        d2 = discrete_space(2)
        assert solve(make_rothberger(d2, 1)).winner == ALICE
        assert solve(make_rothberger(d2, 2)).winner == BOB

    def test_mildly_rothberger_examples(self, sierpinski, two_block3):
        assert solve(make_mildly_rothberger(sierpinski, 1)).winner == BOB
        assert solve(make_mildly_rothberger(two_block3, 1)).winner == ALICE
        assert solve(make_mildly_rothberger(two_block3, 2)).winner == BOB

    def test_point_clopen_examples(self, sierpinski, two_block3):
        assert solve(make_point_clopen(sierpinski, 1)).winner == ALICE
        assert solve(make_point_clopen(two_block3, 1)).winner == BOB
        assert solve(make_point_clopen(two_block3, 2)).winner == ALICE

    def test_point_open_examples(self, sierpinski, two_block3):
        assert solve(make_point_open(sierpinski, 1)).winner == ALICE
        assert solve(make_point_open(two_block3, 1)).winner == BOB
        assert solve(make_point_open(two_block3, 2)).winner == ALICE

    def test_quasi_component_examples(self, sierpinski, two_block3):
        assert solve(make_quasi_component_clopen(sierpinski, 1)).winner == ALICE
        assert solve(make_quasi_component_clopen(two_block3, 1)).winner == BOB
        assert solve(make_quasi_component_clopen(two_block3, 2)).winner == ALICE
        assert solve(make_quasi_component_clopen(discrete_space(3), 3)).winner == ALICE


class TestSolveConventions:
    def test_empty_space_cover_game(self):
        empty = validate_topology([0], 0)
        assert solve(make_rothberger(empty, 0)).winner == BOB
        assert solve(make_mildly_rothberger(empty, 3)).winner == BOB

    def test_zero_horizon_nonempty(self, sierpinski):
        # empty selection covers nothing, so Bob loses the cover game and
        # wins the negated point game
        assert solve(make_mildly_rothberger(sierpinski, 0)).winner == ALICE
        assert solve(make_point_clopen(sierpinski, 0)).winner == BOB

    def test_witness_for_two_block(self, two_block3):
        v = solve(make_mildly_rothberger(two_block3, 2))
        assert v.winner == BOB
        assert v.witness is not None and v.witness.player == BOB
        assert v.stats > 0


class TestDeterminacyAndMonotonicity:
    def test_reverse_search_same_winner(self, corpus3):
        for _, sp in corpus3:
            for make in ALL_GAMES:
                for k in range(sp.n + 1):
                    game = make(sp, k)
                    assert (
                        solve(game, want_witness=False).winner
                        == solve(game, want_witness=False, reverse=True).winner
                    )

    def test_horizon_monotonicity(self, corpus3):
        for _, sp in corpus3:
            for k in range(sp.n + 1):
                if solve(make_mildly_rothberger(sp, k), want_witness=False).winner == BOB:
                    assert solve(make_mildly_rothberger(sp, k + 1), want_witness=False).winner == BOB
                if solve(make_point_clopen(sp, k), want_witness=False).winner == ALICE:
                    assert solve(make_point_clopen(sp, k + 1), want_witness=False).winner == ALICE


class TestRestrictedClasses:
    def test_bob_markov_two_block(self, two_block3):
        v = solve_restricted(make_mildly_rothberger(two_block3, 2), bob_class=MARKOV)
        assert v.winner == BOB
        assert v.witness is not None and v.witness.klass == MARKOV
        assert verify_winning(make_mildly_rothberger(two_block3, 2), v.witness)

    def test_alice_pre_discrete2(self):
        game = make_rothberger(discrete_space(2), 1)
        v = solve_restricted(game, alice_class=PRE)
        assert v.winner == ALICE
        assert v.witness is not None and v.witness.klass == PRE
        assert verify_winning(game, v.witness)

    def test_class_chain(self, corpus3):
        for _, sp in corpus3:
            for make in (make_mildly_rothberger, make_point_clopen):
                for k in range(sp.n + 1):
                    game = make(sp, k)
                    winner = solve(game, want_witness=False).winner
                    if bob_markov_wins(game):
                        assert winner == BOB
                    if alice_pre_wins(game):
                        assert winner == ALICE

    def test_both_restricted_rejected(self, two_block3):
        with pytest.raises(ValueError):
            solve_restricted(make_mildly_rothberger(two_block3, 1), alice_class=PRE, bob_class=MARKOV)


class TestMenuBasisInvariance:
    def test_all_covers_vs_irredundant(self, corpus3):
        from topogame.covers import is_selection_basis

        for _, sp in corpus3:
            if sp.n > 2:
                continue
            for kind in ("open", "clopen"):
                full_fam = MenuFamily(
                    menus=tuple(c.members for c in all_covers(sp, kind)), label="custom"
                )
                red_fam = MenuFamily(
                    menus=tuple(c.members for c in reduced_covers(sp, kind)), label="custom"
                )
                assert is_selection_basis(
                    [frozenset(m) for m in red_fam.menus],
                    [frozenset(m) for m in full_fam.menus],
                )
                for k in range(sp.n + 1):
                    g_full = GameSpec(sp, full_fam, TargetPredicate(COVER_TARGET), False, k)
                    g_red = GameSpec(sp, red_fam, TargetPredicate(COVER_TARGET), False, k)
                    assert (
                        solve(g_full, want_witness=False).winner
                        == solve(g_red, want_witness=False).winner
                    )


class TestS1Bridge:
    def test_pre_failure_equals_selection_principle(self, corpus3):
        for _, sp in corpus3:
            if sp.n > 2:
                continue
            for make in (make_rothberger, make_mildly_rothberger):
                no_pre, principle = bridge_s1(lambda k: make(sp, k), sp.n)
                assert no_pre == principle


class TestMinWinHorizon:
    def test_discrete3(self):
        d3 = discrete_space(3)
        assert min_win_horizon(lambda k: make_mildly_rothberger(d3, k), BOB, 3) == 3
        assert min_win_horizon(lambda k: make_point_clopen(d3, k), ALICE, 3) == 3

    def test_connected_space(self, sierpinski):
        assert min_win_horizon(lambda k: make_mildly_rothberger(sierpinski, k), BOB, 2) == 1

    def test_none_when_cap_too_small(self):
        d3 = discrete_space(3)
        assert min_win_horizon(lambda k: make_mildly_rothberger(d3, k), BOB, 2) is None


class TestPlayoutAndVerify:
    def test_witness_beats_fixed_alice(self, two_block3):
        game = make_mildly_rothberger(two_block3, 2)
        v = solve(game)
        # Alice always replays the two-block cover (menu 1)
        alice = Strategy(player=ALICE, klass=PRE, table={0: 1, 1: 1})
        t = playout(game, alice, v.witness)
        assert t.outcome == BOB
        assert all(b in game.menus.menus[mi] for mi, b in t.rounds)

    def test_repeat_first_member_fails(self):
        d2 = discrete_space(2)
        game = make_mildly_rothberger(d2, 2)
        table = {}
        for m0 in range(len(game.menus.menus)):
            table[(m0,)] = game.menus.menus[m0][0]
            for m1 in range(len(game.menus.menus)):
                table[(m0, m1)] = game.menus.menus[m1][0]
        bob = Strategy(player=BOB, klass=FULL, table=table)
        assert not verify_winning(game, bob)

    def test_out_of_menu_move_raises(self, two_block3):
        game = make_mildly_rothberger(two_block3, 1)
        alice = Strategy(player=ALICE, klass=PRE, table={0: 1})
        bob = Strategy(player=BOB, klass=FULL, table={(1,): 0b010})  # {1} is not in the cover
        with pytest.raises(IllegalMove):
            playout(game, alice, bob)

    def test_zero_horizon_empty_space_bob_wins(self):
        empty = validate_topology([0], 0)
        game = make_rothberger(empty, 0)
        bob = Strategy(player=BOB, klass=FULL, table={})
        assert verify_winning(game, bob)

    def test_solver_witnesses_verify(self, corpus3):
        for _, sp in corpus3:
            for make in ALL_GAMES:
                for k in range(sp.n + 1):
                    game = make(sp, k)
                    v = solve(game)
                    assert v.witness is not None
                    assert verify_winning(game, v.witness), (sp, make.__name__, k)


class TestHistoryTreeOracle:
    def test_abstract_solver_matches_history_tree(self, corpus3):
        spaces = [sp for _, sp in corpus3 if sp.n <= 2] + [validate_topology([0], 0)]
        for sp in spaces:
            for make in ALL_GAMES:
                if sp.n == 0 and make in (make_point_open, make_point_clopen, make_quasi_component_clopen):
                    continue
                for k in range(4):
                    game = make(sp, k)
                    assert solve(game, want_witness=False).winner == history_tree_winner(game)

    def test_explicit_family_target(self):
        # Bob wins iff his selection set is exactly {{0}, {1}}
        d2 = discrete_space(2)
        fam = MenuFamily(menus=((0b01, 0b10),), label="custom")
        target = TargetPredicate(FAMILY_TARGET, frozenset({frozenset({0b01, 0b10})}))
        for negated in (False, True):
            for k in range(4):
                game = GameSpec(d2, fam, target, negated, k)
                assert solve(game, want_witness=False).winner == history_tree_winner(game)


class TestSaturation:
    def test_winner_stable_beyond_saturating_horizon(self, corpus3):
        for _, sp in corpus3:
            kstar = saturating_horizon(sp)
            for make in ALL_GAMES:
                w = solve(make(sp, kstar), want_witness=False).winner
                assert solve(make(sp, kstar + 1), want_witness=False).winner == w
                assert solve(make(sp, kstar + 2), want_witness=False).winner == w
