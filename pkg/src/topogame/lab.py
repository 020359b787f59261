"""Strategy translations between the point-clopen and quasi-component-clopen
games, the quasi-component Markov strategy for the clopen cover game, the
indexed-tree extraction from a winning Alice strategy, and the empirical
theorem checks run over the enumerated corpus."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DepthCapExceeded, EmptySpace, IllegalMove, IllegalSourceStrategy
from .games import (
    ALICE,
    BOB,
    FULL,
    MARKOV,
    GameSpec,
    Strategy,
    Transcript,
    alice_pre_wins,
    bob_markov_wins,
    make_mildly_rothberger,
    make_point_clopen,
    make_point_open,
    make_quasi_component_clopen,
    make_rothberger,
    saturating_horizon,
    solve,
    verify_winning,
)
from .topology import (
    FiniteSpace,
    is_zero_dimensional,
    points_of,
    quasi_components,
)

DIRECTIONS = ("alice-pc-to-qc", "alice-qc-to-pc", "bob-pc-to-qc", "bob-qc-to-pc")

EXTRACTION_NODE_CAP = 10**6


@dataclass(frozen=True)
class TranslationReport:
    direction: str
    input: Strategy
    output: Strategy
    input_winning: bool
    output_winning: bool
    preserved: bool


@dataclass(frozen=True)
class ExtractionResult:
    tree: dict  # index sequence -> quasi-component mask
    covers: bool
    counterexample: Optional[tuple[int, Transcript]]


# ---------------------------------------------------------------------------
# strategy translations between PC and QC


def _check_source_entries(s: Strategy, game: GameSpec) -> None:
    menus = game.menus.menus
    for ctx, move in s.table.items():
        if s.player == ALICE:
            if not 0 <= move < len(menus):
                raise IllegalSourceStrategy(f"menu index {move} out of range at {ctx!r}")
        else:
            mi = ctx[0] if s.klass == MARKOV else ctx[-1]
            if not 0 <= mi < len(menus) or move not in menus[mi]:
                raise IllegalSourceStrategy(f"move {move:#x} not in menu {mi} at {ctx!r}")


def translate_b1(
    direction: str, s: Strategy, space: FiniteSpace, horizon: int
) -> TranslationReport:
    """Carry a full-history winning strategy between the point-clopen and
    quasi-component-clopen games.

    Alice's point strategies map through Q[.] (a clopen neighborhood of a
    point is exactly a clopen superset of its quasi-component); Bob's
    strategies map through least-index representatives of the blocks.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    if s.klass != FULL:
        raise IllegalSourceStrategy("translations require full-history strategies")
    pc = make_point_clopen(space, horizon)
    qc = make_quasi_component_clopen(space, horizon)
    blocks = quasi_components(space).blocks
    part = quasi_components(space)

    src_game, tgt_game = {
        "alice-pc-to-qc": (pc, qc),
        "alice-qc-to-pc": (qc, pc),
        "bob-pc-to-qc": (pc, qc),
        "bob-qc-to-pc": (qc, pc),
    }[direction]
    _check_source_entries(s, src_game)

    table: dict = {}
    if direction.startswith("alice"):
        if s.player != ALICE:
            raise IllegalSourceStrategy("direction names Alice but strategy is Bob's")

        def out_move(src_move: int) -> int:
            if direction == "alice-pc-to-qc":
                return part.index_of(src_move)  # point -> its block index
            return points_of(blocks[src_move])[0]  # block -> least representative

        def walk(ctx: tuple, rnd: int) -> None:
            if rnd >= horizon:
                return
            src_move = s.move_for(ctx)
            move = out_move(src_move)
            table[ctx] = move
            for b in tgt_game.menus.menus[move]:
                walk(ctx + (b,), rnd + 1)

        walk((), 0)
        out = Strategy(player=ALICE, klass=FULL, table=table)
    else:
        if s.player != BOB:
            raise IllegalSourceStrategy("direction names Bob but strategy is Alice's")

        def map_ctx(ctx: tuple) -> tuple:
            if direction == "bob-pc-to-qc":
                # blocks played in QC -> their least-point representatives in PC
                return tuple(points_of(blocks[mi])[0] for mi in ctx)
            # points played in PC -> their block indices in QC
            return tuple(part.index_of(x) for x in ctx)

        def walk(ctx: tuple, rnd: int) -> None:
            if rnd >= horizon:
                return
            for mi in range(len(tgt_game.menus.menus)):
                new = ctx + (mi,)
                table[new] = s.move_for(map_ctx(new))
                walk(new, rnd + 1)

        walk((), 0)
        out = Strategy(player=BOB, klass=FULL, table=table)

    input_winning = verify_winning(src_game, s)
    output_winning = verify_winning(tgt_game, out)
    return TranslationReport(
        direction=direction,
        input=s,
        output=out,
        input_winning=input_winning,
        output_winning=output_winning,
        preserved=output_winning if input_winning else True,
    )


# ---------------------------------------------------------------------------
# the quasi-component Markov strategy for the clopen cover game


def b3_markov_strategy(space: FiniteSpace, horizon: Optional[int] = None) -> Strategy:
    """Bob's Markov strategy for the clopen-cover selection game: in round i
    take the first member of Alice's cover meeting the i-th quasi-component
    block. A clopen set meeting a block contains it, so the selections
    swallow one block per round and cover within #blocks rounds."""
    if space.n == 0:
        raise EmptySpace("no quasi-components on the empty space")
    blocks = quasi_components(space).blocks
    k = horizon if horizon is not None else len(blocks)
    game = make_mildly_rothberger(space, k)
    table: dict = {}
    for rnd in range(k):
        block = blocks[min(rnd, len(blocks) - 1)]
        for mi, menu in enumerate(game.menus.menus):
            pick = next(b for b in menu if b & block)
            table[(mi, rnd)] = pick
    return Strategy(player=BOB, klass=MARKOV, table=table)


# ---------------------------------------------------------------------------
# indexed-tree extraction from a winning Alice QC strategy


def extract_qs_tree(
    space: FiniteSpace,
    phi: Strategy,
    clopen_seqs: dict[int, list[int]],
    depth: int,
    node_cap: int = EXTRACTION_NODE_CAP,
) -> ExtractionResult:
    """Unfold an Alice strategy for the quasi-component-clopen game into
    the indexed family of blocks it can name when Bob answers only from
    the given clopen sequences.

    clopen_seqs maps each block index to clopen supersets of the block
    whose intersection equals it (the singleton [block] always qualifies).
    If the unfolded blocks fail to cover, the uncovered point yields a
    legal play following phi that Alice loses.
    """
    blocks = quasi_components(space).blocks
    for bi, seq in clopen_seqs.items():
        block = blocks[bi]
        acc = space.full
        for v in seq:
            if not space.is_clopen(v) or v & block != block:
                raise ValueError(f"sequence entry {v:#x} is not a clopen superset of block {bi}")
            acc &= v
        if acc != block:
            raise ValueError(f"sequence for block {bi} does not intersect down to the block")

    tree: dict[tuple, int] = {}
    count = 0
    frontier: list[tuple[tuple, tuple]] = [((), ())]  # (index sequence, bob moves)
    while frontier:
        nxt = []
        for s, ctx in frontier:
            bi = phi.table.get(ctx)
            if bi is None:
                # a strategy built for horizon d labels nodes only up to
                # depth d-1; the final layer may fall outside its domain
                if len(s) == depth:
                    continue
                raise IllegalMove(ctx)
            tree[s] = blocks[bi]
            count += 1
            if count > node_cap:
                raise DepthCapExceeded(f"extraction node cap {node_cap} exceeded")
            if len(s) < depth:
                for k, v in enumerate(clopen_seqs[bi]):
                    nxt.append((s + (k,), ctx + (v,)))
        frontier = nxt

    union = 0
    for b in tree.values():
        union |= b
    if union == space.full:
        return ExtractionResult(tree=tree, covers=True, counterexample=None)

    y = points_of(space.full & ~union)[0]
    ybit = 1 << y
    rounds = []
    ctx: tuple = ()
    for _ in range(depth):
        bi = phi.move_for(ctx)
        k, v = next((k, v) for k, v in enumerate(clopen_seqs[bi]) if not v & ybit)
        rounds.append((bi, v))
        ctx = ctx + (v,)
    transcript = Transcript(rounds=tuple(rounds), outcome=BOB)
    return ExtractionResult(tree=tree, covers=False, counterexample=(y, transcript))


# ---------------------------------------------------------------------------
# corpus checks


def check_duality(space: FiniteSpace) -> dict:
    """Mechanized dual-game check at the saturating horizon: the clopen
    cover game against the point-clopen game, in both the full-strategy
    and the predetermined/Markov forms."""
    k = saturating_horizon(space)
    g1 = make_mildly_rothberger(space, k)
    g2 = make_point_clopen(space, k) if space.n else None
    alice_g1 = solve(g1, want_witness=False).winner == ALICE
    bob_g1 = not alice_g1
    if g2 is None:
        # empty space: the cover game is won by Bob vacuously and there is
        # no point game; report the cover-side facts only
        facts = {"alice_g1": alice_g1, "bob_g1": bob_g1}
        return {"check": "duality", "horizon": k, "facts": facts, "pass": bob_g1}
    alice_g2 = solve(g2, want_witness=False).winner == ALICE
    bob_g2 = not alice_g2
    facts = {
        "alice_g1": alice_g1,
        "bob_g1": bob_g1,
        "alice_g2": alice_g2,
        "bob_g2": bob_g2,
        "alice_pre_g1": alice_pre_wins(g1),
        "bob_mark_g2": bob_markov_wins(g2),
        "alice_pre_g2": alice_pre_wins(g2),
        "bob_mark_g1": bob_markov_wins(g1),
    }
    strategic = (facts["alice_g1"] == facts["bob_g2"]) and (facts["bob_g1"] == facts["alice_g2"])
    markov = (facts["alice_pre_g1"] == facts["bob_mark_g2"]) and (
        facts["alice_pre_g2"] == facts["bob_mark_g1"]
    )
    facts["strategic_dual"] = strategic
    facts["markov_dual"] = markov
    return {"check": "duality", "horizon": k, "facts": facts, "pass": strategic and markov}


def check_zero_dim_equivalence(space: FiniteSpace) -> dict:
    """Winner equality of the open and clopen game variants, asserted only
    on zero-dimensional spaces; elsewhere winners are recorded as data."""
    kstar = saturating_horizon(space)
    zd = is_zero_dimensional(space)
    per_horizon = []
    diverged = False
    for k in range(kstar + 1):
        row = {"horizon": k}
        row["rothberger"] = solve(make_rothberger(space, k), want_witness=False).winner
        row["mildly_rothberger"] = solve(
            make_mildly_rothberger(space, k), want_witness=False
        ).winner
        if space.n:
            row["point_open"] = solve(make_point_open(space, k), want_witness=False).winner
            row["point_clopen"] = solve(make_point_clopen(space, k), want_witness=False).winner
        else:
            row["point_open"] = row["point_clopen"] = None
        if row["rothberger"] != row["mildly_rothberger"]:
            diverged = True
        if row["point_open"] != row["point_clopen"]:
            diverged = True
        per_horizon.append(row)
    pre_open = alice_pre_wins(make_rothberger(space, kstar))
    pre_clopen = alice_pre_wins(make_mildly_rothberger(space, kstar))
    facts = {
        "zero_dimensional": zd,
        "per_horizon": per_horizon,
        "alice_pre_open": pre_open,
        "alice_pre_clopen": pre_clopen,
        "diverged": diverged,
    }
    ok = True
    if zd:
        ok = not diverged and pre_open == pre_clopen
    return {"check": "zerodim", "horizon": kstar, "facts": facts, "pass": ok}


def check_th314(space: FiniteSpace) -> dict:
    """Selection principle iff Alice has no full winning strategy, for the
    clopen cover game at the saturating horizon; sub-saturating horizons
    are recorded as data."""
    kstar = saturating_horizon(space)
    game = make_mildly_rothberger(space, kstar)
    s1 = not alice_pre_wins(game)
    no_full = solve(game, want_witness=False).winner != ALICE
    data = []
    for k in range(kstar):
        g = make_mildly_rothberger(space, k)
        data.append(
            {
                "horizon": k,
                "s1": not alice_pre_wins(g),
                "alice_no_full_win": solve(g, want_witness=False).winner != ALICE,
            }
        )
    facts = {"s1": s1, "alice_no_full_win": no_full, "sub_saturating": data}
    return {"check": "th314", "horizon": kstar, "facts": facts, "pass": s1 == no_full}


def check_min_horizon_law(space: FiniteSpace, cap: Optional[int] = None) -> dict:
    """Bob first wins the clopen cover game, and Alice first wins both
    point-style clopen games, exactly at the number of quasi-components."""
    from .games import min_win_horizon

    if space.n == 0:
        return {"check": "minhorizon", "horizon": 0, "facts": {"empty": True}, "pass": True}
    nblocks = len(quasi_components(space).blocks)
    k_cap = cap if cap is not None else space.n
    mr = min_win_horizon(lambda k: make_mildly_rothberger(space, k), BOB, k_cap)
    pc = min_win_horizon(lambda k: make_point_clopen(space, k), ALICE, k_cap)
    qc = min_win_horizon(lambda k: make_quasi_component_clopen(space, k), ALICE, k_cap)
    facts = {"quasi_components": nblocks, "mildly_rothberger_bob": mr, "point_clopen_alice": pc, "qc_alice": qc}
    ok = mr == pc == qc == nblocks
    return {"check": "minhorizon", "horizon": k_cap, "facts": facts, "pass": ok}


def check_pc_qc_equivalence(space: FiniteSpace) -> dict:
    """Identical winners of the point-clopen and quasi-component-clopen
    games at every horizon, in all three strategy classes."""
    rows = []
    ok = True
    for k in range(saturating_horizon(space) + 1):
        pc = make_point_clopen(space, k)
        qc = make_quasi_component_clopen(space, k)
        row = {
            "horizon": k,
            "pc_winner": solve(pc, want_witness=False).winner,
            "qc_winner": solve(qc, want_witness=False).winner,
            "pc_bob_mark": bob_markov_wins(pc),
            "qc_bob_mark": bob_markov_wins(qc),
            "pc_alice_pre": alice_pre_wins(pc),
            "qc_alice_pre": alice_pre_wins(qc),
        }
        row_ok = (
            row["pc_winner"] == row["qc_winner"]
            and row["pc_bob_mark"] == row["qc_bob_mark"]
            and row["pc_alice_pre"] == row["qc_alice_pre"]
        )
        ok = ok and row_ok
        rows.append(row)
    return {
        "check": "pc-qc",
        "horizon": saturating_horizon(space),
        "facts": {"per_horizon": rows},
        "pass": ok,
    }


def check_b1_translations(space: FiniteSpace) -> dict:
    """Translate every solver-found winning strategy on the point/block
    clopen games and verify the result wins the other game."""
    results = []
    ok = True
    for k in range(saturating_horizon(space) + 1):
        for name, make, directions in (
            ("pc", make_point_clopen, {"alice": "alice-pc-to-qc", "bob": "bob-pc-to-qc"}),
            ("qc", make_quasi_component_clopen, {"alice": "alice-qc-to-pc", "bob": "bob-qc-to-pc"}),
        ):
            game = make(space, k)
            verdict = solve(game)
            if verdict.witness is None:
                continue
            direction = directions[verdict.winner]
            report = translate_b1(direction, verdict.witness, space, k)
            results.append(
                {
                    "game": name,
                    "horizon": k,
                    "direction": direction,
                    "input_winning": report.input_winning,
                    "preserved": report.preserved,
                }
            )
            ok = ok and report.input_winning and report.preserved
    return {
        "check": "b1",
        "horizon": saturating_horizon(space),
        "facts": {"translations": results},
        "pass": ok,
    }


def check_b3(space: FiniteSpace) -> dict:
    """The quasi-component Markov strategy wins the clopen cover game at
    horizon = number of quasi-components."""
    nblocks = len(quasi_components(space).blocks)
    s = b3_markov_strategy(space)
    game = make_mildly_rothberger(space, nblocks)
    won = verify_winning(game, s)
    facts = {"blocks": nblocks, "markov_class": s.klass == MARKOV, "winning": won}
    return {"check": "b3", "horizon": nblocks, "facts": facts, "pass": won and s.klass == MARKOV}


def check_extraction(space: FiniteSpace) -> dict:
    """Unfold the solver's winning Alice strategy for the block game with
    singleton clopen sequences; also exercise the failure branch with the
    planted strategy that repeats the first block."""
    blocks = quasi_components(space).blocks
    nblocks = len(blocks)
    kstar = max(saturating_horizon(space), nblocks)
    game = make_quasi_component_clopen(space, kstar)
    verdict = solve(game)
    facts: dict = {"blocks": nblocks}
    ok = True
    seqs = {bi: [blocks[bi]] for bi in range(nblocks)}
    if verdict.winner == ALICE and verdict.witness is not None:
        result = extract_qs_tree(space, verdict.witness, seqs, nblocks)
        facts["covers"] = result.covers
        ok = ok and result.covers
    if nblocks >= 2:
        planted = _constant_block_strategy(space, kstar)
        result = extract_qs_tree(space, planted, seqs, nblocks)
        facts["planted_covers"] = result.covers
        ok = ok and not result.covers and result.counterexample is not None
        if result.counterexample is not None:
            y, transcript = result.counterexample
            replay_ok = _replay_is_losing(game, planted, transcript, y)
            facts["planted_counterexample_valid"] = replay_ok
            ok = ok and replay_ok
    return {"check": "extraction", "horizon": kstar, "facts": facts, "pass": ok}


def _constant_block_strategy(space: FiniteSpace, horizon: int) -> Strategy:
    """Alice strategy that always names block 0; loses whenever there are
    two or more quasi-components."""
    game = make_quasi_component_clopen(space, horizon)
    table: dict = {}

    def walk(ctx: tuple, rnd: int) -> None:
        if rnd >= horizon:
            return
        table[ctx] = 0
        for b in game.menus.menus[0]:
            walk(ctx + (b,), rnd + 1)

    walk((), 0)
    return Strategy(player=ALICE, klass=FULL, table=table)


def _replay_is_losing(game: GameSpec, phi: Strategy, transcript: Transcript, y: int) -> bool:
    """The counterexample transcript must follow phi, stay legal, and miss y."""
    ctx: tuple = ()
    union = 0
    for mi, v in transcript.rounds:
        if phi.move_for(ctx) != mi:
            return False
        if v not in game.menus.menus[mi]:
            return False
        union |= v
        ctx = ctx + (v,)
    return not union & (1 << y) and transcript.outcome == BOB
