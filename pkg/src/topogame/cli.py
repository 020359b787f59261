"""Command-line front end.

Subcommands: analyze, solve, check, play, translate. Space arguments take
either a JSON file path or an enumerator spec such as "enum:n=3" (whole
corpus, check only) or "enum:n=3:i=7" (a single enumerated space).

Exit codes: 0 success / all checks pass, 1 check failures, 2 usage or
format errors, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

from . import lab
from .errors import CapExceeded, FormatError, IllegalMove, TopologyError
from .games import (
    ALICE,
    BOB,
    GAME_BUILDERS,
    Transcript,
    _advance,
    _initial_state,
    _terminal_bob_wins,
    optimal_move,
    solve,
)
from .serialize import (
    dumps_stable,
    load_space,
    load_strategy,
    points_of,
    space_to_json,
    strategy_to_json,
    transcript_to_json,
    verdict_to_json,
)
from .topology import (
    FiniteSpace,
    clopen_algebra,
    components,
    enumerate_topologies,
    is_zero_dimensional,
    quasi_components,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_EOF = 130

SUITES = ("duality", "zerodim", "b1", "b3", "extraction", "th314", "minhorizon", "all")

_SUITE_CHECKS = {
    "duality": lab.check_duality,
    "zerodim": lab.check_zero_dim_equivalence,
    "b1": lab.check_b1_translations,
    "b3": lab.check_b3,
    "extraction": lab.check_extraction,
    "th314": lab.check_th314,
    "minhorizon": lab.check_min_horizon_law,
}


def _parse_space_source(source: str):
    """Returns a list of (space_id, space)."""
    if source.startswith("enum:"):
        parts = dict(
            kv.split("=", 1) for kv in source[len("enum:") :].split(":") if "=" in kv
        )
        try:
            n = int(parts["n"])
        except (KeyError, ValueError):
            raise FormatError(f"bad enumerator spec {source!r}") from None
        spaces = list(enumerate_topologies(n))
        if "i" in parts:
            i = int(parts["i"])
            if not 0 <= i < len(spaces):
                raise FormatError(f"index {i} out of range for n={n}")
            return [(f"n{n}#{i}", spaces[i])]
        return [(f"n{n}#{i}", sp) for i, sp in enumerate(spaces)]
    return [(source, load_space(source))]


def _single_space(source: str) -> tuple[str, FiniteSpace]:
    spaces = _parse_space_source(source)
    if len(spaces) != 1:
        raise FormatError("this command needs a single space (file or enum:n=..:i=..)")
    return spaces[0]


def cmd_analyze(args) -> int:
    _, space = _single_space(args.space)
    report = {
        "n": space.n,
        "opens": len(space.opens),
        "clopens": len(clopen_algebra(space).sets),
        "components": len(components(space).blocks) if space.n else 0,
        "quasi_components": len(quasi_components(space).blocks) if space.n else 0,
        "zero_dimensional": is_zero_dimensional(space),
        "space": space_to_json(space),
    }
    print(dumps_stable(report))
    return EXIT_OK


def cmd_solve(args) -> int:
    _, space = _single_space(args.space)
    builder = GAME_BUILDERS[args.game]
    game = builder(space, args.horizon)
    verdict = solve(game)
    print(dumps_stable(verdict_to_json(verdict)))
    return EXIT_OK


def _corpus(n_max: int) -> Iterable[tuple[str, FiniteSpace]]:
    for n in range(1, n_max + 1):
        for i, sp in enumerate(enumerate_topologies(n)):
            yield f"n{n}#{i}", sp


def cmd_check(args) -> int:
    suites = list(_SUITE_CHECKS) if args.suite == "all" else [args.suite]
    spaces = list(_corpus(args.nmax))
    workers = max(1, int(os.environ.get("TOPOGAME_THREADS", "1")))
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    all_pass = True
    try:
        for suite in suites:
            check = _SUITE_CHECKS[suite]

            def run(item):
                space_id, space = item
                report = dict(check(space))
                report["space_id"] = space_id
                return {
                    "space_id": report["space_id"],
                    "check": report["check"],
                    "horizon": report["horizon"],
                    "facts": report["facts"],
                    "pass": report["pass"],
                }

            if workers > 1:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    reports = list(pool.map(run, spaces))
            else:
                reports = [run(item) for item in spaces]
            for report in reports:
                all_pass = all_pass and report["pass"]
                out.write(dumps_stable(report) + "\n")
            if suite == "zerodim":
                witnessed = any(
                    r["facts"]["diverged"] and not r["facts"]["zero_dimensional"]
                    for r in reports
                )
                summary = {
                    "space_id": "corpus",
                    "check": "zerodim-witness",
                    "horizon": args.nmax,
                    "facts": {"divergence_witness_found": witnessed},
                    "pass": witnessed,
                }
                all_pass = all_pass and witnessed
                out.write(dumps_stable(summary) + "\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK if all_pass else EXIT_CHECK_FAILED


def cmd_translate(args) -> int:
    _, space = _single_space(args.space)
    s = load_strategy(args.strategy)
    report = lab.translate_b1(args.direction, s, space, args.horizon)
    obj = {
        "direction": report.direction,
        "input_winning": report.input_winning,
        "output_winning": report.output_winning,
        "preserved": report.preserved,
        "output": strategy_to_json(report.output),
    }
    print(dumps_stable(obj))
    return EXIT_OK


def _prompt_move(prompt: str, legal: list[int]) -> int:
    while True:
        try:
            raw = input(prompt)
        except EOFError:
            raise SystemExit(EXIT_EOF) from None
        try:
            value = int(raw.strip())
        except ValueError:
            print(f"enter one of {legal}")
            continue
        if value in legal:
            return value
        print(f"enter one of {legal}")


def cmd_play(args) -> int:
    _, space = _single_space(args.space)
    game = GAME_BUILDERS[args.game](space, args.horizon)
    menus = game.menus.menus
    human = args.role
    state = _initial_state(game)
    bob_hist: tuple = ()
    alice_hist: tuple = ()
    rounds = []
    for rnd in range(game.horizon if menus else 0):
        if human == ALICE:
            print(f"round {rnd}: menus:")
            for mi, menu in enumerate(menus):
                print(f"  [{mi}] {[points_of(m) for m in menu]}")
            mi = _prompt_move("your menu index> ", list(range(len(menus))))
        else:
            mi = optimal_move(game, bob_hist, alice_hist, rnd)
            print(f"round {rnd}: solver (alice) plays menu {mi}: "
                  f"{[points_of(m) for m in menus[mi]]}")
        alice_hist = alice_hist + (mi,)
        menu = menus[mi]
        if human == BOB:
            print(f"round {rnd}: pick a member of menu {mi}:")
            for j, m in enumerate(menu):
                print(f"  [{j}] {points_of(m)}")
            j = _prompt_move("your member index> ", list(range(len(menu))))
            b = menu[j]
        else:
            b = optimal_move(game, bob_hist, alice_hist, rnd, menu_index=mi)
            print(f"round {rnd}: solver (bob) selects {points_of(b)}")
        bob_hist = bob_hist + (b,)
        state = _advance(game, state, b)
        rounds.append((mi, b))
    outcome = BOB if _terminal_bob_wins(game, state) else ALICE
    transcript = Transcript(rounds=tuple(rounds), outcome=outcome)
    print(f"winner: {outcome}")
    if args.save:
        with open(args.save, "w", encoding="utf-8") as fh:
            fh.write(dumps_stable(transcript_to_json(transcript)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topogame")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report the clopen structure of a space")
    p.add_argument("space")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="solve a bounded-horizon game")
    p.add_argument("space")
    p.add_argument("--game", required=True, choices=sorted(GAME_BUILDERS))
    p.add_argument("--horizon", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="run a theorem-check suite over the corpus")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("translate", help="translate a strategy between the point and block games")
    p.add_argument("strategy")
    p.add_argument("--direction", required=True, choices=lab.DIRECTIONS)
    p.add_argument("--space", required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("play", help="play one side against the solver")
    p.add_argument("space")
    p.add_argument("--game", required=True, choices=sorted(GAME_BUILDERS))
    p.add_argument("--role", required=True, choices=(ALICE, BOB))
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--save", default=None, help="write the transcript JSON here")
    p.set_defaults(func=cmd_play)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "horizon") and (args.horizon < 0 or args.horizon > 64):
            parser.error("horizon must be between 0 and 64")
        return args.func(args)
    except (FormatError, TopologyError, FileNotFoundError, IllegalMove) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
