"""JSON readers and writers for the documented file formats.

Spaces:      {"n": int, "opens": [[points ascending], ...]}
Menu files:  {"space": {...}, "kind": "open"|"clopen"|"custom", "menus": [[[points], ...], ...]}
Strategies:  {"player": "alice"|"bob", "class": "full"|"markov"|"pre",
              "entries": [{"context": ..., "move": ...}]}
All output uses stable key order; batch reports are JSON lines.
"""

from __future__ import annotations

import json
from typing import Any

from .covers import MenuFamily
from .errors import FormatError
from .games import ALICE, BOB, FULL, MARKOV, PRE, Strategy, Transcript, Verdict
from .topology import FiniteSpace, mask_of, points_of, validate_topology


def space_to_json(space: FiniteSpace) -> dict:
    return {"n": space.n, "opens": [points_of(m) for m in space.opens]}


def space_from_json(obj: Any) -> FiniteSpace:
    if not isinstance(obj, dict) or "n" not in obj or "opens" not in obj:
        raise FormatError("space object needs integer 'n' and list 'opens'")
    n = obj["n"]
    opens = obj["opens"]
    if not isinstance(n, int) or n < 0 or not isinstance(opens, list):
        raise FormatError("space object needs integer 'n' and list 'opens'")
    masks = []
    for entry in opens:
        if not isinstance(entry, list) or not all(isinstance(p, int) for p in entry):
            raise FormatError(f"open set {entry!r} is not a list of points")
        masks.append(mask_of(entry, n))
    return validate_topology(masks, n)


def load_space(path: str) -> FiniteSpace:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON in {path}: {exc}") from exc
    return space_from_json(obj)


def dump_space(space: FiniteSpace, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(space_to_json(space), fh)
        fh.write("\n")


def menu_family_from_json(obj: Any) -> tuple[FiniteSpace, MenuFamily]:
    if not isinstance(obj, dict) or "space" not in obj or "menus" not in obj:
        raise FormatError("menu file needs 'space', 'kind' and 'menus'")
    space = space_from_json(obj["space"])
    kind = obj.get("kind", "custom")
    if kind not in ("open", "clopen", "custom"):
        raise FormatError(f"unknown menu kind {kind!r}")
    menus = []
    for menu in obj["menus"]:
        if not isinstance(menu, list) or not menu:
            raise FormatError("each menu must be a nonempty list of point sets")
        masks = tuple(sorted(mask_of(entry, space.n) for entry in menu))
        for m in masks:
            if kind == "open" and not space.is_open(m):
                raise FormatError(f"menu member {points_of(m)} is not open")
            if kind == "clopen" and not space.is_clopen(m):
                raise FormatError(f"menu member {points_of(m)} is not clopen")
        menus.append(masks)
    return space, MenuFamily(menus=tuple(menus), label="custom")


def strategy_to_json(s: Strategy) -> dict:
    entries = []
    for ctx in sorted(s.table, key=_context_sort_key):
        entries.append({"context": _context_to_json(s, ctx), "move": _move_to_json(s, s.table[ctx])})
    return {"player": s.player, "class": s.klass, "entries": entries}


def strategy_from_json(obj: Any) -> Strategy:
    try:
        player = obj["player"]
        klass = obj["class"]
        entries = obj["entries"]
    except (TypeError, KeyError) as exc:
        raise FormatError("strategy needs 'player', 'class' and 'entries'") from exc
    if player not in (ALICE, BOB) or klass not in (FULL, MARKOV, PRE):
        raise FormatError(f"bad player/class pair {player!r}/{klass!r}")
    table = {}
    for entry in entries:
        ctx = _context_from_json(player, klass, entry["context"])
        table[ctx] = _move_from_json(player, entry["move"])
    return Strategy(player=player, klass=klass, table=table)


def _context_sort_key(ctx):
    if isinstance(ctx, int):
        return (0, ctx)
    return (len(ctx), ctx)


def _context_to_json(s: Strategy, ctx):
    if s.klass == PRE:
        return ctx
    if s.klass == MARKOV:
        return [ctx[0], ctx[1]]
    if s.player == ALICE:
        return [points_of(m) for m in ctx]  # Bob's prior moves
    return list(ctx)  # Alice's menu indices


def _context_from_json(player: str, klass: str, raw):
    if klass == PRE:
        if not isinstance(raw, int):
            raise FormatError("predetermined context must be a round number")
        return raw
    if klass == MARKOV:
        if not (isinstance(raw, list) and len(raw) == 2):
            raise FormatError("markov context must be [alice move, round]")
        return (raw[0], raw[1])
    if not isinstance(raw, list):
        raise FormatError("full-history context must be a list")
    if player == ALICE:
        return tuple(_mask_from_points(entry) for entry in raw)
    return tuple(raw)


def _move_to_json(s: Strategy, move):
    if s.player == ALICE:
        return move
    return points_of(move)


def _move_from_json(player: str, raw):
    if player == ALICE:
        if not isinstance(raw, int):
            raise FormatError("alice move must be a menu index")
        return raw
    return _mask_from_points(raw)


def _mask_from_points(raw) -> int:
    if not isinstance(raw, list) or not all(isinstance(p, int) and p >= 0 for p in raw):
        raise FormatError(f"point set {raw!r} must be a list of points")
    m = 0
    for p in raw:
        m |= 1 << p
    return m


def load_strategy(path: str) -> Strategy:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON in {path}: {exc}") from exc
    return strategy_from_json(obj)


def verdict_to_json(v: Verdict) -> dict:
    out = {"winner": v.winner, "horizon": v.horizon, "stats": v.stats}
    out["witness"] = strategy_to_json(v.witness) if v.witness is not None else None
    return out


def transcript_to_json(t: Transcript) -> dict:
    return {
        "rounds": [{"alice": mi, "bob": points_of(b)} for mi, b in t.rounds],
        "outcome": t.outcome,
    }


def dumps_stable(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "))
