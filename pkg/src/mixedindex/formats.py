"""Reading and writing the three input documents.

Game and enabling documents are JSON with every number written as rational
text (``"1/3"``, ``"-5"``); integers are accepted too.  System documents are
plain text: a ``vars:`` line followed by one polynomial per line.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .enabling import EnablingForm
from .errors import InputError, ShapeMismatch
from .exactnum import format_rational, parse_rational
from .gamesys import Game, default_variable_names
from .localpoly import LocalOrder, Poly, PolySystem, parse_poly

MODES = ("game", "system", "enabling")


@dataclass
class GameDocument:
    game: Game
    equilibrium: tuple
    reference: object = None
    variables: object = None
    order: object = None


@dataclass
class EnablingDocument:
    form: EnablingForm
    reference: object = None
    order: object = None


@dataclass
class SystemDocument:
    system: PolySystem
    order: object = None


def _rational(value, where):
    try:
        return parse_rational(value)
    except InputError as exc:
        exc.location = where
        raise


def _rational_list(values, where):
    if not isinstance(values, list):
        raise InputError("expected a list", where)
    return [_rational(v, f"{where}[{i}]") for i, v in enumerate(values)]


def detect_mode(text):
    """``game``/``enabling`` for JSON documents, ``system`` otherwise."""
    stripped = text.lstrip()
    if not stripped.startswith("{"):
        return "system"
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None
    mode = doc.get("mode")
    if mode is not None:
        if mode not in MODES:
            raise InputError(f"unknown mode {mode!r}", "mode")
        return mode
    return "enabling" if "payoff_polys" in doc else "game"


def _load_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise InputError("top level must be an object")
    return doc


def _order(doc, names):
    order = doc.get("order")
    if order is None:
        return None
    if not isinstance(order, list):
        raise InputError("order must be a list of variable names or indices", "order")
    return parse_order(order, names)


def parse_order(spec, names):
    """Permutation from names (``["z", "x", "y"]``) or 0-based indices."""
    if isinstance(spec, str):
        spec = [s.strip() for s in spec.split(",") if s.strip()]
    if all(isinstance(s, int) or (isinstance(s, str) and s.isdigit()) for s in spec):
        return LocalOrder(tuple(int(s) for s in spec))
    return LocalOrder.from_names(spec, names)


def parse_game(text):
    doc = _load_json(text)
    for key in ("strategies", "payoffs", "equilibrium"):
        if key not in doc:
            raise InputError(f"missing field {key!r}", key)
    counts = doc["strategies"]
    if not isinstance(counts, list) or not all(isinstance(k, int) for k in counts):
        raise InputError("strategies must be a list of counts", "strategies")
    if "players" in doc and doc["players"] != len(counts):
        raise ShapeMismatch(f"players is {doc['players']} but {len(counts)} strategy counts",
                            "players")
    n = len(counts)

    def lookup(profile):
        node = doc["payoffs"]
        where = "payoffs"
        for s in profile:
            if not isinstance(node, list) or s >= len(node):
                raise ShapeMismatch("payoff array has the wrong shape", where)
            node = node[s]
            where += f"[{s}]"
        if not isinstance(node, list) or len(node) != n:
            raise ShapeMismatch(f"payoff vector needs {n} entries", where)
        return tuple(_rational(v, f"{where}[{i}]") for i, v in enumerate(node))

    game = Game.from_function(counts, lookup, doc.get("strategy_names"))
    eq = doc["equilibrium"]
    if not isinstance(eq, list) or len(eq) != n:
        raise ShapeMismatch(f"equilibrium needs {n} probability vectors", "equilibrium")
    profile = tuple(tuple(_rational_list(p, f"equilibrium[{i}]")) for i, p in enumerate(eq))
    for i, (p, k) in enumerate(zip(profile, counts)):
        if len(p) != k:
            raise ShapeMismatch(f"player {i + 1} has {k} strategies", f"equilibrium[{i}]")
    gd = GameDocument(game, profile, doc.get("reference"), doc.get("variables"))
    if gd.variables is not None or doc.get("order") is not None:
        names = gd.variables or default_variable_names(game, gd.reference or (0,) * n)
        gd.order = _order(doc, names)
    return gd


def game_to_text(game, equilibrium, **extra):
    doc = {
        "mode": "game",
        "players": game.n_players,
        "strategies": list(game.strategy_counts),
        "strategy_names": [list(s) for s in game.strategy_names],
        "payoffs": _format_nested(game.to_nested()),
        "equilibrium": [[format_rational(p) for p in probs] for probs in equilibrium],
    }
    doc.update({k: v for k, v in extra.items() if v is not None})
    return dump_document(doc)


def dump_document(doc):
    """JSON with one top-level field per line, each value written compactly."""
    body = ",\n".join(f" {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items())
    return "{\n" + body + "\n}\n"


def _format_nested(node):
    if isinstance(node, list):
        return [_format_nested(x) for x in node]
    return format_rational(node)


def _parse_terms(spec, names, where):
    nv = len(names)
    if isinstance(spec, str):
        try:
            return parse_poly(spec, names)
        except InputError as exc:
            exc.location = where
            raise
    if not isinstance(spec, list):
        raise InputError("payoff polynomial must be a term list or text", where)
    terms = {}
    for i, term in enumerate(spec):
        if not (isinstance(term, list) and len(term) == 2 and isinstance(term[1], list)):
            raise InputError("term must be [coefficient, exponents]", f"{where}[{i}]")
        c = _rational(term[0], f"{where}[{i}][0]")
        e = term[1]
        if len(e) != nv or not all(isinstance(k, int) and k >= 0 for k in e):
            raise InputError(f"exponent vector needs {nv} nonnegative integers",
                             f"{where}[{i}][1]")
        terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + c
    return Poly(nv, terms)


def parse_enabling(text):
    doc = _load_json(text)
    for key in ("variables", "payoff_polys", "simplices", "point"):
        if key not in doc:
            raise InputError(f"missing field {key!r}", key)
    names = tuple(doc["variables"])
    point = [_rational_list(p, f"point[{i}]") for i, p in enumerate(doc["point"])]
    blocks, start = [], 0
    for p in point:
        blocks.append(tuple(range(start, start + len(p))))
        start += len(p)
    if start != len(names):
        raise ShapeMismatch(f"point has {start} coordinates for {len(names)} variables", "point")
    payoffs = tuple(_parse_terms(s, names, f"payoff_polys[{i}]")
                    for i, s in enumerate(doc["payoff_polys"]))
    simplices = tuple(tuple(tuple(_rational_list(v, f"simplices[{i}][{j}]"))
                            for j, v in enumerate(simp))
                      for i, simp in enumerate(doc["simplices"]))
    form = EnablingForm(names, tuple(blocks), payoffs, simplices,
                        tuple(tuple(p) for p in point))
    return EnablingDocument(form, doc.get("reference"), doc.get("order"))


def enabling_to_text(form, **extra):
    doc = {
        "mode": "enabling",
        "variables": list(form.names),
        "payoff_polys": [[[format_rational(c), list(e)] for e, c in p.items()]
                         for p in form.payoffs],
        "simplices": [[[format_rational(c) for c in v] for v in s] for s in form.simplices],
        "point": [[format_rational(c) for c in p] for p in form.point],
    }
    doc.update({k: v for k, v in extra.items() if v is not None})
    return dump_document(doc)


def parse_system(text):
    return SystemDocument(PolySystem.from_text(text))


def load(text):
    """Parse any document; returns ``(mode, document)``."""
    mode = detect_mode(text)
    if mode == "game":
        return mode, parse_game(text)
    if mode == "enabling":
        return mode, parse_enabling(text)
    return mode, parse_system(text)
