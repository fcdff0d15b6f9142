"""Command-line front end: ``mixedindex <subcommand> [options]``.

Exit codes: 0 success, 2 well-formed but indeterminate (or, for ``verify``,
an equilibrium that is not completely mixed), 1 input error or a profile
that is not an equilibrium.
"""

import argparse
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .enabling import build_vertex_game
from .errors import InfiniteDimensional, MixedIndexError
from .exactnum import parse_rational
from .formats import game_to_text, load, parse_order
from .gamesys import (EquilibriumStatus, GameSystem, build_indifference_system,
                      classify_monogenic, eliminate_inferior_replies, inferior_replies,
                      verify_equilibrium)
from .generators import PLANAR_KINDS, horner_disaggregate, planar_realization
from .localpoly import Poly, format_poly
from .oracle import OracleConfig, estimate_degree
from .report import compute_index_report, parity_shortcut
from .standardbasis import build_local_algebra, compute_standard_basis

EXIT_OK, EXIT_ERROR, EXIT_INDETERMINATE = 0, 1, 2


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise MixedIndexError(f"cannot read {path}: {exc.strerror}") from None


def _rationals(text):
    return [parse_rational(t) for t in text.split(",") if t.strip()]


def _system_from(mode, doc, out):
    """Square system for any document; game systems come back as GameSystem."""
    if mode == "system":
        return doc.system, doc.order
    if mode == "enabling":
        game, profile = build_vertex_game(doc.form)
        out.append("vertexProfile: " + "; ".join(
            ", ".join(str(p) for p in probs) for probs in profile))
        gs = build_indifference_system(game, profile, reference=doc.reference)
        order = parse_order(doc.order, gs.names) if doc.order is not None else None
        return gs, order
    gs = build_indifference_system(doc.game, doc.equilibrium, doc.variables, doc.reference)
    return gs, doc.order


def _plain(source):
    return source.system if isinstance(source, GameSystem) else source


def _names(source):
    return _plain(source).names


def _polys(source):
    return _plain(source).polys


def _resolve_order(args, source, default):
    if args.order_perm:
        return parse_order(args.order_perm, _names(source))
    return default


def _oracle_config(args):
    return OracleConfig(seed=args.seed) if args.seed is not None else OracleConfig()


def _index_lines(args, mode, doc):
    out = []
    source, order = _system_from(mode, doc, out)
    order = _resolve_order(args, source, order)
    report = compute_index_report(source, order=order, fast=args.fast,
                                  with_oracle=args.with_oracle, degree_cap=args.degree_cap,
                                  oracle_config=_oracle_config(args))
    out.append(report.to_text(include_timings=args.timings).rstrip("\n"))
    return out, report.exit_status


def cmd_index(args, text):
    mode, doc = load(text)
    return _index_lines(args, mode, doc)


def cmd_enabling(args, text):
    mode, doc = load(text)
    if mode != "enabling":
        raise MixedIndexError(f"expected an enabling document, got {mode}", "mode")
    if args.emit_game:
        game, profile = build_vertex_game(doc.form)
        _atomic_write(Path(args.emit_game), game_to_text(game, profile))
    return _index_lines(args, mode, doc)


def cmd_verify(args, text):
    mode, doc = load(text)
    if mode != "game":
        raise MixedIndexError(f"verify needs a game document, got {mode}", "mode")
    status = verify_equilibrium(doc.game, doc.equilibrium)
    code = {EquilibriumStatus.INTERIOR: EXIT_OK,
            EquilibriumStatus.NOT_COMPLETELY_MIXED: EXIT_INDETERMINATE,
            EquilibriumStatus.NOT_EQUILIBRIUM: EXIT_ERROR}[status]
    return [f"status: {status}"], code


def cmd_classify(args, text):
    mode, doc = load(text)
    out = []
    source, order = _system_from(mode, doc, out)
    order = _resolve_order(args, source, order)
    mono = classify_monogenic(source)
    out += [f"kappa: {mono.kappa}", f"jacobianRank: {mono.rank}",
            f"monogenic: {'true' if mono.is_monogenic else 'false'}",
            f"rankDeficiency: {mono.rank_deficiency}"]
    try:
        algebra = build_local_algebra(compute_standard_basis(_polys(source), order),
                                      args.degree_cap)
    except InfiniteDimensional:
        out += ["dimension: infinite", "parityShortcut: inapplicable"]
        return out, EXIT_INDETERMINATE
    out += [f"dimension: {algebra.dimension}",
            f"parityShortcut: {parity_shortcut(algebra, mono.is_monogenic)}"]
    return out, EXIT_OK


def cmd_reduce(args, text):
    mode, doc = load(text)
    if mode != "game":
        raise MixedIndexError(f"reduce needs a game document, got {mode}", "mode")
    removed = inferior_replies(doc.game, doc.equilibrium)
    game, profile = eliminate_inferior_replies(doc.game, doc.equilibrium)
    out = ["removed: " + "; ".join(
        ", ".join(doc.game.strategy_names[n][s] for s in r) or "-"
        for n, r in enumerate(removed))]
    if args.emit_game:
        _atomic_write(Path(args.emit_game), game_to_text(game, profile))
    doc.game, doc.equilibrium = game, profile
    doc.variables, doc.reference, doc.order = None, None, None
    lines, code = _index_lines(args, "game", doc)
    return out + lines, code


def cmd_oracle(args, text):
    mode, doc = load(text)
    out = []
    source, _ = _system_from(mode, doc, out)
    est = estimate_degree(_plain(source), _oracle_config(args))
    out += [f"estimate: {est.estimate}", f"confidence: {est.confidence}",
            "sums: " + ", ".join(map(str, est.sums)),
            "rootCounts: " + ", ".join(map(str, est.root_counts))]
    return out, EXIT_OK if est.confidence != "inconclusive" else EXIT_INDETERMINATE


def cmd_generate(args):
    if args.family == "planar":
        system = planar_realization(args.kind, args.m)
    else:
        coeffs = _rationals(args.coeffs)
        root = parse_rational(args.root)
        q = Poly(1, {(i,): c for i, c in enumerate(coeffs)})
        if args.move_to is not None:
            target = parse_rational(args.move_to)
            q = q.shift([root - target])
            root = target
        scales = _rationals(args.scales) if args.scales else None
        offsets = _rationals(args.offsets) if args.offsets else None
        hs = horner_disaggregate(q, root, scales, offsets)
        system = hs.system
        if args.verbose:
            sys.stderr.write(f"q: {format_poly(q, ['a'])}\nroot: {root}\n"
                             f"c*: {', '.join(str(c) for c in hs.c_star)}\n")
    text = system.to_text()
    if args.output:
        _atomic_write(Path(args.output), text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "index": cmd_index,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "reduce": cmd_reduce,
    "enabling": cmd_enabling,
    "oracle": cmd_oracle,
}


def _atomic_write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _run_one(args, text):
    """Run a command on one document; returns ``(stdout text, stderr text, code)``."""
    try:
        lines, code = COMMANDS[args.command](args, text)
    except MixedIndexError as exc:
        return "", f"{type(exc).__name__}: {exc}\n", EXIT_ERROR
    return "".join(line + "\n" for line in lines), "", code


def _batch_job(item):
    args, path, out_dir = item
    out, err, code = _run_one(args, Path(path).read_text())
    target = Path(out_dir) / (Path(path).name + ".report")
    _atomic_write(target, out if not err else out + f"error: {err}")
    return path, err, code


def _run_batch(args):
    in_dir = Path(args.input_dir)
    if not in_dir.is_dir():
        sys.stderr.write(f"InputError: {in_dir} is not a directory\n")
        return EXIT_ERROR
    out_dir = Path(args.output_dir or in_dir)
    files = sorted(p for p in in_dir.iterdir()
                   if p.is_file() and not p.name.startswith(".") and p.suffix != ".report")
    items = [(args, str(p), str(out_dir)) for p in files]
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(_batch_job, items))
    worst = EXIT_OK
    for path, err, code in results:
        sys.stdout.write(f"{Path(path).name}: exit {code}\n")
        if err:
            sys.stderr.write(f"{Path(path).name}: {err}")
        if code == EXIT_ERROR or (code == EXIT_INDETERMINATE and worst == EXIT_OK):
            worst = code
    return worst


def _add_common(p, batch=True):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="input document path, or - for stdin")
    if batch:
        src.add_argument("--input-dir", help="process every file in a directory concurrently")
        p.add_argument("--output-dir", help="where batch reports go (default: the input dir)")
        p.add_argument("--jobs", type=int, default=None, help="batch worker processes")
    p.add_argument("--order-perm",
                   help="local order as variable names or 0-based indices, most significant "
                        "first, comma separated (default: variable order)")
    p.add_argument("--degree-cap", type=int, default=64,
                   help="largest standard-monomial degree explored (default 64)")
    p.add_argument("--fast", action="store_true",
                   help="skip the signature when the parity shortcut already gives index 0")
    p.add_argument("--with-oracle", action="store_true",
                   help="add the floating-point estimate to the report")
    p.add_argument("--seed", type=int, default=None, help="oracle seed (default fixed)")
    p.add_argument("--timings", action="store_true",
                   help="append timings (makes the report run-dependent)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mixedindex",
        description="Exact index of a completely mixed equilibrium of a finite game.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "verify": "check that the profile is a completely mixed equilibrium",
        "index": "full pipeline: standard basis, local algebra, signature, verdict",
        "classify": "monogenic classification and parity shortcut only",
        "reduce": "drop unused strictly inferior replies, then compute the index",
        "enabling": "build the vertex game from an enabling document, then the index",
        "oracle": "numerical signed root count near the origin",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, description=text)
        _add_common(p)
        if name in ("reduce", "enabling"):
            p.add_argument("--emit-game", help="also write the derived game document here")

    gen = sub.add_parser("generate", help="write a test system file")
    fam = gen.add_subparsers(dest="family", required=True)
    hp = fam.add_parser("horner", help="multiaffine chain for a one-variable polynomial")
    hp.add_argument("--coeffs", required=True, help="a_0, a_1, ..., a_d as rationals")
    hp.add_argument("--root", required=True, help="a root of the polynomial")
    hp.add_argument("--move-to", help="shift the polynomial so the root lands here")
    hp.add_argument("--scales", help="s_1..s_{d-1} (default all 1)")
    hp.add_argument("--offsets", help="delta_1..delta_{d-1} (default all 0)")
    hp.add_argument("--verbose", action="store_true")
    pp = fam.add_parser("planar", help="z^m, conj(z)^m or (x^2, y)")
    pp.add_argument("--kind", choices=PLANAR_KINDS, required=True)
    pp.add_argument("--m", type=int, default=1)
    for p in (hp, pp):
        p.add_argument("--output", help="write here instead of stdout")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "generate":
        try:
            return cmd_generate(args)
        except MixedIndexError as exc:
            sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
            return EXIT_ERROR
    if getattr(args, "input_dir", None):
        return _run_batch(args)
    try:
        text = _read(args.input)
    except MixedIndexError as exc:
        sys.stderr.write(f"InputError: {exc}\n")
        return EXIT_ERROR
    out, err, code = _run_one(args, text)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
