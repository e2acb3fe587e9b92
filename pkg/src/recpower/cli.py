"""Command-line front end.

Exit status: 0 success, 1 an audit failed, 2 usage or parse error, 3 size limit.
Players are 1-indexed on the command line and in all output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .efficacy import alpha_table, decisive
from .errors import SizeLimit, VotingGameError
from .formats import GameSpec, game_to_dict, lattice_dot, parse_game_spec, rational_str
from .game import label, max_players, parse_label
from .measures import MEASURES, VoteProfile, power_report, rm_approx
from .montecarlo import rm_estimate, walk_estimate
from .postulates import EXTRA_POSTULATES, POSTULATES, audit
from .transforms import TRANSFORMS

EXIT_OK, EXIT_AUDIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3


class UsageError(VotingGameError):
    pass


def _csv_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _player(spec: GameSpec, value: int | None) -> int | None:
    if value is None:
        return None
    if not 1 <= value <= spec.n:
        raise UsageError(f"player {value} outside 1..{spec.n}")
    return value - 1


def _profile(text: str | None, n: int) -> VoteProfile | None:
    if text is None:
        return None
    try:
        probs = [Fraction(t) for t in _csv_list(text)]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse profile {text!r}") from None
    if len(probs) != n:
        raise UsageError(f"profile has {len(probs)} entries for {n} players")
    return VoteProfile(probs)


# -- subcommands ------------------------------------------------------------

def cmd_compute(args, out) -> int:
    spec = parse_game_spec(args.game)
    measures = _csv_list(args.measure)
    bad = set(measures) - set(MEASURES)
    if bad:
        raise UsageError(f"unknown measure(s): {', '.join(sorted(bad))}")
    player = _player(spec, args.player)
    names = spec.display_names()
    if spec.n > max_players() and args.approximate:
        return _compute_approx(spec, measures, player, names, args, out)
    game = spec.build()
    report = power_report(game, measures, _profile(args.profile, game.n), names)
    rows = list(report.rows())
    if player is not None:
        rows = [rows[player]]
    if args.format == "json":
        doc = {"n": game.n, "measures": measures, "profile": args.profile or "equiprobable",
               "players": [{k: (v if k == "player" else rational_str(v)) for k, v in r.items()} for r in rows]}
        if args.decimal:
            for r, src in zip(doc["players"], rows):
                r["decimal"] = {k: float(v) for k, v in src.items() if k != "player"}
        print(json.dumps(doc, ensure_ascii=False), file=out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        cols = list(rows[0])
        writer.writerow(cols)
        for r in rows:
            writer.writerow([r["player"]] + [rational_str(r[c]) for c in cols[1:]])
        out.write(buf.getvalue())
    else:
        cols = list(rows[0])
        table = [cols] + [[r["player"]] + [_fmt(r[c], args.decimal) for c in cols[1:]] for r in rows]
        widths = [max(len(row[k]) for row in table) for k in range(len(cols))]
        for row in table:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)), file=out)
    return EXIT_OK


def _fmt(x: Fraction, decimal: bool) -> str:
    s = str(x)
    return f"{s} ({float(x):.6f})" if decimal else s


def _compute_approx(spec, measures, player, names, args, out) -> int:
    if measures != ["rm"]:
        raise UsageError("approximate mode supports --measure rm only")
    profile = None
    if args.profile:
        profile = [float(p) for p in _profile(args.profile, spec.n).yes_prob]
    values = rm_approx(spec.rule(), profile)
    idx = range(spec.n) if player is None else [player]
    doc = {"n": spec.n, "approximate": True,
           "players": [{"player": names[i], "rm_plus": values[i][0], "rm_minus": values[i][1],
                        "rm": values[i][2]} for i in idx]}
    print(json.dumps(doc), file=out)
    return EXIT_OK


def cmd_audit(args, out) -> int:
    spec = parse_game_spec(args.game)
    game = spec.build()
    measures = _csv_list(args.measure)
    postulates = list(POSTULATES) if args.postulate == "all" else _csv_list(args.postulate)
    bad = set(postulates) - set(POSTULATES + EXTRA_POSTULATES)
    if bad:
        raise UsageError(f"unknown postulate(s): {', '.join(sorted(bad))}")
    status = EXIT_OK
    for m in measures:
        for p in postulates:
            report = audit(game, m, p, description=args.game if spec.weighted else None,
                           iso_samples=args.iso_samples, seed=args.seed)
            if report.verdict == "fail":
                status = EXIT_AUDIT_FAIL
            if args.format == "jsonl":
                print(report.to_json(), file=out)
            else:
                line = f"{m:3} {p:7} {report.verdict:8} checked={report.checked}"
                if report.witnesses:
                    w = report.witnesses[0].to_dict(game.n)
                    line += f"  e.g. players {w['players']}: expected {w['expected']}, got {w['actual']}"
                print(line, file=out)
    return status


def cmd_transform(args, out) -> int:
    spec = parse_game_spec(args.game)
    game = spec.build()
    kind = args.kind.replace("-", "_")
    func, arity = TRANSFORMS[kind]
    players = [int(p) for p in _csv_list(args.players or "")]
    if len(players) != arity:
        raise UsageError(f"{args.kind} takes {arity} player(s), got {len(players)}")
    idx = [_player(spec, p) for p in players]
    new, record = func(game, *idx)
    names = spec.display_names()
    new_names = [""] * new.n
    for old, pos in record.index_map.items():
        new_names[pos] = names[old]
    if kind == "bloc":
        i, j = idx
        new_names[record.index_map[i]] = f"{names[i]}+{names[j]}"
    elif kind in ("add_yes_blocker", "add_no_blocker"):
        new_names[new.n - 1] = "0"
    elif kind == "add_dummy":
        new_names[new.n - 1] = "d"
    rec = {
        "kind": record.kind,
        "params": [p + 1 for p in record.params],
        "source_n": record.source_n,
        "result_n": record.result_n,
        "index_map": {str(k + 1): v + 1 for k, v in sorted(record.index_map.items())},
    }
    doc = game_to_dict(new, new_names)
    doc["transform"] = rec
    print(json.dumps(doc, ensure_ascii=False), file=out)
    return EXIT_OK


def cmd_estimate(args, out) -> int:
    spec = parse_game_spec(args.game)
    rule = spec.rule()
    player = _player(spec, args.player)
    if player is None:
        raise UsageError("--player is required")
    doc = {"game": args.game if spec.weighted else "explicit", "player": args.player,
           "seed": args.seed, "trials": args.trials, "workers": args.workers}
    if args.rm:
        est = rm_estimate(rule, player, args.trials, args.seed, workers=args.workers)
        for name in ("rm_plus", "rm_minus", "rm"):
            value, err = getattr(est, name)
            doc[name] = {"estimate": rational_str(value), "decimal": float(value), "std_error": err}
    else:
        if args.division is None or args.sign is None:
            raise UsageError("--division and --sign are required unless --rm is given")
        division = parse_label(args.division)
        if division >> spec.n:
            raise UsageError(f"division {args.division!r} names a player beyond {spec.n}")
        est = walk_estimate(rule, player, division, args.sign, args.trials, args.seed, workers=args.workers)
        doc.update({"division": label(division, spec.n), "sign": args.sign, "hits": est.hits,
                    "estimate": rational_str(est.estimate), "decimal": float(est.estimate),
                    "std_error": est.std_error})
    print(json.dumps(doc, ensure_ascii=False), file=out)
    return EXIT_OK


def cmd_lattice(args, out) -> int:
    spec = parse_game_spec(args.game)
    game = spec.build()
    if game.n > args.max_n:
        raise SizeLimit(f"lattice export is limited to {args.max_n} players (use --max-n)")
    player = _player(spec, args.player)
    scores = decisive_nodes = None
    if player is not None:
        plus, minus = alpha_table(game, player)
        scores = {m: plus[m] + minus[m] for m in range(1 << game.n)}
        decisive_nodes = {m for m in range(1 << game.n) if decisive(game, player, m)}
    out.write(lattice_dot(game, scores, decisive_nodes))
    return EXIT_OK


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="recpower", description="Voting power of simple voting games.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def game_arg(p):
        p.add_argument("--game", required=True,
                       help='weighted "q;w1,...,wn", explicit JSON, or a path to a file with either')

    p = sub.add_parser("compute", help="power values per player")
    game_arg(p)
    p.add_argument("--measure", default="rm,pb,ss", help="comma list of rm, pb, ss")
    p.add_argument("--player", type=int, help="report one player (1-indexed)")
    p.add_argument("--profile", help="comma list of per-player yes-probabilities, e.g. 1/2,1/3,...")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--decimal", action="store_true", help="add approximate decimal values")
    p.add_argument("--approximate", action="store_true",
                   help="float evaluation for weighted games beyond the exact-mode cap")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("audit", help="check voting-power postulates")
    game_arg(p)
    p.add_argument("--measure", default="rm", help="comma list of rm, pb, ss")
    p.add_argument("--postulate", default="all", help=f"'all' or comma list of {', '.join(POSTULATES)}, add-0")
    p.add_argument("--iso-samples", type=int, default=50, help="random relabellings when n > 5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["jsonl", "table"], default="jsonl")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("transform", help="apply a game transformation")
    game_arg(p)
    p.add_argument("--kind", required=True, choices=[k.replace("_", "-") for k in TRANSFORMS])
    p.add_argument("--players", help="1-indexed players: donor,recipient / annexer,annexed / i,j")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("estimate", help="Monte Carlo random-walk estimates")
    game_arg(p)
    p.add_argument("--player", type=int, required=True)
    p.add_argument("--division", help='yes-voters, e.g. "134" or "∅"')
    p.add_argument("--sign", choices=["plus", "minus"])
    p.add_argument("--rm", action="store_true", help="estimate RM by sampling divisions")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("lattice", help="DOT export of the division lattice")
    game_arg(p)
    p.add_argument("--player", type=int, help="annotate nodes with this player's efficacy")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_lattice)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except SizeLimit as exc:
        print(f"error: {exc}", file=err)
        return EXIT_SIZE
    except VotingGameError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
