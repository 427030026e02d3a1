"""rulehide command line: mine, rules, hide, diff.

Exit status: 0 ok, 1 usage or parameter error, 2 unreadable or malformed
input, 3 a sensitive rule survived sanitization.
"""
from __future__ import annotations

import argparse
import sys

from rulehide.apriori import MiningParams, apriori, format_itemsets
from rulehide.errors import ContractError, HidingFailure, ParameterError, ParseError
from rulehide.hiding import HidingParams, format_log, sanitize, unhidden_rules
from rulehide.impact import compare, render_report
from rulehide.rules import RuleParams, format_rule, mine_rules, parse_rules
from rulehide.transactions import parse_basket, read_basket, serialize_basket

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_HIDING = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)



def _add_support(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--min-support", metavar="FRACTION",
                   help="minimum support as a fraction of transactions")
    g.add_argument("--min-support-count", metavar="N", type=int,
                   help="minimum support as a transaction count")


def _add_confidence(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min-confidence", required=True, metavar="ALPHA")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rulehide", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mine", help="list frequent itemsets")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    _add_support(p)

    p = sub.add_parser("rules", help="list association rules")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    _add_support(p)
    _add_confidence(p)

    p = sub.add_parser("hide", help="sanitize a basket file")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="sanitized basket (default: stdout)")
    p.add_argument("--log", help="modification log path")
    p.add_argument("--sensitive", required=True, help="rules file of sensitive rules")
    p.add_argument("--safety-margin", default="0")
    p.add_argument("--weight", choices=("confidence", "unit"), default="confidence")
    _add_support(p)
    _add_confidence(p)

    p = sub.add_parser("diff", help="side-effect report for a sanitized basket")
    p.add_argument("original")
    p.add_argument("sanitized")
    p.add_argument("--sensitive", help="rules file of sensitive rules")
    p.add_argument("--safety-margin", default="0")
    _add_support(p)
    _add_confidence(p)
    return parser


def _mining(args) -> MiningParams:
    if args.min_support_count is not None:
        return MiningParams(min_count=args.min_support_count)
    return MiningParams(min_support=args.min_support)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8", newline="") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def run(args) -> int:
    if args.command == "mine":
        mining = _mining(args)
        db = read_basket(args.input)
        freq = apriori(db, mining)
        _write(args.output, format_itemsets(db, freq) + f"scans={freq.scan_count}\n")
        return EXIT_OK

    if args.command == "rules":
        params = RuleParams(_mining(args), args.min_confidence)
        db = read_basket(args.input)
        rules = mine_rules(apriori(db, params.mining), db, params)
        lines = [f"{format_rule(db, r)} support={r.support} "
                 f"conf={r.conf_num}/{r.conf_den} ({float(r.confidence):.4f})\n" for r in rules]
        _write(args.output, "".join(lines))
        return EXIT_OK

    if args.command == "hide":
        params = HidingParams(_mining(args), args.min_confidence, args.safety_margin, args.weight)
        db = read_basket(args.input)
        sensitive = parse_rules(_read_text(args.sensitive), db)
        result = sanitize(db, sensitive, params)
        failed = unhidden_rules(result.db, sensitive, params)
        if failed:
            names = ", ".join(format_rule(db, r) for r in failed)
            raise HidingFailure(f"still minable after sanitization: {names}")
        _write(args.output, serialize_basket(result.db))
        if args.log:
            _write(args.log, format_log(db, result.modifications))
        return EXIT_OK

    if args.command == "diff":
        params = HidingParams(_mining(args), args.min_confidence, args.safety_margin)
        original_text = _read_text(args.original)
        sanitized_text = _read_text(args.sanitized)
        original = parse_basket(original_text)
        # items deleted everywhere vanish from the sanitized file
        sanitized = parse_basket(sanitized_text, original.items)
        sensitive = parse_rules(_read_text(args.sensitive), original) if args.sensitive else []
        _write(None, render_report(compare(original, sanitized, params, sensitive)))
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"rulehide: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterError as exc:
        print(f"rulehide: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ContractError, OSError, UnicodeDecodeError) as exc:
        print(f"rulehide: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HidingFailure as exc:
        print(f"rulehide: hiding failed: {exc}", file=sys.stderr)
        return EXIT_HIDING


if __name__ == "__main__":
    sys.exit(main())
