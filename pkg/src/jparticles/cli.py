"""Command line front end.

Exit codes: 0 success, 1 no parse / corpus failures, 2 input or config error.
Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import data
from .chart import ParseError, parse, parse_corpus, read_corpus
from .cooc import DEFAULT_THRESHOLD, TableError, derive_licensing, load_table1, reconcile
from .lattice import HierarchyError, TypeLattice, load_hierarchy_text
from .lexicon import Lexicon, LexiconError, load_lexicon
from .rules import PredArgStructure, Sign

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class ConfigError(Exception):
    pass


@dataclass
class CliConfig:
    lexicon_path: Path
    hierarchy_path: Path
    table1_path: Path
    threshold: int = DEFAULT_THRESHOLD
    output_format: str = "text"


@dataclass
class Grammar:
    lattice: TypeLattice
    lexicon: Lexicon
    table1_text: str


def load_config(config: CliConfig) -> Grammar:
    try:
        lattice = load_hierarchy_text(data.read_text(config.hierarchy_path))
        lexicon = load_lexicon(data.read_text(config.lexicon_path), lattice)
        table = data.read_text(config.table1_path)
    except OSError as exc:
        raise ConfigError(f"cannot read {exc.filename}: {exc.strerror}") from None
    except (HierarchyError, LexiconError) as exc:
        raise ConfigError(str(exc)) from None
    return Grammar(lattice, lexicon, table)


def _text(tokens, span) -> str:
    return " ".join(tokens[span[0]:span[1]])


def pas_to_json(pas: PredArgStructure, tokens) -> dict:
    bound = {}
    for role, b in pas.bound:
        entry = {"span": list(b.span), "text": _text(tokens, b.span), "sort": b.sort, "case": b.case}
        if b.embedded is not None:
            entry["embedded"] = pas_to_json(b.embedded, tokens)
        bound[role] = entry
    return {
        "predicate": pas.predicate,
        "auxiliaries": list(pas.auxiliaries),
        "bound": bound,
        "adjuncts": [
            {"span": list(a.span), "text": _text(tokens, a.span), "flavor": a.flavor}
            for a in sorted(pas.adjuncts, key=lambda a: a.span)
        ],
    }


def analysis_to_json(sign: Sign, tokens) -> dict:
    out = pas_to_json(sign.pas, tokens)
    out["tree"] = sign.bracketed(tokens)
    return out


def _render_pas(pas: PredArgStructure, tokens, indent="  ") -> list[str]:
    lines = [f"{indent}predicate: {pas.predicate or '-'}"]
    if pas.auxiliaries:
        lines.append(f"{indent}auxiliaries: {' '.join(pas.auxiliaries)}")
    for role, b in pas.bound:
        lines.append(f"{indent}{role}[{b.case}] = {_text(tokens, b.span)}  ({b.sort})")
        if b.embedded is not None:
            lines.extend(_render_pas(b.embedded, tokens, indent + "    "))
    for a in sorted(pas.adjuncts, key=lambda a: a.span):
        lines.append(f"{indent}adjunct {a.flavor}: {_text(tokens, a.span)}")
    return lines


def cmd_parse(grammar: Grammar, config: CliConfig, sentence: str, out=sys.stdout, err=sys.stderr) -> int:
    tokens = sentence.split()
    try:
        result = parse(grammar.lexicon, tokens)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR

    if config.output_format == "json":
        payload = {
            "tokens": tokens,
            "analyses_count": len(result.analyses),
            "analyses": [analysis_to_json(a, tokens) for a in result.analyses],
            "diagnostics": [{"span": list(s), "reason": r} for s, r in result.diagnostics],
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(f"{len(result.analyses)} analyses for: {sentence.strip()}", file=out)
        for n, a in enumerate(result.analyses, 1):
            print(f"analysis {n}", file=out)
            print(f"  tree: {a.bracketed(tokens)}", file=out)
            print("\n".join(_render_pas(a.pas, tokens)), file=out)
    if not result.analyses:
        reasons = sorted({r for _, r in result.diagnostics})
        print(f"no analysis; rule failures: {', '.join(reasons) or 'none'}", file=err)
        return EXIT_FAIL
    return EXIT_OK


def cmd_corpus(grammar: Grammar, config: CliConfig, corpus_path, figures=None,
               out=sys.stdout, err=sys.stderr) -> int:
    try:
        items = read_corpus(data.read_text(corpus_path))
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read corpus {corpus_path}: {exc}", file=err)
        return EXIT_ERROR
    report = parse_corpus(grammar.lexicon, items)

    if config.output_format == "json":
        payload = {
            "passed": report.passed,
            "total": report.total,
            "lines": [
                {
                    "line": ln.item.lineno,
                    "tokens": list(ln.item.tokens),
                    "expect_grammatical": ln.item.grammatical,
                    "analyses_count": ln.analyses,
                    "passed": ln.passed,
                    "error": ln.error,
                }
                for ln in report.lines
            ],
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        for ln in report.lines:
            sentence = ("* " if not ln.item.grammatical else "") + " ".join(ln.item.tokens)
            if ln.error is not None:
                print(f"ERROR line {ln.item.lineno}: {ln.error}", file=err)
                continue
            verdict = "PASS" if ln.passed else "FAIL"
            print(f"{verdict}  {ln.analyses:3d} analyses  {sentence}", file=out)
        print(f"{report.passed}/{report.total} passed", file=out)

    if figures is not None:
        from .plotting import plot_corpus

        Path(figures).mkdir(parents=True, exist_ok=True)
        print(f"wrote {plot_corpus(report, Path(figures) / 'corpus.png')}", file=err)
    return EXIT_OK if report.all_passed else EXIT_FAIL


def cmd_cooc(grammar: Grammar, config: CliConfig, figures=None, out=sys.stdout, err=sys.stderr) -> int:
    try:
        empirical = load_table1(grammar.table1_text)
        derived = derive_licensing(grammar.lexicon, empirical.rows, empirical.columns)
    except (TableError, KeyError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    report = reconcile(derived, empirical, config.threshold)
    both = sorted(report.licensed_and_attested)
    unlicensed = sorted(report.attested_unlicensed)
    unattested = sorted(report.licensed_unattested)

    if config.output_format == "json":
        payload = {
            "threshold": report.threshold,
            "matrix": {
                "columns": list(derived.columns),
                "rows": {left: [bool(v) for v in derived.cells[i]] for i, left in enumerate(derived.rows)},
            },
            "licensed_and_attested": [list(p) for p in both],
            "attested_unlicensed": [{"left": l, "right": r, "count": c} for l, r, c in unlicensed],
            "licensed_unattested": [list(p) for p in unattested],
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        out.write(derived.to_csv())
        print(f"\n# reconciliation at threshold {report.threshold}", file=out)
        print(f"# licensed-and-attested ({len(both)})", file=out)
        for l, r in both:
            print(f"{l},{r},{empirical[l, r]}", file=out)
        print(f"# attested-unlicensed ({len(unlicensed)})", file=out)
        for l, r, c in unlicensed:
            print(f"{l},{r},{c}", file=out)
        print(f"# licensed-unattested ({len(unattested)})", file=out)
        for l, r in unattested:
            print(f"{l},{r},{empirical[l, r]}", file=out)

    if figures is not None:
        from .plotting import plot_reconciliation

        Path(figures).mkdir(parents=True, exist_ok=True)
        path = plot_reconciliation(empirical, derived, report, Path(figures) / "cooccurrence.png")
        print(f"wrote {path}", file=err)
    return EXIT_OK


def _common_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--lexicon", type=Path, default=default(None), help="lexicon TSV file")
    parser.add_argument("--hierarchy", type=Path, default=default(None), help="type hierarchy file")
    parser.add_argument("--table1", type=Path, default=default(None), help="cooccurrence count CSV")
    parser.add_argument("--threshold", type=int, default=default(DEFAULT_THRESHOLD),
                        help="count cutoff for 'attested' (default %(default)s)")
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jparticles",
        description="Parse particle-marked romanized Japanese and reconcile particle cooccurrence.",
        epilog=f"Default data files come from the bundled data directory; "
               f"set {data.ENV_VAR} to use another one.",
    )
    _common_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse one whitespace-tokenized sentence")
    _common_options(p, suppress=True)
    p.add_argument("sentence")

    p = sub.add_parser("corpus", help="check a corpus of (un)grammatical sentences")
    _common_options(p, suppress=True)
    p.add_argument("corpus", nargs="?", type=Path, default=None,
                   help="corpus file (default: bundled example sentences)")
    p.add_argument("--figures", type=Path, default=None, help="directory for a summary figure")

    p = sub.add_parser("cooc", help="licensing matrix and reconciliation with the count table")
    _common_options(p, suppress=True)
    p.add_argument("--figures", type=Path, default=None, help="directory for the heatmap")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = CliConfig(
        lexicon_path=args.lexicon or data.data_path(data.LEXICON),
        hierarchy_path=args.hierarchy or data.data_path(data.HIERARCHY),
        table1_path=args.table1 or data.data_path(data.TABLE1),
        threshold=args.threshold,
        output_format=args.format,
    )
    try:
        grammar = load_config(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.command == "parse":
        return cmd_parse(grammar, config, args.sentence, sys.stdout, sys.stderr)
    if args.command == "corpus":
        corpus = args.corpus or data.data_path(data.CORPUS)
        return cmd_corpus(grammar, config, corpus, args.figures, sys.stdout, sys.stderr)
    return cmd_cooc(grammar, config, args.figures, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
