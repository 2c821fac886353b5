"""Command-line front end: ``abtaxon classify | decompose | parse | oracle``.

Exit codes: 0 success (whatever the verdicts), 1 parse or validation error,
2 failed precondition, 3 resource budget exceeded, 4 oracle counterexample
or corpus mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import __version__
from .classifier import PreconditionError, explain, extract_elementary_plus_bassian
from .dsl import ParseError, parse_group_expr, render
from .model import ValidationError
from .oracle.checks import (
    DEFAULT_SEED,
    bassian_sweep,
    embedding_equivalence_sweep,
    hom_count_sweep,
    lemma_basic_sample,
    lemma_basic_sweep,
)
from .oracle.finite import BudgetExceededError, budget_ceiling

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# --------------------------------------------------------------------------
# documents


def report_document(text: str, strict: bool = False, decompose: bool = False) -> dict:
    """The machine-readable report, keys in their fixed order."""
    g = parse_group_expr(text)
    rep = explain(g, strict=strict)
    decomposition = None
    if decompose:
        e, h = extract_elementary_plus_bassian(g)
        decomposition = {"elementary": render(e), "bassian": render(h)}
    return {
        "inputText": text,
        "canonicalForm": render(g),
        "invariants": rep.profile.to_json(),
        "verdicts": {name: v.to_json() for name, v in rep.verdicts},
        "decomposition": decomposition,
        "toolVersion": __version__,
        "strictnessFlag": strict,
    }


def dumps(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2)


def _table(rows) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _human_report(doc: dict) -> str:
    head = [("input", doc["inputText"]), ("canonical", doc["canonicalForm"])]
    if doc["strictnessFlag"]:
        head.append(("mode", "strict (derived rules off)"))
    inv_rows = [(k, json.dumps(v, ensure_ascii=False)) for k, v in doc["invariants"].items()]
    verdict_rows = [
        (name, f"{v['value']:<7} {v['citation']:<20} {v['detail']}") for name, v in doc["verdicts"].items()
    ]
    parts = [_table(head), "invariants:", _indent(_table(inv_rows)), "verdicts:", _indent(_table(verdict_rows))]
    if doc["decomposition"] is not None:
        d = doc["decomposition"]
        parts += ["decomposition:", _indent(_table([("E", d["elementary"]), ("H", d["bassian"])]))]
    return "\n".join(parts)


def _indent(text: str) -> str:
    return "\n".join("  " + line for line in text.splitlines())


# --------------------------------------------------------------------------
# corpus


def load_corpus(path: str = None) -> dict:
    if path:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(resources.files("abtaxon").joinpath("data/corpus.json").read_text(encoding="utf-8"))


def check_corpus(corpus: dict, strict: bool = False) -> list:
    """Mismatches as (expr, predicate, expected, got); empty when all agree."""
    names = corpus["predicates"]
    bad = []
    for entry in corpus["entries"]:
        rep = explain(parse_group_expr(entry["expr"]), strict=strict)
        for name, want in zip(names, entry["expect"]):
            v = rep[name]
            got = f"{v.value.value} {v.citation.value}"
            if got != want:
                bad.append((entry["expr"], name, want, got))
    return bad


# --------------------------------------------------------------------------
# commands


def cmd_classify(args, out) -> int:
    if args.corpus is not None:
        corpus = load_corpus(args.corpus or None)
        bad = check_corpus(corpus, args.strict_paper)
        if args.json:
            docs = [report_document(e["expr"], args.strict_paper) for e in corpus["entries"]]
            out.write(dumps({"reports": docs, "mismatches": [list(b) for b in bad]}) + "\n")
        else:
            for expr, name, want, got in bad:
                out.write(f"MISMATCH {expr}: {name} expected {want}, got {got}\n")
            out.write(f"corpus entries: {len(corpus['entries'])}; mismatches: {len(bad)}\n")
        return EXIT_MISMATCH if bad else EXIT_OK
    if args.expr is None:
        raise _Fail(EXIT_PARSE, "classify needs an expression or --corpus")
    doc = report_document(args.expr, args.strict_paper)
    out.write((dumps(doc) if args.json else _human_report(doc)) + "\n")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    doc = report_document(args.expr, args.strict_paper, decompose=True)
    out.write((dumps(doc) if args.json else _human_report(doc)) + "\n")
    return EXIT_OK


def cmd_parse(args, out) -> int:
    g = parse_group_expr(args.expr)
    if args.json:
        doc = {"inputText": args.expr, "canonicalForm": render(g)}
        if args.ast:
            doc["terms"] = [{"atom": str(a), "multiplicity": str(m)} for a, m in g.terms]
        out.write(dumps(doc) + "\n")
        return EXIT_OK
    out.write(render(g) + "\n")
    if args.ast:
        out.write(_table([(repr(a), repr(m)) for a, m in g.terms]) + "\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    budget = budget_ceiling()
    job = args.job
    if job == "bassian-sweep":
        rep = bassian_sweep(_need(args.max_order, "--max-order"), budget)
        scope = f"all orders <= {args.max_order}"
    elif job == "hom-count":
        rep = hom_count_sweep(_need(args.max_order, "--max-order"), budget)
        scope = f"all pairs of orders <= {args.max_order}"
    elif job == "embedding-equiv":
        p, e = _need(args.p, "--p"), _need(args.max_exp, "--max-exp")
        rep = embedding_equivalence_sweep(p, e, budget)
        scope = f"all {p}-group pairs of order <= {p}^{e}"
    else:
        p = _need(args.p, "--p")
        if args.exhaustive:
            mo = args.max_order or 256
            rep = lemma_basic_sweep(p, mo, budget)
            scope = f"every (B, C) with |B + C| <= {mo}, every subgroup"
        else:
            seed = DEFAULT_SEED if args.seed is None else args.seed
            rep = lemma_basic_sample(p, _need(args.trials, "--trials"), seed, args.max_order or 256)
            scope = f"{args.trials} random subgroups, seed {seed}"
    if args.json:
        out.write(dumps(rep.to_json()) + "\n")
    else:
        rows = [
            ("job", rep.job),
            ("checked", f"{rep.checked} ({scope})"),
            ("subchecks", str(rep.subchecks)),
            ("counterexamples", str(len(rep.counterexamples))),
            ("wall time", f"{rep.seconds:.2f} s"),
        ]
        out.write(_table(rows) + "\n")
        for c in rep.counterexamples[:20]:
            out.write(f"  counterexample: {c}\n")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def _need(value, flag):
    if value is None:
        raise _Fail(EXIT_PARSE, f"missing required option {flag}")
    return value


# --------------------------------------------------------------------------
# argument parsing


def _add_globals(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    parser.add_argument(
        "--strict-paper", action="store_true", default=d(False), help="disable the derived rules N4 and N5"
    )
    parser.add_argument("--seed", type=int, default=d(None), help="RNG seed for sampled jobs")
    parser.add_argument("--max-order", type=int, default=d(None), help="largest group order for oracle jobs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abtaxon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"abtaxon {__version__}")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify an expression")
    c.add_argument("expr", nargs="?")
    c.add_argument("--corpus", nargs="?", const="", default=None, metavar="PATH", help="run the bundled (or given) corpus")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("decompose", parents=[common], help="split as elementary + Bassian")
    d.add_argument("expr")
    d.set_defaults(func=cmd_decompose)

    p = sub.add_parser("parse", parents=[common], help="print the canonical form")
    p.add_argument("expr")
    p.add_argument("--ast", action="store_true", help="also print the term table")
    p.set_defaults(func=cmd_parse)

    o = sub.add_parser("oracle", parents=[common], help="finite verification jobs")
    jobs = o.add_subparsers(dest="job", required=True)
    for name in ("bassian-sweep", "hom-count", "embedding-equiv", "lemma-basic"):
        j = jobs.add_parser(name, parents=[common])
        if name in ("embedding-equiv", "lemma-basic"):
            j.add_argument("--p", type=int)
        if name == "embedding-equiv":
            j.add_argument("--max-exp", type=int)
        if name == "lemma-basic":
            j.add_argument("--trials", type=int)
            j.add_argument("--exhaustive", action="store_true", help="every (B, C) pair and every subgroup")
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors count as parse errors
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        err.write(f"precondition failed: {exc.condition}\n")
        return EXIT_PRECONDITION
    except BudgetExceededError as exc:
        err.write(f"resource limit: {exc} (set ABTAXON_MAX_ORDER to raise it)\n")
        return EXIT_RESOURCE
    except _Fail as exc:
        err.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
