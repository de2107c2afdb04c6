"""``oddprime`` command-line tool.

Exit codes: 0 success / valid / found, 1 invalid / not found / refuted,
2 usage error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coprime import coprime_matching
from .core import Graph, Labeling, to_dot, verify_labeling
from .errors import InvalidParameters, NotAPrimeLabeling, OddPrimeError, ProvablyInfeasible
from .families import FAMILIES, build_family, make_spec
from .labelers import classify, label_family
from .rn import convert_prime_to_odd, rn_labeling, verify_rn
from .search import BUDGET_EXCEEDED, DEFAULT_BUDGET, DEFAULT_SEARCH_ORDER_LIMIT, FOUND, exhaustive_search, lemma2_check

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _json_arg(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: not valid JSON ({exc.msg})") from None


def _read_json(path: str, flag: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"{flag}: cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: {path} is not valid JSON ({exc.msg})") from None


def _load_graph(path: str) -> Graph:
    doc = _read_json(path, "--graph")
    try:
        return Graph.from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"--graph: {path} is not a graph document ({exc})") from None


def _load_labeling(path: str, flag: str) -> Labeling:
    doc = _read_json(path, flag)
    try:
        return Labeling.from_json(doc)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise UsageError(f"{flag}: {path} is not a labeling document ({exc})") from None


def _spec(args):
    params = _json_arg(args.params, "--params")
    if not isinstance(params, dict):
        raise UsageError("--params must be a JSON object")
    return make_spec(args.family, params)


def _output_format(args) -> str:
    fmt = getattr(args, "format", None)
    if fmt:
        return fmt
    out = getattr(args, "out", None)
    return "dot" if out and out.endswith(".dot") else "json"


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, doc) -> None:
    _emit(args, json.dumps(doc, indent=2))


def cmd_generate(args) -> int:
    g = build_family(_spec(args))
    if _output_format(args) == "dot":
        _emit(args, to_dot(g))
    else:
        _emit_json(args, g.to_json())
    return EXIT_OK


def cmd_label(args) -> int:
    spec = _spec(args)
    try:
        ell = label_family(spec)
    except ProvablyInfeasible as exc:
        _emit_json(args, {"infeasible": exc.reason, "beta": exc.beta, "bound": exc.bound})
        return EXIT_NEGATIVE
    doc = ell.to_json()
    code = EXIT_OK
    if args.verify:
        report = verify_labeling(build_family(spec), ell)
        doc["report"] = report.to_json()
        code = EXIT_OK if report.is_valid else EXIT_NEGATIVE
    _emit_json(args, doc)
    return code


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    ell = _load_labeling(args.labeling, "--labeling")
    report = verify_labeling(g, ell)
    _emit_json(args, report.to_json())
    return EXIT_OK if report.is_valid else EXIT_NEGATIVE


def cmd_search(args) -> int:
    g = _load_graph(args.graph)
    # the search is always sequential, so --deterministic only documents intent
    outcome = exhaustive_search(g, budget=args.budget, max_order=args.max_order)
    _emit_json(args, outcome.to_json())
    if outcome.verdict == FOUND:
        return EXIT_OK
    if outcome.verdict == BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_NEGATIVE


def cmd_rn(args) -> int:
    ell = rn_labeling(args.n)
    valid = verify_rn(args.n).is_valid
    if args.emit_graph:
        g = build_family(make_spec("maximal-prime", {"n": args.n}))
        if _output_format(args) == "dot":
            _emit(args, to_dot(g, ell, graph_name=f"R{args.n}"))
        else:
            _emit_json(args, {"graph": g.to_json(), **ell.to_json()})
    else:
        _emit_json(args, ell.to_json())
    return EXIT_OK if valid else EXIT_NEGATIVE


def cmd_convert(args) -> int:
    g = _load_graph(args.graph)
    prime = _load_labeling(args.prime_labeling, "--prime-labeling")
    try:
        ell = convert_prime_to_odd(g, prime)
    except NotAPrimeLabeling as exc:
        _emit_json(args, {"error": str(exc), "violating_edges": [list(e) for e in exc.violating_edges]})
        return EXIT_NEGATIVE
    _emit_json(args, ell.to_json())
    return EXIT_OK


def cmd_check_bound(args) -> int:
    result = lemma2_check(_load_graph(args.graph))
    _emit_json(args, result.to_json())
    return EXIT_OK if result.passed else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    _emit_json(args, classify(_spec(args)).to_json())
    return EXIT_OK


def cmd_match(args) -> int:
    h = coprime_matching(args.n, args.a, args.b)
    _emit_json(args, {"mapping": {str(x): y for x, y in h.mapping.items()}})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddprime", description="Odd prime graph labelings.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func, subparser=p)
        p.add_argument("--out", help="write output to this path instead of stdout")
        return p

    def family_args(p):
        p.add_argument("--family", required=True, choices=sorted(FAMILIES))
        p.add_argument("--params", required=True, help='family parameters as a JSON object, e.g. \'{"k":6,"n":5}\'')

    p = add("generate", cmd_generate, "build a family graph")
    family_args(p)
    p.add_argument("--format", choices=["json", "dot"])

    p = add("label", cmd_label, "construct an odd prime labeling for a family graph")
    family_args(p)
    p.add_argument("--verify", action="store_true", help="also run the verifier and include its report")

    p = add("verify", cmd_verify, "check a labeling against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)

    p = add("search", cmd_search, "exhaustively search for an odd prime labeling")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node limit (default 10^8)")
    p.add_argument("--max-order", type=int, default=DEFAULT_SEARCH_ORDER_LIMIT)
    p.add_argument("--deterministic", action="store_true", help="sequential search with reproducible node counts")

    p = add("rn", cmd_rn, "odd prime labeling of the maximal prime graph R_n (n <= 50)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit-graph", action="store_true", help="emit R_n itself together with its labels")
    p.add_argument("--format", choices=["json", "dot"])

    p = add("convert", cmd_convert, "turn a prime labeling into an odd prime labeling")
    p.add_argument("--graph", required=True)
    p.add_argument("--prime-labeling", required=True)

    p = add("check-bound", cmd_check_bound, "compare the independence number with the multiples of 3 to place")
    p.add_argument("--graph", required=True)

    p = add("classify", cmd_classify, "report the known verdict for a family instance")
    family_args(p)

    p = add("match", cmd_match, "coprime matching of 1, 3, ..., 2n-1 onto a, a+b, ...")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidParameters) as exc:
        args.subparser.print_usage(sys.stderr)
        print(f"oddprime {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OddPrimeError as exc:
        print(f"oddprime {args.command}: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
