"""``shellab`` command line.

Data goes to stdout, diagnostics to stderr.  Exit status: 0 yes, 1 no,
2 undecided, 3 usage error, 4 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .classes import classify
from .codim import build_gamma, graph_metrics, is_harmonious, search_pure_ss_via_gamma, to_dot
from .complex import ComplexError, SimplicialComplex, complement_complex, expansion
from .hassign import search_shellable_via_h, search_strongly_shellable_via_h
from .ideals import facet_ideal, has_linear_quotients, search_linear_quotient_order
from .io import FormatError, format_complex, parse_complex, parse_poset
from .posets import PosetError, bounded_extension, interval, order_complex, rank_selected
from .search import ENV_MAX_NODES, SearchResult, Status, default_max_nodes
from .shelling import (
    OrderError, is_shelling_order, is_strong_shelling_order, search_shelling, search_strong_shelling,
)

EXIT = {Status.YES: 0, Status.NO: 1, Status.UNDECIDED: 2}
EXIT_USAGE = 3
EXIT_INPUT = 4


class _Parser(argparse.ArgumentParser):
    # argparse's own exit code 2 would read as "undecided"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _InputError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror}") from None


def _load_complex(path: str):
    parsed = parse_complex(_read(path))
    for line in parsed.drop_report():
        print(f"{path}: {line}", file=sys.stderr)
    return parsed


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")


def _facets(cx: SimplicialComplex) -> list[list[int]]:
    return [list(s) for s in cx.facet_sets()]


def certificate(question: str, res: SearchResult, facets: list, **more) -> dict:
    out = {
        "question": question,
        "answer": res.status.value,
        "order": list(res.order) if res.order is not None else None,
    }
    out.update(more)
    out["stats"] = {"nodes": res.nodes, "millis": round(res.millis, 3)}
    out["facets"] = facets
    return out


def _verdict(question: str, ok: bool, facets: list, **more) -> tuple[dict, Status]:
    status = Status.YES if ok else Status.NO
    return certificate(question, SearchResult(status), facets, **more), status


def cmd_check_order(args) -> Status:
    parsed = _load_complex(args.file)
    cx = parsed.complex
    order = parsed.listed if args.listed else tuple(args.order)
    if len(order) != len(cx):
        hint = "; listed orders need files without dropped sets" if args.listed else ""
        raise _InputError(f"order covers {len(order)} of {len(cx)} facets{hint}")
    check = is_strong_shelling_order if args.strong else is_shelling_order
    question = "strong_shelling_order" if args.strong else "shelling_order"
    payload, status = _verdict(question, check(cx, order), _facets(cx))
    payload["order"] = list(order)
    _emit(payload)
    return status


def cmd_search(args) -> Status:
    cx = _load_complex(args.file).complex
    if args.via == "gamma":
        if not args.strong:
            raise _InputError("--via gamma decides strong shellability; add --strong")
        res = search_pure_ss_via_gamma(cx, args.max_nodes)
    else:
        run = search_strong_shelling if args.strong else search_shelling
        res = run(cx, args.max_nodes)
    _emit(certificate("strongly_shellable" if args.strong else "shellable", res, _facets(cx)))
    return res.status


def cmd_h_decide(args) -> Status:
    cx = _load_complex(args.file).complex
    run = search_strongly_shellable_via_h if args.strong else search_shellable_via_h
    res = run(cx, args.max_nodes)
    more = {"h_vector": list(res.extra["h_vector"])}
    if res.found:
        more["h_assignment"] = list(res.extra["h_assignment"])
        more["removal"] = list(res.extra["removal"])
    _emit(certificate("strongly_shellable" if args.strong else "shellable", res, _facets(cx), **more))
    return res.status


def cmd_gamma(args) -> Status:
    cx = _load_complex(args.file).complex
    graph = build_gamma(cx)
    harmonious = is_harmonious(cx)
    report = {"question": "harmonious", "answer": "yes" if harmonious else "no",
              "vertices": graph.size, "edges": len(graph.edges())}
    report.update(graph_metrics(graph).as_dict())
    report["facets"] = _facets(cx)
    if args.dot_file:
        with open(args.dot_file, "w", encoding="utf-8") as fh:
            fh.write(to_dot(graph))
    if args.dot:
        sys.stdout.write(to_dot(graph))
        print(json.dumps(report), file=sys.stderr)
    else:
        _emit(report)
    return Status.YES if harmonious else Status.NO


def cmd_classify(args) -> Status:
    cx = _load_complex(args.file).complex
    report = classify(cx, args.max_nodes)
    payload = report.as_dict()
    payload["facets"] = _facets(cx)
    _emit(payload)
    return Status.YES


def cmd_ideal(args) -> Status:
    cx = _load_complex(args.file).complex
    if args.complement:
        cx = complement_complex(cx)
    ideal = facet_ideal(cx)
    gens = [str(g) for g in ideal.generators]
    if not args.linear_quotients:
        _emit({"generators": gens})
        return Status.YES
    if args.order:
        payload, status = _verdict("linear_quotients", has_linear_quotients(ideal, args.order), _facets(cx))
        payload["order"] = list(args.order)
    else:
        res = search_linear_quotient_order(ideal, args.max_nodes)
        payload, status = certificate("linear_quotients", res, _facets(cx)), res.status
    payload["generators"] = gens
    _emit(payload)
    return status


def cmd_poset(args) -> Status:
    p = parse_poset(_read(args.file))
    if args.interval:
        lookup = {str(lab): i + 1 for i, lab in enumerate(p.labels)}
        try:
            lo, hi = (lookup[x] for x in args.interval)
        except KeyError as exc:
            raise _InputError(f"unknown element {exc.args[0]}") from None
        p = interval(p, lo, hi)
    if args.rank_select:
        p = rank_selected(p, args.rank_select)
    if args.bounded:
        p = bounded_extension(p)
    cx = order_complex(p)
    res = search_strong_shelling(cx, args.max_nodes)
    chains = [[str(p.labels[x - 1]) for x in s] for s in cx.facet_sets()]
    _emit(certificate("strongly_shellable", res, _facets(cx),
                      elements=[str(x) for x in p.labels], chains=chains))
    return res.status


def cmd_expand(args) -> Status:
    cx = _load_complex(args.file).complex
    sys.stdout.write(format_complex(expansion(cx, args.s)))
    return Status.YES


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-nodes", type=_positive, default=None,
                        help=f"search budget per search (default: ${ENV_MAX_NODES} or unlimited)")
    common.add_argument("--threads", type=_positive, default=1,
                        help="accepted for compatibility; searches run sequentially")

    parser = _Parser(prog="shellab", description="Decide and certify strong shellability.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text, file_help="facet-list file, '-' for stdin"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help=file_help)
        p.set_defaults(func=func)
        return p

    p = add("check-order", cmd_check_order, "verify a facet order")
    p.add_argument("--strong", action="store_true")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--order", type=int, nargs="+", help="0-based canonical facet indices")
    group.add_argument("--listed", action="store_true", help="use the order facets appear in the file")

    p = add("search", cmd_search, "search for a (strong) shelling order")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--via", choices=["backtrack", "gamma"], default="backtrack")

    p = add("h-decide", cmd_h_decide, "decide via h-assignments (pure complexes)")
    p.add_argument("--strong", action="store_true")

    p = add("gamma", cmd_gamma, "codimension-one graph report")
    p.add_argument("--dot", action="store_true", help="write DOT to stdout; the report goes to stderr")
    p.add_argument("--dot-file", metavar="PATH", help="write DOT to PATH")

    add("classify", cmd_classify, "membership in related complex classes")

    p = add("ideal", cmd_ideal, "facet ideal and linear quotients")
    p.add_argument("--linear-quotients", action="store_true")
    p.add_argument("--order", type=int, nargs="+", help="verify this generator order")
    p.add_argument("--complement", action="store_true", help="use the complement complex")

    p = add("poset", cmd_poset, "strong shellability of a poset's order complex",
            file_help="cover-list file ('a < b' per line), '-' for stdin")
    p.add_argument("--bounded", action="store_true", help="adjoin a bottom and a top first")
    p.add_argument("--rank-select", type=_positive, nargs="+", metavar="R")
    p.add_argument("--interval", nargs=2, metavar=("LO", "HI"))

    p = add("expand", cmd_expand, "write the s-expansion as a facet-list file")
    p.add_argument("--s", type=_positive, nargs="+", required=True, help="one multiplicity per vertex")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_nodes is None:
        try:
            args.max_nodes = default_max_nodes()
        except ValueError as exc:
            parser.error(str(exc))
    try:
        status = args.func(args)
    except (_InputError, FormatError, ComplexError, OrderError, PosetError) as exc:
        print(f"shellab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT[status]


if __name__ == "__main__":
    sys.exit(main())
