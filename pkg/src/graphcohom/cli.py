"""Command-line front end: ``graphcohom <command> ...``.

Exit codes: 0 success, 1 a check or computation failed, 2 usage, input or
resource-bound error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import coboundary as cb
from .cohomology import ResourceBoundExceeded, boundary_matrix, cohomology_dim, enumerate_graphs
from .combination import format_combination, parse_combination
from .generators import MonomialSpec, line_generator, sym_generator, wheel_generator
from .graph import parse_graph
from .linalg import format_triplets
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_combination(path: str | None):
    try:
        return parse_combination(_read(path))
    except ValueError as exc:
        raise UsageError(f"bad combination input: {exc}") from exc


def cmd_cohomology(args) -> int:
    report = cohomology_dim(args.n, include_one=args.include_one)
    if args.matrix:
        # rows follow the full basis on n+1 vertices so indices are stable
        _write(args.matrix, format_triplets(boundary_matrix(args.n, enumerate_graphs(args.n + 1))))
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        data = report.to_json()
        for key in ("n", "basis_size", "basis_size_next", "rank_d_n", "rank_d_prev", "ker_dim", "h_dim", "expected"):
            print(f"{key:<16}{data[key]}")
        for rep in data["representatives"]:
            print(f"{'representative':<16}{rep.splitlines()[0]}" + (" ..." if "\n" in rep else ""))
    return EXIT_OK if report.h_dim == report.expected else EXIT_FAIL


def cmd_d(args) -> int:
    c = _read_combination(args.inp)
    op = cb.coboundary_alt if args.alt else cb.coboundary
    try:
        image = op(c, allow_nonsymmetric=args.allow_nonsymmetric)
    except cb.NonSymmetricInput as exc:
        raise UsageError(f"input is not symmetric: {exc} (use --allow-nonsymmetric to apply the formula anyway)") from exc
    _write(args.out, format_combination(image))
    return EXIT_OK


def cmd_homotopy(args) -> int:
    c = _read_combination(args.inp)
    _write(args.out, format_combination(cb.homotopy_combination(c)))
    return EXIT_OK


def cmd_order(args) -> int:
    try:
        g = parse_graph(args.graph)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(cb.format_order(cb.sorted_order(cb.graph_order(g))))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.wheel is not None:
        c = wheel_generator(args.wheel)
    elif args.line is not None:
        c = line_generator(args.line)
    else:
        try:
            spec = MonomialSpec.from_json(json.loads(args.spec))
        except (ValueError, TypeError, AttributeError) as exc:
            raise UsageError(f"bad --spec: {exc}") from exc
        c = sym_generator(spec)
    _write(args.out, format_combination(c))
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .oracle.checks import scalar_agreement

    delta = _read_combination(args.delta)
    if not cb.is_symmetric(delta):
        raise UsageError("oracle needs a symmetric combination")
    result = scalar_agreement(delta, args.trials, args.seed, args.d, args.max_degree)
    print(json.dumps(result.to_json()))
    ok = result.agree_scalar and (result.agree_full or not args.full_component)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.seed)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, default=str))
    else:
        sys.stdout.write(report.format_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphcohom", description="Exact cohomology of symmetrized vector graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", help="dimension of the degree-n cohomology")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--include-one", dest="include_one", action="store_true", default=True)
    group.add_argument("--exclude-one", dest="include_one", action="store_false")
    p.add_argument("--json", action="store_true")
    p.add_argument("--matrix", metavar="FILE", help="write the coboundary matrix as 'row col p/q' triplets")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("d", help="apply the coboundary to a combination file")
    p.add_argument("--in", dest="inp", metavar="FILE", help="input combination (default stdin)")
    p.add_argument("--out", metavar="FILE", help="output file (default stdout)")
    p.add_argument("--alt", action="store_true", help="use the grouped in/out formula")
    p.add_argument("--allow-nonsymmetric", action="store_true")
    p.set_defaults(func=cmd_d)

    p = sub.add_parser("homotopy", help="contract the arrow leaving the last 1+ vertex, term by term")
    p.add_argument("--in", dest="inp", metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_homotopy)

    p = sub.add_parser("order", help="print the order word of a graph")
    p.add_argument("--graph", required=True, help="graph literal, e.g. 'graph n=3; edges = 1->2, 2->3'")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("gen", help="emit a symmetrized generator")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--wheel", type=int, metavar="K")
    group.add_argument("--line", type=int, metavar="L")
    group.add_argument("--spec", metavar="JSON", help='e.g. \'{"even_lines": {"0": 1}, "odd_lines": [1], "wheels": [3]}\'')
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="compare the graph coboundary with the symbolic Chevalley coboundary")
    p.add_argument("--delta", metavar="FILE", help="symmetric combination (default stdin)")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--full-component", action="store_true", help="also require agreement of whole polyvectors")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ResourceBoundExceeded) as exc:
        print(f"graphcohom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - surfaced as a computational failure
        print(f"graphcohom: internal error: {exc!r}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
