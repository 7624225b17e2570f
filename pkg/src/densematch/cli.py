"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 resource cap, 4 oracle/solution
inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .counting import (
    DEFAULT_MAX_VERTICES,
    count_pm_bipartite,
    count_pm_general,
    exact_oracle,
    matchings_by_size,
)
from .errors import (
    GraphError,
    OracleInconsistencyError,
    ResourceLimitError,
    SingularSystemError,
)
from .exactalg import (
    ExactMatrix,
    build_A,
    build_B,
    build_C,
    build_Q,
    c_is_trimmed_b,
    central_binomial_factorization_holds,
    central_binomial_lower,
    checkerboard_blocks_expected,
    checkerboard_law_holds,
    checkerboard_split,
    determinant,
    leading_principal_minors,
    pascal_factorization_holds,
    pascal_lower,
    schur_split_holds,
)
from .graphs import (
    BipartiteMultigraph,
    augment_alpha,
    augment_beta,
    bipartite_independence_at_most,
    independence_at_most,
    parse_graph,
)
from .reduction import DEFAULT_MAX_N, reduce_alpha, reduce_beta, verify_roundtrip

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_INCONSISTENT = 0, 2, 3, 4
DEFAULT_MAX_PERMANENT_SIDE = 20

MATRIX_BUILDERS = {
    "A": build_A,
    "B": build_B,
    "C": build_C,
    "Q": build_Q,
    "pascalL": pascal_lower,
    "cbinL": central_binomial_lower,
}


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _ints(xs) -> list[str]:
    return [str(x) for x in xs]


def _matrix_doc(m: ExactMatrix) -> list[list[str]]:
    return [_ints(r) for r in m.rows]


def _bracketed(m: ExactMatrix) -> str:
    return "[" + ",".join("[" + ",".join(_ints(r)) + "]" for r in m.rows) + "]"


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph(text)


def _load_bipartite(path: str) -> BipartiteMultigraph:
    g = _load(path)
    if not isinstance(g, BipartiteMultigraph):
        raise CliError("this command needs a 'bipartite' graph file")
    return g


def cmd_count(args) -> tuple[dict, list[str]]:
    g = _load(args.file)
    if args.mode == "by-size":
        if not isinstance(g, BipartiteMultigraph):
            raise CliError("--mode by-size is only defined for bipartite graphs")
        counts = list(matchings_by_size(g))
        return {"kind": "count", "mode": "by-size", "counts": _ints(counts)}, [
            " ".join(_ints(counts))
        ]
    if isinstance(g, BipartiteMultigraph):
        side = max(g.n_left, g.n_right)
        cap = DEFAULT_MAX_PERMANENT_SIDE if args.max_n is None else args.max_n
        if g.balanced and side > cap:
            raise ResourceLimitError(f"permanent of size {side} exceeds cap {cap}")
        value = count_pm_bipartite(g)
    else:
        value = count_pm_general(g, max_vertices=args.max_vertices)
    return {"kind": "count", "mode": "perfect", "count": str(value)}, [str(value)]


def cmd_reduce(args) -> tuple[dict, list[str]]:
    g = _load_bipartite(args.file)
    cap = DEFAULT_MAX_N[args.construction] if args.max_n is None else args.max_n
    if g.balanced and g.n_left > cap:
        raise ResourceLimitError(
            f"n = {g.n_left} exceeds the {args.construction} cap of {cap}"
        )
    if args.verify:
        report = verify_roundtrip(
            g, args.construction, max_n=cap, max_vertices=args.max_vertices
        )
    else:
        def oracle(h):
            return exact_oracle(h, max_vertices=args.max_vertices)

        reducer = reduce_beta if args.construction == "beta" else reduce_alpha
        report = reducer(g, oracle)
    doc = {
        "kind": "reduce",
        "construction": report.construction,
        "n": str(report.n),
        "p": _ints(report.p),
        "m": _ints(report.recovered),
        "oracle_calls": str(report.oracle_calls),
    }
    lines = [
        f"construction: {report.construction}",
        f"p = {' '.join(_ints(report.p))}",
        f"m = {' '.join(_ints(report.recovered))}",
        f"oracle_calls = {report.oracle_calls}",
    ]
    if report.verified is not None:
        verdict = "OK" if report.verified else "MISMATCH"
        doc["verified"] = report.verified
        doc["verdict"] = verdict
        lines.append(f"verdict: {verdict}")
    return doc, lines


def _factor_checks(kind: str, n: int) -> dict[str, bool]:
    if kind in ("A", "pascalL"):
        return {"A_n = D L L^T D": pascal_factorization_holds(n)}
    if kind == "cbinL":
        return {"V_m = L diag(1,2,...,2) L^T": central_binomial_factorization_holds(n)}
    if kind == "B":
        return {
            "B_n = U o V": schur_split_holds(n),
            "V = L diag(1,2,...,2) L^T": central_binomial_factorization_holds(n // 2),
        }
    if kind == "C":
        return {
            "C_n = B_n without first row and last column": c_is_trimmed_b(n),
            "B_n = U o V": schur_split_holds(n),
        }
    return {"permuted Q = diag(B o B, C o C)": checkerboard_law_holds(n)}


def cmd_matrix(args) -> tuple[dict, list[str]]:
    builder = MATRIX_BUILDERS[args.kind]
    if args.n < 0:
        raise CliError("--n must be nonnegative")
    try:
        m = builder(args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    doc = {"kind": "matrix", "matrix_kind": args.kind, "n": str(args.n),
           "matrix": _matrix_doc(m)}
    lines = [m.format()] if m.rows else ["(empty matrix)"]
    check = args.check
    if check == "pd":
        if not m.is_symmetric():
            raise CliError(f"matrix {args.kind} is not symmetric; pd check undefined")
        minors = leading_principal_minors(m)
        pd = all(d > 0 for d in minors)
        verdict = "positive definite" if pd else "not positive definite"
        doc.update(minors=_ints(minors), positive_definite=pd)
        lines += [f"minors: {' '.join(_ints(minors))}", f"verdict: {verdict}"]
    elif check == "det":
        d = determinant(m)
        doc["det"] = str(d)
        lines.append(f"det: {d}")
    elif check == "factor":
        results = _factor_checks(args.kind, args.n)
        ok = all(results.values())
        doc["factor"] = {name: ("PASS" if v else "FAIL") for name, v in results.items()}
        doc["factor_verdict"] = "PASS" if ok else "FAIL"
        lines += [f"{name}: {'PASS' if v else 'FAIL'}" for name, v in results.items()]
        lines.append(f"factor: {'PASS' if ok else 'FAIL'}")
    elif check == "blocks":
        if args.kind != "Q":
            raise CliError("--check blocks applies to --kind Q only")
        top, bottom, off_zero = checkerboard_split(m, args.n)
        exp_top, exp_bottom = checkerboard_blocks_expected(args.n)
        b_idx, c_idx = (args.n, args.n) if args.n % 2 == 0 else (args.n - 1, args.n + 1)
        doc.update(
            top_left=_matrix_doc(top),
            bottom_right=_matrix_doc(bottom),
            off_blocks_zero=off_zero,
            top_left_is_schur_square_of_B=top == exp_top,
            bottom_right_is_schur_square_of_C=bottom == exp_bottom,
        )
        lines += [
            f"top-left: {_bracketed(top)}",
            f"bottom-right: {_bracketed(bottom)}",
            f"off-blocks zero: {str(off_zero).lower()}",
            f"top-left = B_{b_idx} o B_{b_idx}: {str(top == exp_top).lower()}",
            f"bottom-right = C_{c_idx} o C_{c_idx}: {str(bottom == exp_bottom).lower()}",
        ]
    return doc, lines


def cmd_verify_class(args) -> tuple[dict, list[str]]:
    g = _load_bipartite(args.file)
    if args.i < 0:
        raise CliError("--i must be nonnegative")
    if args.construction == "beta":
        h = augment_beta(g, args.i)
        holds = bipartite_independence_at_most(h, 2)
        size = f"{h.n_left}+{h.n_right}"
        label = "beta<=2"
    else:
        h = augment_alpha(g, args.i)
        holds = independence_at_most(h, 2)
        size = str(h.n_vertices)
        label = "alpha<=2"
    doc = {"kind": "verify-class", "construction": args.construction,
           "i": str(args.i), "vertices": size, label: holds}
    return doc, [f"vertices: {size}", f"{label}: {str(holds).lower()}"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-n", type=int, default=None,
                        help="cap on the side size n")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES,
                        help="cap on vertices for general-graph counting")

    parser = argparse.ArgumentParser(
        prog="densematch",
        description="Exact perfect-matching counting and dense-graph reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count matchings of a graph file")
    p.add_argument("--file", required=True)
    p.add_argument("--mode", choices=["perfect", "by-size"], default="perfect")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("reduce", parents=[common],
                       help="recover m_0..m_n through a dense-graph reduction")
    p.add_argument("--file", required=True)
    p.add_argument("--construction", choices=["beta", "alpha"], required=True)
    p.add_argument("--verify", action="store_true",
                   help="compare against brute-force enumeration")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("matrix", parents=[common], help="print and check a structured matrix")
    p.add_argument("--kind", choices=list(MATRIX_BUILDERS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", choices=["pd", "det", "factor", "blocks"])
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify-class", parents=[common],
                       help="check alpha<=2 / beta<=2 for an augmented graph")
    p.add_argument("--file", required=True)
    p.add_argument("--construction", choices=["beta", "alpha"], required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_verify_class)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc, lines = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (OracleInconsistencyError, SingularSystemError) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
