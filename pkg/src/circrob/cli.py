"""Command-line interface: recognize, verify, oracle, generate, bench.

Exit codes: 0 when the requested property holds, 1 when it does not, 2 on
input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

from .core import DissimilarityMatrix, MatrixFormatError, canonicalize, load_matrix
from .generators import (
    GenerationError,
    GeneratorSpec,
    circle_instance,
    counterexample_fixture,
    perturb,
    two_cluster_instance,
)
from .oracle import MAX_CLASSIFY_N, oracle_classify
from .recognition import compatible_orders, find_compatible_order
from .verification import verify

_CLASSES = ("quasi", "strict-quasi", "circular", "strict-circular")
_FLAG_BY_CLASS = {
    "quasi": "quasi",
    "strict-quasi": "strict_quasi",
    "circular": "circular",
    "strict-circular": "strict_circular",
}


def _fmt_order(seq) -> str:
    return ",".join(str(i) for i in seq)


def _print(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _load(path: str, eps: float) -> DissimilarityMatrix:
    return load_matrix(Path(path).read_text(), eps=eps)


def _cmd_recognize(args) -> int:
    try:
        D = _load(args.input, args.epsilon)
    except (OSError, MatrixFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.cls in ("quasi", "circular"):
        # no construction algorithm exists for the non-strict classes; fall
        # back to exhaustive search when it is feasible
        if D.n > MAX_CLASSIFY_N:
            print(
                f"error: non-strict recognition is only available through the"
                f" exhaustive oracle (n <= {MAX_CLASSIFY_N}); got n={D.n}",
                file=sys.stderr,
            )
            return 2
        cls = oracle_classify(D, eps=args.epsilon)
        orders = cls.quasi_circular if args.cls == "quasi" else cls.circular_by_arcs
        holds = len(orders) > 0
        payload = {
            "class": args.cls,
            "holds": holds,
            "orders": [list(o.seq) for o in orders],
        }
        _print(
            payload,
            args.json,
            [
                f"class {args.cls}: {'holds' if holds else 'does not hold'}",
                "compatible orders: "
                + (" | ".join(_fmt_order(o.seq) for o in orders) or "(none)"),
            ],
        )
        return 0 if holds else 1

    candidate = find_compatible_order(D, eps=args.epsilon)
    report = verify(D, candidate, eps=args.epsilon, workers=args.workers)
    order_set = compatible_orders(D, args.cls, eps=args.epsilon)
    holds = len(order_set.orders) > 0
    payload = {
        "class": args.cls,
        "holds": holds,
        "candidate": list(candidate.seq),
        "report": report.to_json_dict(),
        "order_set": order_set.to_json_dict(),
    }
    lines = [
        f"candidate order: {_fmt_order(candidate.seq)}",
        f"quasi: {report.quasi}  strict-quasi: {report.strict_quasi}"
        f"  circular: {report.circular}  strict-circular: {report.strict_circular}",
        f"class {args.cls}: {'holds' if holds else 'does not hold'}",
        "compatible orders: "
        + (" | ".join(_fmt_order(o.seq) for o in order_set.orders) or "(none)"),
    ]
    if order_set.bipartition is not None:
        N, F, delta = order_set.bipartition
        lines.append(f"bipartition: N={sorted(N)} F={sorted(F)} delta={delta}")
    _print(payload, args.json, lines)
    return 0 if holds else 1


def _cmd_verify(args) -> int:
    try:
        D = _load(args.input, args.epsilon)
        indices = [int(t) for t in args.order.replace(",", " ").split()]
        order = canonicalize(indices)
    except (OSError, MatrixFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if len(order) != D.n:
        print(f"error: order has {len(order)} indices, matrix has {D.n}", file=sys.stderr)
        return 2
    report = verify(D, order, eps=args.epsilon, workers=args.workers)
    payload = report.to_json_dict()
    payload["order"] = list(order.seq)
    _print(
        payload,
        args.json,
        [
            f"order (canonical): {_fmt_order(order.seq)}",
            f"quasi: {report.quasi}",
            f"strict-quasi: {report.strict_quasi}",
            f"circular: {report.circular}",
            f"strict-circular: {report.strict_circular}",
        ],
    )
    return 0 if getattr(report, _FLAG_BY_CLASS[args.cls]) else 1


def _cmd_oracle(args) -> int:
    try:
        D = _load(args.input, args.epsilon)
    except (OSError, MatrixFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if D.n > MAX_CLASSIFY_N:
        print(f"error: oracle is capped at n <= {MAX_CLASSIFY_N}; got n={D.n}", file=sys.stderr)
        return 2
    cls = oracle_classify(D, eps=args.epsilon)
    payload = cls.to_json_dict()
    lines = [
        f"{name}: " + (" | ".join(_fmt_order(o) for o in orders) or "(none)")
        for name, orders in payload.items()
    ]
    _print(payload, args.json, lines)
    return 0


def _matrix_text(D: DissimilarityMatrix) -> str:
    lines = [str(D.n)]
    for row in D.values:
        lines.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def _cmd_generate(args) -> int:
    params: dict = {}
    try:
        if args.kind == "fixture":
            D = counterexample_fixture()
        elif args.kind in ("circle-arc", "circle-chord"):
            D = circle_instance(args.n, args.kind.split("-")[1])
        elif args.kind == "two-cluster":
            k = args.k if args.k is not None else args.n // 2
            l = args.l if args.l is not None else args.n - args.n // 2
            params = {"k": k, "l": l}
            D = two_cluster_instance(k, l, seed=args.seed)
        elif args.kind == "perturbed":
            D = perturb(circle_instance(args.n, "chord"), args.epsilon, seed=args.seed)
        else:  # pragma: no cover - argparse restricts choices
            raise ValueError(f"unknown kind {args.kind}")
    except (ValueError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    spec = GeneratorSpec(
        kind=args.kind, n=D.n, seed=args.seed, epsilon=args.epsilon, params=params
    )
    out = Path(args.output)
    out.write_text(_matrix_text(D))
    out.with_suffix(out.suffix + ".json").write_text(
        json.dumps(spec.to_json_dict(), indent=2) + "\n"
    )
    print(f"wrote n={D.n} matrix to {out}")
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(t) for t in args.sizes.replace(",", " ").split()]
    rows = ["n,construct_s,recognize_s"]
    for n in sizes:
        D = circle_instance(n, args.metric)
        t_construct = []
        t_recognize = []
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            order = find_compatible_order(D)
            t_construct.append(time.perf_counter() - t0)
            t0 = time.perf_counter()
            order = find_compatible_order(D)
            verify(D, order)
            t_recognize.append(time.perf_counter() - t0)
        rows.append(
            f"{n},{statistics.median(t_construct):.6f},{statistics.median(t_recognize):.6f}"
        )
    csv = "\n".join(rows) + "\n"
    if args.csv:
        Path(args.csv).write_text(csv)
        print(f"wrote {args.csv}")
    else:
        print(csv, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circrob",
        description="Recognize and verify circular Robinson dissimilarity spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="construct and check compatible orders")
    p.add_argument("--input", required=True, help="matrix file (format A, B, or CSV)")
    p.add_argument("--class", dest="cls", choices=_CLASSES, default="strict-quasi")
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--workers", type=int, default=1,
                   help="thread count for the row scan; output is identical")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("verify", help="check one explicit order")
    p.add_argument("--input", required=True)
    p.add_argument("--order", required=True, help="comma-separated indices")
    p.add_argument("--class", dest="cls", choices=_CLASSES, default="quasi")
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--workers", type=int, default=1,
                   help="thread count for the row scan; output is identical")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive classification for small n")
    p.add_argument("--input", required=True)
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("generate", help="emit a test instance")
    p.add_argument(
        "--kind",
        required=True,
        choices=("circle-arc", "circle-chord", "two-cluster", "perturbed", "fixture"),
    )
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--k", type=int, default=None, help="first cluster size (two-cluster)")
    p.add_argument("--l", type=int, default=None, help="second cluster size (two-cluster)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.0, help="perturbation magnitude")
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bench", help="timing sweep on circle instances")
    p.add_argument("--sizes", default="500,1000,2000,4000,8000")
    p.add_argument("--metric", choices=("arc", "chord"), default="chord")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
