"""``metaqaoa`` command line.

Exit codes: 0 success, 1 argument error, 2 capability error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import bench
from .baselines import exact_best
from .exceptions import ArgumentError, CapabilityError, CoefficientOverflowError
from .plot import METRICS, emit_plot
from .qubo import NppInstance, generate_instance

EXIT_OK, EXIT_ARGUMENT, EXIT_CAPABILITY, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _optimizer_list(text: str) -> list[str]:
    if text == "all":
        return list(bench.OPTIMIZER_NAMES)
    return [tok.strip() for tok in text.split(",") if tok.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="metaqaoa", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a random instance as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--min", dest="lo", type=int, default=1)
    p.add_argument("--max", dest="hi", type=int, default=100)
    p.add_argument("--out", required=True)

    p = sub.add_parser("run", help="one optimizer on one instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--optimizer", required=True, choices=bench.OPTIMIZER_NAMES)
    p.add_argument("--layers", type=int, default=2)
    p.add_argument("--pop", type=int, default=10)
    p.add_argument("--iters", type=int, default=50)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv")

    p = sub.add_parser("bench", help="run the full benchmark matrix")
    p.add_argument("--sizes", type=_int_list, default=[4, 8, 12])
    p.add_argument("--instances", type=int, default=5)
    p.add_argument("--optimizers", type=_optimizer_list, default=list(bench.OPTIMIZER_NAMES))
    p.add_argument("--layers", type=int, default=2)
    p.add_argument("--pop", type=int, default=10)
    p.add_argument("--iters", type=int, default=50)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("summarize", help="per-(optimizer, n) means of a results CSV")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("plot", help="SVG bar chart of a results or summary CSV")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--metric", required=True, choices=sorted(METRICS))
    p.add_argument("--out", required=True)

    p = sub.add_parser("solve-exact", help="print the optimal d, energy and R")
    p.add_argument("--instance", required=True)
    return parser


def _load_summary(path: str):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    first = text.split("\n", 1)[0].strip()
    if first == ",".join(bench.CSV_HEADER):
        return bench.summarize(bench.records_from_csv(text))
    return bench.summary_from_csv(text)


def _dispatch(args) -> None:
    if args.command == "gen":
        generate_instance(args.n, args.seed, args.lo, args.hi).save(args.out)

    elif args.command == "run":
        instance = NppInstance.load(args.instance)
        record = bench.run_single(
            instance, args.optimizer, args.seed, args.layers, args.pop, args.iters
        )
        text = bench.records_to_csv([record])
        sys.stdout.write(text)
        if args.csv:
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)

    elif args.command == "bench":
        plan = bench.BenchPlan(
            sizes=args.sizes,
            instances=args.instances,
            optimizers=args.optimizers,
            layers=args.layers,
            population=args.pop,
            iterations=args.iters,
            seed=args.seed,
            workers=args.workers,
        )
        plan.validate()
        records = bench.run_benchmark(plan)
        bench.write_records(records, args.out)
        failed = sum(r.is_error for r in records)
        print(f"wrote {len(records)} records to {args.out} ({failed} error rows)")

    elif args.command == "summarize":
        rows = bench.summarize(bench.read_records(args.inp))
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(bench.summary_to_csv(rows))

    elif args.command == "plot":
        emit_plot(_load_summary(args.inp), args.metric, args.out)

    elif args.command == "solve-exact":
        instance = NppInstance.load(args.instance)
        best = exact_best(instance)
        print(f"d={best.d}")
        print(f"energy={best.energy}")
        print(f"R={bench.fmt_float(float(best.ratio))}")
        print(f"bitstring={''.join(map(str, best.bitstring))}")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            level=logging.INFO if args.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
        )
        _dispatch(args)
    except (ArgumentError, CoefficientOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
