"""Command line front end.

Example::

    plot --kind coverage --in results/2M/aggregate.csv results/4M/aggregate.csv \
         results/8M/aggregate.csv --m-ref 441 --out coverage.svg
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .figures import PlotSpec, render
from .reader import SchemaError

#: Short CLI token for the comparison figure kind.
_KIND_TOKENS = {"compare": "variant-comparison"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot",
        description="Render coverage/front-size figures from experiment CSV logs.",
    )
    parser.add_argument(
        "--kind",
        required=True,
        choices=["coverage", "f1-pareto", "compare"],
        help="figure layout",
    )
    parser.add_argument(
        "--in",
        dest="inputs",
        required=True,
        nargs="+",
        metavar="CSV",
        help="input CSV files (one curve set each)",
    )
    parser.add_argument("--m-ref", type=int, help="front size for the dashed M line")
    parser.add_argument(
        "--n-ref", type=int, help="population size for the dashed N and 2N lines"
    )
    parser.add_argument(
        "--label", nargs="+", default=None, help="legend labels, one per input"
    )
    parser.add_argument("--out", required=True, help="output image path")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        spec = PlotSpec(
            kind=_KIND_TOKENS.get(args.kind, args.kind),
            inputs=tuple(Path(p) for p in args.inputs),
            out=Path(args.out),
            m_ref=args.m_ref,
            n_ref=args.n_ref,
            labels=tuple(args.label) if args.label else (),
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    try:
        out = render(spec)
    except (SchemaError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
