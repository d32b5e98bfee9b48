"""Command line front end.

Example::

    nsga2lab --m 4 --n 40 --pop 4M --iterations 1000 --selection fair \
        --mutation std --seed 7 --replicates 5 --out results/fair_4m

Options may also come from a ``key = value`` config file (``--config``);
explicit command line flags win over file entries.  Exit codes: 0 on success,
2 for configuration errors, 1 for runtime failures.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .benchmarks import ProblemSpec
from .engine import RunConfig
from .experiment import ExperimentBatch, run_batch, summarize
from .variation import VariationConfig

_MUTATION_TOKENS = {"std": "standard_bit", "onebit": "one_bit"}

_DEFAULTS: dict[str, object] = {
    "problem": "mlotz",
    "m": 4,
    "n": 40,
    "pop": "4M",
    "iterations": 1000,
    "selection": "fair",
    "mutation": "std",
    "crossover": False,
    "crossover_prob": 0.5,
    "seed": 0,
    "replicates": 5,
    "out": "results",
    "early_stop": False,
    "threads": 1,
}

_BOOL_TOKENS = {
    "true": True,
    "false": False,
    "yes": True,
    "no": False,
    "1": True,
    "0": False,
}


class ConfigError(ValueError):
    """Raised for any unusable combination of options."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsga2lab",
        description="Run NSGA-II on the m-objective LeadingOnesTrailingZeros benchmark.",
    )
    parser.add_argument("--problem", choices=["mlotz"], help="benchmark (default mlotz)")
    parser.add_argument("--m", type=int, help="number of objectives (even)")
    parser.add_argument("--n", type=int, help="bit-string length")
    parser.add_argument(
        "--pop",
        help="population size: an integer, or a front-size multiple such as 4M",
    )
    parser.add_argument("--iterations", type=int, help="iteration budget")
    parser.add_argument(
        "--selection", choices=["fair", "random", "tournament"], help="parent selection"
    )
    parser.add_argument(
        "--mutation", choices=["std", "onebit"], help="mutation operator"
    )
    parser.add_argument(
        "--crossover", action="store_true", default=None, help="enable uniform crossover"
    )
    parser.add_argument(
        "--crossover-prob", type=float, help="per-offspring crossover probability"
    )
    parser.add_argument("--seed", type=int, help="master seed")
    parser.add_argument("--replicates", type=int, help="independent repetitions")
    parser.add_argument("--out", help="output directory for CSV files")
    parser.add_argument(
        "--early-stop",
        action="store_true",
        default=None,
        help="stop a run once the parent population covers the front",
    )
    parser.add_argument("--threads", type=int, help="worker threads for replicates")
    parser.add_argument("--config", help="key = value file with the same option names")
    return parser


def _parse_config_file(path: str) -> dict[str, object]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    values: dict[str, object] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{number}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key not in _DEFAULTS:
            raise ConfigError(f"{path}:{number}: unknown option {key!r}")
        values[key] = _convert(key, value, where=f"{path}:{number}")
    return values


def _convert(key: str, value: str, where: str) -> object:
    kind = type(_DEFAULTS[key])
    try:
        if kind is bool:
            token = value.lower()
            if token not in _BOOL_TOKENS:
                raise ValueError(f"not a boolean: {value!r}")
            return _BOOL_TOKENS[token]
        if kind is int:
            return int(value)
        if kind is float:
            return float(value)
        return value
    except ValueError as e:
        raise ConfigError(f"{where}: {e}") from e


def resolve_population_size(pop: str | int, spec: ProblemSpec) -> int:
    """An absolute size, or a multiple of the front size written like ``4M``."""
    if isinstance(pop, int):
        size = pop
    else:
        text = pop.strip()
        if text.upper().endswith("M"):
            try:
                factor = int(text[:-1])
            except ValueError as e:
                raise ConfigError(f"bad population size {pop!r}") from e
            size = factor * spec.front_size
        else:
            try:
                size = int(text)
            except ValueError as e:
                raise ConfigError(f"bad population size {pop!r}") from e
    if size < 1:
        raise ConfigError(f"population size must be positive, got {size}")
    return size


def parse_config(argv: Sequence[str] | None = None) -> ExperimentBatch:
    """Merge defaults, config file, and flags into a validated batch."""
    args = build_parser().parse_args(argv)
    merged = dict(_DEFAULTS)
    if args.config:
        merged.update(_parse_config_file(args.config))
    for key in _DEFAULTS:
        flag = getattr(args, key)
        if flag is not None:
            merged[key] = flag

    try:
        spec = ProblemSpec(n=int(merged["n"]), m=int(merged["m"]))
        variation = VariationConfig(
            selection=str(merged["selection"]),
            mutation=_MUTATION_TOKENS.get(
                str(merged["mutation"]), str(merged["mutation"])
            ),
            crossover_enabled=bool(merged["crossover"]),
            crossover_probability=float(merged["crossover_prob"]),
        )
        config = RunConfig(
            problem=spec,
            population_size=resolve_population_size(merged["pop"], spec),
            iterations=int(merged["iterations"]),
            variation=variation,
            seed=int(merged["seed"]),
            early_stop=bool(merged["early_stop"]),
        )
        return ExperimentBatch(
            config=config,
            replicates=int(merged["replicates"]),
            out_dir=Path(str(merged["out"])),
            threads=int(merged["threads"]),
        )
    except ConfigError:
        raise
    except ValueError as e:
        raise ConfigError(str(e)) from e


def main(argv: Sequence[str] | None = None) -> int:
    try:
        batch = parse_config(argv)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:
        return int(e.code or 0)

    try:
        result = run_batch(batch)
    except Exception as e:  # runtime failures: report, non-zero exit
        print(f"error: {e}", file=sys.stderr)
        return 1

    print(summarize(result))
    print(
        f"\nwrote {len(result.replicate_paths)} replicate file(s) "
        f"and {result.aggregate_path}"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
