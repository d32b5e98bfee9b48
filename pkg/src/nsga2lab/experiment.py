"""Replicated runs, CSV serialisation, and cross-replicate aggregation.

Replicate ``r`` of a batch runs the base configuration with
``replicate_id = r``, which keys an independent random stream.  Results are
therefore identical no matter how many worker threads execute the batch, and
every output file is byte-stable for a fixed configuration.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from statistics import median
from typing import Iterable, Sequence

from .engine import RunConfig, run
from .metrics import IterationRecord, detect_runtime

CSV_FIELDS = (
    "iteration",
    "covered_R",
    "covered_P_next",
    "pareto_individuals_R",
    "pareto_individuals_P_next",
    "f1_size",
    "full_coverage",
)

AGGREGATE_FIELDS = (
    "iteration",
    "replicates",
    "median_covered_R",
    "median_covered_P_next",
    "median_f1_size",
)


@dataclass(frozen=True)
class ExperimentBatch:
    """A base configuration, a replicate count, and where to write results."""

    config: RunConfig
    replicates: int
    out_dir: Path
    threads: int = 1

    def __post_init__(self) -> None:
        if self.replicates < 1:
            raise ValueError("a batch needs at least one replicate")
        if self.threads < 1:
            raise ValueError("thread count must be positive")


@dataclass
class BatchResult:
    batch: ExperimentBatch
    records: list[list[IterationRecord]]
    replicate_paths: list[Path]
    aggregate_path: Path


def replicate_config(base: RunConfig, replicate_id: int) -> RunConfig:
    """The base configuration rekeyed to one replicate's random stream."""
    return replace(base, replicate_id=replicate_id)


def write_records_csv(path: Path | str, records: Iterable[IterationRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(CSV_FIELDS) + "\n")
        for r in records:
            fh.write(
                f"{r.iteration},{r.covered_R},{r.covered_P_next},"
                f"{r.pareto_individuals_R},{r.pareto_individuals_P_next},"
                f"{r.f1_size},{int(r.full_coverage)}\n"
            )


def read_records_csv(path: Path | str) -> list[IterationRecord]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != ",".join(CSV_FIELDS):
        raise ValueError(f"{path}: missing or unexpected header line")
    out: list[IterationRecord] = []
    for number, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != len(CSV_FIELDS):
            raise ValueError(f"{path}:{number}: expected {len(CSV_FIELDS)} fields")
        values = [int(p) for p in parts]
        out.append(
            IterationRecord(
                iteration=values[0],
                covered_R=values[1],
                covered_P_next=values[2],
                pareto_individuals_R=values[3],
                pareto_individuals_P_next=values[4],
                f1_size=values[5],
                full_coverage=bool(values[6]),
            )
        )
    return out


def _fmt_median(value: float) -> str:
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return str(value)


def aggregate_records(
    per_replicate: Sequence[Sequence[IterationRecord]],
) -> list[tuple[int, int, float, float, float]]:
    """Per-iteration medians across replicates.

    Early-stopped replicates simply contribute fewer rows; the ``replicates``
    column says how many runs reached each iteration.
    """
    by_iteration: dict[int, list[IterationRecord]] = {}
    for records in per_replicate:
        for rec in records:
            by_iteration.setdefault(rec.iteration, []).append(rec)
    rows = []
    for t in sorted(by_iteration):
        group = by_iteration[t]
        rows.append(
            (
                t,
                len(group),
                median(r.covered_R for r in group),
                median(r.covered_P_next for r in group),
                median(r.f1_size for r in group),
            )
        )
    return rows


def write_aggregate_csv(
    path: Path | str, per_replicate: Sequence[Sequence[IterationRecord]]
) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(AGGREGATE_FIELDS) + "\n")
        for t, k, med_r, med_p, med_f1 in aggregate_records(per_replicate):
            fh.write(
                f"{t},{k},{_fmt_median(med_r)},{_fmt_median(med_p)},{_fmt_median(med_f1)}\n"
            )


def run_batch(batch: ExperimentBatch) -> BatchResult:
    """Run all replicates (possibly in a thread pool) and write the CSVs.

    Produces ``replicate_XXX.csv`` per run plus ``aggregate.csv`` in the
    batch's output directory.
    """
    out_dir = Path(batch.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    # Fail on unwritable destinations before burning time on the runs.
    probe = out_dir / ".write_probe"
    probe.touch()
    probe.unlink()
    configs = [replicate_config(batch.config, r) for r in range(batch.replicates)]
    if batch.threads == 1 or batch.replicates == 1:
        all_records = [run(cfg) for cfg in configs]
    else:
        with ThreadPoolExecutor(max_workers=batch.threads) as pool:
            all_records = list(pool.map(run, configs))

    paths = []
    for r, records in enumerate(all_records):
        path = out_dir / f"replicate_{r:03d}.csv"
        write_records_csv(path, records)
        paths.append(path)
    aggregate_path = out_dir / "aggregate.csv"
    write_aggregate_csv(aggregate_path, all_records)
    return BatchResult(batch, all_records, paths, aggregate_path)


def summarize(result: BatchResult) -> str:
    """Human-readable closing report for a finished batch."""
    cfg = result.batch.config
    spec = cfg.problem
    vc = cfg.variation
    lines = [
        f"mLOTZ m={spec.m} n={spec.n}: front size {spec.front_size}",
        f"population {cfg.population_size}, iterations {cfg.iterations}, "
        f"selection {vc.selection}, mutation {vc.mutation}, "
        f"crossover {'on (p=%g)' % vc.crossover_probability if vc.crossover_enabled else 'off'}, "
        f"seed {cfg.seed}",
        "",
        "replicate  final_covered_R  final_covered_P_next  max_f1_size  f1>N  runtime_T",
    ]
    finals = []
    for r, records in enumerate(result.records):
        last = records[-1]
        max_f1 = max(rec.f1_size for rec in records)
        runtime = detect_runtime(records, cfg.population_size, spec.front_size)
        finals.append(last.covered_P_next)
        lines.append(
            f"{r:>9}  {last.covered_R:>15}  {last.covered_P_next:>20}  "
            f"{max_f1:>11}  {'yes' if max_f1 > cfg.population_size else ' no':>4}  "
            f"{runtime if runtime is not None else '-':>9}"
        )
    lines.append("")
    lines.append(
        f"median final covered_P_next: {_fmt_median(median(finals))} of {spec.front_size}"
    )
    return "\n".join(lines)
