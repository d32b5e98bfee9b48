"""Coverage metrics and per-iteration bookkeeping.

Coverage counts *distinct* Pareto-optimal objective vectors present in a
population; the individual counts treat the population as a multiset, so
duplicates count separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .benchmarks import ProblemSpec
from .core import Population, count_distinct_rows


@dataclass(frozen=True)
class IterationRecord:
    """Metrics of one generational step.

    Row ``t >= 1`` describes the combined parent+offspring population R of
    iteration ``t`` together with the next parent population selected from
    it.  Row 0 describes the initial population, with the R columns simply
    repeating its values.
    """

    iteration: int
    covered_R: int
    covered_P_next: int
    pareto_individuals_R: int
    pareto_individuals_P_next: int
    f1_size: int
    full_coverage: bool


def covered_front_values(population: Population, spec: ProblemSpec | None = None) -> int:
    """Number of distinct Pareto-optimal objective vectors in the population."""
    spec = population.problem if spec is None else spec
    mask = spec.pareto_value_mask(population.values)
    if not mask.any():
        return 0
    return count_distinct_rows(population.values[mask])


def count_pareto_individuals(population: Population, spec: ProblemSpec | None = None) -> int:
    """Number of members (with multiplicity) whose value lies on the front."""
    spec = population.problem if spec is None else spec
    return int(spec.pareto_value_mask(population.values).sum())


def detect_runtime(
    records: Sequence[IterationRecord], population_size: int, front_size: int
) -> int | None:
    """Fitness evaluations until the parent population first covers the front.

    The initial population costs ``N`` evaluations and every iteration another
    ``N``, so first coverage at record ``t`` gives ``N * (t + 1)``.  Returns
    None when no record reaches full coverage.
    """
    for rec in records:
        if rec.covered_P_next >= front_size:
            return population_size * (rec.iteration + 1)
    return None
