"""NSGA-II laboratory for the many-objective LeadingOnesTrailingZeros benchmark.

The package provides the benchmark itself, a vectorised NSGA-II with
exchangeable selection/mutation/crossover operators, coverage metrics over
the Pareto front, and a replicated experiment driver with CSV output.
"""

from .benchmarks import (
    ParetoFront,
    ProblemSpec,
    are_neighbors,
    brute_force_pareto_set,
    enumerate_pareto_front,
    evaluate_mlotz,
    is_pareto_optimal,
)
from .core import (
    Domination,
    Individual,
    ObjectiveVector,
    Population,
    compare_domination,
    strictly_dominates,
    weakly_dominates,
)
from .engine import (
    RankedPopulation,
    RunConfig,
    crowding_distance,
    front_labels,
    nondominated_sort,
    nsga2_iteration,
    run,
    survivor_select,
)
from .experiment import (
    BatchResult,
    ExperimentBatch,
    aggregate_records,
    read_records_csv,
    run_batch,
    summarize,
    write_records_csv,
)
from .metrics import (
    IterationRecord,
    count_pareto_individuals,
    covered_front_values,
    detect_runtime,
)
from .variation import (
    VariationConfig,
    generate_offspring,
    one_bit_mutation,
    select_parents,
    standard_bit_mutation,
    uniform_crossover,
)

__version__ = "0.1.0"

__all__ = [
    "BatchResult",
    "Domination",
    "ExperimentBatch",
    "Individual",
    "IterationRecord",
    "ObjectiveVector",
    "ParetoFront",
    "Population",
    "ProblemSpec",
    "RankedPopulation",
    "RunConfig",
    "VariationConfig",
    "aggregate_records",
    "are_neighbors",
    "brute_force_pareto_set",
    "compare_domination",
    "count_pareto_individuals",
    "covered_front_values",
    "crowding_distance",
    "detect_runtime",
    "enumerate_pareto_front",
    "evaluate_mlotz",
    "front_labels",
    "generate_offspring",
    "is_pareto_optimal",
    "nondominated_sort",
    "nsga2_iteration",
    "one_bit_mutation",
    "read_records_csv",
    "run",
    "run_batch",
    "select_parents",
    "standard_bit_mutation",
    "strictly_dominates",
    "summarize",
    "survivor_select",
    "uniform_crossover",
    "weakly_dominates",
    "write_records_csv",
]
