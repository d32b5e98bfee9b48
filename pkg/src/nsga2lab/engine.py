"""NSGA-II: non-dominated sorting, crowding distance, survivor selection, and
the generational loop.

Sorting works on deduplicated objective rows and peels fronts lazily, stopping
once the levels seen so far hold enough members to fill the next parent
population.  Because mLOTZ objectives live in a small integer box, domination
tests use a presence grid with suffix maxima along each axis: after the sweep,
cell ``v`` says whether some remaining row weakly dominates ``v``, so a row is
strictly dominated iff any cell one step above it in a single coordinate is
set.  When the box would be too large the sorter falls back to pairwise
comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .benchmarks import ProblemSpec
from .core import Population, unique_rows
from .metrics import (
    IterationRecord,
    count_pareto_individuals,
    covered_front_values,
)
from .variation import VariationConfig, generate_offspring

#: Upper limit on presence-grid cells before falling back to pairwise sorting.
_GRID_CELL_LIMIT = 1 << 22


def _peel_grid(
    uv: np.ndarray, counts: np.ndarray, stop_members: int | None
) -> tuple[np.ndarray, bool]:
    d, m = uv.shape
    side = int(uv.max()) + 2
    strides = side ** np.arange(m - 1, -1, -1, dtype=np.int64)
    flat = uv.astype(np.int64) @ strides
    step_up = flat[:, np.newaxis] + strides[np.newaxis, :]
    shape = (side,) * m
    front_of = np.zeros(d, dtype=np.int64)
    remaining = np.arange(d)
    taken = 0
    level = 0
    while remaining.size:
        level += 1
        grid = np.zeros(shape, dtype=np.uint8)
        grid.ravel()[flat[remaining]] = 1
        for ax in range(m):
            grid = np.flip(
                np.maximum.accumulate(np.flip(grid, axis=ax), axis=ax), axis=ax
            )
        dominated = grid.ravel()[step_up[remaining]].any(axis=1)
        members = remaining[~dominated]
        front_of[members] = level
        taken += int(counts[members].sum())
        remaining = remaining[dominated]
        if stop_members is not None and taken >= stop_members:
            return front_of, remaining.size == 0
    return front_of, True


def _nondominated_mask(rows: np.ndarray) -> np.ndarray:
    r = rows.shape[0]
    dominated = np.zeros(r, dtype=bool)
    chunk = max(1, min(r, 4_000_000 // max(1, r)))
    for start in range(0, r, chunk):
        blk = rows[start : start + chunk]
        ge = (rows[:, np.newaxis, :] >= blk[np.newaxis, :, :]).all(axis=2)
        gt = (rows[:, np.newaxis, :] > blk[np.newaxis, :, :]).any(axis=2)
        dominated[start : start + chunk] = (ge & gt).any(axis=0)
    return ~dominated


def _peel_pairwise(
    uv: np.ndarray, counts: np.ndarray, stop_members: int | None
) -> tuple[np.ndarray, bool]:
    d = uv.shape[0]
    front_of = np.zeros(d, dtype=np.int64)
    remaining = np.arange(d)
    taken = 0
    level = 0
    while remaining.size:
        level += 1
        keep = _nondominated_mask(uv[remaining])
        members = remaining[keep]
        front_of[members] = level
        taken += int(counts[members].sum())
        remaining = remaining[~keep]
        if stop_members is not None and taken >= stop_members:
            return front_of, remaining.size == 0
    return front_of, True


def _peel_unique(
    uv: np.ndarray, counts: np.ndarray, stop_members: int | None = None
) -> tuple[np.ndarray, bool]:
    """1-based front level per unique row; 0 marks rows beyond the stop level.

    Returns ``(levels, complete)`` where ``complete`` says the whole multiset
    was partitioned (always true without ``stop_members``).
    """
    d, m = uv.shape
    if d == 0:
        return np.zeros(0, dtype=np.int64), True
    side = int(uv.max()) + 2
    if int(uv.min()) >= 0 and side**m <= _GRID_CELL_LIMIT:
        return _peel_grid(uv, counts, stop_members)
    return _peel_pairwise(uv, counts, stop_members)


def front_labels(values: np.ndarray | Sequence[Sequence[int]]) -> np.ndarray:
    """Complete non-dominated sorting of integer objective rows.

    Returns the 1-based front index of every row (front 1 = non-dominated).
    Duplicate rows always share a front.
    """
    values = np.asarray(values, dtype=np.int64)
    if values.ndim != 2 or values.shape[0] == 0:
        raise ValueError("expected a non-empty (size, m) matrix of objective rows")
    uv, inverse, counts = unique_rows(values)
    levels, _ = _peel_unique(uv, counts)
    return levels[inverse]


class RankedPopulation:
    """A population together with its complete front partition.

    ``fronts[k]`` lists member indices of front ``k+1`` in member order;
    ``front_of`` maps each member to its 1-based front index.  Per-member
    crowding distances (computed within each front) are cached on first use.
    """

    __slots__ = ("population", "fronts", "front_of", "_crowding")

    def __init__(
        self, population: Population, fronts: list[np.ndarray], front_of: np.ndarray
    ):
        self.population = population
        self.fronts = fronts
        self.front_of = front_of
        self._crowding: np.ndarray | None = None

    @property
    def front_count(self) -> int:
        return len(self.fronts)

    def front(self, k: int) -> np.ndarray:
        """Member indices of front ``k`` (1-based)."""
        if not 1 <= k <= len(self.fronts):
            raise IndexError(f"front index {k} out of range 1..{len(self.fronts)}")
        return self.fronts[k - 1]

    def critical_front_index(self, budget: int) -> int:
        """Smallest ``k`` whose cumulative front sizes reach ``budget``."""
        total = 0
        for k, idx in enumerate(self.fronts, start=1):
            total += idx.size
            if total >= budget:
                return k
        raise ValueError(f"population holds fewer than {budget} members")

    def member_crowding(self) -> np.ndarray:
        """Crowding distance of every member within its own front."""
        if self._crowding is None:
            cd = np.empty(len(self.population), dtype=np.float64)
            for idx in self.fronts:
                cd[idx] = crowding_distance(self.population.values[idx])
            self._crowding = cd
        return self._crowding


def nondominated_sort(population: Population) -> RankedPopulation:
    """Partition a population into fronts F_1, F_2, ... of mutual non-domination."""
    labels = front_labels(population.values)
    top = int(labels.max())
    fronts = [np.flatnonzero(labels == k) for k in range(1, top + 1)]
    return RankedPopulation(population, fronts, labels)


def crowding_distance(vectors: np.ndarray | Sequence[Sequence[float]]) -> np.ndarray:
    """Crowding distance of each vector within the given multiset.

    Per objective the vectors are sorted in descending order (ties keep input
    order); the two end vectors get infinite distance and each interior vector
    accumulates the gap between its sorted neighbours, normalised by that
    objective's range.  Objectives with zero range contribute nothing to
    interior vectors.
    """
    vals = np.asarray(vectors, dtype=np.float64)
    if vals.ndim != 2 or vals.shape[0] == 0:
        raise ValueError("expected a non-empty (size, m) matrix of objective rows")
    size, m = vals.shape
    dist = np.zeros(size, dtype=np.float64)
    for i in range(m):
        order = np.argsort(-vals[:, i], kind="stable")
        sv = vals[order, i]
        if size > 2:
            span = sv[0] - sv[-1]
            if span > 0:
                dist[order[1:-1]] += (sv[:-2] - sv[2:]) / span
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
    return dist


def _survivor_indices(
    R: Population, budget: int, rng: np.random.Generator
) -> tuple[np.ndarray, int]:
    """Indices of the ``budget`` survivors of ``R`` plus the size of front 1.

    Whole fronts are kept while they fit; the critical front is filled by
    descending crowding distance, breaking ties at the cutoff uniformly at
    random.
    """
    uv, inverse, counts = unique_rows(R.values)
    levels, _ = _peel_unique(uv, counts, stop_members=budget)
    front_of = levels[inverse]
    sizes = np.bincount(front_of)
    cum = np.cumsum(sizes[1:])
    istar = int(np.searchsorted(cum, budget)) + 1
    f1_size = int(sizes[1]) if sizes.size > 1 else 0

    sure = np.flatnonzero((front_of >= 1) & (front_of < istar))
    critical = np.flatnonzero(front_of == istar)
    need = budget - sure.size
    cd = crowding_distance(R.values[critical])

    positives = int((cd > 0).sum())
    bound = 4 * R.problem.n + 2 * R.problem.m
    if positives > bound:
        raise RuntimeError(
            f"{positives} members of the critical front have positive crowding "
            f"distance, above the structural bound 4n + 2m = {bound}"
        )

    order = np.argsort(-cd, kind="stable")
    cdo = cd[order]
    cutoff = cdo[need - 1]
    winners = critical[order[cdo > cutoff]]
    tied = critical[order[cdo == cutoff]]
    picked = tied[rng.permutation(tied.size)[: need - winners.size]]
    return np.concatenate([sure, winners, picked]), f1_size


def survivor_select(R: Population, budget: int, rng: np.random.Generator) -> Population:
    """Select the next parent population of size ``budget`` from ``R``."""
    if not 1 <= budget <= len(R):
        raise ValueError(
            f"budget must lie in 1..{len(R)} (population size), got {budget}"
        )
    chosen, _ = _survivor_indices(R, budget, rng)
    return R.take(chosen)


@dataclass(frozen=True)
class RunConfig:
    """Everything one run needs: instance, budgetary knobs, operators, seed.

    ``seed`` and ``replicate_id`` identify the random stream: streams are
    spawned from a PCG64 bit generator keyed by ``(seed, replicate_id)``, so
    replicates are independent and any single run is reproducible bit for bit.
    """

    problem: ProblemSpec
    population_size: int
    iterations: int
    variation: VariationConfig = VariationConfig()
    seed: int = 0
    replicate_id: int = 0
    early_stop: bool = False

    def __post_init__(self) -> None:
        if self.population_size < 1:
            raise ValueError("population size must be positive")
        if self.iterations < 0:
            raise ValueError("iteration count must be non-negative")
        if self.seed < 0 or self.replicate_id < 0:
            raise ValueError("seed and replicate id must be non-negative")

    def make_rng(self) -> np.random.Generator:
        seq = np.random.SeedSequence(self.seed, spawn_key=(self.replicate_id,))
        return np.random.Generator(np.random.PCG64(seq))


def nsga2_iteration(
    P: Population,
    config: RunConfig,
    rng: np.random.Generator,
    iteration: int = 0,
) -> tuple[Population, IterationRecord]:
    """One generational step: variation, then survivor selection.

    Produces ``len(P)`` offspring, combines them with ``P`` into R, selects
    the next parents, and reports metrics of both R and the next parents
    under the given iteration label.
    """
    vc = config.variation
    ranked = nondominated_sort(P) if vc.needs_ranking else None
    Q = generate_offspring(P, vc, rng, ranked)
    R = P.concat(Q)
    chosen, f1_size = _survivor_indices(R, len(P), rng)
    P_next = R.take(chosen)

    covered_next = covered_front_values(P_next)
    record = IterationRecord(
        iteration=iteration,
        covered_R=covered_front_values(R),
        covered_P_next=covered_next,
        pareto_individuals_R=count_pareto_individuals(R),
        pareto_individuals_P_next=count_pareto_individuals(P_next),
        f1_size=f1_size,
        full_coverage=covered_next == P.problem.front_size,
    )
    return P_next, record


def _initial_record(P: Population) -> IterationRecord:
    uv, inverse, counts = unique_rows(P.values)
    levels, _ = _peel_unique(uv, counts, stop_members=1)
    f1_size = int(counts[levels == 1].sum())
    covered = covered_front_values(P)
    members = count_pareto_individuals(P)
    return IterationRecord(
        iteration=0,
        covered_R=covered,
        covered_P_next=covered,
        pareto_individuals_R=members,
        pareto_individuals_P_next=members,
        f1_size=f1_size,
        full_coverage=covered == P.problem.front_size,
    )


def run(config: RunConfig, rng: np.random.Generator | None = None) -> list[IterationRecord]:
    """Run NSGA-II on mLOTZ and return one record per recorded step.

    Record 0 describes the uniformly drawn initial population; record t >= 1
    describes iteration t.  With ``early_stop`` the loop ends as soon as the
    parent population covers the whole Pareto front.

    Randomness is consumed in a fixed order (initialisation; then per
    iteration: parent selection, crossover coins/parents/masks if enabled,
    mutation, survivor tie-breaking), so a given generator state always
    reproduces the same trajectory.
    """
    rng = config.make_rng() if rng is None else rng
    P = Population.uniform_random(config.problem, config.population_size, rng)
    records = [_initial_record(P)]
    for t in range(1, config.iterations + 1):
        if config.early_stop and records[-1].full_coverage:
            break
        P, rec = nsga2_iteration(P, config, rng, iteration=t)
        records.append(rec)
    return records
