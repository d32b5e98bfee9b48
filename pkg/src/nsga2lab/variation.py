"""Parent selection, mutation, and crossover operators.

All operators draw randomness from an explicit ``numpy.random.Generator``.
The batch entry point is :func:`generate_offspring`, which produces exactly
one offspring per parent slot and evaluates them in a single pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .core import Individual, Population

if TYPE_CHECKING:
    from .engine import RankedPopulation

SELECTION_MODES = ("fair", "random", "tournament")
MUTATION_MODES = ("standard_bit", "one_bit")


@dataclass(frozen=True)
class VariationConfig:
    """How offspring are produced.

    selection
        ``fair``: every member creates exactly one offspring.
        ``random``: each parent is drawn uniformly with replacement.
        ``tournament``: binary tournament on (front index, crowding distance),
        remaining ties decided by a fair coin; requires a ranked population.
    mutation
        ``standard_bit``: flip each bit independently with probability 1/n.
        ``one_bit``: flip exactly one uniformly chosen bit.
    crossover_enabled
        When set, each offspring slot first flips a coin with
        ``crossover_probability``; on success two uniformly drawn parents are
        recombined by uniform crossover and the result is mutated, otherwise a
        uniformly drawn parent is mutated directly.  This pipeline replaces
        per-member fair selection, so it is only allowed together with
        ``random`` selection.
    """

    selection: str = "fair"
    mutation: str = "standard_bit"
    crossover_enabled: bool = False
    crossover_probability: float = 0.5

    def __post_init__(self) -> None:
        if self.selection not in SELECTION_MODES:
            raise ValueError(
                f"unknown selection mode {self.selection!r}, expected one of {SELECTION_MODES}"
            )
        if self.mutation not in MUTATION_MODES:
            raise ValueError(
                f"unknown mutation mode {self.mutation!r}, expected one of {MUTATION_MODES}"
            )
        if not 0.0 <= self.crossover_probability <= 1.0:
            raise ValueError("crossover probability must lie in [0, 1]")
        if self.crossover_enabled and self.selection != "random":
            raise ValueError(
                "crossover replaces per-member selection and requires selection='random'"
            )

    @property
    def needs_ranking(self) -> bool:
        return self.selection == "tournament"


def standard_bit_mutation(x: Individual, rng: np.random.Generator) -> Individual:
    """Flip each bit independently with probability 1/n."""
    bits = _mutate_standard(x.bits[np.newaxis, :], rng)[0]
    return Individual(bits)


def one_bit_mutation(x: Individual, rng: np.random.Generator) -> Individual:
    """Flip exactly one bit, chosen uniformly at random."""
    bits = _mutate_one_bit(x.bits[np.newaxis, :], rng)[0]
    return Individual(bits)


def uniform_crossover(x: Individual, y: Individual, rng: np.random.Generator) -> Individual:
    """Take each position from ``x`` with probability 1/2, else from ``y``."""
    if len(x) != len(y):
        raise ValueError("crossover parents must have equal length")
    mask = rng.random(len(x)) < 0.5
    return Individual(np.where(mask, x.bits, y.bits))


def _mutate_standard(bits: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    n = bits.shape[1]
    flips = rng.random(bits.shape) < 1.0 / n
    return bits ^ flips.astype(np.uint8)


def _mutate_one_bit(bits: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    k, n = bits.shape
    out = bits.copy()
    pos = rng.integers(0, n, size=k)
    out[np.arange(k), pos] ^= 1
    return out


_MUTATORS = {"standard_bit": _mutate_standard, "one_bit": _mutate_one_bit}


def select_parents(
    population: Population,
    mode: str,
    rng: np.random.Generator,
    ranked: "RankedPopulation | None" = None,
) -> np.ndarray:
    """Indices of one parent per offspring slot.

    ``fair`` uses no randomness.  ``tournament`` draws two candidates per slot
    (uniformly, with replacement) and keeps the one on the better front; equal
    fronts fall back to larger crowding distance, then to a fair coin.
    """
    size = len(population)
    if mode == "fair":
        return np.arange(size, dtype=np.intp)
    if mode == "random":
        return rng.integers(0, size, size=size).astype(np.intp)
    if mode == "tournament":
        if ranked is None:
            raise ValueError("tournament selection needs a ranked population")
        cand = rng.integers(0, size, size=(size, 2))
        coin = rng.random(size) < 0.5
        fr = ranked.front_of[cand]
        cd = ranked.member_crowding()[cand]
        first_better = (fr[:, 0] < fr[:, 1]) | (
            (fr[:, 0] == fr[:, 1]) & (cd[:, 0] > cd[:, 1])
        )
        tie = (fr[:, 0] == fr[:, 1]) & (cd[:, 0] == cd[:, 1])
        take_first = first_better | (tie & coin)
        return np.where(take_first, cand[:, 0], cand[:, 1]).astype(np.intp)
    raise ValueError(f"unknown selection mode {mode!r}")


def generate_offspring(
    population: Population,
    config: VariationConfig,
    rng: np.random.Generator,
    ranked: "RankedPopulation | None" = None,
) -> Population:
    """One offspring per member of ``population``, evaluated exactly once.

    Draw order is fixed so runs are reproducible: with crossover enabled the
    coins come first, then both parent index vectors, then the crossover
    masks, then the mutation randomness; without crossover the parent
    selection draws come first, then the mutation randomness.
    """
    size = len(population)
    bits = population.bits
    if config.crossover_enabled:
        coins = rng.random(size) < config.crossover_probability
        pa = rng.integers(0, size, size=size)
        pb = rng.integers(0, size, size=size)
        mask = rng.random((size, population.problem.n)) < 0.5
        crossed = np.where(mask, bits[pa], bits[pb])
        base = np.where(coins[:, np.newaxis], crossed, bits[pa])
    else:
        parents = select_parents(population, config.selection, rng, ranked)
        base = bits[parents]
    child_bits = _MUTATORS[config.mutation](base, rng)
    return Population._trusted(
        population.problem, child_bits, population.problem.evaluate_batch(child_bits)
    )
