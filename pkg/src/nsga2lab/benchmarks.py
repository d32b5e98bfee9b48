"""The many-objective LeadingOnesTrailingZeros benchmark (mLOTZ).

For an even number of objectives ``m`` and a bit-string length ``n`` divisible
by ``m/2``, the string splits into ``m/2`` consecutive blocks of length
``n' = 2n/m``.  Block ``b`` (1-based) spans positions ``(b-1)*n' .. b*n'-1``
and contributes two objectives, both maximised:

* objective ``2b-1``: the number of leading ones of the block,
* objective ``2b``:   the number of trailing zeros of the block.

A string is Pareto-optimal iff every block has the shape ``1^i 0^(n'-i)``;
for such blocks leading ones and trailing zeros sum to exactly ``n'``.  The
Pareto front therefore contains ``(n'+1)^(m/2)`` objective vectors, each
realised by exactly one bit string.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .core import Individual, ObjectiveVector, unique_rows

#: Refuse exhaustive enumeration above this string length (2^24 rows).
BRUTE_FORCE_MAX_N = 24


@dataclass(frozen=True)
class ProblemSpec:
    """Validated mLOTZ instance parameters.

    Requires ``m`` even and at least 2, ``n >= m``, and ``m/2`` dividing ``n``
    so the blocks tile the string exactly.
    """

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.m % 2 != 0:
            raise ValueError(f"m must be even and at least 2, got {self.m}")
        if self.n < self.m:
            raise ValueError(f"n must be at least m, got n={self.n}, m={self.m}")
        if self.n % (self.m // 2) != 0:
            raise ValueError(
                f"m/2 = {self.m // 2} must divide n = {self.n} so blocks tile the string"
            )

    @property
    def block_count(self) -> int:
        return self.m // 2

    @property
    def n_prime(self) -> int:
        """Block length ``2n/m``."""
        return 2 * self.n // self.m

    @property
    def front_size(self) -> int:
        """Number of Pareto-optimal objective vectors, ``(n'+1)^(m/2)``."""
        return (self.n_prime + 1) ** self.block_count

    def evaluate_batch(self, bits: np.ndarray) -> np.ndarray:
        """Evaluate a ``(size, n)`` bit matrix to a ``(size, m)`` int64 matrix.

        Leading ones of a block are counted by a running product from the
        left (it stays 1 exactly while the prefix is all ones); trailing
        zeros by a running product of the complement from the right.
        """
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.ndim != 2 or bits.shape[1] != self.n:
            raise ValueError(f"expected a (size, {self.n}) bit matrix")
        size = bits.shape[0]
        blocks = bits.reshape(size, self.block_count, self.n_prime)
        lead_ones = np.cumprod(blocks, axis=2, dtype=np.int64).sum(axis=2)
        flipped = 1 - blocks[:, :, ::-1]
        trail_zeros = np.cumprod(flipped, axis=2, dtype=np.int64).sum(axis=2)
        values = np.empty((size, self.m), dtype=np.int64)
        values[:, 0::2] = lead_ones
        values[:, 1::2] = trail_zeros
        return values

    def pareto_value_mask(self, values: np.ndarray) -> np.ndarray:
        """Boolean mask of rows that lie on the Pareto front.

        A vector is on the front iff each block's pair of objectives sums to
        the block length ``n'``.
        """
        values = np.asarray(values)
        if values.ndim != 2 or values.shape[1] != self.m:
            raise ValueError(f"expected a (size, {self.m}) value matrix")
        pair_sums = values[:, 0::2] + values[:, 1::2]
        return (pair_sums == self.n_prime).all(axis=1)


def evaluate_mlotz(x: Individual, spec: ProblemSpec) -> ObjectiveVector:
    """Objective vector of a single individual."""
    if len(x) != spec.n:
        raise ValueError(f"individual has length {len(x)}, expected n={spec.n}")
    row = spec.evaluate_batch(x.bits[np.newaxis, :])[0]
    return tuple(int(v) for v in row)


def is_pareto_optimal(x: Individual, spec: ProblemSpec) -> bool:
    """True iff every block of ``x`` is of the form ``1^i 0^(n'-i)``."""
    values = evaluate_mlotz(x, spec)
    return bool(spec.pareto_value_mask(np.asarray(values)[np.newaxis, :])[0])


class ParetoFront:
    """The set of Pareto-optimal objective vectors of an mLOTZ instance.

    Membership tests are O(m); enumeration is lazy and yields the
    ``(n'+1)^(m/2)`` vectors in lexicographic block order.
    """

    def __init__(self, spec: ProblemSpec):
        self.spec = spec

    @property
    def size(self) -> int:
        return self.spec.front_size

    def __len__(self) -> int:
        return self.size

    def __contains__(self, vector: ObjectiveVector) -> bool:
        if len(vector) != self.spec.m:
            return False
        n_prime = self.spec.n_prime
        return all(
            0 <= vector[2 * b] and 0 <= vector[2 * b + 1]
            and vector[2 * b] + vector[2 * b + 1] == n_prime
            for b in range(self.spec.block_count)
        )

    def vectors(self) -> Iterator[ObjectiveVector]:
        n_prime = self.spec.n_prime
        for combo in product(range(n_prime + 1), repeat=self.spec.block_count):
            vec: list[int] = []
            for i in combo:
                vec.extend((i, n_prime - i))
            yield tuple(vec)

    def optimum_for(self, vector: ObjectiveVector) -> Individual:
        """The unique Pareto-optimal bit string realising a front vector."""
        if vector not in self:
            raise ValueError(f"{vector} is not on the Pareto front")
        n_prime = self.spec.n_prime
        bits: list[int] = []
        for b in range(self.spec.block_count):
            ones = vector[2 * b]
            bits.extend([1] * ones + [0] * (n_prime - ones))
        return Individual(bits)


def enumerate_pareto_front(spec: ProblemSpec) -> set[ObjectiveVector]:
    """All Pareto-optimal objective vectors as a set."""
    return set(ParetoFront(spec).vectors())


def are_neighbors(u: ObjectiveVector, v: ObjectiveVector, spec: ProblemSpec) -> bool:
    """True iff two front vectors differ in exactly one block, by one step.

    Two Pareto-optimal vectors are neighbours when exactly one block moves a
    single position along its ``1^i 0^(n'-i)`` chain and all other blocks
    agree.  Raises ValueError if either vector is off the front.
    """
    front = ParetoFront(spec)
    if u not in front:
        raise ValueError(f"{u} is not on the Pareto front")
    if v not in front:
        raise ValueError(f"{v} is not on the Pareto front")
    diffs = [abs(u[2 * b] - v[2 * b]) for b in range(spec.block_count)]
    return diffs.count(0) == spec.block_count - 1 and max(diffs) == 1


def brute_force_pareto_set(spec: ProblemSpec) -> list[Individual]:
    """All Pareto-optimal bit strings, found by exhaustive enumeration.

    Walks all 2^n strings and keeps those whose objective vector is not
    strictly dominated by any other attainable vector.  Intended as an
    independent check of the closed-form front; refuses n beyond
    ``BRUTE_FORCE_MAX_N``.
    """
    if spec.n > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"exhaustive enumeration is limited to n <= {BRUTE_FORCE_MAX_N}"
        )
    count = 1 << spec.n
    codes = np.arange(count, dtype=np.int64)
    shifts = np.arange(spec.n - 1, -1, -1, dtype=np.int64)
    bits = ((codes[:, np.newaxis] >> shifts) & 1).astype(np.uint8)
    values = spec.evaluate_batch(bits)

    uniq, inverse, _ = unique_rows(values)
    dominated = np.zeros(uniq.shape[0], dtype=bool)
    for j in range(uniq.shape[0]):
        ge = (uniq >= uniq[j]).all(axis=1)
        gt = (uniq > uniq[j]).any(axis=1)
        dominated[j] = bool((ge & gt).any())
    keep = ~dominated[inverse]
    return [Individual(bits[i]) for i in np.flatnonzero(keep)]
