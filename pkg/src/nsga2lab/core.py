"""Core data types: bit-string individuals, objective vectors, Pareto dominance,
and evaluated populations.

Populations store their genotypes as a dense ``(size, n)`` uint8 array and the
matching objective values as a ``(size, m)`` int64 array.  Both arrays are
write-protected; all mutating operations return new objects.  Populations are
multisets: the same bit string may appear any number of times and every copy
counts separately.
"""

from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

import numpy as np

if TYPE_CHECKING:
    from .benchmarks import ProblemSpec

#: An objective vector is a plain tuple of ints, one entry per objective.
ObjectiveVector = tuple[int, ...]


class Individual:
    """An immutable bit string.

    Bits are stored as a read-only uint8 array of zeros and ones.  Equality
    and hashing are by value, so individuals can live in sets and dicts.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int] | np.ndarray):
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("an individual needs a non-empty 1-d bit sequence")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("bits must be 0 or 1")
        self._bits = np.ascontiguousarray(arr, dtype=np.uint8)
        self._bits.setflags(write=False)

    @classmethod
    def from_string(cls, s: str) -> "Individual":
        """Parse a string such as ``"1100"`` into an individual."""
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        return cls(np.frombuffer(s.encode("ascii"), dtype=np.uint8) - ord("0"))

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    def to01(self) -> str:
        return "".join("1" if b else "0" for b in self._bits)

    def __len__(self) -> int:
        return int(self._bits.size)

    def __getitem__(self, i: int) -> int:
        return int(self._bits[i])

    def __iter__(self) -> Iterator[int]:
        return iter(int(b) for b in self._bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Individual):
            return NotImplemented
        return self._bits.shape == other._bits.shape and bool(
            (self._bits == other._bits).all()
        )

    def __hash__(self) -> int:
        return hash((self._bits.size, self._bits.tobytes()))

    def __repr__(self) -> str:
        return f"Individual({self.to01()!r})"


class Domination(Enum):
    """Outcome of comparing two objective vectors under maximisation."""

    FIRST = "first"  # first strictly dominates second
    SECOND = "second"  # second strictly dominates first
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare_domination(u: Sequence[int], v: Sequence[int]) -> Domination:
    """Compare two objective vectors of equal length (all objectives maximised)."""
    if len(u) != len(v):
        raise ValueError(f"objective vectors differ in length: {len(u)} vs {len(v)}")
    ge = all(a >= b for a, b in zip(u, v))
    le = all(a <= b for a, b in zip(u, v))
    if ge and le:
        return Domination.EQUAL
    if ge:
        return Domination.FIRST
    if le:
        return Domination.SECOND
    return Domination.INCOMPARABLE


def weakly_dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    """True if ``u >= v`` componentwise."""
    return compare_domination(u, v) in (Domination.FIRST, Domination.EQUAL)


def strictly_dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    """True if ``u >= v`` componentwise with at least one strict inequality."""
    return compare_domination(u, v) is Domination.FIRST


def pack_rows(values: np.ndarray) -> np.ndarray | None:
    """Pack each row of a non-negative integer matrix into a single int64 key.

    Rows are equal iff their keys are equal, which makes deduplication a 1-d
    problem.  Returns None when the entries are too large to fit, in which
    case callers should fall back to row-wise ``np.unique``.
    """
    if values.ndim != 2:
        raise ValueError("expected a 2-d array of objective rows")
    if values.size == 0:
        return np.zeros(values.shape[0], dtype=np.int64)
    hi = int(values.max())
    if int(values.min()) < 0:
        return None
    width = max(1, int(hi).bit_length())
    if width * values.shape[1] > 62:
        return None
    keys = np.zeros(values.shape[0], dtype=np.int64)
    for col in range(values.shape[1]):
        keys = (keys << width) | values[:, col].astype(np.int64)
    return keys


def unique_rows(values: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Deduplicate rows.

    Returns ``(uniq, inverse, counts)`` where ``uniq`` holds one copy of each
    distinct row, ``values[i]`` equals ``uniq[inverse[i]]`` and ``counts[j]``
    is the multiplicity of ``uniq[j]``.
    """
    keys = pack_rows(values)
    if keys is None:
        uniq, inverse, counts = np.unique(
            values, axis=0, return_inverse=True, return_counts=True
        )
        return uniq, inverse.ravel(), counts
    _, first, inverse, counts = np.unique(
        keys, return_index=True, return_inverse=True, return_counts=True
    )
    return values[first], inverse.ravel(), counts


def count_distinct_rows(values: np.ndarray) -> int:
    keys = pack_rows(values)
    if keys is None:
        return int(np.unique(values, axis=0).shape[0])
    return int(np.unique(keys).size)


class Population:
    """A multiset of evaluated individuals of a common problem.

    The constructor evaluates the given bit matrix once; afterwards the
    objective values are carried along and never recomputed.
    """

    __slots__ = ("problem", "_bits", "_values")

    def __init__(self, problem: "ProblemSpec", bits: np.ndarray):
        bits = np.asarray(bits)
        if bits.ndim != 2:
            raise ValueError("expected a (size, n) bit matrix")
        if bits.shape[1] != problem.n:
            raise ValueError(
                f"bit matrix has row length {bits.shape[1]}, expected n={problem.n}"
            )
        if bits.size and not np.isin(bits, (0, 1)).all():
            raise ValueError("bits must be 0 or 1")
        self.problem = problem
        self._bits = np.ascontiguousarray(bits, dtype=np.uint8)
        self._values = problem.evaluate_batch(self._bits)
        self._freeze()

    def _freeze(self) -> None:
        self._bits.setflags(write=False)
        self._values.setflags(write=False)

    @classmethod
    def _trusted(
        cls, problem: "ProblemSpec", bits: np.ndarray, values: np.ndarray
    ) -> "Population":
        """Build a population from bits plus already-computed values (no checks)."""
        pop = cls.__new__(cls)
        pop.problem = problem
        pop._bits = np.ascontiguousarray(bits, dtype=np.uint8)
        pop._values = np.ascontiguousarray(values, dtype=np.int64)
        pop._freeze()
        return pop

    @classmethod
    def from_individuals(
        cls, problem: "ProblemSpec", members: Iterable[Individual]
    ) -> "Population":
        rows = [ind.bits for ind in members]
        if not rows:
            raise ValueError("a population needs at least one member")
        return cls(problem, np.vstack(rows))

    @classmethod
    def uniform_random(
        cls, problem: "ProblemSpec", size: int, rng: np.random.Generator
    ) -> "Population":
        """Sample ``size`` individuals uniformly at random."""
        if size < 1:
            raise ValueError("population size must be positive")
        bits = rng.integers(0, 2, size=(size, problem.n), dtype=np.uint8)
        return cls(problem, bits)

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def size(self) -> int:
        return int(self._bits.shape[0])

    def __len__(self) -> int:
        return self.size

    def individual(self, i: int) -> Individual:
        return Individual(self._bits[i])

    def vector(self, i: int) -> ObjectiveVector:
        return tuple(int(v) for v in self._values[i])

    def individuals(self) -> list[Individual]:
        return [self.individual(i) for i in range(self.size)]

    def vectors(self) -> list[ObjectiveVector]:
        return [self.vector(i) for i in range(self.size)]

    def take(self, indices: np.ndarray | Sequence[int]) -> "Population":
        """Sub-multiset at the given indices (duplicates allowed)."""
        idx = np.asarray(indices, dtype=np.intp)
        return Population._trusted(self.problem, self._bits[idx], self._values[idx])

    def concat(self, other: "Population") -> "Population":
        """Multiset union with another population of the same problem."""
        if other.problem != self.problem:
            raise ValueError("cannot combine populations of different problems")
        return Population._trusted(
            self.problem,
            np.vstack([self._bits, other._bits]),
            np.vstack([self._values, other._values]),
        )

    def __repr__(self) -> str:
        return (
            f"Population(size={self.size}, n={self.problem.n}, m={self.problem.m})"
        )
