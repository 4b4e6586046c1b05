from dataclasses import dataclass, field, fields, replace
from fractions import Fraction

import numpy as np
from django.db import models


class Condition(models.TextChoices):
    UNCONSTRAINED = 'unconstrained', 'Unconstrained'
    IDENTICAL_VALUATION = 'identical-valuation', 'Identical valuation'
    MUTUAL_DOMINANCE = 'mutual-dominance', 'Mutual dominance'
    INSUFFICIENT_COMPENSATION = 'insufficient-compensation', 'Insufficient compensation (X)'


@dataclass(frozen=True)
class GeneratorConfig:
    """
    Recipe for one random instance.

    Values are drawn from the grid lo, lo + 1/value_grid, ..., hi, so
    (hi - lo) * value_grid must be a whole number.
    """
    seed: int = 0
    p: int = 3
    q: int = 3
    value_range: tuple = (0, 10)
    value_grid: int = 1
    condition: str = Condition.UNCONSTRAINED

    def __post_init__(self):
        lo, hi = (Fraction(v) for v in self.value_range)
        object.__setattr__(self, 'value_range', (lo, hi))
        object.__setattr__(self, 'condition', Condition(self.condition))
        if self.p < 0 or self.q < 0:
            raise ValueError(f"Item counts must be nonnegative, got p={self.p}, q={self.q}.")
        if lo < 0 or hi < lo:
            raise ValueError(f"value_range must satisfy 0 <= lo <= hi, got {lo}..{hi}.")
        if self.value_grid < 1 or ((hi - lo) * self.value_grid).denominator != 1:
            raise ValueError(f"value_grid {self.value_grid} does not tile {lo}..{hi}.")

    def for_run(self, k):
        return replace(self, seed=self.seed + k)


@dataclass(frozen=True)
class GreedyStep:
    give: str
    take: str
    gain_x: Fraction
    gain_y: Fraction
    point: object


@dataclass(frozen=True)
class GreedyResult:
    point: object
    exchange: object
    trace: tuple = ()

    @property
    def stuck_at_origin(self):
        return not self.trace


@dataclass(frozen=True)
class ProbeRow:
    player: str
    factor: Fraction
    nash_unchanged: bool
    median_unchanged: bool
    distinct: bool

    @property
    def passed(self):
        return self.nash_unchanged and self.median_unchanged and self.distinct


@dataclass(frozen=True)
class MedianProbeReport:
    nash_point: object
    median_point: object
    rows: tuple

    @property
    def passed(self):
        return all(row.passed for row in self.rows)


def _add_counts(a, b):
    return {key: a.get(key, 0) + b.get(key, 0) for key in sorted(set(a) | set(b))}


@dataclass(frozen=True)
class ComparisonStats:
    """
    Raw frequencies over a batch of generated instances.

    agreement[a][b] counts instances where algorithms a and b returned the same
    headline point (or both found no trade). Per-algorithm counters record how
    often the answer had ties, was a single point, chose the mirrored point on
    the mirrored instance, and kept its exchanges after X was rescaled.
    merge is associative, so batches can be combined in any grouping.
    """
    algorithms: tuple
    instances_run: int = 0
    agreement: dict = field(default_factory=dict)
    ties: dict = field(default_factory=dict)
    unique: dict = field(default_factory=dict)
    symmetric: dict = field(default_factory=dict)
    scale_invariant: dict = field(default_factory=dict)
    no_trade: int = 0
    median_differs_from_nash: int = 0
    greedy_stuck: int = 0
    collapse_ratios: tuple = ()
    greedy_gaps: tuple = ()

    @classmethod
    def empty(cls, algorithms):
        algorithms = tuple(algorithms)
        zeros = {name: 0 for name in algorithms}
        return cls(
            algorithms=algorithms,
            agreement={a: dict(zeros) for a in algorithms},
            ties=dict(zeros),
            unique=dict(zeros),
            symmetric=dict(zeros),
            scale_invariant=dict(zeros),
        )

    def merge(self, other):
        if self.algorithms != other.algorithms:
            raise ValueError("Cannot merge stats over different algorithm lists.")
        merged = {}
        for f in fields(self):
            mine, theirs = getattr(self, f.name), getattr(other, f.name)
            if f.name == 'algorithms':
                merged[f.name] = mine
            elif f.name == 'agreement':
                merged[f.name] = {a: _add_counts(mine[a], theirs[a]) for a in self.algorithms}
            elif isinstance(mine, dict):
                merged[f.name] = _add_counts(mine, theirs)
            else:
                merged[f.name] = mine + theirs
        return ComparisonStats(**merged)

    def agreement_matrix(self):
        return np.array([[self.agreement[a][b] for b in self.algorithms] for a in self.algorithms], dtype=np.int64)

    @property
    def collapse_mean(self):
        if not self.collapse_ratios:
            return None
        return float(np.mean([float(r) for r in self.collapse_ratios]))

    def collapse_histogram(self, bins=10):
        counts, edges = np.histogram([float(r) for r in self.collapse_ratios], bins=bins, range=(0.0, 1.0))
        return counts.tolist(), edges.tolist()

    def greedy_gap_histogram(self, bins=10):
        if not self.greedy_gaps:
            return [], []
        counts, edges = np.histogram([float(g) for g in self.greedy_gaps], bins=bins)
        return counts.tolist(), edges.tolist()
