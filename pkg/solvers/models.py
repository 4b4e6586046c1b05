from dataclasses import dataclass
from fractions import Fraction

from django.db import models


class Algorithm(models.TextChoices):
    NASH = 'nash', 'Nash product'
    SUM = 'sum', 'Sum of utilities'
    MEDIAN = 'median', 'Median of periphery (A)'
    EQ_SUM = 'eq-sum', 'Equitable sum (B)'
    EQ_DIAGONAL = 'eq-diagonal', 'Equitable diagonal (C)'
    EQ_ARC = 'eq-arc', 'Equitable arc-length midpoint (D)'
    HULL_NASH = 'hull-nash', 'Nash product over the lottery hull'


class RescaleVariant(models.TextChoices):
    FIRST_QUADRANT = 'first-quadrant', 'First quadrant'
    FOUR_QUADRANT = 'four-quadrant', 'All four quadrants'


class PathVariant(models.TextChoices):
    ADJACENT_CHAIN = 'adjacent-chain', 'Adjacent periphery points'
    HULL = 'hull', 'Lottery hull vertices'


@dataclass(frozen=True)
class SolutionReport:
    """
    What one algorithm picked on one periphery.

    chosen lists every point in the tie set. support[i] holds the periphery
    points behind chosen[i]: the point itself, or the endpoints of the lottery
    it mixes. achieving_exchanges[i] collects the exchanges landing on those
    support points.
    """
    algorithm: str
    chosen: tuple
    support: tuple
    achieving_exchanges: tuple
    objective_value: object = None
    is_lottery: bool = False

    @property
    def headline(self):
        return min(self.chosen)

    @property
    def tie_count(self):
        return len(self.chosen)

    @property
    def is_unique(self):
        return len(self.chosen) == 1

    def exchange_set(self):
        return frozenset(exchange for exchanges in self.achieving_exchanges for exchange in exchanges)

    def exchanges_for(self, point):
        return self.achieving_exchanges[self.chosen.index(point)]


@dataclass(frozen=True)
class EquitableScale:
    factor_x: Fraction
    factor_y: Fraction
    variant: str = RescaleVariant.FIRST_QUADRANT

    def __post_init__(self):
        if self.factor_x <= 0 or self.factor_y <= 0:
            raise ValueError(f"Equitable factors must be positive, got {self.factor_x} and {self.factor_y}.")

    def apply(self, point):
        return type(point)(point.u_x * self.factor_x, point.u_y * self.factor_y)


@dataclass(frozen=True)
class GravityRow:
    m1: Fraction
    m2: Fraction
    product: Fraction
    force: Fraction


@dataclass(frozen=True)
class GravityTable:
    total: Fraction
    step: Fraction
    g_constant: Fraction
    distance: Fraction
    rows: tuple
    best: tuple

    @property
    def max_product(self):
        return self.best[0].product
