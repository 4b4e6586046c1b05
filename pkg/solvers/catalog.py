from fractions import Fraction

from enumeration.frontier import lottery_hull
from .equitable import eq_arclength_solution, eq_diagonal_solution, eq_sum_solution
from .models import Algorithm, PathVariant, RescaleVariant
from .rules import hull_nash_solution, median_solution, nash_solution, require_periphery, sum_solution


def _nash(per, **options):
    return nash_solution(per)


def _sum(per, **options):
    return sum_solution(per)


def _median(per, bias=Fraction(1, 2), **options):
    return median_solution(per, bias=bias)


def _eq_sum(per, variant=RescaleVariant.FIRST_QUADRANT, **options):
    return eq_sum_solution(per, variant)


def _eq_diagonal(per, variant=RescaleVariant.FIRST_QUADRANT, **options):
    return eq_diagonal_solution(per, variant)


def _eq_arc(per, path_variant=PathVariant.ADJACENT_CHAIN, variant=RescaleVariant.FIRST_QUADRANT, **options):
    return eq_arclength_solution(per, path_variant, variant)


def _hull_nash(per, **options):
    require_periphery(per)
    return hull_nash_solution(lottery_hull(per))


# Insertion order is the report order for --algorithm all.
ALGORITHMS = {
    Algorithm.NASH: _nash,
    Algorithm.SUM: _sum,
    Algorithm.MEDIAN: _median,
    Algorithm.EQ_SUM: _eq_sum,
    Algorithm.EQ_DIAGONAL: _eq_diagonal,
    Algorithm.EQ_ARC: _eq_arc,
    Algorithm.HULL_NASH: _hull_nash,
}


def solve(per, algorithm, **options):
    """Run one algorithm by name; bias, variant and path_variant reach the algorithms that use them."""
    return ALGORITHMS[Algorithm(algorithm)](per, **options)


def solve_all(per, algorithms=None, **options):
    names = list(ALGORITHMS) if algorithms is None else [Algorithm(name) for name in algorithms]
    return [solve(per, name, **options) for name in names]
