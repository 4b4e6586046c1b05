import logging
from fractions import Fraction

from exchanges.exceptions import NoTrade
from exchanges.models import OutcomePoint
from .models import Algorithm, SolutionReport

logger = logging.getLogger(__name__)


def argmax_indices(values):
    """Every position attaining the maximum, compared exactly."""
    values = list(values)
    if not values:
        return []
    best = max(values)
    return [i for i, value in enumerate(values) if value == best]


def require_periphery(per):
    if per.is_empty:
        raise NoTrade()


def vertex_report(algorithm, per, points, objective_value, is_lottery=False):
    points = tuple(points)
    return SolutionReport(
        algorithm=algorithm,
        chosen=points,
        support=tuple((point,) for point in points),
        achieving_exchanges=tuple(tuple(per.exchanges_for(point)) for point in points),
        objective_value=objective_value,
        is_lottery=is_lottery,
    )


def lottery_report(algorithm, per, point, support, objective_value):
    return SolutionReport(
        algorithm=algorithm,
        chosen=(point,),
        support=(tuple(support),),
        achieving_exchanges=(tuple(e for s in support for e in per.exchanges_for(s)),),
        objective_value=objective_value,
        is_lottery=True,
    )


def best_points(algorithm, per, objective):
    require_periphery(per)
    values = [objective(point) for point in per.points]
    winners = argmax_indices(values)
    logger.debug("%s: %d of %d periphery points tie at %s.", algorithm, len(winners), len(per), values[winners[0]])
    return vertex_report(algorithm, per, [per.points[i] for i in winners], values[winners[0]])


def nash_solution(per):
    return best_points(Algorithm.NASH, per, lambda point: point.product)


def sum_solution(per):
    return best_points(Algorithm.SUM, per, lambda point: point.total)


def median_solution(per, bias=Fraction(1, 2)):
    """
    Algorithm A: the most centralized periphery point.

    With an even count no single point is central; the result is the lottery
    between the two central points that picks the right-hand one with
    probability bias, reported at its expected coordinates.
    """
    require_periphery(per)
    bias = Fraction(bias)
    if not 0 <= bias <= 1:
        raise ValueError(f"Coin bias must lie in [0, 1], got {bias}.")
    n = len(per)
    if n % 2:
        return vertex_report(Algorithm.MEDIAN, per, [per.points[(n - 1) // 2]], None)

    left, right = per.points[n // 2 - 1], per.points[n // 2]
    point = OutcomePoint(
        left.u_x + (right.u_x - left.u_x) * bias,
        left.u_y + (right.u_y - left.u_y) * bias,
    )
    if point in (left, right):
        return vertex_report(Algorithm.MEDIAN, per, [point], None)
    return lottery_report(Algorithm.MEDIAN, per, point, (left, right), None)


def _segment_optimum(a, b):
    """Product-maximizing point strictly inside segment a-b, if there is one."""
    if a.u_x == b.u_x:
        return None
    m = (b.u_y - a.u_y) / (b.u_x - a.u_x)
    if m == 0:
        return None
    c = a.u_y - m * a.u_x
    x = -c / (2 * m)
    if a.u_x < x < b.u_x:
        return OutcomePoint(x, m * x + c)
    return None


def hull_nash_solution(hull):
    """
    Nash product over the whole lottery hull, segment interiors included.

    On each segment y = m*x + c the product m*x^2 + c*x peaks at x = -c/(2m);
    that point competes with the vertices when it falls inside the segment.
    """
    if not hull.vertices:
        raise NoTrade()
    candidates = {vertex: (vertex,) for vertex in hull.vertices}
    for a, b in hull.segments():
        inner = _segment_optimum(a, b)
        if inner is not None:
            candidates.setdefault(inner, (a, b))

    ordered = sorted(candidates)
    winners = argmax_indices(point.product for point in ordered)
    if len(winners) > 1:
        logger.warning("Hull Nash tie between %s; taking the lexicographically smallest.", [ordered[i] for i in winners])
    point = ordered[winners[0]]
    support = candidates[point]
    return SolutionReport(
        algorithm=Algorithm.HULL_NASH,
        chosen=(point,),
        support=(support,),
        achieving_exchanges=(tuple(e for s in support for e in hull.exchanges.get(s, ())),),
        objective_value=point.product,
        is_lottery=point not in hull.periphery_points,
    )
