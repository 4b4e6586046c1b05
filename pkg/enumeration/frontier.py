import logging
from fractions import Fraction

from exchanges.models import ORIGIN, acceptable
from .models import LotteryHull, Periphery

logger = logging.getLogger(__name__)


def nondominated(points):
    """
    Pareto-maximal subset of points, sorted by increasing x.

    A point is dropped when another has x' >= x and y' >= y with one strict.
    Sweeping from the largest x down keeps a point only if it beats every
    y seen so far.
    """
    frontier = []
    best_y = None
    for point in sorted(set(points), key=lambda p: (-p.u_x, -p.u_y)):
        if best_y is None or point.u_y > best_y:
            frontier.append(point)
            best_y = point.u_y
    frontier.reverse()
    return frontier


def _axis_anchors(cloud):
    """The farthest (0, s) and (r, 0) points of the cloud, whether or not they are dominated."""
    on_y = [point for point in cloud.points if point.u_x == 0 and point.u_y > 0]
    on_x = [point for point in cloud.points if point.u_y == 0 and point.u_x > 0]
    anchors = []
    if on_y:
        anchors.append(max(on_y, key=lambda p: p.u_y))
    if on_x:
        anchors.append(max(on_x, key=lambda p: p.u_x))
    return tuple(anchors)


def periphery(cloud):
    closure = [
        point for point in cloud.points
        if point.u_x >= 0 and point.u_y >= 0 and point != ORIGIN
    ]
    frontier = nondominated(closure)
    points = tuple(point for point in frontier if acceptable(point))
    anchors = _axis_anchors(cloud)
    extent = (
        max((abs(point.u_x) for point in cloud.points), default=Fraction(0)),
        max((abs(point.u_y) for point in cloud.points), default=Fraction(0)),
    )
    logger.debug("Periphery of %d points, anchors %s.", len(points), anchors)
    return Periphery(
        points=points,
        anchors=anchors,
        exchanges={point: cloud.exchanges[point] for point in (*frontier, *anchors)},
        extent=extent,
    )


def _cross(o, a, b):
    return (a.u_x - o.u_x) * (b.u_y - o.u_y) - (a.u_y - o.u_y) * (b.u_x - o.u_x)


def upper_hull(points):
    """Monotone-chain upper hull; collinear middle points and points under a higher one are not kept."""
    highest = {}
    for point in points:
        if point.u_x not in highest or point.u_y > highest[point.u_x].u_y:
            highest[point.u_x] = point
    hull = []
    for point in sorted(highest.values()):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) >= 0:
            hull.pop()
        hull.append(point)
    return hull


def lottery_hull(per, axis_points=None):
    if per.is_empty:
        raise ValueError("Lottery hull needs a non-empty periphery.")
    anchors = per.anchors if axis_points is None else tuple(axis_points)
    vertices = upper_hull(anchors + per.points)
    return LotteryHull(
        vertices=tuple(vertices),
        periphery_points=frozenset(per.points),
        exchanges={point: per.exchanges_for(point) for point in vertices},
    )
