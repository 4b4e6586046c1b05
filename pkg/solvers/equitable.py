import logging

import numpy as np

from enumeration.frontier import lottery_hull
from exchanges.models import OutcomePoint
from .models import Algorithm, EquitableScale, PathVariant, RescaleVariant
from .rules import argmax_indices, lottery_report, require_periphery, vertex_report

logger = logging.getLogger(__name__)

# Segment parameters this close to 0 or 1 land on the vertex itself.
VERTEX_TOLERANCE = 1e-12


def equitable_scale(per, variant=RescaleVariant.FIRST_QUADRANT):
    """
    Factors sending the extreme points to (1, 0) and (0, 1).

    first-quadrant: r and s are the largest u_x and u_y over the periphery
    together with its axis anchors; with no anchors these are the periphery's
    own extreme points. four-quadrant: r and s bound the whole cloud.
    """
    require_periphery(per)
    variant = RescaleVariant(variant)
    if variant == RescaleVariant.FOUR_QUADRANT:
        r, s = per.extent
    else:
        closure = per.closure
        r = max(point.u_x for point in closure)
        s = max(point.u_y for point in closure)
    return EquitableScale(1 / r, 1 / s, variant)


def equitable_rescale(per, variant=RescaleVariant.FIRST_QUADRANT):
    scale = equitable_scale(per, variant)
    return scale, per.scaled(scale.factor_x, scale.factor_y)


def eq_sum_solution(per, variant=RescaleVariant.FIRST_QUADRANT):
    """Algorithm B: maximize x' + y' after equitable rescaling."""
    require_periphery(per)
    scale = equitable_scale(per, variant)
    values = [scale.apply(point).total for point in per.points]
    winners = argmax_indices(values)
    return vertex_report(Algorithm.EQ_SUM, per, [per.points[i] for i in winners], values[winners[0]])


def eq_diagonal_solution(per, variant=RescaleVariant.FIRST_QUADRANT):
    """Algorithm C: closest to x' = y' after equitable rescaling, measured as |x' - y'|."""
    require_periphery(per)
    scale = equitable_scale(per, variant)
    distances = [abs(scale.apply(point).u_x - scale.apply(point).u_y) for point in per.points]
    winners = argmax_indices(-d for d in distances)
    return vertex_report(Algorithm.EQ_DIAGONAL, per, [per.points[i] for i in winners], distances[winners[0]])


def arc_path(per, path_variant=PathVariant.ADJACENT_CHAIN):
    if PathVariant(path_variant) == PathVariant.HULL:
        return lottery_hull(per).vertices
    return per.closure


def eq_arclength_solution(per, path_variant=PathVariant.ADJACENT_CHAIN, variant=RescaleVariant.FIRST_QUADRANT):
    """
    Algorithm D: the point halfway along the rescaled curve.

    Lengths are floating point. A halfway position inside a segment is a
    lottery between its endpoints, reported in original coordinates; the
    segment parameter is the same in both coordinate systems.
    """
    require_periphery(per)
    scale = equitable_scale(per, variant)
    path = arc_path(per, path_variant)
    members = set(per.points)

    if len(path) == 1:
        return vertex_report(Algorithm.EQ_ARC, per, path, 0.0)

    rescaled = np.array([[float(c) for c in scale.apply(point)] for point in path])
    lengths = np.hypot(*np.diff(rescaled, axis=0).T)
    cumulative = np.concatenate(([0.0], np.cumsum(lengths)))
    half = float(cumulative[-1]) / 2
    index = min(int(np.searchsorted(cumulative, half, side='right')) - 1, len(lengths) - 1)
    t = float((half - cumulative[index]) / lengths[index])
    logger.debug("Arc length %.6f; halfway at segment %d, t=%.6f.", cumulative[-1], index, t)

    a, b = path[index], path[index + 1]
    if t <= VERTEX_TOLERANCE or t >= 1 - VERTEX_TOLERANCE:
        vertex = a if t <= VERTEX_TOLERANCE else b
        return vertex_report(Algorithm.EQ_ARC, per, [vertex], half, is_lottery=vertex not in members)

    point = OutcomePoint(
        float(a.u_x) + t * float(b.u_x - a.u_x),
        float(a.u_y) + t * float(b.u_y - a.u_y),
    )
    return lottery_report(Algorithm.EQ_ARC, per, point, (a, b), half)


def arc_position(per, point, path_variant=PathVariant.ADJACENT_CHAIN, variant=RescaleVariant.FIRST_QUADRANT):
    """Rescaled arc length from the start of the path to point, which must lie on it."""
    scale = equitable_scale(per, variant)
    path = arc_path(per, path_variant)
    x, y = float(point.u_x * scale.factor_x), float(point.u_y * scale.factor_y)
    travelled = 0.0
    for a, b in zip(path, path[1:]):
        ax, ay = (float(c) for c in scale.apply(a))
        bx, by = (float(c) for c in scale.apply(b))
        if min(ax, bx) - 1e-12 <= x <= max(ax, bx) + 1e-12:
            return travelled + float(np.hypot(x - ax, y - ay))
        travelled += float(np.hypot(bx - ax, by - ay))
    raise ValueError(f"{point} is not on the path.")
