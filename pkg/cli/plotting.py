import numpy as np
from django.template.loader import render_to_string

from enumeration.frontier import lottery_hull
from exchanges.models import ORIGIN, acceptable
from notrade.detectors import run_detectors
from solvers.catalog import solve
from solvers.models import Algorithm
from .rendering import format_number, format_point

WIDTH = 640
HEIGHT = 480
MARGIN = 48

DEFAULT_MARKS = (Algorithm.NASH, Algorithm.MEDIAN)


def _pixels(values):
    return [f"{value:.2f}" for value in values]


class Canvas:
    """Maps utility coordinates onto the SVG viewport; both axes always include zero."""

    def __init__(self, points):
        xs = [0.0] + [float(point.u_x) for point in points]
        ys = [0.0] + [float(point.u_y) for point in points]
        self.x_range = (min(xs), max(xs) if max(xs) > min(xs) else min(xs) + 1.0)
        self.y_range = (min(ys), max(ys) if max(ys) > min(ys) else min(ys) + 1.0)

    def place(self, points):
        xs = np.array([float(point.u_x) for point in points], dtype=float)
        ys = np.array([float(point.u_y) for point in points], dtype=float)
        cx = np.interp(xs, self.x_range, (MARGIN, WIDTH - MARGIN))
        cy = np.interp(ys, self.y_range, (HEIGHT - MARGIN, MARGIN))
        return list(zip(_pixels(cx), _pixels(cy)))

    def origin(self):
        return self.place([ORIGIN])[0]


def _css_class(point, per):
    if point in per.anchors:
        return 'anchor'
    if point in per.points:
        return 'periphery'
    if acceptable(point):
        return 'acceptable'
    return 'cloud'


def plot_context(instance, cloud, per, hull=False, annotate=False, first_quadrant=False, marks=DEFAULT_MARKS, **options):
    """
    Template context for point_cloud.svg.

    first_quadrant restricts the plot to the closure (periphery plus axis
    anchors). options are passed on to the solvers for the annotations.
    """
    plotted = list(per.closure) if first_quadrant else list(cloud.points)
    canvas = Canvas(plotted)
    origin_x, origin_y = canvas.origin()

    points = [
        {'cx': cx, 'cy': cy, 'css': _css_class(point, per), 'label': format_point(point)}
        for point, (cx, cy) in zip(plotted, canvas.place(plotted))
    ]

    hull_path = ''
    if hull and not per.is_empty:
        vertices = canvas.place(lottery_hull(per).vertices)
        hull_path = 'M ' + ' L '.join(f"{cx} {cy}" for cx, cy in vertices)

    markers = []
    if annotate and not per.is_empty:
        for name in marks:
            report = solve(per, name, **options)
            (cx, cy), = canvas.place([report.headline])
            markers.append({
                'algorithm': str(report.algorithm),
                'cx': cx,
                'cy': cy,
                'label': f"{report.algorithm} {format_point(report.headline)}",
            })

    caption = ''
    if per.is_empty:
        caption = f"No trade ({run_detectors(instance).kind})" if instance is not None else 'No trade'

    return {
        'width': WIDTH,
        'height': HEIGHT,
        'margin': MARGIN,
        'right': WIDTH - MARGIN,
        'bottom': HEIGHT - MARGIN,
        'origin_x': origin_x,
        'origin_y': origin_y,
        'x_label': format_number(max((point.u_x for point in plotted), default=0)),
        'y_label': format_number(max((point.u_y for point in plotted), default=0)),
        'title': f"{len(plotted)} outcome points, {len(per)} on the periphery",
        'points': points,
        'hull_path': hull_path,
        'markers': markers,
        'caption': caption,
    }


def render_svg(instance, cloud, per, **kwargs):
    return render_to_string('cli/point_cloud.svg', plot_context(instance, cloud, per, **kwargs))
