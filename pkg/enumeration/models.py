from dataclasses import dataclass, field
from fractions import Fraction

from exchanges.models import OutcomePoint


def _normalized(mapping):
    return {point: tuple(sorted(mapping[point])) for point in sorted(mapping)}


@dataclass(frozen=True, eq=True)
class PointCloud:
    """
    Distinct outcome points, each with every exchange landing on it.

    Keys are kept sorted by (u_x, u_y) and exchange lists by (give_x, give_y)
    so two clouds built from the same instance compare and serialize alike.
    """
    exchanges: dict
    total_exchanges: int

    __hash__ = None

    def __post_init__(self):
        object.__setattr__(self, 'exchanges', _normalized(self.exchanges))

    @classmethod
    def from_points(cls, points):
        """Cloud over raw outcome points with no exchanges attached."""
        points = {OutcomePoint(Fraction(x), Fraction(y)) for x, y in points}
        return cls({point: () for point in points}, len(points))

    @property
    def points(self):
        return tuple(self.exchanges)

    def __len__(self):
        return len(self.exchanges)

    def __contains__(self, point):
        return point in self.exchanges

    def count(self, point):
        # Raw point lists carry no exchanges; each point stands for one outcome.
        return len(self.exchanges.get(point, ())) or (1 if point in self.exchanges else 0)

    def merge(self, other):
        merged = {point: list(exchanges) for point, exchanges in self.exchanges.items()}
        for point, exchanges in other.exchanges.items():
            merged.setdefault(point, []).extend(exchanges)
        return PointCloud(merged, self.total_exchanges + other.total_exchanges)


@dataclass(frozen=True)
class Periphery:
    """
    Acceptable, nondominated points sorted by increasing u_x.

    anchors holds the cloud's farthest axis points, (0, s) with max s before
    (r, 0) with max r, kept even when an off-axis point dominates them. closure
    walks by increasing u_x and, within one u_x, by decreasing u_y. extent is
    the cloud's (max |u_x|, max |u_y|).
    """
    points: tuple
    anchors: tuple = ()
    exchanges: dict = field(default_factory=dict, compare=False, repr=False)
    extent: tuple = (Fraction(0), Fraction(0))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def is_empty(self):
        return not self.points

    @property
    def closure(self):
        return tuple(sorted(self.anchors + self.points, key=lambda p: (p.u_x, -p.u_y)))

    def exchanges_for(self, point):
        return self.exchanges.get(point, ())

    def scaled(self, factor_x, factor_y):
        def scale(point):
            return OutcomePoint(point.u_x * factor_x, point.u_y * factor_y)

        return Periphery(
            points=tuple(scale(point) for point in self.points),
            anchors=tuple(scale(point) for point in self.anchors),
            exchanges={scale(point): exchanges for point, exchanges in self.exchanges.items()},
            extent=(self.extent[0] * factor_x, self.extent[1] * factor_y),
        )


@dataclass(frozen=True)
class LotteryHull:
    vertices: tuple
    periphery_points: frozenset = frozenset()
    exchanges: dict = field(default_factory=dict, compare=False, repr=False)

    def __len__(self):
        return len(self.vertices)

    def segments(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def slopes(self):
        return [(b.u_y - a.u_y) / (b.u_x - a.u_x) for a, b in self.segments()]

    def height_at(self, x):
        """Hull height over x, or None outside the hull's u_x range."""
        if not self.vertices or x < self.vertices[0].u_x or x > self.vertices[-1].u_x:
            return None
        if len(self.vertices) == 1:
            return self.vertices[0].u_y
        for a, b in self.segments():
            if a.u_x <= x <= b.u_x:
                return a.u_y + (b.u_y - a.u_y) * (x - a.u_x) / (b.u_x - a.u_x)
        return None
