from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from enumeration.cloud import enumerate_cloud
from enumeration.frontier import periphery
from enumeration.models import PointCloud
from exchanges.models import OutcomePoint
from exchanges.tests.fixtures import centralized_instance, centralized_points
from solvers.equitable import (
    arc_position, eq_arclength_solution, eq_diagonal_solution, eq_sum_solution, equitable_rescale,
    equitable_scale,
)
from solvers.models import EquitableScale, PathVariant, RescaleVariant


def pt(x, y):
    return OutcomePoint(Fraction(str(x)), Fraction(str(y)))


def per_of(*points):
    return periphery(PointCloud.from_points(points))


def table_periphery():
    return periphery(PointCloud.from_points(centralized_points()))


class EquitableScaleTests(SimpleTestCase):
    def test_table_anchors(self):
        scale = equitable_scale(table_periphery())
        self.assertEqual((scale.factor_x, scale.factor_y), (Fraction(1, 39), Fraction(1, 32)))
        self.assertEqual(scale.variant, RescaleVariant.FIRST_QUADRANT)

    def test_anchors_land_on_unit_axes(self):
        _, rescaled = equitable_rescale(table_periphery())
        self.assertEqual(rescaled.anchors, (pt(0, 1), pt(1, 0)))

    def test_symmetric_periphery(self):
        scale, rescaled = equitable_rescale(per_of((1, 3), (3, 1)))
        self.assertEqual(scale.factor_x, scale.factor_y)
        self.assertEqual(rescaled.points, (pt('1/3', 1), pt(1, '1/3')))

    def test_closest_points_without_axis_anchors(self):
        scale = equitable_scale(per_of((2, 5), (10, 1)))
        self.assertEqual((scale.factor_x, scale.factor_y), (Fraction(1, 10), Fraction(1, 5)))

    def test_four_quadrant_uses_cloud_extent(self):
        scale = equitable_scale(per_of((2, 3), (-9, 1), (4, -7)), RescaleVariant.FOUR_QUADRANT)
        self.assertEqual((scale.factor_x, scale.factor_y), (Fraction(1, 9), Fraction(1, 7)))

    def test_nonpositive_factor_rejected(self):
        with self.assertRaises(ValueError):
            EquitableScale(Fraction(0), Fraction(1))


class EqSumTests(SimpleTestCase):
    def test_table(self):
        report = eq_sum_solution(table_periphery())
        self.assertEqual(report.chosen, (pt(27, 17),))
        self.assertEqual(report.objective_value, Fraction(27, 39) + Fraction(17, 32))

    def test_symmetric_tie(self):
        report = eq_sum_solution(per_of((1, 3), (3, 1), (4, 0), (0, 4)))
        self.assertEqual(report.chosen, (pt(1, 3), pt(3, 1)))

    def test_single_point(self):
        self.assertEqual(eq_sum_solution(per_of((7, 2))).chosen, (pt(7, 2),))


class EqDiagonalTests(SimpleTestCase):
    def test_table(self):
        report = eq_diagonal_solution(table_periphery())
        self.assertEqual(report.chosen, (pt(21, 21),))
        self.assertEqual(report.objective_value, abs(Fraction(21, 39) - Fraction(21, 32)))

    def test_point_on_diagonal(self):
        report = eq_diagonal_solution(per_of((1, 5), (2, 2), (5, 1)))
        self.assertEqual(report.chosen, (pt(2, 2),))
        self.assertEqual(report.objective_value, 0)

    def test_symmetric_tie(self):
        self.assertEqual(eq_diagonal_solution(per_of((1, 3), (3, 1))).chosen, (pt(1, 3), pt(3, 1)))


class EqArclengthTests(SimpleTestCase):
    def test_single_point(self):
        report = eq_arclength_solution(per_of((2, 5)))
        self.assertEqual(report.chosen, (pt(2, 5),))
        self.assertFalse(report.is_lottery)

    def test_symmetric_pair_gives_midpoint(self):
        report = eq_arclength_solution(per_of((1, 3), (3, 1)))
        self.assertTrue(report.is_lottery)
        self.assertAlmostEqual(report.chosen[0].u_x, 2.0, places=12)
        self.assertAlmostEqual(report.chosen[0].u_y, 2.0, places=12)
        self.assertEqual(report.support, ((pt(1, 3), pt(3, 1)),))

    def test_table_halfway_along_chain(self):
        per = table_periphery()
        points = np.array([[float(p.u_x) / 39, float(p.u_y) / 32] for p in centralized_points()])
        total = float(np.hypot(*np.diff(points, axis=0).T).sum())
        report = eq_arclength_solution(per)
        position = arc_position(per, report.chosen[0])
        self.assertAlmostEqual(position / total, 0.5, delta=1e-9)

    def test_table_halfway_along_hull(self):
        per = table_periphery()
        report = eq_arclength_solution(per, PathVariant.HULL)
        hull_total = arc_position(per, pt(39, 0), PathVariant.HULL)
        position = arc_position(per, report.chosen[0], PathVariant.HULL)
        self.assertAlmostEqual(position / hull_total, 0.5, delta=1e-9)

    def test_dominated_axis_anchor_starts_the_chain(self):
        per = per_of((0, 0), (0, 5), (1, 5), (3, 1))
        report = eq_arclength_solution(per)
        self.assertTrue(report.is_lottery)
        self.assertEqual(report.support, ((pt(1, 5), pt(3, 1)),))
        # (0,1) -> (1/3,1) -> (1,1/5) after rescaling by 1/3 and 1/5
        first, second = 1 / 3, float(np.hypot(2 / 3, 4 / 5))
        t = ((first + second) / 2 - first) / second
        self.assertAlmostEqual(report.chosen[0].u_x, 1 + 2 * t, places=12)
        self.assertAlmostEqual(report.chosen[0].u_y, 5 - 4 * t, places=12)

    def test_vertex_hit_returns_exact_vertex(self):
        report = eq_arclength_solution(per_of((1, 3), (2, 2), (3, 1)))
        self.assertEqual(report.chosen, (pt(2, 2),))
        self.assertFalse(report.is_lottery)


class PreScalingTests(SimpleTestCase):
    """Equitable rescaling cancels any positive pre-scaling of either player."""

    def test_chosen_exchanges_unchanged(self):
        per = periphery(enumerate_cloud(centralized_instance()))
        solvers = (eq_sum_solution, eq_diagonal_solution, eq_arclength_solution)
        expected = [solver(per).exchange_set() for solver in solvers]
        for fx, fy in ((Fraction(1, 2), Fraction(1)), (Fraction(3), Fraction(1)), (Fraction(7), Fraction(2, 9))):
            scaled = per.scaled(fx, fy)
            self.assertEqual([solver(scaled).exchange_set() for solver in solvers], expected)
