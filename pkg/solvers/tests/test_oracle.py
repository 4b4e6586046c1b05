from django.test import SimpleTestCase

from enumeration.cloud import enumerate_cloud
from enumeration.frontier import lottery_hull, periphery
from lab.generator import generate
from lab.models import GeneratorConfig
from solvers.equitable import eq_arclength_solution, eq_diagonal_solution, eq_sum_solution
from solvers.rules import hull_nash_solution, median_solution, nash_solution, sum_solution
from solvers.tests import reference


def seeded_instances(count=120):
    """Instances with p + q <= 8, sizes and values drawn from the seed."""
    for seed in range(count):
        p, q = 1 + seed % 4, 1 + (seed // 4) % 4
        grid = 1 + seed % 3
        yield seed, generate(GeneratorConfig(seed=seed, p=p, q=q, value_range=(0, 6), value_grid=grid))


class OracleEquivalenceTests(SimpleTestCase):
    def test_periphery_and_tie_sets_match_reference(self):
        solvers = (
            (nash_solution, reference.naive_nash),
            (sum_solution, reference.naive_sum),
            (median_solution, reference.naive_median),
            (eq_sum_solution, reference.naive_eq_sum),
            (eq_diagonal_solution, reference.naive_eq_diagonal),
        )
        checked = 0
        for seed, instance in seeded_instances():
            cloud = enumerate_cloud(instance)
            per = periphery(cloud)
            points = list(cloud.points)
            with self.subTest(seed=seed):
                self.assertEqual(list(per.points), reference.naive_periphery(points))
                self.assertEqual(list(per.anchors), reference.naive_anchors(points))
                if per.is_empty:
                    continue
                checked += 1
                self.assertEqual(
                    list(lottery_hull(per).vertices),
                    reference.naive_hull_vertices(list(per.anchors) + list(per.points)),
                )
                for solver, oracle in solvers:
                    self.assertEqual(list(solver(per).chosen), oracle(points), solver.__name__)

                best, ties = reference.naive_hull_nash(points)
                report = hull_nash_solution(lottery_hull(per))
                self.assertEqual(report.objective_value, best)
                self.assertEqual(report.chosen, (ties[0],))

                x, y = reference.naive_eq_arc(points)
                chosen = eq_arclength_solution(per).chosen[0]
                self.assertAlmostEqual(float(chosen.u_x), x, places=9)
                self.assertAlmostEqual(float(chosen.u_y), y, places=9)
        self.assertGreater(checked, 0)
