from fractions import Fraction
from io import StringIO

from django.test import SimpleTestCase

from enumeration.cloud import enumerate_cloud
from enumeration.frontier import periphery
from exchanges.exceptions import PreconditionError
from exchanges.models import ORIGIN, OutcomePoint
from exchanges.tests.fixtures import (
    centralized_instance, greedy_trap_instance, mutual_dominance_instance, one_for_one_instance,
)
from lab.experiments import compare_algorithms, compare_on_instance, median_dislike_scale_probe, run_one
from lab.generator import generate
from lab.greedy import greedy_one_for_one
from lab.models import ComparisonStats, Condition, GeneratorConfig
from lab.serializers import ComparisonStatsSerializer, write_agreement_csv
from solvers.catalog import ALGORITHMS
from solvers.rules import nash_solution


class GreedyTests(SimpleTestCase):
    def test_stuck_where_a_two_for_one_trade_wins(self):
        instance = greedy_trap_instance()
        result = greedy_one_for_one(instance)
        self.assertEqual(result.point, ORIGIN)
        self.assertTrue(result.stuck_at_origin)
        nash = nash_solution(periphery(enumerate_cloud(instance)))
        self.assertEqual(nash.chosen, (OutcomePoint(Fraction(2), Fraction(2)),))
        self.assertGreater(nash.objective_value, 0)

    def test_single_swap_matches_nash(self):
        instance = one_for_one_instance()
        result = greedy_one_for_one(instance)
        self.assertEqual(result.point, nash_solution(periphery(enumerate_cloud(instance))).headline)
        self.assertEqual([(step.give, step.take) for step in result.trace], [('apple', 'pear')])

    def test_no_trade_instance(self):
        result = greedy_one_for_one(mutual_dominance_instance())
        self.assertEqual(result.point, ORIGIN)
        self.assertEqual(result.trace, ())

    def test_never_beats_nash(self):
        for seed in range(40):
            instance = generate(GeneratorConfig(seed=seed, p=3, q=3))
            result = greedy_one_for_one(instance)
            per = periphery(enumerate_cloud(instance))
            best = nash_solution(per).objective_value if not per.is_empty else 0
            self.assertLessEqual(result.point.product if result.trace else 0, best)
            for step in result.trace:
                self.assertGreater(step.gain_x, 0)
                self.assertGreater(step.gain_y, 0)


class CompareAlgorithmsTests(SimpleTestCase):
    def test_zero_runs(self):
        stats = compare_algorithms(GeneratorConfig(), 0)
        self.assertEqual(stats.instances_run, 0)
        self.assertFalse(stats.agreement_matrix().any())
        self.assertIsNone(stats.collapse_mean)

    def test_identical_valuation_all_no_trade(self):
        stats = compare_algorithms(GeneratorConfig(seed=3, p=2, q=2, condition=Condition.IDENTICAL_VALUATION), 5)
        self.assertEqual(stats.no_trade, 5)
        self.assertTrue((stats.agreement_matrix() == 5).all())

    def test_matrix_symmetric_with_full_diagonal(self):
        stats = compare_algorithms(GeneratorConfig(seed=11, p=3, q=3), 12)
        matrix = stats.agreement_matrix()
        self.assertTrue((matrix == matrix.T).all())
        self.assertTrue((matrix.diagonal() == 12).all())
        self.assertEqual(len(stats.collapse_ratios), 12)
        for ratio in stats.collapse_ratios:
            self.assertTrue(0 < ratio <= 1)

    def test_scale_invariance_counters(self):
        stats = compare_algorithms(GeneratorConfig(seed=0, p=3, q=3), 15)
        self.assertEqual(stats.scale_invariant['nash'], 15)
        self.assertEqual(stats.scale_invariant['median'], 15)
        self.assertEqual(stats.unique['hull-nash'], 15 - stats.no_trade)
        for gap in stats.greedy_gaps:
            self.assertGreaterEqual(gap, 0)

    def test_independent_of_worker_count(self):
        cfg = GeneratorConfig(seed=21, p=3, q=2, value_grid=2)
        self.assertEqual(compare_algorithms(cfg, 6, workers=1), compare_algorithms(cfg, 6, workers=4))

    def test_merge_is_associative(self):
        cfg = GeneratorConfig(seed=5, p=2, q=2)
        a, b, c = (run_one(cfg, k) for k in range(3))
        self.assertEqual(a.merge(b).merge(c), a.merge(b.merge(c)))
        self.assertEqual(ComparisonStats.empty(tuple(ALGORITHMS)).merge(a), a.merge(ComparisonStats.empty(tuple(ALGORITHMS))))

    def test_table_instance_median_disagrees(self):
        stats = compare_on_instance(centralized_instance())
        self.assertEqual(stats.median_differs_from_nash, 1)
        self.assertEqual(stats.agreement['nash']['median'], 0)
        self.assertEqual(stats.agreement['nash']['sum'], 1)
        self.assertEqual(stats.greedy_gaps, (0,))

    def test_outputs(self):
        stats = compare_algorithms(GeneratorConfig(seed=2, p=2, q=2), 4)
        data = ComparisonStatsSerializer(stats).data
        self.assertEqual(data['instances_run'], 4)
        self.assertEqual(len(data['agreement']), len(ALGORITHMS))
        self.assertEqual(sum(data['collapse_histogram']['counts']), 4)
        out = StringIO()
        write_agreement_csv(out, stats)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0].split(',')[1:], [str(name) for name in ALGORITHMS])
        self.assertEqual(len(lines), len(ALGORITHMS) + 1)


class MedianProbeTests(SimpleTestCase):
    def test_table_dislike_survives_scaling(self):
        instance = centralized_instance()
        report = median_dislike_scale_probe(instance, [Fraction(1, 2), 1, 3, 100])
        self.assertTrue(report.passed)
        self.assertEqual(report.nash_point, (27, 17))
        self.assertEqual(report.median_point, (9, 28))
        self.assertEqual(len(report.rows), 8)

    def test_factor_one(self):
        report = median_dislike_scale_probe(centralized_instance(), [1])
        self.assertTrue(all(row.nash_unchanged and row.median_unchanged for row in report.rows))

    def test_nash_equals_median(self):
        with self.assertRaises(PreconditionError):
            median_dislike_scale_probe(one_for_one_instance(), [2])

    def test_empty_periphery(self):
        with self.assertRaises(PreconditionError):
            median_dislike_scale_probe(mutual_dominance_instance(), [2])
