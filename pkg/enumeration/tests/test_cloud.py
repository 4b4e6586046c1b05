import logging
from fractions import Fraction
from io import StringIO

from django.test import SimpleTestCase, override_settings

from enumeration.cloud import collapse_ratio, enumerate_cloud, point_of, subset_sums
from enumeration.frontier import periphery
from enumeration.models import PointCloud
from enumeration.serializers import CSV_HEADER, write_point_csv
from exchanges.exceptions import EnumerationLimitExceeded
from exchanges.models import ORIGIN, Exchange, marginal_utilities
from exchanges.tests.fixtures import (
    make_instance, mutual_dominance_instance, one_for_one_instance, zero_sum_instance,
)
from lab.generator import generate
from lab.models import GeneratorConfig


class EnumerateCloudTests(SimpleTestCase):
    def test_one_item_each_gives_four_exchanges(self):
        cloud = enumerate_cloud(one_for_one_instance())
        self.assertEqual(cloud.total_exchanges, 4)
        self.assertEqual(sum(len(exchanges) for exchanges in cloud.exchanges.values()), 4)
        self.assertEqual(
            set(point_of(cloud)),
            {Exchange(0, 0), Exchange(1, 0), Exchange(0, 2), Exchange(1, 2)},
        )

    def test_nine_item_table_enumerates_512(self):
        cloud = enumerate_cloud(mutual_dominance_instance())
        self.assertEqual(cloud.total_exchanges, 512)
        self.assertEqual(sum(len(exchanges) for exchanges in cloud.exchanges.values()), 512)

    def test_identical_valuation_points_on_antidiagonal(self):
        cloud = enumerate_cloud(zero_sum_instance())
        for point in cloud.points:
            self.assertEqual(point.u_x, -point.u_y)

    def test_points_match_direct_evaluation(self):
        instance = make_instance(
            x_items=[('a', '1/3', 2), ('b', '2.5', '7/4')],
            y_items=[('c', 6, '1/2'), ('d', '3/5', 1)],
        )
        cloud = enumerate_cloud(instance)
        for exchange, point in point_of(cloud).items():
            self.assertEqual(point, marginal_utilities(instance, exchange))

    def test_null_exchange_always_present_never_on_periphery(self):
        for instance in (zero_sum_instance(), one_for_one_instance(), make_instance()):
            cloud = enumerate_cloud(instance)
            self.assertIn(Exchange(0, 0), cloud.exchanges[ORIGIN])
            self.assertNotIn(ORIGIN, periphery(cloud).points)

    def test_limit_names_exchange_count(self):
        instance = mutual_dominance_instance()
        with self.assertRaises(EnumerationLimitExceeded) as ctx:
            enumerate_cloud(instance, limit=8)
        self.assertIn('512', str(ctx.exception))

    def test_force_overrides_limit(self):
        cloud = enumerate_cloud(one_for_one_instance(), limit=1, force=True)
        self.assertEqual(cloud.total_exchanges, 4)

    def test_forced_warning_goes_to_null_handler(self):
        handlers = logging.getLogger('enumeration').handlers
        self.assertTrue(handlers)
        self.assertTrue(all(isinstance(handler, logging.NullHandler) for handler in handlers))
        self.assertFalse(logging.getLogger('enumeration').propagate)
        with self.assertLogs('enumeration.cloud', level='WARNING') as logs:
            enumerate_cloud(one_for_one_instance(), limit=1, force=True)
        self.assertIn('past the limit', logs.output[0])

    @override_settings(BARTER_LIMIT=1)
    def test_limit_read_from_settings(self):
        with self.assertRaises(EnumerationLimitExceeded):
            enumerate_cloud(one_for_one_instance())

    def test_worker_count_does_not_change_cloud(self):
        for seed in (3, 17):
            instance = generate(GeneratorConfig(seed=seed, p=5, q=5))
            self.assertEqual(enumerate_cloud(instance, workers=1), enumerate_cloud(instance, workers=4))

    def test_merge_is_commutative(self):
        a = PointCloud.from_points([(1, 2), (3, 4)])
        b = PointCloud.from_points([(3, 4), (5, 0)])
        self.assertEqual(a.merge(b), b.merge(a))
        self.assertEqual(a.merge(b).total_exchanges, 4)

    def test_subset_sums(self):
        self.assertEqual(subset_sums([1, 10, 100]), [0, 1, 10, 11, 100, 101, 110, 111])


class CollapseRatioTests(SimpleTestCase):
    def test_no_collapse(self):
        instance = make_instance(x_items=[('a', 1, 10)], y_items=[('b', 100, 1000)])
        self.assertEqual(collapse_ratio(enumerate_cloud(instance)), 1)

    def test_equal_valued_items_collapse(self):
        instance = zero_sum_instance()
        # X gives k of its 10-valued items and takes j of Y's 17-valued ones.
        distinct = {(17 * j - 10 * k) for k in range(4) for j in range(3)}
        ratio = collapse_ratio(enumerate_cloud(instance))
        self.assertEqual(ratio, Fraction(len(distinct), 32))
        self.assertLess(ratio, 1)

    def test_single_item(self):
        instance = make_instance(x_items=[('a', 2, 3)])
        cloud = enumerate_cloud(instance)
        self.assertEqual((len(cloud), cloud.total_exchanges), (2, 2))
        self.assertEqual(collapse_ratio(cloud), 1)

    def test_ratio_in_unit_interval(self):
        for seed in range(20):
            ratio = collapse_ratio(enumerate_cloud(generate(GeneratorConfig(seed=seed, p=3, q=3, value_range=(0, 4)))))
            self.assertGreater(ratio, 0)
            self.assertLessEqual(ratio, 1)


class PointCsvTests(SimpleTestCase):
    def test_one_row_per_exchange(self):
        cloud = enumerate_cloud(one_for_one_instance())
        out = StringIO()
        write_point_csv(out, cloud, periphery(cloud))
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], ','.join(CSV_HEADER))
        self.assertEqual(len(lines), 5)
        self.assertIn('3,3,1,true,true', lines)

    def test_points_only_aggregates_counts(self):
        cloud = enumerate_cloud(zero_sum_instance())
        out = StringIO()
        write_point_csv(out, cloud, periphery(cloud), points_only=True)
        rows = out.getvalue().splitlines()[1:]
        self.assertEqual(len(rows), len(cloud))
        self.assertEqual(sum(int(row.split(',')[2]) for row in rows), 32)

    def test_fractions_in_csv(self):
        cloud = PointCloud.from_points([(Fraction(1, 2), Fraction(3))])
        out = StringIO()
        write_point_csv(out, cloud, periphery(cloud))
        self.assertEqual(out.getvalue().splitlines()[1], '1/2,3,1,true,true')
