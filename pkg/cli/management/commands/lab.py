import json
from fractions import Fraction
from io import StringIO

from django.conf import settings
from rest_framework import serializers

from cli.mixins import BarterCommand
from cli.rendering import format_exchange, format_number, format_point
from exchanges.serializers import render_instance
from lab.experiments import compare_algorithms, median_dislike_scale_probe
from lab.generator import generate
from lab.greedy import greedy_one_for_one
from lab.models import Condition
from lab.serializers import (
    ComparisonStatsSerializer, GeneratorConfigSerializer, GreedyResultSerializer, MedianProbeReportSerializer,
    write_agreement_csv,
)
from solvers.catalog import ALGORITHMS
from solvers.gravity import constant_sum_product_table
from solvers.serializers import GravityTableSerializer

DEFAULT_FACTORS = [Fraction(1, 2), Fraction(2), Fraction(10), Fraction(100)]


def add_config_arguments(parser):
    parser.add_argument('--config', metavar='FILE', help='Generator config as a JSON document; flags override it.')
    parser.add_argument('-p', type=int, help='Items owned by X.')
    parser.add_argument('-q', type=int, help='Items owned by Y.')
    parser.add_argument('--value-range', nargs=2, metavar=('LO', 'HI'), help='Utility range, inclusive.')
    parser.add_argument('--value-grid', type=int, help='Grid points per unit of utility.')
    parser.add_argument('--condition', choices=Condition.values)


class Command(BarterCommand):
    help = 'Experiments: generate instances, compare algorithms, run greedy trading and probes'

    def add_command_arguments(self, parser):
        experiments = parser.add_subparsers(dest='experiment', required=True)

        generate_parser = experiments.add_parser('generate', help='Write one seeded random instance.')
        add_config_arguments(generate_parser)
        generate_parser.add_argument('-o', '--output', metavar='OUT', help='Write the instance to OUT.')

        compare_parser = experiments.add_parser('compare', help='Run every algorithm on generated instances.')
        add_config_arguments(compare_parser)
        compare_parser.add_argument('--runs', type=int, default=100)
        compare_parser.add_argument('--algorithm', action='append', choices=list(ALGORITHMS), dest='algorithms')
        compare_parser.add_argument('--csv', dest='csv_path', metavar='OUT', help='Write the agreement matrix to OUT.')

        greedy_parser = experiments.add_parser('greedy', help='Trade one item for one while both players gain.')
        greedy_parser.add_argument('file', help='Instance file (JSON).')

        probe_parser = experiments.add_parser('probe', help='Rescale each player and recheck Nash against median.')
        probe_parser.add_argument('file', help='Instance file (JSON).')
        probe_parser.add_argument('--factors', nargs='+', type=Fraction, default=DEFAULT_FACTORS)

        gravity_parser = experiments.add_parser('gravity', help='Tabulate m1*m2 for a fixed total m1 + m2.')
        gravity_parser.add_argument('--total', type=Fraction, required=True)
        gravity_parser.add_argument('--step', type=Fraction, default=Fraction(1))
        gravity_parser.add_argument('--g', dest='g_constant', type=Fraction, default=Fraction('6.674e-11'))
        gravity_parser.add_argument('--distance', type=Fraction, default=Fraction(10))

    def run(self, *args, **options):
        getattr(self, 'run_' + options['experiment'])(options)

    def generator_config(self, options):
        data = {}
        if options.get('config'):
            try:
                data = json.loads(self.read_text(options['config']))
            except json.JSONDecodeError as e:
                raise serializers.ValidationError(f"config line {e.lineno}: malformed JSON: {e.msg}")
            if not isinstance(data, dict):
                raise serializers.ValidationError('Generator config must be a JSON object.')
        for key in ('p', 'q', 'value_range', 'value_grid', 'condition'):
            if options.get(key) is not None:
                data[key] = options[key]
        if options.get('seed') is not None:
            data['seed'] = options['seed']
        data.setdefault('seed', settings.BARTER_DEFAULT_SEED)

        serializer = GeneratorConfigSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def run_generate(self, options):
        text = render_instance(generate(self.generator_config(options)))
        if options['output']:
            self.write_file(options['output'], text)
            if not self.json_mode:
                self.stdout.write(self.style.SUCCESS(f"Wrote {options['output']}"))
        if self.json_mode:
            self.emit_json(json.loads(text))
        elif not options['output']:
            self.stdout.write(text, ending='')

    def run_compare(self, options):
        cfg = self.generator_config(options)
        enumeration = self.enumeration_options()
        stats = compare_algorithms(
            cfg, options['runs'],
            workers=enumeration['workers'],
            algorithms=options['algorithms'],
            limit=enumeration['limit'],
            force=enumeration['force'],
        )
        if options['csv_path']:
            buffer = StringIO()
            write_agreement_csv(buffer, stats)
            self.write_file(options['csv_path'], buffer.getvalue())

        if self.json_mode:
            self.emit_json(ComparisonStatsSerializer(stats).data)
            return
        self.stdout.write(f"instances: {stats.instances_run}  no trade: {stats.no_trade}")
        self.stdout.write(f"median differs from nash: {stats.median_differs_from_nash}")
        self.stdout.write(f"greedy stuck at origin: {stats.greedy_stuck}")
        if stats.collapse_mean is not None:
            self.stdout.write(f"mean collapse ratio: {stats.collapse_mean:.6f}")
        self.stdout.write('algorithm  ties  unique  symmetric  scale-invariant')
        for name in stats.algorithms:
            self.stdout.write(
                f"{name}  {stats.ties[name]}  {stats.unique[name]}  "
                f"{stats.symmetric[name]}  {stats.scale_invariant[name]}"
            )
        self.stdout.write('agreement:')
        for name, row in zip(stats.algorithms, stats.agreement_matrix().tolist()):
            self.stdout.write(f"  {name}: {' '.join(str(count) for count in row)}")
        if options['csv_path']:
            self.stdout.write(self.style.SUCCESS(f"Wrote {options['csv_path']}"))

    def run_greedy(self, options):
        instance = self.read_instance(options['file'])
        result = greedy_one_for_one(instance)
        if self.json_mode:
            self.emit_json(GreedyResultSerializer(result, context=self.context(instance=instance)).data)
            return
        for number, step in enumerate(result.trace, 1):
            self.stdout.write(
                f"{number}. X gives {step.give} for {step.take}: gains "
                f"{format_number(step.gain_x, self.decimal)}, {format_number(step.gain_y, self.decimal)} "
                f"-> {format_point(step.point, self.decimal)}"
            )
        if result.stuck_at_origin:
            self.stdout.write(self.style.WARNING('No profitable one-for-one swap; greedy stays at the origin.'))
        else:
            self.stdout.write(
                f"final: {format_point(result.point, self.decimal)} ({format_exchange(instance, result.exchange)})"
            )

    def run_probe(self, options):
        instance = self.read_instance(options['file'])
        enumeration = self.enumeration_options()
        report = median_dislike_scale_probe(instance, options['factors'], **enumeration)
        if self.json_mode:
            self.emit_json(MedianProbeReportSerializer(report, context=self.context()).data)
            return
        self.stdout.write(
            f"nash {format_point(report.nash_point, self.decimal)}  median {format_point(report.median_point, self.decimal)}"
        )
        for row in report.rows:
            verdict = 'ok' if row.passed else 'changed'
            self.stdout.write(f"  {row.player} x {format_number(row.factor, self.decimal)}: {verdict}")
        if report.passed:
            self.stdout.write(self.style.SUCCESS('Both choices survive every rescaling and stay apart.'))
        else:
            self.stdout.write(self.style.ERROR('Some rescaling moved a choice or merged them.'))

    def run_gravity(self, options):
        table = constant_sum_product_table(options['total'], options['step'], options['g_constant'], options['distance'])
        if self.json_mode:
            self.emit_json(GravityTableSerializer(table, context=self.context()).data)
            return
        best = set(table.best)
        for row in table.rows:
            mark = '  *' if row in best else ''
            self.stdout.write(
                f"{format_number(row.m1, self.decimal)} + {format_number(row.m2, self.decimal)}: "
                f"product {format_number(row.product, self.decimal)}  force {float(row.force):.6g}{mark}"
            )
