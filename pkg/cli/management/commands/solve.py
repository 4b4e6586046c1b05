from fractions import Fraction

from cli.mixins import BarterCommand
from cli.rendering import certificate_lines, report_lines
from enumeration.cloud import enumerate_cloud
from enumeration.frontier import periphery
from notrade.detectors import certify_no_trade
from notrade.serializers import NoTradeCertificateSerializer
from solvers.catalog import ALGORITHMS, solve_all
from solvers.models import PathVariant, RescaleVariant
from solvers.serializers import SolutionReportSerializer


class Command(BarterCommand):
    help = 'Run bargaining algorithms on an instance file and report their choices'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='Instance file (JSON).')
        parser.add_argument(
            '--algorithm',
            choices=[*ALGORITHMS, 'all'],
            default='all',
            help='Algorithm to run (default: all, in catalog order).',
        )
        parser.add_argument('--path-variant', choices=PathVariant.values, default=PathVariant.ADJACENT_CHAIN)
        parser.add_argument('--rescale-variant', choices=RescaleVariant.values, default=RescaleVariant.FIRST_QUADRANT)
        parser.add_argument(
            '--coin-bias',
            type=Fraction,
            default=Fraction(1, 2),
            help='Weight of the right central point when the median falls between two points.',
        )

    def run(self, *args, **options):
        instance = self.read_instance(options['file'])
        per = periphery(enumerate_cloud(instance, **self.enumeration_options()))

        if per.is_empty:
            certificate = certify_no_trade(instance, **self.enumeration_options())
            if self.json_mode:
                self.emit_json({
                    'no_trade': True,
                    'certificate': NoTradeCertificateSerializer(certificate, context=self.context()).data,
                    'reports': [],
                })
                return
            self.stdout.write(self.style.WARNING('No trade: no exchange is profitable for both players.'))
            for line in certificate_lines(certificate, self.decimal):
                self.stdout.write(line)
            return

        algorithms = None if options['algorithm'] == 'all' else [options['algorithm']]
        reports = solve_all(
            per,
            algorithms,
            bias=options['coin_bias'],
            path_variant=options['path_variant'],
            variant=options['rescale_variant'],
        )

        if self.json_mode:
            context = self.context(instance=instance)
            self.emit_json({
                'no_trade': False,
                'certificate': None,
                'reports': [SolutionReportSerializer(report, context=context).data for report in reports],
            })
            return
        for report in reports:
            for line in report_lines(report, instance, self.decimal):
                self.stdout.write(line)
