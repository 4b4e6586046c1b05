from fractions import Fraction

from cli.mixins import BarterCommand
from cli.plotting import DEFAULT_MARKS, render_svg
from enumeration.cloud import enumerate_cloud
from enumeration.frontier import periphery
from solvers.catalog import ALGORITHMS
from solvers.models import PathVariant, RescaleVariant


class Command(BarterCommand):
    help = 'Draw the outcome point cloud of an instance as an SVG scatter plot'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='Instance file (JSON).')
        parser.add_argument('-o', '--output', metavar='OUT', help='Write the SVG to OUT instead of stdout.')
        parser.add_argument('--hull', action='store_true', help='Draw the lottery hull of the periphery.')
        parser.add_argument('--annotate', action='store_true', help='Mark the points chosen by --mark algorithms.')
        parser.add_argument(
            '--mark', action='append', choices=list(ALGORITHMS), dest='marks',
            help='Algorithm to mark with --annotate (repeatable; default nash and median).',
        )
        parser.add_argument('--first-quadrant', action='store_true', help='Plot only the periphery and axis anchors.')
        parser.add_argument('--path-variant', choices=PathVariant.values, default=PathVariant.ADJACENT_CHAIN)
        parser.add_argument('--rescale-variant', choices=RescaleVariant.values, default=RescaleVariant.FIRST_QUADRANT)
        parser.add_argument('--coin-bias', type=Fraction, default=Fraction(1, 2))

    def run(self, *args, **options):
        instance = self.read_instance(options['file'])
        cloud = enumerate_cloud(instance, **self.enumeration_options())
        per = periphery(cloud)
        svg = render_svg(
            instance, cloud, per,
            hull=options['hull'],
            annotate=options['annotate'],
            first_quadrant=options['first_quadrant'],
            marks=options['marks'] or DEFAULT_MARKS,
            bias=options['coin_bias'],
            path_variant=options['path_variant'],
            variant=options['rescale_variant'],
        )

        if options['output']:
            self.write_file(options['output'], svg)
            if self.json_mode:
                self.emit_json({'output': options['output'], 'points': len(cloud), 'periphery': len(per)})
            else:
                self.stdout.write(self.style.SUCCESS(f"Wrote {options['output']}"))
        elif self.json_mode:
            self.emit_json({'output': None, 'svg': svg, 'points': len(cloud), 'periphery': len(per)})
        else:
            self.stdout.write(svg, ending='')
