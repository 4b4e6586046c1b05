from io import StringIO

from cli.mixins import BarterCommand
from cli.rendering import summary_lines
from enumeration.cloud import enumerate_cloud
from enumeration.frontier import periphery
from enumeration.serializers import CloudSummarySerializer, cloud_summary, write_point_csv


class Command(BarterCommand):
    help = 'Enumerate every exchange of an instance and write the outcome point cloud as CSV'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='Instance file (JSON).')
        parser.add_argument('--points-only', action='store_true', help='One row per distinct point with aggregated counts.')
        parser.add_argument('--csv', dest='csv_path', metavar='OUT', help='Write the CSV to OUT instead of stdout.')

    def run(self, *args, **options):
        instance = self.read_instance(options['file'])
        cloud = enumerate_cloud(instance, **self.enumeration_options())
        per = periphery(cloud)
        summary = cloud_summary(instance, cloud, per)

        csv_path = options['csv_path']
        if csv_path or not self.json_mode:
            buffer = StringIO()
            write_point_csv(buffer, cloud, per, points_only=options['points_only'], decimal=self.decimal)
            if csv_path:
                self.write_file(csv_path, buffer.getvalue())
            else:
                self.stdout.write(buffer.getvalue(), ending='')

        if self.json_mode:
            self.emit_json(CloudSummarySerializer(summary, context=self.context()).data)
            return
        # With the CSV on stdout the summary goes to stderr.
        out = self.stdout if csv_path else self.stderr
        for line in summary_lines(summary, self.decimal):
            out.write(line)
        if csv_path:
            self.stdout.write(self.style.SUCCESS(f"Wrote {csv_path}"))
