from django.core import checks
from django.db import connections

from cli.mixins import BarterCommand
from cli.rendering import certificate_lines
from notrade.detectors import certify_no_trade
from notrade.serializers import NoTradeCertificateSerializer


class Command(BarterCommand):
    help = (
        'Run the no-trade detectors on an instance and confirm them by enumeration. '
        'Without a file, run the Django system checks.'
    )

    requires_system_checks = []

    def add_command_arguments(self, parser):
        parser.add_argument('file', nargs='?', help='Instance file (JSON).')
        parser.add_argument('--tag', '-t', action='append', dest='tags', help='System checks only: run checks with this tag.')
        parser.add_argument('--deploy', action='store_true', help='System checks only: check deployment settings.')
        parser.add_argument(
            '--fail-level', default='ERROR', choices=['CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG'],
            help='System checks only: message level that fails the command.',
        )
        parser.add_argument(
            '--database', action='append', choices=tuple(connections), dest='databases',
            help='System checks only: run database checks against these aliases.',
        )

    def run(self, *args, **options):
        if options['file'] is None:
            self.check(
                tags=options['tags'],
                display_num_errors=True,
                include_deployment_checks=options['deploy'],
                fail_level=getattr(checks, options['fail_level']),
                databases=options['databases'],
            )
            return

        instance = self.read_instance(options['file'])
        certificate = certify_no_trade(instance, **self.enumeration_options())

        if self.json_mode:
            self.emit_json(NoTradeCertificateSerializer(certificate, context=self.context()).data)
            return

        if certificate.found:
            self.stdout.write(self.style.SUCCESS(f"No trade is possible ({certificate.kind})."))
        elif certificate.periphery_empty:
            self.stdout.write(self.style.WARNING('No trade is possible, but no detector explains why.'))
        elif certificate.brute_force_verified:
            self.stdout.write('Mutually profitable exchanges exist.')
        else:
            self.stdout.write(self.style.WARNING('No detector fired; the instance is too large to enumerate.'))
        for line in certificate_lines(certificate, self.decimal):
            self.stdout.write(line)
