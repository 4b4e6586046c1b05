import json
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from exchanges.exceptions import BarterError, EnumerationLimitExceeded, NotApplicable, PreconditionError
from exchanges.serializers import parse_instance

logger = logging.getLogger(__name__)

# Exit codes: 0 success, 1 domain failure, 2 usage or parse error.
DOMAIN_FAILURE = 1
USAGE_ERROR = 2

USAGE_ERRORS = (EnumerationLimitExceeded, PreconditionError, NotApplicable, ValueError)


def flatten_validation_error(error):
    detail = error.detail
    if isinstance(detail, dict):
        return '; '.join(f"{key}: {' '.join(str(m) for m in messages)}" for key, messages in detail.items())
    if isinstance(detail, list):
        return '; '.join(str(message) for message in detail)
    return str(detail)


class BarterCommand(BaseCommand):
    """
    Base for the barter commands.

    Adds the global flags, reads instance files, writes output as text or as a
    single JSON document, and maps failures onto exit codes. Subclasses
    implement add_command_arguments and run.
    """

    def add_arguments(self, parser):
        self.add_command_arguments(parser)
        parser.add_argument('--json', action='store_true', help='Emit a single JSON document on stdout.')
        parser.add_argument('--decimal', action='store_true', help='Render rationals as 6-digit decimals.')
        parser.add_argument('--limit', type=int, default=None, help='Enumeration limit on p+q (default BARTER_LIMIT).')
        parser.add_argument('--force', action='store_true', help='Enumerate past the limit.')
        parser.add_argument('--workers', type=int, default=None, help='Worker processes (default BARTER_WORKERS).')
        parser.add_argument('--seed', type=int, default=None, help='Seed for random generation (default BARTER_DEFAULT_SEED).')

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        self.options = options
        try:
            self.run(*args, **options)
        except CommandError:
            raise
        except serializers.ValidationError as e:
            raise CommandError(flatten_validation_error(e), returncode=USAGE_ERROR)
        except USAGE_ERRORS as e:
            raise CommandError(str(e), returncode=USAGE_ERROR)
        except BarterError as e:
            logger.error("%s failed: %s", self.__module__.rsplit('.', 1)[-1], e)
            raise CommandError(str(e), returncode=DOMAIN_FAILURE)

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of BarterCommand must provide a run() method')

    # Options

    @property
    def json_mode(self):
        return self.options.get('json', False)

    @property
    def decimal(self):
        return self.options.get('decimal', False)

    def enumeration_options(self):
        return {
            'limit': self.options.get('limit'),
            'force': self.options.get('force', False),
            'workers': self.options.get('workers'),
        }

    # Input and output

    def read_instance(self, path, allow_negative=False):
        return parse_instance(self.read_text(path), allow_negative=allow_negative)

    def read_text(self, path):
        try:
            return Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise CommandError(f"Cannot read {path}: {e.strerror}.", returncode=USAGE_ERROR)

    def write_file(self, path, text):
        try:
            Path(path).write_text(text, encoding='utf-8')
        except OSError as e:
            raise CommandError(f"Cannot write {path}: {e.strerror}.", returncode=USAGE_ERROR)

    def emit_json(self, payload):
        self.stdout.write(json.dumps(payload, indent=2))

    def context(self, **extra):
        return {'decimal': self.decimal, **extra}
