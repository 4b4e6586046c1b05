import argparse
from fractions import Fraction

from django.core.management.base import CommandError

from cli.mixins import DOMAIN_FAILURE, USAGE_ERROR, BarterCommand
from cli.rendering import format_exchange, format_number
from exchanges.models import PlayerId
from exchanges.serializers import dump_instance, render_instance
from invariance.checks import check_scale_invariance, find_translation_counterexample, zero_item_consistency
from invariance.models import ScaleTransform, TranslationTransform
from invariance.serializers import (
    ScaleInvarianceReportSerializer, TranslationFlipReportSerializer, ZeroItemReportSerializer,
)
from invariance.transforms import apply_scale, apply_translation


def player_value(text):
    """Parse PLAYER:VALUE, e.g. X:2 or Y:1/3."""
    player, sep, value = text.partition(':')
    if not sep or player.strip() not in PlayerId.values:
        raise argparse.ArgumentTypeError(f"expected PLAYER:VALUE with PLAYER X or Y, got {text!r}")
    try:
        return PlayerId(player.strip()), Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed number {value!r}")


class Command(BarterCommand):
    help = 'Apply a positive scale or a translation to one player\'s utilities and check the consequences'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='Instance file (JSON).')
        parser.add_argument('--scale', type=player_value, metavar='PLAYER:FACTOR', help='Multiply PLAYER\'s utilities by FACTOR > 0.')
        parser.add_argument('--translate', type=player_value, metavar='PLAYER:OFFSET', help='Add OFFSET to PLAYER\'s utilities.')
        parser.add_argument('--strict', action='store_true', help='Reject translations that make a utility negative.')
        parser.add_argument('--check', action='store_true', help='Verify scale invariance of acceptability and the Nash choice.')
        parser.add_argument('--find-flip', action='store_true', help='Find the smallest offset that flips an accepted exchange.')
        parser.add_argument('--zero-items', action='store_true', help='Compare how both transforms treat zero-valued items.')
        parser.add_argument('-o', '--output', metavar='OUT', help='Write the transformed instance to OUT.')

    def run(self, *args, **options):
        if not (options['scale'] or options['translate'] or options['find_flip']):
            raise CommandError('Give --scale, --translate or --find-flip.', returncode=USAGE_ERROR)
        if options['check'] and not options['scale']:
            raise CommandError('--check needs --scale.', returncode=USAGE_ERROR)
        if options['zero_items'] and not (options['scale'] and options['translate']):
            raise CommandError('--zero-items needs both --scale and --translate.', returncode=USAGE_ERROR)

        instance = self.read_instance(options['file'])
        scale = ScaleTransform(*options['scale']) if options['scale'] else None
        translation = TranslationTransform(*options['translate']) if options['translate'] else None

        transformed = instance
        if scale:
            transformed = apply_scale(transformed, scale)
        if translation:
            transformed = apply_translation(transformed, translation, strict=options['strict'])

        context = self.context(instance=instance)
        document = {'instance': dump_instance(transformed, decimal=self.decimal)}
        check = flip = None
        if options['check']:
            check = check_scale_invariance(instance, scale, **self.enumeration_options())
            document['check'] = ScaleInvarianceReportSerializer(check, context=context).data
        if options['find_flip']:
            flip = find_translation_counterexample(instance, **self.enumeration_options())
            document['flip'] = TranslationFlipReportSerializer(flip, context=context).data if flip else None
        if options['zero_items']:
            zero = zero_item_consistency(instance, scale, translation)
            document['zero_items'] = ZeroItemReportSerializer(zero, context=context).data

        if options['output'] and (scale or translation):
            self.write_file(options['output'], render_instance(transformed))

        if self.json_mode:
            self.emit_json(document)
        else:
            self.write_text(options, instance, transformed, document, check, flip)

        if check is not None and not check.passed:
            raise CommandError(f"Scale invariance failed: {check.failure}", returncode=DOMAIN_FAILURE)

    def write_text(self, options, instance, transformed, document, check, flip):
        if options['scale'] or options['translate']:
            if options['output']:
                self.stdout.write(self.style.SUCCESS(f"Wrote {options['output']}"))
            else:
                self.stdout.write(render_instance(transformed), ending='')

        if check is not None:
            if check.passed:
                self.stdout.write(self.style.SUCCESS(
                    f"Scale invariance holds over {check.exchanges_checked} exchanges."
                ))
            else:
                self.stdout.write(self.style.ERROR(f"Scale invariance fails: {check.failure}"))

        if options['find_flip']:
            if flip is None:
                self.stdout.write('No accepted exchange is flipped by any translation.')
            else:
                self.stdout.write(
                    f"b* = {format_number(flip.threshold, self.decimal)}: translating {flip.player} by b >= b* "
                    f"makes {flip.player} reject ({format_exchange(instance, flip.exchange)})"
                )

        if 'zero_items' in document:
            zero = document['zero_items']
            self.stdout.write(f"zero items for {zero['player']}: {', '.join(zero['items'])}")
            self.stdout.write(f"  scaled: {zero['scaled_values']}  translated: {zero['translated_values']}")
