import json
import math
import re
from fractions import Fraction

from rest_framework import serializers

from .models import Instance, Item, PlayerId


class RationalField(serializers.Field):
    """
    Exact rational utility.

    Accepts ints, decimal strings ("31.5"), fraction strings ("63/2") and JSON
    floats (read through their shortest decimal repr). Renders integers as JSON
    integers and everything else as "num/den", or as a fixed 6-digit decimal
    string when the serializer context has decimal=True.
    """
    default_error_messages = {
        'invalid': 'Malformed number {value!r}.',
        'negative': 'Utility must be nonnegative, got {value}.',
    }

    def __init__(self, allow_negative=True, **kwargs):
        self.allow_negative = allow_negative
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if isinstance(data, bool):
            self.fail('invalid', value=data)
        if isinstance(data, float):
            if not math.isfinite(data):
                self.fail('invalid', value=data)
            data = repr(data)
        try:
            value = Fraction(data.strip() if isinstance(data, str) else data)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail('invalid', value=data)
        if value < 0 and not (self.allow_negative or self.context.get('allow_negative')):
            self.fail('negative', value=format_rational(value))
        return value

    def to_representation(self, value):
        return render_number(value, decimal=self.context.get('decimal', False))


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render_number(value, decimal=False):
    if value is None:
        return None
    if isinstance(value, float):
        return f"{value:.6f}" if decimal else value
    value = Fraction(value)
    if decimal:
        return f"{float(value):.6f}"
    if value.denominator == 1:
        return value.numerator
    return format_rational(value)


class OutcomePointSerializer(serializers.Serializer):
    u_x = RationalField()
    u_y = RationalField()


class ItemSerializer(serializers.Serializer):
    name = serializers.CharField(max_length=255)
    owner = serializers.ChoiceField(choices=PlayerId.choices)
    value_to_x = RationalField(allow_negative=False)
    value_to_y = RationalField(allow_negative=False)

    def to_internal_value(self, data):
        validated = super().to_internal_value(data)
        validated['owner'] = PlayerId(validated['owner'])
        return validated


class InstanceSerializer(serializers.Serializer):
    items = ItemSerializer(many=True, allow_empty=True)

    def validate_items(self, items):
        seen = {}
        for position, item in enumerate(items):
            name = item['name']
            if name in seen:
                raise serializers.ValidationError(
                    f"items[{position}] '{name}': duplicate item name "
                    f"(first used by items[{seen[name]}])."
                )
            seen[name] = position
        return items

    def create(self, validated_data):
        return Instance(tuple(Item(**item) for item in validated_data['items']))


def _line_of(text, name):
    match = re.search(r'"name"\s*:\s*' + re.escape(json.dumps(name)), text)
    if match is None:
        return None
    return text.count('\n', 0, match.start()) + 1


def _flatten_errors(text, raw, detail):
    """Turn DRF's nested item errors into one message per problem, with line context."""
    messages = []
    items = raw.get('items') if isinstance(raw, dict) else None
    item_errors = detail.get('items', []) if isinstance(detail, dict) else []
    if isinstance(item_errors, list):
        for position, errors in enumerate(item_errors):
            if not errors:
                continue
            if not isinstance(errors, dict):
                messages.append(str(errors))
                continue
            name = '?'
            if isinstance(items, list) and position < len(items) and isinstance(items[position], dict):
                name = str(items[position].get('name', '?'))
            line = _line_of(text, name)
            where = f" (line {line})" if line else ''
            for field_name, field_errors in errors.items():
                for error in field_errors:
                    messages.append(f"items[{position}] '{name}'{where}: {field_name}: {error}")
    elif isinstance(item_errors, dict):
        for errors in item_errors.values():
            messages.extend(f"items: {error}" for error in errors)
    for key, errors in (detail.items() if isinstance(detail, dict) else []):
        if key != 'items':
            messages.extend(f"{key}: {error}" for error in errors)
    return messages or [str(detail)]


def parse_instance(text, allow_negative=False):
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise serializers.ValidationError(f"line {e.lineno}: malformed JSON: {e.msg}")
    if not isinstance(raw, dict) or 'items' not in raw:
        raise serializers.ValidationError('Instance file must be a JSON object with an "items" list.')

    serializer = InstanceSerializer(data=raw, context={'allow_negative': allow_negative})
    if not serializer.is_valid():
        raise serializers.ValidationError(_flatten_errors(text, raw, serializer.errors))
    return serializer.save()


def dump_instance(instance, decimal=False):
    return dict(InstanceSerializer(instance, context={'decimal': decimal}).data)


def render_instance(instance):
    return json.dumps(dump_instance(instance), indent=2) + '\n'


def exchange_names(instance, exchange):
    """Item names on each side of an exchange; bitmasks when there is no instance to name them."""
    if instance is None:
        return {'give_x': exchange.give_x, 'give_y': exchange.give_y}
    return {'give_x': instance.names_in(exchange.give_x), 'give_y': instance.names_in(exchange.give_y)}


class ExchangeField(serializers.Field):
    """Read-only exchange rendered by item name using context['instance']."""

    def __init__(self, **kwargs):
        kwargs['read_only'] = True
        super().__init__(**kwargs)

    def to_representation(self, value):
        return exchange_names(self.context.get('instance'), value)
