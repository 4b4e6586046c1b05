import csv

from rest_framework import serializers

from exchanges.serializers import ExchangeField, OutcomePointSerializer, RationalField
from .models import Condition, GeneratorConfig


class GeneratorConfigSerializer(serializers.Serializer):
    seed = serializers.IntegerField(default=0)
    p = serializers.IntegerField(min_value=0, default=3)
    q = serializers.IntegerField(min_value=0, default=3)
    value_range = serializers.ListField(child=RationalField(allow_negative=False), min_length=2, max_length=2, default=[0, 10])
    value_grid = serializers.IntegerField(min_value=1, default=1)
    condition = serializers.ChoiceField(choices=Condition.choices, default=Condition.UNCONSTRAINED)

    def validate(self, attrs):
        try:
            GeneratorConfig(**{**attrs, 'value_range': tuple(attrs['value_range'])})
        except ValueError as e:
            raise serializers.ValidationError(str(e))
        return attrs

    def create(self, validated_data):
        return GeneratorConfig(**{**validated_data, 'value_range': tuple(validated_data['value_range'])})


class GreedyStepSerializer(serializers.Serializer):
    give = serializers.CharField()
    take = serializers.CharField()
    gain_x = RationalField()
    gain_y = RationalField()
    point = OutcomePointSerializer()


class GreedyResultSerializer(serializers.Serializer):
    point = OutcomePointSerializer()
    exchange = ExchangeField()
    steps = GreedyStepSerializer(source='trace', many=True)
    stuck_at_origin = serializers.BooleanField()


class ProbeRowSerializer(serializers.Serializer):
    player = serializers.CharField()
    factor = RationalField()
    nash_unchanged = serializers.BooleanField()
    median_unchanged = serializers.BooleanField()
    distinct = serializers.BooleanField()
    passed = serializers.BooleanField()


class MedianProbeReportSerializer(serializers.Serializer):
    nash_point = OutcomePointSerializer()
    median_point = OutcomePointSerializer()
    rows = ProbeRowSerializer(many=True)
    passed = serializers.BooleanField()


class ComparisonStatsSerializer(serializers.Serializer):
    instances_run = serializers.IntegerField()
    algorithms = serializers.ListField(child=serializers.CharField())
    agreement = serializers.SerializerMethodField()
    ties = serializers.DictField(child=serializers.IntegerField())
    unique = serializers.DictField(child=serializers.IntegerField())
    symmetric = serializers.DictField(child=serializers.IntegerField())
    scale_invariant = serializers.DictField(child=serializers.IntegerField())
    no_trade = serializers.IntegerField()
    median_differs_from_nash = serializers.IntegerField()
    greedy_stuck = serializers.IntegerField()
    collapse_mean = serializers.FloatField(allow_null=True)
    collapse_histogram = serializers.SerializerMethodField()
    greedy_gap_histogram = serializers.SerializerMethodField()

    def get_agreement(self, stats):
        return stats.agreement_matrix().tolist()

    def get_collapse_histogram(self, stats):
        counts, edges = stats.collapse_histogram()
        return {'counts': counts, 'edges': edges}

    def get_greedy_gap_histogram(self, stats):
        counts, edges = stats.greedy_gap_histogram()
        return {'counts': counts, 'edges': edges}


def write_agreement_csv(stream, stats):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(['algorithm', *stats.algorithms])
    for name, row in zip(stats.algorithms, stats.agreement_matrix().tolist()):
        writer.writerow([name, *row])
