from rest_framework import serializers

from exchanges.serializers import OutcomePointSerializer, RationalField, exchange_names


class SolutionReportSerializer(serializers.Serializer):
    """
    One algorithm's answer. Pass the Instance as context['instance'] to name
    the items in each exchange; without it exchanges are reported as bitmasks.
    """
    algorithm = serializers.CharField()
    headline = OutcomePointSerializer()
    chosen = OutcomePointSerializer(many=True)
    support = serializers.SerializerMethodField()
    exchanges = serializers.SerializerMethodField()
    objective = RationalField(source='objective_value', allow_null=True)
    is_lottery = serializers.BooleanField()
    tie_count = serializers.IntegerField()

    def get_support(self, report):
        field = OutcomePointSerializer(many=True, context=self.context)
        return [field.to_representation(points) for points in report.support]

    def get_exchanges(self, report):
        instance = self.context.get('instance')
        return [[exchange_names(instance, exchange) for exchange in exchanges] for exchanges in report.achieving_exchanges]


class GravityRowSerializer(serializers.Serializer):
    m1 = RationalField()
    m2 = RationalField()
    product = RationalField()
    force = serializers.SerializerMethodField()

    def get_force(self, row):
        return float(row.force)


class GravityTableSerializer(serializers.Serializer):
    total = RationalField()
    step = RationalField()
    rows = GravityRowSerializer(many=True)
    best = GravityRowSerializer(many=True)
