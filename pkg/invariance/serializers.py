from rest_framework import serializers

from exchanges.serializers import ExchangeField, RationalField, exchange_names


class ScaleTransformSerializer(serializers.Serializer):
    player = serializers.CharField()
    factor = RationalField()


class ScaleInvarianceReportSerializer(serializers.Serializer):
    check = serializers.SerializerMethodField()
    transform = ScaleTransformSerializer()
    passed = serializers.BooleanField()
    exchanges_checked = serializers.IntegerField()
    failure = serializers.CharField(allow_null=True)
    counterexample = ExchangeField(allow_null=True)
    nash_exchanges = serializers.SerializerMethodField()

    def get_check(self, report):
        return 'scale-invariance'

    def get_nash_exchanges(self, report):
        instance = self.context.get('instance')
        return [exchange_names(instance, exchange) for exchange in sorted(report.nash_exchanges)]


class TranslationFlipReportSerializer(serializers.Serializer):
    exchange = ExchangeField()
    player = serializers.CharField()
    received = serializers.IntegerField()
    given = serializers.IntegerField()
    margin = RationalField()
    flip_possible = serializers.BooleanField()
    threshold = RationalField(allow_null=True)


class ZeroItemReportSerializer(serializers.Serializer):
    player = serializers.CharField()
    items = serializers.ListField(child=serializers.CharField())
    scaled_values = serializers.ListField(child=RationalField())
    translated_values = serializers.ListField(child=RationalField())
    scale_keeps_zero = serializers.BooleanField()
    translation_keeps_zero = serializers.BooleanField()
    witness = RationalField(allow_null=True)
