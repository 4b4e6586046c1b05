from fractions import Fraction

from rest_framework import serializers

from exchanges.serializers import render_number


def render_witness(value, decimal=False):
    if isinstance(value, dict):
        return {str(key): render_witness(item, decimal) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [render_witness(item, decimal) for item in value]
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return render_number(value, decimal=decimal)
    return str(value) if not isinstance(value, (bool, type(None))) else value


class NoTradeCertificateSerializer(serializers.Serializer):
    kind = serializers.CharField()
    fired = serializers.ListField(child=serializers.CharField())
    witness = serializers.SerializerMethodField()
    brute_force_verified = serializers.BooleanField()
    exchanges_checked = serializers.IntegerField()
    periphery_empty = serializers.BooleanField(allow_null=True)

    def get_witness(self, certificate):
        return render_witness(certificate.witness or {}, self.context.get('decimal', False))
