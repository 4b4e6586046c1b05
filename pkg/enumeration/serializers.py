import csv

from rest_framework import serializers

from exchanges.models import acceptable
from exchanges.serializers import OutcomePointSerializer, RationalField
from .cloud import collapse_ratio

CSV_HEADER = ['u_x', 'u_y', 'count', 'acceptable', 'on_periphery']


class PointRowSerializer(serializers.Serializer):
    u_x = RationalField()
    u_y = RationalField()
    count = serializers.IntegerField()
    acceptable = serializers.BooleanField()
    on_periphery = serializers.BooleanField()


class CloudSummarySerializer(serializers.Serializer):
    p = serializers.IntegerField()
    q = serializers.IntegerField()
    total_exchanges = serializers.IntegerField()
    distinct_points = serializers.IntegerField()
    collapse_ratio = RationalField()
    acceptable_exchanges = serializers.IntegerField()
    periphery = OutcomePointSerializer(many=True)
    anchors = OutcomePointSerializer(many=True)


def point_rows(cloud, per, points_only=False):
    on_periphery = set(per.points)
    for point, exchanges in cloud.exchanges.items():
        row = {
            'u_x': point.u_x,
            'u_y': point.u_y,
            'acceptable': acceptable(point),
            'on_periphery': point in on_periphery,
        }
        if points_only or not exchanges:
            yield dict(row, count=cloud.count(point))
        else:
            for _ in exchanges:
                yield dict(row, count=1)


def write_point_csv(stream, cloud, per, points_only=False, decimal=False):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in point_rows(cloud, per, points_only):
        data = PointRowSerializer(row, context={'decimal': decimal}).data
        writer.writerow([
            data['u_x'], data['u_y'], data['count'],
            str(data['acceptable']).lower(), str(data['on_periphery']).lower(),
        ])


def cloud_summary(instance, cloud, per):
    return {
        'p': instance.p if instance is not None else 0,
        'q': instance.q if instance is not None else 0,
        'total_exchanges': cloud.total_exchanges,
        'distinct_points': len(cloud),
        'collapse_ratio': collapse_ratio(cloud),
        'acceptable_exchanges': sum(cloud.count(point) for point in cloud.points if acceptable(point)),
        'periphery': [point._asdict() for point in per.points],
        'anchors': [point._asdict() for point in per.anchors],
    }
