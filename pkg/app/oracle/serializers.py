from rest_framework import serializers


class OracleReportSerializer(serializers.Serializer):
    """Serializer for an oracle value and the analytic value it checks"""
    oracle = serializers.CharField()
    value = serializers.FloatField()
    exact = serializers.FloatField()
    abs_err = serializers.FloatField()
    config = serializers.DictField()
