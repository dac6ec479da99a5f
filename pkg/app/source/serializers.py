from rest_framework import serializers


class MappingReportSerializer(serializers.Serializer):
    """Serializer for the constructed map's distance against its bound"""
    d = serializers.FloatField()
    bound = serializers.FloatField()
    eps = serializers.FloatField()
    gamma = serializers.FloatField()
    deficiency = serializers.FloatField()
    i1 = serializers.IntegerField(allow_null=True)
    i2 = serializers.IntegerField(allow_null=True)
    j2 = serializers.IntegerField(allow_null=True)

    def get_fields(self):
        fields = super().get_fields()
        fields['pass'] = serializers.BooleanField(source='passed')
        return fields


class SweepRowSerializer(serializers.Serializer):
    """Serializer for one point of a sufficient or necessary sweep"""
    gamma = serializers.FloatField()
    eps = serializers.FloatField(allow_null=True, default=None)
    measure = serializers.FloatField()
    measure_upper = serializers.FloatField(allow_null=True, default=None)
    gap_inf = serializers.FloatField(allow_null=True, default=None)
