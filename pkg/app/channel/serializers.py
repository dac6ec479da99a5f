from rest_framework import serializers


class ChannelReportSerializer(serializers.Serializer):
    """Serializer for a channel simulation report"""
    joint_distance = serializers.FloatField()
    expected_deficiency = serializers.FloatField()
    expected_shifted_deficiency = serializers.FloatField()
    bound = serializers.FloatField()
    eps = serializers.FloatField()
    gamma = serializers.FloatField()
    rows = serializers.IntegerField()

    def get_fields(self):
        fields = super().get_fields()
        fields['pass'] = serializers.BooleanField(source='passed')
        return fields
