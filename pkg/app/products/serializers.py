from rest_framework import serializers

from products.suite import REQUIRED


class LengthListField(serializers.ListField):
    """A positive integer or a list of them, always returned as a list"""
    child = serializers.IntegerField(min_value=1)

    def to_internal_value(self, data):
        if not isinstance(data, list):
            data = [data]
        return super().to_internal_value(data)


class ExampleParamsSerializer(serializers.Serializer):
    """Serializer for example parameter documents"""
    example = serializers.ChoiceField(choices=sorted(REQUIRED))
    n = LengthListField(allow_empty=False)
    p1 = serializers.FloatField(required=False)
    p2 = serializers.FloatField(required=False)
    q1 = serializers.FloatField(required=False)
    q2 = serializers.FloatField(required=False)
    r1 = serializers.FloatField(required=False)
    r2 = serializers.FloatField(required=False)
    alpha = serializers.FloatField(required=False)
    beta = serializers.FloatField(required=False)
    theta = serializers.FloatField(required=False)
    x_size = serializers.IntegerField(required=False, min_value=1)

    def validate(self, attrs):
        """Check the parameters the chosen example reads are present"""
        missing = [
            name for name in REQUIRED[attrs['example']] if name not in attrs
        ]
        if missing:
            raise serializers.ValidationError(
                {name: 'This field is required.' for name in missing}
            )
        return attrs


class ConditionReportSerializer(serializers.Serializer):
    """Serializer for one finite-n example report"""
    example = serializers.IntegerField()
    case = serializers.CharField()
    n = serializers.IntegerField()
    quantity = serializers.FloatField()
    threshold = serializers.FloatField()
    margin = serializers.FloatField()
    predicted = serializers.CharField()
    verdict = serializers.CharField()
    eps = serializers.FloatField(allow_null=True)
    gamma = serializers.FloatField(allow_null=True)
    surrogate = serializers.FloatField(allow_null=True)
    distance = serializers.FloatField(allow_null=True)
    bound = serializers.FloatField(allow_null=True)
