from rest_framework import serializers

from core.exceptions import SpecsimError
from spectrum.pmf import Pmf


class PmfSerializer(serializers.Serializer):
    """Serializer for pmf documents {"labels", "probs", "tail_mass"}"""
    labels = serializers.ListField(
        child=serializers.CharField(trim_whitespace=False),
        allow_empty=False,
    )
    probs = serializers.ListField(
        child=serializers.FloatField(min_value=0.0),
        allow_empty=False,
    )
    tail_mass = serializers.FloatField(min_value=0.0, default=0.0)

    def validate(self, attrs):
        """Check the document describes a valid pmf"""
        try:
            attrs['pmf'] = Pmf(
                tuple(attrs['labels']),
                tuple(attrs['probs']),
                attrs['tail_mass'],
            )
        except SpecsimError as exc:
            raise serializers.ValidationError(str(exc), code='invalid_pmf')
        return attrs

    def create(self, validated_data):
        return validated_data['pmf']

    def to_representation(self, instance):
        return {
            'labels': list(instance.labels),
            'probs': list(instance.probs),
            'tail_mass': instance.tail_mass,
        }


class SpectrumRowSerializer(serializers.Serializer):
    """Serializer for one step of a spectrum dump"""
    delta_lo = serializers.FloatField()
    delta_hi = serializers.FloatField()
    c_value = serializers.FloatField()
