from rest_framework import serializers

from .word_field import WordField


class OracleRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    word = WordField(required=False)


class OracleResultSerializer(serializers.Serializer):
    identity = serializers.BooleanField()
    rho_is_identity = serializers.BooleanField()
    phi = serializers.IntegerField()


class GroupContextSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    q = serializers.IntegerField()
    # constant term first
    min_poly = serializers.ListField(child=serializers.IntegerField())
    phi_a = serializers.IntegerField()
    phi_b = serializers.IntegerField()
