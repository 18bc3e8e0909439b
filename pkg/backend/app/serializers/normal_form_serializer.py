from rest_framework import serializers

from .word_field import WordField


class NormalFormRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    word = WordField()


class NormalFormSerializer(serializers.Serializer):
    prefix = WordField()
    ell = serializers.IntegerField()
