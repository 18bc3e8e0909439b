from rest_framework import serializers

from app.utils.cone import Verdict

from .word_field import WordField


class SignRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    word = WordField()
    oracle = serializers.BooleanField(default=True)


class SignResultSerializer(serializers.Serializer):
    input = WordField()
    n = serializers.IntegerField()
    verdict = serializers.ChoiceField(choices=[v.value for v in Verdict])
    witness = WordField()
    steps = serializers.IntegerField()
    oracle_checked = serializers.BooleanField()
