from rest_framework import serializers

from app.exceptions import WordSyntaxError
from app.utils.words import parse_word

from .word_field import WordField


class BraidRequestSerializer(serializers.Serializer):
    action = serializers.ChoiceField(choices=["sign", "bridge", "reduce"])
    word = serializers.CharField()
    sigma = serializers.BooleanField(default=False)

    def validate(self, attrs):
        # sign and reduce read s1, s2 words; bridge reads a, b unless --sigma
        reads_sigma = attrs["action"] != "bridge" or attrs["sigma"]
        alphabet = "sigma" if reads_sigma else "ab"
        try:
            attrs["parsed"] = parse_word(attrs["word"], alphabet=alphabet)
        except WordSyntaxError as exc:
            raise serializers.ValidationError({"word": str(exc)})
        attrs["alphabet"] = alphabet
        return attrs


class BraidSignSerializer(serializers.Serializer):
    input = WordField(alphabet="sigma")
    bridged = WordField()
    reduced = WordField(alphabet="sigma")
    d_positive = serializers.BooleanField()
    dlike_positive = serializers.BooleanField()
    agree = serializers.BooleanField()
    cone_certificate = serializers.ListField(child=serializers.CharField(), allow_null=True)


class BraidBridgeSerializer(serializers.Serializer):
    input = serializers.CharField()
    output = serializers.CharField()


class BraidReduceSerializer(serializers.Serializer):
    input = WordField(alphabet="sigma")
    reduced = WordField(alphabet="sigma")
    d_positive = serializers.BooleanField()
