from rest_framework import serializers

from app.utils.lab import SUITE_KINDS

from .word_field import WordField


class SuiteRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    max_len = serializers.IntegerField(min_value=0)
    kind = serializers.ChoiceField(choices=SUITE_KINDS, default="trichotomy")
    jobs = serializers.IntegerField(min_value=1, default=1)

    def validate(self, attrs):
        if attrs["kind"] == "dehornoy" and attrs["n"] != 2:
            raise serializers.ValidationError({"n": "The dehornoy suite runs in B3, use --n 2."})
        if attrs["jobs"] > 1 and attrs["kind"] not in ("trichotomy", "dehornoy"):
            raise serializers.ValidationError({"jobs": f"The {attrs['kind']} suite runs in one process."})
        return attrs


class ProbeRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    max_len = serializers.IntegerField(min_value=0)


class GammaMNRequestSerializer(serializers.Serializer):
    m = serializers.IntegerField(min_value=1)
    n = serializers.IntegerField(min_value=1)


class ViolationSerializer(serializers.Serializer):
    word = WordField()
    check = serializers.CharField()
    detail = serializers.CharField(allow_blank=True)


class SuiteReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    max_len = serializers.IntegerField()
    kind = serializers.CharField()
    counts = serializers.DictField(child=serializers.IntegerField())
    violations = ViolationSerializer(many=True)
    scanned = serializers.IntegerField()
    passed = serializers.BooleanField()
    wall_time = serializers.SerializerMethodField()

    def get_wall_time(self, obj):
        return round(obj.wall_time, 3)


class GammaMNResultSerializer(serializers.Serializer):
    m = serializers.IntegerField()
    n = serializers.IntegerField()
    holds = serializers.BooleanField()
    isomorphic_to = serializers.IntegerField()
