from rest_framework import serializers

from app.utils.lab import MAX_CAYLEY_RADIUS
from app.utils.words import LETTER_NAMES

from .word_field import WordField


class CayleyRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    radius = serializers.IntegerField(min_value=0, max_value=MAX_CAYLEY_RADIUS)
    format = serializers.ChoiceField(choices=["dot", "json"], default="json")


class CayleyNodeSerializer(serializers.Serializer):
    id = serializers.IntegerField()
    word = WordField()
    verdict = serializers.CharField(source="verdict.value")


class CayleyEdgeSerializer(serializers.Serializer):
    to = serializers.IntegerField()
    generator = serializers.SerializerMethodField()
    direction = serializers.IntegerField()

    def get_fields(self):
        fields = super().get_fields()
        # "from" is a keyword, so it cannot be declared as a class attribute
        fields["from"] = serializers.IntegerField()
        return fields

    def get_generator(self, obj):
        return LETTER_NAMES[obj["generator"]]


class CayleyBallSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    radius = serializers.IntegerField()
    nodes = serializers.SerializerMethodField()
    edges = CayleyEdgeSerializer(many=True)

    def get_nodes(self, obj):
        numbered = [{"id": i, **node} for i, node in enumerate(obj.nodes)]
        return CayleyNodeSerializer(numbered, many=True).data
