from rest_framework import serializers

from app.utils.orderings import OrderingSpec, OrderKind

from .word_field import WordField

ORDER_CHOICES = [OrderKind.DD.value, OrderKind.DD_REVERSED.value, OrderKind.DEHORNOY_LIKE.value]


class CompareRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    order = serializers.ChoiceField(choices=ORDER_CHOICES, default=OrderKind.DD.value)
    conj = WordField(required=False, allow_null=True, default=None)
    u = WordField()
    v = WordField()

    def build_spec(self):
        base = OrderingSpec(OrderKind(self.validated_data["order"]))
        conjugator = self.validated_data.get("conj")
        if conjugator is None:
            return base
        return OrderingSpec.conjugated(base, conjugator)


class ComparisonSerializer(serializers.Serializer):
    u = WordField()
    v = WordField()
    order = serializers.CharField()
    result = serializers.CharField()


class ConvergenceRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    kmax = serializers.IntegerField(min_value=1)
    elements = serializers.ListField(child=WordField(), allow_empty=False)


class ConvergenceRowSerializer(serializers.Serializer):
    element = WordField()
    cells = serializers.ListField(child=serializers.BooleanField())
    leading_b = serializers.IntegerField()
    bound = serializers.IntegerField()
    stable_from = serializers.IntegerField(allow_null=True)
    stabilized = serializers.BooleanField()


class ConvergenceReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    k_max = serializers.IntegerField()
    rows = ConvergenceRowSerializer(many=True)
    smallest_plain = WordField()
    smallest_conjugated = WordField()
    minima_distinct = serializers.BooleanField()
    unstable = serializers.ListField(child=WordField())
