from app.serializers.ordering_serializer import ComparisonSerializer, CompareRequestSerializer
from app.utils.cone import Comparison
from app.utils.orderings import cmp

from ._base import LabCommand

SYMBOLS = {Comparison.LESS: "<", Comparison.EQUAL: "=", Comparison.GREATER: ">"}


class Command(LabCommand):
    help = "Compare two words under a left-ordering of Γn."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)
        parser.add_argument("--order", default="dd", help="dd, ddrev or dlike.")
        parser.add_argument("--conj", default=None, help="Conjugate the ordering by this word.")
        parser.add_argument("u")
        parser.add_argument("v")

    def run(self, **options):
        request = self.validate(
            CompareRequestSerializer,
            {k: options[k] for k in ("n", "order", "conj", "u", "v")},
        )
        ctx = self.context(request.validated_data["n"])
        spec = request.build_spec()
        u, v = request.validated_data["u"], request.validated_data["v"]

        result = cmp(u, v, spec, ctx)
        data = ComparisonSerializer({"u": u, "v": v, "order": str(spec), "result": result.value}).data
        self.emit(data, f"{u} {SYMBOLS[result]} {v}", options)
