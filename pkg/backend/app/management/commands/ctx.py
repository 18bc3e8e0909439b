from app.serializers.oracle_serializer import GroupContextSerializer, OracleRequestSerializer

from ._base import LabCommand


class Command(LabCommand):
    help = "Show the data derived from n: q, the minimal polynomial of λ and phi."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)

    def run(self, **options):
        request = self.validate(OracleRequestSerializer, {"n": options["n"]})
        ctx = self.context(request.validated_data["n"])
        data = GroupContextSerializer(ctx).data
        plain = f"n={ctx.n} q={ctx.q} min_poly={list(ctx.min_poly)} phi=({ctx.phi_a}, {ctx.phi_b})"
        self.emit(data, plain, options)
