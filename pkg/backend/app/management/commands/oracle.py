from app.serializers.oracle_serializer import OracleRequestSerializer, OracleResultSerializer
from app.utils.hecke_oracle import oracle_is_identity, phi, rho

from ._base import LabCommand


class Command(LabCommand):
    help = "Decide w = id in Γn with the matrix oracle."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)
        parser.add_argument("word")

    def run(self, **options):
        request = self.validate(OracleRequestSerializer, {"n": options["n"], "word": options["word"]})
        ctx = self.context(request.validated_data["n"])
        w = request.validated_data["word"]

        data = OracleResultSerializer(
            {
                "identity": oracle_is_identity(w, ctx),
                "rho_is_identity": rho(w, ctx).is_identity(),
                "phi": phi(w, ctx),
            }
        ).data
        self.emit(data, f"{w} {'=' if data['identity'] else '!='} 1 (phi = {data['phi']})", options)
