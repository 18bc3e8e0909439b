from app.serializers.report_serializer import GammaMNRequestSerializer, GammaMNResultSerializer
from app.utils.lab import verify_gamma_mn_identity

from ._base import LabCommand


class Command(LabCommand):
    help = "Check the rewrite showing <a, b : b a^n b = a^m> is isomorphic to Γ(m+n-1)."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--m", type=int, required=True)
        self.add_n_argument(parser)

    def run(self, **options):
        request = self.validate(GammaMNRequestSerializer, {"m": options["m"], "n": options["n"]}).validated_data
        m, n = request["m"], request["n"]
        holds = verify_gamma_mn_identity(m, n)
        data = GammaMNResultSerializer({"m": m, "n": n, "holds": holds, "isomorphic_to": m + n - 1}).data
        plain = f"Γ({m},{n}) -> Γ{m + n - 1}: {'ok' if holds else 'rewrite failed'}"
        self.emit(data, plain, options)
        if not holds:
            self.fail(f"rewrite for m={m}, n={n} did not reach a")
