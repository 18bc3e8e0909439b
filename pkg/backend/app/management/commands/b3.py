from app.serializers.braid_serializer import (
    BraidBridgeSerializer,
    BraidReduceSerializer,
    BraidRequestSerializer,
    BraidSignSerializer,
)
from app.utils.braid3 import ab_to_sigma, cone_certify_b3, dehornoy_reduce, is_d_positive, sigma_to_ab
from app.utils.orderings import OrderingSpec, is_positive

from ._base import LabCommand


class Command(LabCommand):
    help = "B3 tools: sign (Dehornoy and Γ2 verdicts), bridge between alphabets, handle reduction."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("action", help="sign, bridge or reduce.")
        parser.add_argument("word")
        parser.add_argument("--sigma", action="store_true", help="bridge: read s1, s2 and print a, b.")

    def run(self, **options):
        request = self.validate(
            BraidRequestSerializer,
            {"action": options["action"], "word": options["word"], "sigma": options["sigma"]},
        ).validated_data
        ctx = self.context(2)
        word = request["parsed"]

        if request["action"] == "bridge":
            output = sigma_to_ab(word) if request["alphabet"] == "sigma" else ab_to_sigma(word)
            data = BraidBridgeSerializer({"input": str(word), "output": str(output)}).data
            self.emit(data, str(output), options)
            return

        reduced = dehornoy_reduce(word)
        d_positive = is_d_positive(word)
        if request["action"] == "reduce":
            data = BraidReduceSerializer({"input": word, "reduced": reduced, "d_positive": d_positive}).data
            self.emit(data, str(reduced), options)
            return

        bridged = sigma_to_ab(word)
        dlike_positive = is_positive(bridged, OrderingSpec.dehornoy_like(), ctx)
        certificate = cone_certify_b3(bridged, ctx)
        data = BraidSignSerializer(
            {
                "input": word,
                "bridged": bridged,
                "reduced": reduced,
                "d_positive": d_positive,
                "dlike_positive": dlike_positive,
                "agree": d_positive == dlike_positive,
                "cone_certificate": [region.value for region in certificate] if certificate else None,
            }
        ).data
        plain = f"{word}: D-positive={d_positive}, dlike-positive={dlike_positive}"
        self.emit(data, plain, options)
        if d_positive != dlike_positive:
            self.fail(f"the two B3 orderings disagree on {word}")
