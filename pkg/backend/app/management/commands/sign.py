from app.serializers.sign_serializer import SignRequestSerializer, SignResultSerializer
from app.utils.cone import decide_sign
from app.utils.hecke_oracle import oracle_equal

from ._base import LabCommand


class Command(LabCommand):
    help = "Decide whether a word is positive, negative or the identity in Γn."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)
        parser.add_argument("word")
        parser.add_argument("--no-oracle", action="store_true", help="Skip the witness check by the oracle.")

    def run(self, **options):
        request = self.validate(
            SignRequestSerializer,
            {"n": options["n"], "word": options["word"], "oracle": not options["no_oracle"]},
        ).validated_data
        ctx = self.context(request["n"])
        w = request["word"]

        result = decide_sign(w, ctx)
        checked = request["oracle"] and oracle_equal(w, result.witness, ctx)
        data = SignResultSerializer(
            {
                "input": w,
                "n": ctx.n,
                "verdict": result.verdict.value,
                "witness": result.witness,
                "steps": result.steps,
                "oracle_checked": checked,
            }
        ).data
        self.emit(data, f"{w}: {result.verdict.value}, witness {result.witness}", options)
        if request["oracle"] and not checked:
            self.fail(f"witness {result.witness} is not equal to {w}")
