from app.serializers.normal_form_serializer import NormalFormRequestSerializer, NormalFormSerializer
from app.utils.normal_form import to_normal_form

from ._base import LabCommand


class Command(LabCommand):
    help = "Rewrite a word of Γn into the normal form prefix · Δ^ell."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)
        parser.add_argument("word")

    def run(self, **options):
        request = self.validate(NormalFormRequestSerializer, {"n": options["n"], "word": options["word"]})
        ctx = self.context(request.validated_data["n"])
        nf = to_normal_form(request.validated_data["word"], ctx)
        self.emit(NormalFormSerializer(nf).data, str(nf), options)
