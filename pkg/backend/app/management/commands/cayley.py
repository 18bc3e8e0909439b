from django.conf import settings

from app.serializers.cayley_serializer import CayleyRequestSerializer
from app.utils.lab import export_cayley_ball

from ._base import LabCommand


class Command(LabCommand):
    help = "Export the Cayley graph ball of Γn with positives marked, as DOT or JSON."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)
        parser.add_argument("--radius", type=int, default=None)
        parser.add_argument("--format", default="json", help="dot or json.")

    def run(self, **options):
        radius = options["radius"] if options["radius"] is not None else settings.GAMMA_DEFAULT_RADIUS
        request = self.validate(
            CayleyRequestSerializer,
            {"n": options["n"], "radius": radius, "format": options["format"]},
        ).validated_data
        ctx = self.context(request["n"])
        fmt = "dot" if options["plain"] else request["format"]
        self.stdout.write(export_cayley_ball(ctx.n, request["radius"], format=fmt, ctx=ctx))
