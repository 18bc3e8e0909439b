from pathlib import Path

from django.core.management.base import CommandError

from app.serializers.ordering_serializer import ConvergenceReportSerializer, ConvergenceRequestSerializer
from app.utils.orderings import convergence_experiment

from ._base import USAGE_ERROR, LabCommand


def read_elements(path):
    """One word per line; blank lines and lines starting with # are skipped."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}", returncode=USAGE_ERROR)
    return [line.strip() for line in lines if line.strip() and not line.lstrip().startswith("#")]


class Command(LabCommand):
    help = "Positivity of elements under the b^k a conjugates of the Dehornoy-like ordering."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)
        parser.add_argument("--kmax", type=int, required=True)
        parser.add_argument("--elems", required=True, help="File with one word per line.")

    def run(self, **options):
        request = self.validate(
            ConvergenceRequestSerializer,
            {"n": options["n"], "kmax": options["kmax"], "elements": read_elements(options["elems"])},
        ).validated_data
        ctx = self.context(request["n"])

        report = convergence_experiment(ctx, request["elements"], request["kmax"])
        lines = [f"{row.element}: {''.join('+' if cell else '.' for cell in row.cells)}" for row in report.rows]
        self.emit(ConvergenceReportSerializer(report).data, "\n".join(lines), options)
        if report.unstable:
            self.fail(f"{len(report.unstable)} rows did not stabilize by k = n0 + 1")
        if not report.minima_distinct:
            self.fail("the two smallest positives coincide")
