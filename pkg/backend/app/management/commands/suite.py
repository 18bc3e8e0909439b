from django.conf import settings

from app.serializers.report_serializer import SuiteReportSerializer, SuiteRequestSerializer
from app.utils.lab import run_suite

from ._base import LabCommand


def plain_report(report):
    counts = ", ".join(f"{key}={value}" for key, value in sorted(report.counts.items()))
    lines = [f"{report.kind} n={report.n} max_len={report.max_len}: {report.scanned} scanned ({counts})"]
    lines += [f"  {v['check']} {v['word']}: {v['detail']}" for v in report.violations]
    lines.append("PASS" if report.passed else f"FAIL ({len(report.violations)} violations)")
    return "\n".join(lines)


class Command(LabCommand):
    help = "Run a verification suite over the ball of reduced words."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)
        parser.add_argument("--max-len", type=int, default=None)
        parser.add_argument("--kind", default="trichotomy")
        parser.add_argument("--jobs", type=int, default=None)

    def run(self, **options):
        request = self.validate(
            SuiteRequestSerializer,
            {
                "n": options["n"],
                "max_len": options["max_len"] if options["max_len"] is not None else settings.GAMMA_DEFAULT_MAX_LEN,
                "kind": options["kind"],
                "jobs": options["jobs"] if options["jobs"] is not None else settings.GAMMA_JOBS,
            },
        ).validated_data
        ctx = self.context(request["n"])

        report = run_suite(request["kind"], ctx.n, request["max_len"], ctx=ctx, jobs=request["jobs"])
        self.emit(SuiteReportSerializer(report).data, plain_report(report), options)
        if not report.passed:
            self.fail(f"{len(report.violations)} violations")
