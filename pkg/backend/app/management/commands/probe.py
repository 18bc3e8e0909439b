from django.conf import settings

from app.serializers.report_serializer import ProbeRequestSerializer, SuiteReportSerializer
from app.utils.lab import property_s_probe

from ._base import LabCommand
from .suite import plain_report


class Command(LabCommand):
    help = "Count the Dehornoy-like positive conjugates of s1 = ab and s2 = b^-1."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_n_argument(parser)
        parser.add_argument("--max-len", type=int, default=None)

    def run(self, **options):
        max_len = options["max_len"] if options["max_len"] is not None else settings.GAMMA_DEFAULT_MAX_LEN
        request = self.validate(ProbeRequestSerializer, {"n": options["n"], "max_len": max_len}).validated_data
        ctx = self.context(request["n"])
        report = property_s_probe(ctx, request["max_len"])
        self.emit(SuiteReportSerializer(report).data, plain_report(report), options)
