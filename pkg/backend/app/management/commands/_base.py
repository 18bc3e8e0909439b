import logging

from django.core.management.base import BaseCommand, CommandError

from app.context_instance import get_group_context
from app.exceptions import DefectError, ScopeError, WordSyntaxError
from app.serializers.rendering import render_json

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
FINDINGS = 1


class LabCommand(BaseCommand):
    """
    Shared plumbing for the lab subcommands: --plain, request validation
    through serializers, JSON or text output and exit codes
    (0 pass, 1 findings or defects, 2 usage errors).
    """

    def add_arguments(self, parser):
        parser.add_argument("--plain", action="store_true", help="Human-readable text instead of JSON.")

    def add_n_argument(self, parser, required=True):
        parser.add_argument("--n", type=int, required=required, help="Parameter n of Γn (>= 1).")

    def validate(self, serializer_class, data):
        serializer = serializer_class(data=data)
        if not serializer.is_valid():
            messages = []
            for field, errors in serializer.errors.items():
                for error in errors if isinstance(errors, list) else [errors]:
                    messages.append(f"{field}: {error}")
            raise CommandError("; ".join(messages), returncode=USAGE_ERROR)
        return serializer

    def context(self, n):
        # ScopeError for n above the configured bound
        return get_group_context(n)

    def emit(self, data, plain_text, options):
        if options.get("plain"):
            self.stdout.write(plain_text)
        else:
            self.stdout.write(render_json(data))

    def fail(self, message):
        """Findings: the report is already written, the exit code says it failed."""
        raise CommandError(message, returncode=FINDINGS)

    def handle(self, *args, **options):
        try:
            return self.run(**options)
        except (WordSyntaxError, ScopeError) as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        except DefectError as exc:
            logger.error("defect: %s", exc)
            raise CommandError(f"defect: {exc}", returncode=FINDINGS)

    def run(self, **options):
        raise NotImplementedError
