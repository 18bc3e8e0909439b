# app/cli.py

import os
import sys

SUBCOMMANDS = {
    "sign": "sign",
    "cmp": "cmp",
    "nf": "nf",
    "oracle": "oracle",
    "ctx": "ctx",
    "b3": "b3",
    "converge": "converge",
    "suite": "suite",
    "cayley": "cayley",
    "probe": "probe",
    "gamma-mn": "gamma_mn",
}

USAGE = "usage: gamma {" + ",".join(SUBCOMMANDS) + "} [--plain] ...\n"


def cli_main(argv=None) -> int:
    """
    Run one lab subcommand and return its exit code:
    0 success, 1 violations or findings, 2 usage errors.
    """
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "gamma_backend.settings")
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in SUBCOMMANDS:
        sys.stderr.write(USAGE)
        return 2

    from django.core.management import execute_from_command_line

    try:
        execute_from_command_line(["gamma", SUBCOMMANDS[argv[0]], *argv[1:]])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(cli_main())
