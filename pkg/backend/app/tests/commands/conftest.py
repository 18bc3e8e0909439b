import json
from io import StringIO

import pytest
from django.core.management import call_command


@pytest.fixture
def run_command():
    """Run a management command and return its standard output."""

    def run(*args):
        out = StringIO()
        call_command(*args, stdout=out)
        return out.getvalue()

    return run


@pytest.fixture
def run_json(run_command):
    def run(*args):
        return json.loads(run_command(*args))

    return run
