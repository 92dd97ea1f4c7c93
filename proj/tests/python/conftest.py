import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("AFFINOR_CLI")
    if not path:
        pytest.skip("AFFINOR_CLI not set")
    return path


@pytest.fixture(scope="session")
def schema():
    path = os.environ.get("AFFINOR_SCHEMA", ROOT / "schema" / "report.schema.json")
    with open(path) as fh:
        return json.load(fh)


@pytest.fixture
def run_cli(cli_path):
    def run(*args):
        return subprocess.run([cli_path, *args], capture_output=True, text=True)

    return run
