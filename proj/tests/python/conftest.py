import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("SKQAOA_CLI")
    if not path:
        pytest.skip("SKQAOA_CLI not set")
    return path


@pytest.fixture(scope="session")
def schemas():
    d = pathlib.Path(os.environ.get("SKQAOA_SCHEMAS", ROOT / "schemas"))
    return {p.name.split(".")[0]: json.loads(p.read_text()) for p in d.glob("*.schema.json")}


@pytest.fixture
def run_cli(cli_path):
    def run(*args, check=True):
        proc = subprocess.run([cli_path, *map(str, args)], capture_output=True, text=True)
        if check and proc.returncode != 0:
            raise AssertionError(f"exit {proc.returncode}: {proc.stderr}")
        return proc

    return run
