import os
import pathlib
import shutil

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schema():
    import json

    return json.loads((ROOT / "schema" / "analysis_report.schema.json").read_text())


@pytest.fixture(scope="session")
def qcs_cli():
    path = os.environ.get("QCS_CLI") or shutil.which("qcs")
    if not path:
        pytest.skip("qcs executable not available")
    return path
