import os
import shutil

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("CYCDESC_CLI") or shutil.which("cycdesc")
    if not path:
        pytest.skip("cycdesc executable not available")
    return path


@pytest.fixture(scope="session")
def schema_dir():
    here = os.path.dirname(os.path.abspath(__file__))
    return os.environ.get("CYCDESC_DOCS", os.path.join(here, "..", "..", "docs")) + "/schema"
