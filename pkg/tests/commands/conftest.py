"""
Command-line test fixtures

Every test starts from default configuration so environment variables and
earlier runs cannot leak into the output.
"""

import pytest

from ribbon_invariants import dependencies
from ribbon_invariants.app import app
from ribbon_invariants.settings.config import Config
from tests.conftest import TREFOIL_TEXT, UNKNOT_TEXT


@pytest.fixture(autouse=True)
def default_config():
    """Install a fresh Config for the run and forget it afterwards"""
    dependencies.set_config(Config())
    yield
    dependencies.set_config(Config())


@pytest.fixture
def cli(capsys):
    """Run the app and return (exit code, stdout, stderr)"""

    def run(*argv: str) -> tuple[int, str, str]:
        code = app.run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture
def unknot_file(tmp_path):
    path = tmp_path / "unknot.tangle"
    path.write_text(UNKNOT_TEXT)
    return path


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path / "trefoil.tangle"
    path.write_text(TREFOIL_TEXT)
    return path
