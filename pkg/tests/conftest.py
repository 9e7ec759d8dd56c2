import pytest

from dualpell import default_config, sweep


@pytest.fixture(scope="session")
def default_sweep_reports():
    """One shared run of the full default sweep (it is deterministic)."""
    return sweep(default_config())
