import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from src.Testing.utils.types import RunConfig

hypothesis_settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("default")

LCC_DEFINITIONS = """
# the copy-cat and the constant forwarders
id = a?(x).a!x.0
const0 = a?(x).a!0.0
const1 = a?(x).a!1.0
nil = 0
"""

@pytest.fixture
def vaccs():
    return RunConfig(calculus="vaccs", val=["0", "1"])

@pytest.fixture
def vccs():
    return RunConfig(calculus="vccs", val=["0", "1"])

@pytest.fixture
def ccs():
    return RunConfig(calculus="ccs")

@pytest.fixture
def lcc_definitions():
    return LCC_DEFINITIONS
