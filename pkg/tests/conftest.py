import warnings
from pathlib import Path

import pytest

from cqedkit import DispersiveValidityWarning, derive, load_design

REPO_ROOT = Path(__file__).resolve().parent.parent
REFERENCE_DESIGN_PATH = REPO_ROOT / "designs" / "qubit_v1.json"


@pytest.fixture(scope="session")
def reference_inputs():
    return load_design(REFERENCE_DESIGN_PATH)


@pytest.fixture(scope="session")
def reference_derived(reference_inputs):
    # the v1 design sits at |detuning|/g ~ 9.7, marginally inside the
    # conservative dispersive-validity band, so one warning is expected
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        derived = derive(reference_inputs)
    assert [w for w in caught if issubclass(w.category, DispersiveValidityWarning)]
    return derived
