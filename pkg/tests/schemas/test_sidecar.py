import pytest
from pydantic import ValidationError

from hardyops.inner.functions import blaschke
from hardyops.schemas.sidecar import MatrixSidecar
from hardyops.spaces.bases import monomial_basis


def _fields(**changes):
    fields = {
        "kind": "rto",
        "shape": (2, 9),
        "domain": monomial_basis(9, 36).to_config(),
        "codomain": monomial_basis(2, 36).to_config(),
        "entry_error": 1e-15,
        "trusted_rows": (0, 1),
        "trusted_cols": (0, 8),
        "certified": True,
        "window": 8,
        "expansion_factor": 4,
        "symbol": {"type": "laurent", "lo": -1, "coeffs": [[1.0, 0.0]]},
        "theta": blaschke(0, 0).to_config(),
    }
    fields.update(changes)
    return fields


def test_sidecar_dumps_json_ready_values():
    sidecar = MatrixSidecar(**_fields())
    dumped = sidecar.model_dump(mode="json")

    assert dumped["shape"] == [2, 9]
    assert dumped["eta"] is None
    assert dumped["theta"]["zeros"] == [[0.0, 0.0, 2]]


def test_sidecar_rejects_negative_entry_error():
    with pytest.raises(ValidationError):
        MatrixSidecar(**_fields(entry_error=-1.0))
