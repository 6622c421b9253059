import os
from pathlib import Path

import pytest

os.environ["HARDYOPS_ENV"] = "test"

from hardyops.schemas.run_config import RunConfig


@pytest.fixture
def run_config(tmp_path: Path) -> RunConfig:
    return RunConfig(
        window=8,
        internal_expansion_factor=4,
        tol_identity=1e-8,
        tol_vanishing=1e-8,
        tol_rank=1e-8,
        separation_factor=10.0,
        seed=7,
        jobs=1,
        output_dir=tmp_path,
    )
