from pathlib import Path

import pytest
from pydantic import ValidationError

from hardyops.config.settings import Settings
from hardyops.schemas.run_config import RunConfig, build_run_config, read_config_file
from hardyops.utils.domain_exceptions import InvalidSpecError


@pytest.fixture
def base(tmp_path: Path) -> Settings:
    return Settings(
        window=16,
        internal_expansion_factor=4,
        tol_identity=1e-8,
        tol_vanishing=1e-8,
        tol_rank=1e-8,
        separation_factor=10.0,
        jobs=1,
        output_dir=tmp_path,
    )


def test_defaults_come_from_settings(base, tmp_path):
    config = build_run_config(base=base)

    assert config.window == 16
    assert config.seed == base.seed
    assert config.format == "json"
    assert config.output_dir == tmp_path


def test_config_file_keys_accept_prefix_and_case(tmp_path):
    path = tmp_path / "run.env"
    path.write_text("HARDYOPS_WINDOW=12\nseed=3\nTol_Rank=1e-6\n", encoding="utf-8")

    assert read_config_file(path) == {"window": "12", "seed": "3", "tol_rank": "1e-6"}


def test_flags_override_file_and_file_overrides_settings(base, tmp_path):
    path = tmp_path / "run.env"
    path.write_text("window=12\nseed=3\n", encoding="utf-8")

    config = build_run_config(config_file=path, overrides={"seed": 9, "jobs": None}, base=base)

    assert config.window == 12
    assert config.seed == 9
    assert config.jobs == 1


def test_unknown_config_key(tmp_path):
    path = tmp_path / "run.env"
    path.write_text("windw=12\n", encoding="utf-8")

    with pytest.raises(InvalidSpecError) as exc_info:
        read_config_file(path)

    assert exc_info.value.code == "UNKNOWN_CONFIG_KEY"


def test_missing_config_file(tmp_path):
    with pytest.raises(InvalidSpecError) as exc_info:
        build_run_config(config_file=tmp_path / "missing.env")

    assert exc_info.value.code == "CONFIG_NOT_FOUND"
    assert exc_info.value.exit_code == 2


@pytest.mark.parametrize(
    "overrides",
    [
        {"window": 2},
        {"internal_expansion_factor": 1},
        {"tol_identity": 0.5},
        {"separation_factor": 1.0},
        {"jobs": 0},
        {"format": "xml"},
    ],
)
def test_invalid_values_are_rejected(base, overrides):
    with pytest.raises(InvalidSpecError) as exc_info:
        build_run_config(overrides=overrides, base=base)

    assert exc_info.value.code == "INVALID_CONFIG"
    assert exc_info.value.detail


def test_run_config_is_frozen_and_closed(run_config):
    with pytest.raises(ValidationError):
        run_config.window = 9

    with pytest.raises(ValidationError):
        RunConfig.model_validate({**run_config.model_dump(), "colour": "red"})
