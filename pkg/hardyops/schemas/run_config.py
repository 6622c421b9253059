'''
Validated run configuration for the command-line entry points.

Values are layered: settings from the environment first, then a flat
key=value config file, then explicit command-line flags.
'''

from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path
from typing import Any, Literal

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from hardyops.config.limits import MAX_MATRIX_DIMENSION, MIN_WINDOW
from hardyops.config.settings import Settings, settings
from hardyops.utils.domain_exceptions import InvalidSpecError

_FILE_PREFIX = "hardyops_"


class RunConfig(BaseModel):
    """
    Numerical parameters shared by every command of one run.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    window: int = Field(ge=MIN_WINDOW, le=MAX_MATRIX_DIMENSION)
    internal_expansion_factor: int = Field(ge=2)
    tol_identity: float = Field(gt=0, lt=1e-2)
    tol_vanishing: float = Field(gt=0, lt=1e-2)
    tol_rank: float = Field(gt=0, lt=1e-2)
    separation_factor: float = Field(gt=1)
    seed: int = Field(ge=0)
    jobs: int = Field(ge=1)
    output_dir: Path
    format: Literal["json", "csv"] = "json"


def settings_values(source: Settings = settings) -> dict[str, Any]:
    return {
        "window": source.window,
        "internal_expansion_factor": source.internal_expansion_factor,
        "tol_identity": source.tol_identity,
        "tol_vanishing": source.tol_vanishing,
        "tol_rank": source.tol_rank,
        "separation_factor": source.separation_factor,
        "seed": source.seed,
        "jobs": source.jobs,
        "output_dir": source.output_dir,
    }


def read_config_file(path: Path) -> dict[str, str]:
    '''
    Read a flat key=value file whose keys mirror RunConfig fields.

    Keys are case-insensitive and may carry the HARDYOPS_ prefix.

    Raises:
        InvalidSpecError: If the file is missing or a key is unknown.
    '''
    if not path.is_file():
        raise InvalidSpecError(code="CONFIG_NOT_FOUND", message=f"config file not found: {path}")

    values: dict[str, str] = {}
    for key, value in dotenv_values(path, encoding="utf-8").items():
        name = key.strip().lower().removeprefix(_FILE_PREFIX)
        if name not in RunConfig.model_fields:
            raise InvalidSpecError(
                code="UNKNOWN_CONFIG_KEY",
                message=f"unknown config key: {key}",
                detail={"allowed": sorted(RunConfig.model_fields)},
            )
        if value is not None:
            values[name] = value
    return values


def build_run_config(
    *,
    config_file: Path | None = None,
    overrides: Mapping[str, Any] | None = None,
    base: Settings = settings,
) -> RunConfig:
    '''
    Layer settings, config file and flags into one validated RunConfig.

    Args:
        config_file (Path | None): Optional key=value file.
        overrides (Mapping[str, Any] | None): Flag values; None entries are
            treated as not given.
        base (Settings): Settings supplying the defaults.

    Returns:
        RunConfig: The frozen configuration.

    Raises:
        InvalidSpecError: If any layer supplies an invalid value.
    '''
    values = settings_values(base)
    if config_file is not None:
        values.update(read_config_file(config_file))
    values.update({key: value for key, value in (overrides or {}).items() if value is not None})

    try:
        return RunConfig.model_validate(values)
    except ValidationError as exc:
        raise InvalidSpecError(
            code="INVALID_CONFIG",
            message="run configuration is invalid.",
            detail=[f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in exc.errors()],
        ) from exc
