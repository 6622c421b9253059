from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class MatrixSidecar(BaseModel):
    """
    JSON companion of a matrix CSV: what was assembled and how far to trust it.
    """

    model_config = ConfigDict(frozen=True)

    kind: str
    shape: tuple[int, int]
    domain: dict[str, Any]
    codomain: dict[str, Any]
    entry_error: float = Field(ge=0)
    trusted_rows: tuple[int, int]
    trusted_cols: tuple[int, int]
    certified: bool
    window: int
    expansion_factor: int
    symbol: dict[str, Any]
    eta: dict[str, Any] | None = None
    theta: dict[str, Any] | None = None
