import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

SUPPORTED_ENVIRONMENTS = {"dev", "test", "prod"}
ENV = os.getenv("HARDYOPS_ENV", "prod").strip().lower()

if ENV not in SUPPORTED_ENVIRONMENTS:
    raise RuntimeError("HARDYOPS_ENV must be one of: dev, test, prod.")

if ENV == "test":
    load_dotenv(".env.test", override=True)
else:
    load_dotenv(".env", override=False)


class Settings(BaseSettings):
    """
    Numerical defaults loaded from HARDYOPS_* environment variables.
    """

    model_config = SettingsConfigDict(
        env_prefix="HARDYOPS_",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    debug: bool = False

    window: int = Field(default=64, ge=1)
    internal_expansion_factor: int = Field(default=4, ge=1)

    tol_identity: float = Field(default=1e-8, gt=0)
    tol_vanishing: float = Field(default=1e-8, gt=0)
    tol_rank: float = Field(default=1e-8, gt=0)
    separation_factor: float = Field(default=10.0, gt=1)
    root_tolerance: float = Field(default=1e-9, gt=0)

    sample_exponent: int = Field(default=12, ge=4)
    seed: int = Field(default=0, ge=0, validation_alias=AliasChoices("HARDYOPS_SEED"))
    jobs: int = Field(default=1, ge=1)
    output_dir: Path = Path("hardyops-out")

settings = Settings()
