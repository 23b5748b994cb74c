from typing import Any
import logging
import os
from pathlib import Path

from pydantic import ConfigDict, field_validator
from pydantic_settings import BaseSettings

from src.services.rationals import parse_rational

path = Path(__file__)
ROOT_DIR = path.parent.absolute()
config_path = os.path.join(ROOT_DIR, "../../.env")


class Settings(BaseSettings):
    MAX_CASIMIR_DEGREE: int = 4
    SEED: int = 0
    RANK_SAMPLE_POINTS: int = 5
    RANK_SAMPLE_BITS: int = 20
    SYMBOLIC_RANK_MAX_SIZE: int = 12
    ROOT_TOLERANCE: str = "1/1000000"
    CASIMIR_SPOT_CHECKS: int = 50
    LOG_LEVEL: str = "WARNING"

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: Any):
        v = str(v).upper()
        if v not in logging.getLevelNamesMapping():
            raise ValueError("LOG_LEVEL must be a standard logging level name")
        return v

    @field_validator("ROOT_TOLERANCE")
    @classmethod
    def validate_root_tolerance(cls, v: Any):
        if parse_rational(str(v)) <= 0:
            raise ValueError("ROOT_TOLERANCE must be a positive rational")
        return str(v)

    @field_validator("MAX_CASIMIR_DEGREE", "RANK_SAMPLE_POINTS", "RANK_SAMPLE_BITS")
    @classmethod
    def validate_positive(cls, v: int):
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    @field_validator("RANK_SAMPLE_BITS")
    @classmethod
    def validate_sample_bits(cls, v: int):
        if v > 62:
            raise ValueError("RANK_SAMPLE_BITS must be at most 62")
        return v

    model_config = ConfigDict(
        extra="ignore", env_file=config_path, env_file_encoding="utf-8" # noqa
    )


config = Settings()
