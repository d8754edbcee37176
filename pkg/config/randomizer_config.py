"""
Configuration Management for the Degree-Sequence Randomizer

This module handles all configuration settings for the library and CLI.
Every value has a default; environment variables only override them.
"""

import os
from typing import Literal, Optional
from pydantic import BaseModel, Field
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class SamplingDefaults(BaseModel):
    """Defaults for the random graph samplers"""
    mode: Literal["strict", "clamp"] = Field(default="clamp", description="Kernel range handling while sampling")
    algorithm: Literal["naive", "skipping"] = Field(default="skipping")
    prob_mode: Literal["strict", "clamp"] = Field(default="strict", description="Range handling for single queries")


class ExperimentConfig(BaseModel):
    """Configuration for the fidelity experiments"""
    compare_trials: int = Field(default=500, ge=1)
    sweep_trials: int = Field(default=100, ge=1)
    sweep_n: int = Field(default=1000, ge=3)
    sweep_densities: str = Field(default="0.1:0.9:0.1")
    max_workers: int = Field(default=1, ge=1, le=64)
    show_progress: bool = Field(default=False)


class ObservabilityConfig(BaseModel):
    """Configuration for logging and metrics"""
    log_level: str = Field(default="INFO")
    log_format: Literal["console", "json"] = Field(default="console")
    log_file: Optional[str] = Field(default=None)
    metrics_file: Optional[str] = Field(default=None)


class OutputConfig(BaseModel):
    """Configuration for report generation"""
    float_format: str = Field(default="%.6g")
    data_dir: str = Field(default="./data")


class AppConfig(BaseModel):
    """Main application configuration"""
    sampling: SamplingDefaults
    experiment: ExperimentConfig
    observability: ObservabilityConfig
    output: OutputConfig

    debug_mode: bool = Field(default=False)


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


def load_config() -> AppConfig:
    """
    Load configuration from environment variables and defaults

    Returns:
        AppConfig: Complete application configuration

    Raises:
        pydantic.ValidationError: If an override is out of range
    """
    return AppConfig(
        sampling=SamplingDefaults(
            mode=os.getenv("RANDOMIZER_SAMPLING_MODE", "clamp"),
            algorithm=os.getenv("RANDOMIZER_ALGORITHM", "skipping"),
            prob_mode=os.getenv("RANDOMIZER_PROB_MODE", "strict"),
        ),
        experiment=ExperimentConfig(
            compare_trials=int(os.getenv("RANDOMIZER_COMPARE_TRIALS", "500")),
            sweep_trials=int(os.getenv("RANDOMIZER_SWEEP_TRIALS", "100")),
            sweep_n=int(os.getenv("RANDOMIZER_SWEEP_N", "1000")),
            sweep_densities=os.getenv("RANDOMIZER_SWEEP_DENSITIES", "0.1:0.9:0.1"),
            max_workers=int(os.getenv("RANDOMIZER_MAX_WORKERS", "1")),
            show_progress=_flag("RANDOMIZER_SHOW_PROGRESS", "false"),
        ),
        observability=ObservabilityConfig(
            log_level=os.getenv("RANDOMIZER_LOG_LEVEL", "INFO"),
            log_format=os.getenv("RANDOMIZER_LOG_FORMAT", "console"),
            log_file=os.getenv("RANDOMIZER_LOG_FILE"),
            metrics_file=os.getenv("RANDOMIZER_METRICS_FILE"),
        ),
        output=OutputConfig(
            float_format=os.getenv("RANDOMIZER_FLOAT_FORMAT", "%.6g"),
            data_dir=os.getenv("RANDOMIZER_DATA_DIR", "./data"),
        ),
        debug_mode=_flag("RANDOMIZER_DEBUG", "false"),
    )


# Global config instance
_config: Optional[AppConfig] = None


def get_config() -> AppConfig:
    """Get the global configuration instance"""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reset_config() -> None:
    """Drop the cached configuration so the next call reloads it"""
    global _config
    _config = None
