"""
Configuration management for the signed-lattice toolkit
Loads defaults from environment variables (and an optional .env file)
"""
import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


@dataclass
class LatticeConfig:
    """Size bounds for full-lattice and census operations"""
    n_max: int = 24
    census_n_max: int = 24
    mitm_n_max: int = 48


@dataclass
class SweepConfig:
    """Defaults for verification sweeps and randomized searches"""
    workers: int = 1
    default_seed: int = 0
    default_samples: int = 100
    search_budget: int = 2000


@dataclass
class Settings:
    """Application settings loaded from environment"""

    # Environment
    environment: str
    log_level: str

    lattice: LatticeConfig
    sweep: SweepConfig

    @classmethod
    def from_env(cls) -> "Settings":
        """Load settings from environment variables"""

        lattice = LatticeConfig(
            n_max=_int_env("LATTICE_N_MAX", 24),
            census_n_max=_int_env("CENSUS_N_MAX", 24),
            mitm_n_max=_int_env("CENSUS_MITM_N_MAX", 48),
        )

        sweep = SweepConfig(
            workers=max(1, _int_env("SWEEP_WORKERS", 1)),
            default_seed=_int_env("SWEEP_SEED", 0),
            default_samples=_int_env("SWEEP_SAMPLES", 100),
            search_budget=_int_env("SEARCH_BUDGET", 2000),
        )

        return cls(
            environment=os.environ.get("ENVIRONMENT", "development"),
            log_level=os.environ.get("LOG_LEVEL", "INFO"),
            lattice=lattice,
            sweep=sweep,
        )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings.from_env()
