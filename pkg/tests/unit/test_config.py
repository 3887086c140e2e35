"""
Unit tests for environment-driven settings
"""
import pytest

from src.config import Settings, get_settings


class TestSettings:
    """Tests for Settings.from_env"""

    def test_defaults(self, monkeypatch):
        """Test defaults when nothing is set"""
        for name in ("LATTICE_N_MAX", "CENSUS_N_MAX", "CENSUS_MITM_N_MAX", "SWEEP_WORKERS",
                     "SWEEP_SEED", "SWEEP_SAMPLES", "SEARCH_BUDGET", "LOG_LEVEL"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings.from_env()
        assert settings.environment == "test"
        assert settings.log_level == "INFO"
        assert settings.lattice.n_max == 24
        assert settings.lattice.mitm_n_max == 48
        assert settings.sweep.workers == 1
        assert settings.sweep.default_samples == 100
        assert settings.sweep.search_budget == 2000

    def test_overrides(self, monkeypatch):
        """Test environment overrides"""
        monkeypatch.setenv("LATTICE_N_MAX", "12")
        monkeypatch.setenv("SWEEP_SEED", "42")
        monkeypatch.setenv("SWEEP_WORKERS", "0")
        settings = Settings.from_env()
        assert settings.lattice.n_max == 12
        assert settings.sweep.default_seed == 42
        assert settings.sweep.workers == 1

    def test_blank_value_uses_default(self, monkeypatch):
        """Test empty variables fall back to defaults"""
        monkeypatch.setenv("SWEEP_SAMPLES", " ")
        assert Settings.from_env().sweep.default_samples == 100

    def test_invalid_integer(self, monkeypatch):
        """Test non-integer values are rejected with the variable name"""
        monkeypatch.setenv("SEARCH_BUDGET", "lots")
        with pytest.raises(ValueError, match="SEARCH_BUDGET"):
            Settings.from_env()

    def test_cached(self, fresh_settings):
        """Test get_settings returns one instance until cleared"""
        fresh_settings.setenv("LATTICE_N_MAX", "10")
        first = get_settings()
        fresh_settings.setenv("LATTICE_N_MAX", "11")
        assert get_settings() is first
        assert first.lattice.n_max == 10

    def test_bound_applies_to_enumeration(self, fresh_settings):
        """Test LATTICE_N_MAX limits whole-lattice operations"""
        from src.errors import ShapeError
        from src.lattice import Shape, enumerate_strings

        fresh_settings.setenv("LATTICE_N_MAX", "4")
        with pytest.raises(ShapeError, match="N_MAX = 4"):
            enumerate_strings(Shape(5, 2))
