"""
Pytest configuration and fixtures
"""
import os
from pathlib import Path

import pytest

# Set test environment
os.environ["ENVIRONMENT"] = "test"

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def shape_3_2():
    from src.lattice import Shape
    return Shape(3, 2)


@pytest.fixture
def shape_4_2():
    from src.lattice import Shape
    return Shape(4, 2)


@pytest.fixture
def shape_5_3():
    from src.lattice import Shape
    return Shape(5, 3)


@pytest.fixture
def shape_6_2():
    from src.lattice import Shape
    return Shape(6, 2)


@pytest.fixture
def example_weights(shape_5_3):
    """f(3~),f(2~),f(1~) = 1, 1, 0.9 and f(1-),f(2-) = -0.8, -2.1"""
    from src.weights import WeightFunction
    return WeightFunction.from_display(shape_5_3, ["1", "1", "0.9"], ["-0.8", "-2.1"])


@pytest.fixture
def drop_deepest_bar():
    """
    Order-isomorphism S1(n,r) -> S(n-1,r) and S2(n,r) -> S(n-1,r):
    forget whether the bar index n-r is present.
    """
    from src.lattice import LatticeString, Shape

    def project(w):
        shape = w.shape
        smaller = Shape(shape.n - 1, shape.r)
        return LatticeString(smaller, w.pos, w.neg & smaller.neg_full)

    return project


@pytest.fixture
def small_shapes():
    """Every shape with 0 < r < n <= 6"""
    from src.lattice import Shape
    return [Shape(n, r) for n in range(2, 7) for r in range(1, n)]


@pytest.fixture
def fresh_settings(monkeypatch):
    """Clear the cached settings around a test that changes the environment"""
    from src.config import get_settings
    get_settings.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()
