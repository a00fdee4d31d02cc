"""Fixtures partagées"""
import pytest

from fracver.schemas.grid import Grid


@pytest.fixture
def unit_grid() -> Grid:
    return Grid(T=1.0, N=256)


@pytest.fixture
def fine_grid() -> Grid:
    return Grid(T=1.0, N=2048)
