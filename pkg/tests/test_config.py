import pytest

from fracver.core.config import PRECISION_STEPS, Settings
from fracver.core.errors import ConfigurationError
from fracver.routers.common import make_grid


@pytest.mark.parametrize("level", sorted(PRECISION_STEPS))
def test_precision_levels(monkeypatch, level):
    monkeypatch.setattr(Settings, "PRECISION", level)
    assert Settings().default_steps == PRECISION_STEPS[level]
    assert make_grid(2.0, None).N == PRECISION_STEPS[level]


def test_fast_precision(monkeypatch):
    monkeypatch.setattr(Settings, "PRECISION", "fast")
    assert make_grid(1.0, None).N == 512
    assert make_grid(1.0, 10).N == 10


def test_unknown_precision(monkeypatch):
    monkeypatch.setattr(Settings, "PRECISION", "bogus")
    with pytest.raises(ConfigurationError, match="FRACVER_PRECISION"):
        Settings()


def test_claim_workers_must_be_positive(monkeypatch):
    monkeypatch.setattr(Settings, "CLAIM_WORKERS", 0)
    with pytest.raises(ConfigurationError):
        Settings()
