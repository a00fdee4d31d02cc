import math

import orjson
import pytest

from fracver.claims import lint_registry, registry, run_all, run_claim, summarize
from fracver.claims.registry import Claim, Measurement
from fracver.core.errors import DomainError, UnknownClaimError
from fracver.schemas.claim import ClaimInfo, Direction

EXPECTED_IDS = {
    "FT-Caputo",
    "S2-Sonine-power-pair",
    "S2-Sonine-bounded-defect",
    "S2-Sonine-Prabhakar-pair",
    "P3.1-CF-left-inverse-defect",
    "P3.2-ABC-left-inverse-defect",
    "RI-CF",
    "RI-AB",
    "T3.3-zero-zero",
    "ABC-power-closed-form",
    "S3.3-final-value",
    "S3.3-psi-hat-limit",
    "T3.4-identity",
    "FDE-defect-CF",
    "FDE-defect-ABC",
    "T4.1-heat-forced-initial",
    "E4.1-trivial-solution",
    "E4-heat-caputo-separation",
    "R5-CF-integer",
    "R5-ABC-Caputo",
    "P5-Prabhakar-degeneration",
    "P5-Prabhakar-FT",
    "P5-Prabhakar-no-zero-zero",
    "A-GL-Caputo",
    "A-GL-RL",
    "B-proof-CF",
    "B-proof-ABC",
    "S6.1-byparts-CF",
    "S6.1-byparts-ABC",
}


def _info(id: str, direction: Direction = Direction.UPPER, tolerance: float = 1e-3) -> ClaimInfo:
    return ClaimInfo(id=id, paper_ref="§0 test", anchor="test", tags=["test"], metric="m",
                     tolerance=tolerance, direction=direction)


@pytest.fixture
def fake_claim(monkeypatch):
    """Enregistre temporairement une vérification artificielle"""
    def register(id, check, **info):
        monkeypatch.setitem(registry.claims, id, Claim(info=_info(id, **info), check=check))
        return id
    return register


def test_registry_contents():
    assert set(registry.ids()) == EXPECTED_IDS
    assert registry.ids() == sorted(registry.ids())


def test_registry_metadata_is_clean():
    assert lint_registry() == []


def test_tags_select_subsets():
    section5 = set(registry.ids("§5"))
    assert {"R5-CF-integer", "R5-ABC-Caputo"} <= section5
    assert set(registry.ids("Prabhakar")) == {
        "S2-Sonine-Prabhakar-pair",
        "P5-Prabhakar-degeneration",
        "P5-Prabhakar-FT",
        "P5-Prabhakar-no-zero-zero",
    }
    assert registry.ids("§7") == []


def test_unknown_claim():
    with pytest.raises(UnknownClaimError):
        run_claim("X-does-not-exist")


def test_duplicate_registration_is_refused():
    with pytest.raises(ValueError):
        registry.claim("FT-Caputo", paper_ref="§2", anchor="a", tags=["§2"], metric="m",
                       tolerance=1.0)(lambda: Measurement(0.0))


@pytest.mark.parametrize("id", sorted(EXPECTED_IDS))
def test_every_claim_passes(id):
    report = run_claim(id)
    assert report.passed, f"{id} : {report.value} ({report.note})"
    assert math.isfinite(report.value)
    assert report.runtime_ms >= 0


def test_section5_run_is_deterministic():
    first = run_all("§5")
    second = run_all("§5", workers=2)
    assert [r.id for r in first] == registry.ids("§5")
    assert [(r.id, r.value, r.passed) for r in first] == [(r.id, r.value, r.passed) for r in second]


def test_report_serializes_pass_alias():
    report = run_claim("S3.3-final-value")
    payload = orjson.loads(orjson.dumps(report.model_dump(mode="json", by_alias=True)))
    assert payload["pass"] is True
    assert "passed" not in payload
    assert payload["paper_ref"].startswith("§3.3")


def test_library_errors_become_failed_reports(fake_claim):
    def broken() -> Measurement:
        raise DomainError("ordre invalide", alpha=2.0)

    report = run_claim(fake_claim("X-broken", broken))
    assert not report.passed
    assert math.isnan(report.value)
    assert report.note.startswith("DomainError")


def test_guard_overrides_value(fake_claim):
    report = run_claim(fake_claim("X-guarded", lambda: Measurement(0.0, guard=False, note="garde")))
    assert not report.passed
    assert report.note == "garde"


@pytest.mark.parametrize("value,expected", [(0.4, False), (0.5, True), (0.6, True), (math.nan, False)])
def test_lower_direction(fake_claim, value, expected):
    id = fake_claim("X-lower", lambda: Measurement(value), direction=Direction.LOWER, tolerance=0.5)
    assert run_claim(id).passed is expected


@pytest.mark.parametrize("value,expected", [(1e-4, True), (1e-3, True), (2e-3, False), (math.nan, False)])
def test_upper_direction(fake_claim, value, expected):
    assert run_claim(fake_claim("X-upper", lambda: Measurement(value))).passed is expected


def test_summary_counts(fake_claim):
    ok = run_claim(fake_claim("X-ok", lambda: Measurement(0.0)))
    ko = run_claim(fake_claim("X-ko", lambda: Measurement(1.0)))
    summary = summarize([ok, ko])
    assert (summary.total, summary.passed, summary.failed) == (2, 1, 1)
    assert summary.runtime_ms == ok.runtime_ms + ko.runtime_ms


def test_lint_reports_missing_section(fake_claim, monkeypatch):
    id = fake_claim("X-lint", lambda: Measurement(0.0))
    info = registry.claims[id].info.model_copy(update={"paper_ref": "quelque part", "anchor": " "})
    monkeypatch.setitem(registry.claims, id, Claim(info=info, check=registry.claims[id].check))
    problems = lint_registry()
    assert any("X-lint" in p and "ancre" in p for p in problems)
    assert any("X-lint" in p and "paper_ref" in p for p in problems)
