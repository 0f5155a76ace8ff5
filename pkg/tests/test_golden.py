"""Full reports for the mesh fixtures, pinned byte for byte after first derivation."""

import json
from pathlib import Path

import pytest

from hodgepair.cli import main
from hodgepair.simplicial import boundary_subcomplex, fixture, reference_cohomology

ROOT = Path(__file__).resolve().parent
FIXTURES = ROOT.parent / "fixtures"
NAMES = ["interval1", "interval2", "disk", "annulus"]


@pytest.mark.parametrize("name", NAMES)
def test_report_matches_golden(name, tmp_path):
    out = tmp_path / f"{name}.json"
    assert main(["pair", "--mesh", str(FIXTURES / f"{name}.json"), "--output", str(out)]) == 0
    assert out.read_bytes() == (ROOT / "golden" / f"{name}.json").read_bytes()


@pytest.mark.parametrize("name", NAMES)
def test_golden_cohomology_matches_integer_reference(name):
    """H_M and H_m in the golden file agree with ranks computed over the integers."""
    report = json.loads((ROOT / "golden" / f"{name}.json").read_text())
    rows = report["instances"][0]["degrees"]
    k = fixture(name)
    assert tuple(r["dims"]["H_M"] for r in rows) == reference_cohomology(k)
    assert tuple(r["dims"]["H_m"] for r in rows) == reference_cohomology(k, boundary_subcomplex(k))
