import json
from pathlib import Path

import pytest

import oracles
from thetacancel.cli import expand_object

GOLDEN = Path(__file__).parent / "fixtures" / "golden" / "modular_pairs.json"


def _load():
    return json.loads(GOLDEN.read_text())


@pytest.mark.parametrize("name", ["delta1", "epsilon1", "delta2", "epsilon2", "delta3", "epsilon3"])
def test_engine_matches_golden(name):
    data = _load()
    got = expand_object(name, None, None, data["order"])["series"]
    assert got == data["series"][name]


def test_golden_matches_divisor_sums():
    data = _load()
    ref = oracles.modular_pairs(data["order"])
    for name, series in ref.items():
        expected = {f"{k}/2": f"{v.numerator}/{v.denominator}" for k, v in sorted(series.items()) if v}
        assert data["series"][name] == expected
