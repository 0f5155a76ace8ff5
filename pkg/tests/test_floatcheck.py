import numpy as np
import pytest

from hodgepair.floatcheck import crosscheck_backend, f_nullspace, f_rref, float_table
from hodgepair.generate import PROFILES, generate_random_pair
from hodgepair.verify import dimension_table


def test_float_rref_rank():
    m = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 1.0]])
    assert f_rref(m, 1e-9)[1] == 2
    ns = f_nullspace(m, 1e-9, 3)
    assert ns.shape[0] == 1
    assert np.allclose(m @ ns[0], 0)


def test_interval_tables_agree(interval2):
    rec = crosscheck_backend(interval2, 1e-9)
    assert rec.agree and rec.degrees == []
    assert rec.to_json()["agree"] is True


def test_huge_tolerance_is_reported(interval2):
    rec = crosscheck_backend(interval2, 10.0, instance_id="loose")
    assert not rec.agree
    out = rec.to_json()
    assert out["instance_id"] == "loose" and out["disagreeing_degrees"] == rec.degrees
    assert all(d["exact"] != d["float"] for d in out["disagreements"])


def test_random_pairs_agree():
    for seed in range(6):
        p = generate_random_pair(PROFILES["restricted"], seed)
        for mode in ("inclusive", "strict"):
            approx = float_table(p, 1e-9, mode)
            for row in dimension_table(p, mode):
                assert approx[row["q"]] == row["dims"]


def test_tolerance_must_be_positive(interval2):
    with pytest.raises(ValueError):
        float_table(interval2, 0.0)
