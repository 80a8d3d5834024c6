import pytest

import mcmcat


def test_gldim_table():
    assert mcmcat.gldim("field") == 0
    assert mcmcat.gldim("monogenic:3") == 2
    assert mcmcat.gldim("dvr") == 1


def test_check_suite_reports():
    report = mcmcat.check("depth", seed=1, trials=10)
    assert report["ok"] is True
    assert report["seed"] == 1
    assert report["trials"] == 10
    assert mcmcat.check("depth", seed=1, trials=10) == report


def test_regularity_witness():
    assert mcmcat.regularity_witness("dvr")["regular"] is True
    witness = mcmcat.regularity_witness("monogenic:2")
    assert witness["regular"] is False
    assert witness["witness"]["coker_dim"] >= 1


def test_dvr_module_arithmetic():
    # one generator, one relation t: the residue field
    assert mcmcat.dvr_normal_form(1, [[[0, 1]]]) == {"free_rank": 0, "torsion": [1]}
    assert mcmcat.dvr_pd(0, [2]) == "1"
    assert mcmcat.dvr_pd(1, []) == "0"
    assert mcmcat.dvr_pd(0, []) == "-inf"
    assert mcmcat.dvr_depth(0, [1]) == "0"
    assert mcmcat.dvr_depth(2, []) == "1"
    assert mcmcat.dvr_depth(0, []) == "+inf"


def test_bad_inputs():
    with pytest.raises(ValueError):
        mcmcat.gldim("bogus")
    with pytest.raises(ValueError):
        mcmcat.check("nope")
