import json

import pytest

import upqn


def test_check_u():
    assert upqn.check_u("1,1,1", "-3,1;1/2") == {"unitary": True, "condition": "U1"}
    assert upqn.check_u((1, 1, 1), "0,0;0") == {"unitary": True, "condition": "U6", "i": 1, "j": 1}
    assert upqn.check_u("1,1,1", "0,0;1") == {"unitary": False}


def test_errors():
    with pytest.raises(upqn.NotDominant):
        upqn.check_u("2,1,1", "0,1/2,0;0")
    with pytest.raises(ValueError):
        upqn.check_u("1,1,1", "0,x;0")


def test_integral_and_flat():
    v = upqn.integral_classify("1,1,1", "-2,0;0")
    assert v["unitary"] and v["branch"] == 2
    assert upqn.lambda_flat([2, 0], 2, "1,1,1") == "-2,2;0"


def test_certify():
    r = upqn.certify("1,1,1", "0,0;1", 2)
    assert r["verdict"] == "negative_witness"
    last = r["reports"][-1]
    assert last["drop"] == "eps1-delta1"
    assert last["witness_norm"].startswith("-")
    assert upqn.certify("1,1,1", "-3,1;1/2", 3)["verdict"] == "psd_up_to_cap"


def test_howe():
    r = upqn.joint_hwv(2, "1,1,1", 2)
    assert r["failures"] == []
    assert any(e["partition"] == [2, 0] and e["flat"] == "-2,2;0" for e in r["entries"])


def test_cli_round_trip():
    code, out, err = upqn.run_cli(["classify", "--signature", "1,1,1", "--weight", "-3,1;1/2"])
    assert code == 0
    assert json.loads(out) == {"unitary": True, "condition": "U1"}
    assert upqn.run_cli(["classify", "--signature", "1,1,1", "--weight", "bad"])[0] == 2
