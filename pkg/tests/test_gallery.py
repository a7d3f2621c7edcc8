import json

import pytest

from mhpartial.cli import exit_code, run_bundle
from mhpartial.defs import build, dump
from mhpartial.errors import UsageError
from mhpartial.gallery import NAMES, make

BUNDLES = [
    ("A_G", {}),
    ("A_G", {"subgroup": "0,1,2,3"}),
    ("A_G", {"group": "Z6", "subgroup": "0,2,4"}),
    ("A_G", {"group": "S3", "subgroup": "e;(1,2,0);(2,0,1)"}),
    ("group_algebra", {}),
    ("induced", {}),
    ("sweedler", {"alpha": "0"}),
    ("sweedler", {"alpha": "1"}),
    ("taft", {}),
    ("epdq", {}),
    ("A_Z", {}),
    ("A_Z", {"m": 1}),
    ("tensor", {}),
]


@pytest.mark.parametrize("name,params", BUNDLES, ids=lambda x: x if isinstance(x, str) else json.dumps(x))
def test_bundle_round_trip_verifies(name, params):
    doc = json.loads(dump(make(name, **params)))
    reports = run_bundle(build(doc))
    assert exit_code(reports) == 0, "\n".join(r.to_text() for r in reports if r.status not in
                                               ("pass", "expected_fail_confirmed"))
    assert reports


def test_every_name_has_a_bundle():
    assert {n for n, _ in BUNDLES} == set(NAMES)


def test_aliases():
    assert make("A_G_dense") == make("A_G")
    assert make("A_Z_rule", m=3) == make("A_Z", m=3)


def test_declared_negative_checks():
    doc = make("A_G")
    expected = {(s["suite"], s.get("expect")) for s in doc["suites"]}
    for suite in ("global", "globality", "T_bijective", "smash_right_counit", "smash_T_bijective"):
        assert (suite, "fail") in expected
    whole = make("A_G", subgroup="0,1,2,3")
    assert all("expect" not in s for s in whole["suites"])


@pytest.mark.parametrize("name,params", [
    ("A_G", {"subgroup": "0,1"}),
    ("A_G", {"group": "Z5"}),
    ("taft", {"q": "3"}),
    ("taft", {"p": 5}),
    ("epdq", {"lambda": "0"}),
    ("A_Z", {"m": 0}),
    ("tensor", {"parts": "sweedler"}),
    ("tensor", {"parts": "sweedler,foo"}),
    ("sweedler", {"colour": "red"}),
    ("nonexistent", {}),
])
def test_bad_parameters(name, params):
    with pytest.raises(UsageError):
        make(name, **params)


def test_params_recorded():
    doc = make("taft", p=7, q="2", alpha="1")
    assert doc["params"] == {"alpha": "1", "group": "Z3", "p": "7", "q": "2"}
    assert doc["field"] == {"kind": "prime", "p": 7}
