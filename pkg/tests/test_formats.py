import pytest

from conftest import M2, T
from implalg import Profile, PolymatroidFn, from_hypergraph, rho_of_hypergraph
from implalg.formats import (
    InputError,
    algebra_to_json,
    dumps,
    hypergraph_from_json,
    hypergraph_to_json,
    loads,
    profile_from_json,
    profile_to_json,
    rho_from_json,
    rho_to_json,
    to_dot,
)


def test_hypergraph_roundtrip():
    assert hypergraph_from_json(hypergraph_to_json(T)) == T
    doc = algebra_to_json(from_hypergraph(M2))
    assert doc["as"] == "algebra"
    assert hypergraph_from_json(doc) == M2


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"vertices": ["a"]},
        {"vertices": ["a"], "edges": [["a"]], "extra": 1},
        {"vertices": ["a"], "edges": [["a"]], "as": "poset"},
        {"vertices": [1], "edges": [[1]]},
        {"vertices": ["a"], "edges": [["a", "a"]]},
        {"vertices": ["a", "b"], "edges": [["a"]]},
        {"vertices": ["a"], "edges": [["a"], ["a"]]},
        {"vertices": ["a", "a"], "edges": [["a"]]},
    ],
)
def test_bad_hypergraphs(doc):
    with pytest.raises(InputError):
        hypergraph_from_json(doc)


def test_duplicate_json_keys():
    with pytest.raises(InputError):
        loads('{"m": 1, "m": 2}')
    with pytest.raises(InputError):
        loads("{not json")


def test_profile_json():
    p = Profile(2, (2, 2, 1))
    assert profile_to_json(p) == {"m": 2, "values": {"1": 2, "2": 2, "3": 1}}
    assert profile_from_json(profile_to_json(p)) == p


@pytest.mark.parametrize(
    "doc",
    [
        {"m": 2, "values": {"1": 2, "2": 2}},
        {"m": 1, "values": {"1": -1}},
        {"m": 1, "values": {"1": 1.5}},
        {"m": 1, "values": {"1": True}},
        {"m": 1, "values": {"01": 1}},
        {"m": 0, "values": {}},
        {"m": 1, "values": {"1": 1}, "x": 0},
    ],
)
def test_bad_profiles(doc):
    with pytest.raises(InputError):
        profile_from_json(doc)


def test_rho_json():
    r = rho_of_hypergraph(T)
    assert rho_to_json(r)["values"]["3"] == 3
    assert rho_from_json(rho_to_json(r)) == r
    with pytest.raises(InputError):
        rho_from_json({"m": 1, "values": {"0": 1, "1": 1}})
    with pytest.raises(InputError):
        rho_from_json({"m": 1, "values": {"1": 1}})
    assert rho_from_json({"m": 0, "values": {"0": 0}}) == PolymatroidFn(0, (0,))


def test_dumps_is_stable():
    doc = {"values": {"10": 1, "2": 0}, "m": 4}
    assert dumps(doc) == '{"m":4,"values":{"10":1,"2":0}}'
    assert dumps(doc) == dumps(loads(dumps(doc)))
    assert dumps(doc, pretty=True).startswith("{\n  ")


def test_to_dot():
    text = to_dot(T)
    assert text.startswith("graph H {") and text.endswith("}\n")
    assert text.count(" -- ") == 6
