from __future__ import annotations

import copy
import json

import pytest

from modrank.errors import ParseError, ValidationError
from modrank.fixtures import fixture
from modrank.instance import from_dict, parse_instance


def _intro_dict():
    return json.loads(fixture("intro_p3").dumps())


def test_roundtrip_and_digest():
    inst = fixture("intro_p3")
    again = parse_instance(inst.dumps())
    assert again.dumps() == inst.dumps()
    assert again.digest == inst.digest
    assert set(again.submodules) == {"H"}


def test_p_not_prime():
    d = _intro_dict()
    d["field"]["p"] = 4
    with pytest.raises(ParseError):
        from_dict(d)


def test_code_out_of_range():
    d = _intro_dict()
    d["module"]["action"][0][0][0] = 3
    with pytest.raises(ValidationError):
        from_dict(d)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(extra=1),
        lambda d: d["field"].update(q=9),
        lambda d: d["module"].update(rows=[]),
        lambda d: d.pop("module"),
        lambda d: d.update(version=2),
        lambda d: d["module"].update(dim=2),
        lambda d: d["module"]["action"].pop(),
        lambda d: d["group"].update(generators="abc"),
        lambda d: d["module"]["action"][0][0].__setitem__(0, 1.5),
    ],
    ids=["top", "field", "module", "missing", "version", "dim", "count", "gens", "float"],
)
def test_strict_parsing(mutate):
    d = _intro_dict()
    mutate(d)
    with pytest.raises(ParseError):
        from_dict(d)


def test_not_a_homomorphism_relayed():
    d = _intro_dict()
    d["module"]["action"][0] = [[1, 0, 0], [1, 1, 0], [0, 0, 1]]  # no longer commutes with h
    with pytest.raises(ValidationError):
        from_dict(d)


def test_bad_permutation():
    d = _intro_dict()
    d["group"]["generators"][0] = [0, 0, 1, 2, 3, 4]
    with pytest.raises(ValidationError):
        from_dict(d)


def test_json_syntax_error_has_position():
    with pytest.raises(ParseError, match="line 1"):
        parse_instance("{")


def test_duplicate_keys():
    text = '{"version": 1, "version": 1}'
    with pytest.raises(ParseError, match="duplicate"):
        parse_instance(text)
