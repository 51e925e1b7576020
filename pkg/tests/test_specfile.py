import json

import pytest

from retword import library
from retword.errors import ErasingMorphismError, SpecFileError
from retword.specfile import dump_spec, load_morphism, load_spec, parse_spec, split_names


def base(**over):
    data = {"alphabet": ["0", "1"], "rules": {"0": "01", "1": "0"}, "axiom": "0"}
    data.update(over)
    return data


def test_parse_fibonacci():
    s, m = parse_spec(base())
    assert s == library.fibonacci() and m is None


def test_parse_arrays_and_multichar_names():
    s, _ = parse_spec({"alphabet": ["x1", "x2"], "rules": {"x1": ["x1", "x2"], "x2": "x1"},
                       "axiom": "x1"})
    assert s.alphabet.names_of(s.rules[s.alphabet.letter("x1")]) == ["x1", "x2"]
    assert s.alphabet.names_of(s.rules[s.alphabet.letter("x2")]) == ["x1"]


def test_split_names_ambiguity():
    assert split_names("abab", ["a", "b"], "f") == ["a", "b", "a", "b"]
    with pytest.raises(SpecFileError, match="ambiguous") as exc:
        split_names("aab", ["a", "aa", "b"], "rules.a")
    assert exc.value.field == "rules.a"
    with pytest.raises(SpecFileError, match="cannot split"):
        split_names("ac", ["a", "b"], "rules.a")


@pytest.mark.parametrize("data, field", [
    (base(rules={"0": "01"}), "rules"),
    (base(rules={"0": "01", "1": ""}), "rules.1"),
    (base(rules={"0": "02", "1": "0"}), "rules.0"),
    (base(axiom="2"), "axiom"),
    ({"alphabet": ["0"], "rules": {"0": "00"}}, "axiom"),
    (base(alphabet="01"), "alphabet"),
    (base(morphism={"target": ["x"], "map": {"0": "x", "1": "z"}}), "morphism.map.1"),
    (base(morphism={"target": ["x"]}), "morphism.map"),
])
def test_parse_errors_name_the_field(data, field):
    with pytest.raises(SpecFileError) as exc:
        parse_spec(data)
    assert exc.value.field == field


def test_erasing_morphism_rejected():
    with pytest.raises(ErasingMorphismError):
        parse_spec(base(morphism={"target": ["x"], "map": {"0": "x", "1": ""}}))


def test_round_trip(tmp_path):
    for name in ("fibonacci", "tribonacci", "primitive-cover", "thue-morse"):
        s = library.NAMED[name]()
        assert parse_spec(json.loads(dump_spec(s))) == (s, None)
    s, m = load_spec("/root/pkg/specs/primitive-cover.json")
    path = tmp_path / "cover.json"
    dump_spec(s, m, path)
    s2, m2 = load_spec(path)
    assert s2 == s and m2.rules == m.rules
    assert load_morphism(path, s.alphabet).rules == m.rules


def test_load_missing_file(tmp_path):
    with pytest.raises(SpecFileError, match="cannot read"):
        load_spec(tmp_path / "nope.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SpecFileError, match="invalid JSON"):
        load_spec(bad)
