"""Load and write substitution spec files.

Format::

    {
      "alphabet": ["0", "1"],
      "rules": {"0": "01", "1": "0"},
      "axiom": "0",
      "morphism": {"target": ["x", "y"], "map": {"0": "xy", "1": "x"}}
    }

Images are strings of letter names or arrays of names.  Strings are
split over the declared names; a string with no split, or with more than
one, is rejected.
"""

from __future__ import annotations

import json
from os import PathLike
from pathlib import Path

from .errors import InputError, SpecFileError
from .substitution import Morphism, Substitution
from .words import Alphabet


def split_names(text: str, names, field: str) -> list[str]:
    """Split ``text`` into a sequence of ``names``.

    Longest match is tried first; when the text admits more than one
    segmentation the names are ambiguous and loading fails.
    """
    by_length = sorted(set(names), key=len, reverse=True)
    n = len(text)
    # ways[i] counts segmentations of text[i:], saturating at 2
    ways = [0] * (n + 1)
    choice = [None] * (n + 1)
    ways[n] = 1
    for i in range(n - 1, -1, -1):
        for name in by_length:
            if text.startswith(name, i) and ways[i + len(name)]:
                if choice[i] is None:
                    choice[i] = name
                ways[i] = min(2, ways[i] + ways[i + len(name)])
    if ways[0] == 0:
        raise SpecFileError(f"cannot split {text!r} into alphabet names", field)
    if ways[0] > 1:
        raise SpecFileError(f"ambiguous letter names in {text!r}", field)
    out, i = [], 0
    while i < n:
        out.append(choice[i])
        i += len(choice[i])
    return out


def _image(value, names, field):
    if isinstance(value, str):
        return split_names(value, names, field)
    if isinstance(value, list) and all(isinstance(x, str) for x in value):
        unknown = [x for x in value if x not in names]
        if unknown:
            raise SpecFileError(f"unknown letters {unknown}", field)
        return value
    raise SpecFileError("image must be a string or an array of names", field)


def _alphabet(value, field):
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SpecFileError("expected an array of letter names", field)
    try:
        return Alphabet(tuple(value))
    except InputError as exc:
        raise SpecFileError(str(exc), field) from None


def parse_spec(data: dict) -> tuple[Substitution, Morphism | None]:
    if not isinstance(data, dict):
        raise SpecFileError("top level must be an object")
    for key in ("alphabet", "rules", "axiom"):
        if key not in data:
            raise SpecFileError("missing field", key)
    alphabet = _alphabet(data["alphabet"], "alphabet")
    names = alphabet.names
    rules_in = data["rules"]
    if not isinstance(rules_in, dict):
        raise SpecFileError("expected an object", "rules")
    rules = {}
    for name, value in rules_in.items():
        field = f"rules.{name}"
        if name not in names:
            raise SpecFileError("letter not in alphabet", field)
        image = _image(value, names, field)
        if not image:
            raise SpecFileError("empty image", field)
        rules[alphabet.letter(name)] = alphabet.word(image)
    missing = [n for n in names if alphabet.letter(n) not in rules]
    if missing:
        raise SpecFileError(f"no rule for {missing}", "rules")
    axiom = data["axiom"]
    if axiom not in names:
        raise SpecFileError(f"{axiom!r} is not in the alphabet", "axiom")
    sub = Substitution(alphabet, rules, alphabet.letter(axiom))

    morphism = None
    if data.get("morphism") is not None:
        morphism = parse_morphism(data["morphism"], alphabet, "morphism")
    return sub, morphism


def parse_morphism(data, source: Alphabet, prefix: str = "morphism") -> Morphism:
    if not isinstance(data, dict):
        raise SpecFileError("expected an object", prefix)
    for key in ("target", "map"):
        if key not in data:
            raise SpecFileError("missing field", f"{prefix}.{key}")
    target = _alphabet(data["target"], f"{prefix}.target")
    mapping = data["map"]
    if not isinstance(mapping, dict):
        raise SpecFileError("expected an object", f"{prefix}.map")
    rules = {}
    for name, value in mapping.items():
        field = f"{prefix}.map.{name}"
        if name not in source.names:
            raise SpecFileError("letter not in source alphabet", field)
        if value == "" or value == []:
            rules[source.letter(name)] = ""
            continue
        rules[source.letter(name)] = target.word(_image(value, target.names, field))
    missing = [n for n in source.names if source.letter(n) not in rules]
    if missing:
        raise SpecFileError(f"no image for {missing}", f"{prefix}.map")
    return Morphism(source, target, rules)


def load_spec(path: str | PathLike) -> tuple[Substitution, Morphism | None]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return parse_spec(data)


def load_morphism(path: str | PathLike, source: Alphabet) -> Morphism:
    """Read a morphism file: either a bare ``{"target", "map"}`` object or a
    full spec whose ``morphism`` field is used."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if isinstance(data, dict) and "morphism" in data:
        data = data["morphism"]
    return parse_morphism(data, source)


def _render_image(alphabet: Alphabet, word: str):
    names = alphabet.names_of(word)
    if alphabet.plain:
        return "".join(names)
    return names


def spec_to_dict(s: Substitution, morphism: Morphism | None = None) -> dict:
    out = {
        "alphabet": list(s.alphabet.names),
        "rules": {s.alphabet.name(a): _render_image(s.alphabet, img) for a, img in s.rules.items()},
        "axiom": s.alphabet.name(s.axiom),
    }
    if morphism is not None:
        out["morphism"] = {
            "target": list(morphism.target.names),
            "map": {morphism.source.name(a): _render_image(morphism.target, img)
                    for a, img in morphism.rules.items()},
        }
    return out


def dump_spec(s: Substitution, morphism: Morphism | None = None, path=None) -> str:
    text = json.dumps(spec_to_dict(s, morphism), indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
