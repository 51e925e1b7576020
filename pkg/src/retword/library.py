"""Standard substitutions and morphisms used in tests and spec files."""

from __future__ import annotations

from .substitution import Morphism, Substitution
from .words import Alphabet


def fibonacci() -> Substitution:
    return Substitution.from_names({"0": "01", "1": "0"})


def fibonacci_ab() -> Substitution:
    return Substitution.from_names({"a": "ab", "b": "a"})


def thue_morse() -> Substitution:
    return Substitution.from_names({"a": "ab", "b": "ba"})


def tribonacci() -> Substitution:
    return Substitution.from_names({"a": "ab", "b": "ac", "c": "a"})


def periodic_ab() -> Substitution:
    """``a -> ab, b -> ab``: fixed point ``(ab)^omega``."""
    return Substitution.from_names({"a": "ab", "b": "ab"})


def bounded_letter() -> Substitution:
    """``1 -> 123, 2 -> 2, 3 -> 13``: not primitive, minimal fixed point."""
    return Substitution.from_names({"1": "123", "2": "2", "3": "13"})


def minimal_nonprimitive() -> Substitution:
    """``1 -> 1211, 2 -> 2``."""
    return Substitution.from_names({"1": "1211", "2": "2"})


def primitive_cover() -> Substitution:
    """``1 -> 12, 2 -> 312, 3 -> 1233``, projected by :func:`cover_projection`."""
    return Substitution.from_names({"1": "12", "2": "312", "3": "1233"})


def cover_projection() -> Morphism:
    """``1, 3 -> 1`` and ``2 -> 2``; maps the fixed point of :func:`primitive_cover`
    onto that of :func:`minimal_nonprimitive`."""
    source = primitive_cover().alphabet
    target = Alphabet(("1", "2"))
    return Morphism(source, target, {"1": "1", "2": "2", "3": "1"})


def fibonacci_xy() -> Morphism:
    """``a -> xy, b -> x`` on :func:`fibonacci_ab`."""
    return Morphism(fibonacci_ab().alphabet, Alphabet(("x", "y")), {"a": "xy", "b": "x"})


NAMED = {
    "fibonacci": fibonacci,
    "thue-morse": thue_morse,
    "tribonacci": tribonacci,
    "periodic": periodic_ab,
    "bounded-letter": bounded_letter,
    "minimal-nonprimitive": minimal_nonprimitive,
    "primitive-cover": primitive_cover,
}
