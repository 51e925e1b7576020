"""Substitutions, morphisms, validity, primitivity and growth.

Incidence matrices use the orientation ``M[b, a] = |zeta(a)|_b``: column
``a`` counts the letters of the image of ``a`` and sums to ``|zeta(a)|``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import ErasingMorphismError, InputError, InvalidSubstitution
from .words import Alphabet

log = logging.getLogger(__name__)

GROWTH_STATS_CAP = 10_000


def _freeze_rules(alphabet: Alphabet, target: Alphabet, rules: Mapping[str, str], what: str):
    rules = dict(rules)
    missing = [alphabet.name(a) for a in alphabet.letters if a not in rules]
    if missing:
        raise InputError(f"{what} not total: no image for {missing}")
    extra = [a for a in rules if a not in alphabet]
    if extra:
        raise InputError(f"{what} has images for letters outside the alphabet")
    for a, image in rules.items():
        target.check(image)
    return MappingProxyType({a: rules[a] for a in alphabet.letters})


@dataclass(frozen=True)
class Morphism:
    """A nonerasing morphism ``source -> target+`` extended by concatenation."""

    source: Alphabet
    target: Alphabet
    rules: Mapping[str, str]

    def __post_init__(self):
        frozen = _freeze_rules(self.source, self.target, self.rules, "morphism")
        erased = [self.source.name(a) for a, img in frozen.items() if not img]
        if erased:
            raise ErasingMorphismError(f"morphism erases {erased}")
        object.__setattr__(self, "rules", frozen)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> Morphism:
        return cls(alphabet, alphabet, {a: a for a in alphabet.letters})

    @property
    def table(self):
        return str.maketrans(dict(self.rules))

    def __call__(self, word: str) -> str:
        return word.translate(self.table)

    @property
    def letter_to_letter(self) -> bool:
        return all(len(img) == 1 for img in self.rules.values())

    @property
    def max_length(self) -> int:
        return max(len(img) for img in self.rules.values())


@dataclass(frozen=True)
class Substitution:
    """A triple ``(rules, alphabet, axiom)``.

    Construction only checks that the rule map is total with nonempty
    images over the alphabet; the two defining conditions are checked by
    :func:`validate`, so invalid triples can still be built and inspected.
    """

    alphabet: Alphabet
    rules: Mapping[str, str]
    axiom: str
    _table: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        frozen = _freeze_rules(self.alphabet, self.alphabet, self.rules, "substitution")
        empty = [self.alphabet.name(a) for a, img in frozen.items() if not img]
        if empty:
            raise InputError(f"substitution has empty images for {empty}")
        if self.axiom not in self.alphabet:
            raise InputError(f"axiom {self.axiom!r} is not a letter of the alphabet")
        object.__setattr__(self, "rules", frozen)
        object.__setattr__(self, "_table", str.maketrans(dict(frozen)))

    @classmethod
    def from_names(cls, rules: Mapping[str, str | list[str]], axiom: str | None = None,
                   names: list[str] | None = None) -> Substitution:
        """Build from display names, e.g. ``{"0": "01", "1": "0"}``.

        Images given as strings are split into single-character names;
        pass lists when names are longer.
        """
        if names is None:
            names = list(rules)
        alphabet = Alphabet(tuple(names))
        parsed = {}
        for name, image in rules.items():
            parts = list(image) if isinstance(image, str) else list(image)
            parsed[alphabet.letter(name)] = alphabet.word(parts)
        axiom = names[0] if axiom is None else axiom
        return cls(alphabet, parsed, alphabet.letter(axiom))

    def __call__(self, word: str) -> str:
        return word.translate(self._table)

    def image(self, letter: str) -> str:
        return self.rules[letter]

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.axiom == other.axiom
                and dict(self.rules) == dict(other.rules))

    def __hash__(self):
        return hash((self.alphabet, self.axiom, tuple(self.rules.items())))

    def __repr__(self):
        rules = ", ".join(f"{self.alphabet.name(a)}->{self.alphabet.render(img)}"
                          for a, img in self.rules.items())
        return f"Substitution({rules}; axiom={self.alphabet.name(self.axiom)})"

    def as_morphism(self) -> Morphism:
        return Morphism(self.alphabet, self.alphabet, self.rules)

    @property
    def max_length(self) -> int:
        return max(len(img) for img in self.rules.values())


@dataclass(frozen=True)
class ValidationReport:
    first_letter_ok: bool
    growing: frozenset[str]
    bounded: frozenset[str]
    axiom_growing: bool

    @property
    def ok(self) -> bool:
        return self.first_letter_ok and self.axiom_growing


@dataclass(frozen=True)
class GrowthStats:
    n: int
    S: int
    I: int

    @property
    def ratio(self) -> float:
        return self.S / self.I


def growing_letters(s: Substitution) -> frozenset[str]:
    """Letters ``a`` with ``|zeta^n(a)| -> infinity``.

    ``a`` grows iff it reaches (in zero or more steps of "occurs in the
    image of") a letter ``b`` that lies on a cycle and has ``|zeta(b)| >= 2``.
    Every other letter only reaches transient letters and cycles of
    single-letter images, whose lengths stay bounded.
    """
    letters = s.alphabet.letters
    succ = {a: set(s.rules[a]) for a in letters}
    reach = {a: _reachable(succ, a) for a in letters}  # one or more steps
    expanding = {b for b in letters if b in reach[b] and len(s.rules[b]) >= 2}
    return frozenset(a for a in letters if a in expanding or reach[a] & expanding)


def _reachable(succ, start):
    seen = set()
    stack = list(succ[start])
    while stack:
        c = stack.pop()
        if c not in seen:
            seen.add(c)
            stack.extend(succ[c])
    return seen


def validate(s: Substitution, strict: bool = True) -> ValidationReport:
    """Check both defining conditions and classify letter growth.

    With ``strict`` a failing condition raises :class:`InvalidSubstitution`
    naming it; otherwise the report is returned either way.
    """
    growing = growing_letters(s)
    report = ValidationReport(
        first_letter_ok=s.rules[s.axiom][0] == s.axiom,
        growing=growing,
        bounded=frozenset(s.alphabet.letters) - growing,
        axiom_growing=s.axiom in growing,
    )
    if strict:
        name = s.alphabet.name(s.axiom)
        if not report.first_letter_ok:
            raise InvalidSubstitution(1, f"image of axiom {name!r} does not start with it")
        if not report.axiom_growing:
            raise InvalidSubstitution(2, f"images of axiom {name!r} stay bounded")
    return report


def incidence_matrix(s: Substitution) -> np.ndarray:
    letters = s.alphabet.letters
    m = np.zeros((len(letters), len(letters)), dtype=np.int64)
    for col, a in enumerate(letters):
        for c in s.rules[a]:
            m[s.alphabet.index(c), col] += 1
    return m


def is_primitive(s: Substitution) -> tuple[bool, int | None]:
    """Return ``(True, k)`` for the smallest ``k`` with ``M**k > 0`` entrywise.

    The search stops at Wielandt's bound ``(d - 1)**2 + 1``.
    """
    d = len(s.alphabet)
    m = incidence_matrix(s) > 0
    p = m.copy()
    for k in range(1, (d - 1) ** 2 + 2):
        if p.all():
            return True, k
        p = (p.astype(np.int64) @ m.astype(np.int64)) > 0
    return False, None


def power(s: Substitution, n: int) -> Substitution:
    """The ``n``-fold composition of ``s`` with the same axiom."""
    if n < 1:
        raise InputError("power exponent must be >= 1")
    rules = dict(s.rules)
    for _ in range(n - 1):
        rules = {a: s(img) for a, img in rules.items()}
    return Substitution(s.alphabet, rules, s.axiom)


def image_lengths(s: Substitution, n: int) -> list[int]:
    """``|zeta^n(a)|`` for every letter, in alphabet order, without building words."""
    m = incidence_matrix(s).tolist()
    d = len(m)
    lengths = [1] * d
    for _ in range(n):
        lengths = [sum(m[b][a] * lengths[b] for b in range(d)) for a in range(d)]
    return lengths


def growth_stats(s: Substitution, n_max: int) -> list[GrowthStats]:
    """``S(zeta^n)`` and ``I(zeta^n)`` for ``n = 1..n_max``.

    Lengths come from the incidence matrix acting on the length vector;
    Python integers keep the arithmetic exact.
    """
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    if n_max > GROWTH_STATS_CAP:
        raise InputError(f"n_max capped at {GROWTH_STATS_CAP}")
    m = incidence_matrix(s).tolist()
    d = len(m)
    lengths = [1] * d
    stats = []
    for n in range(1, n_max + 1):
        lengths = [sum(m[b][a] * lengths[b] for b in range(d)) for a in range(d)]
        stats.append(GrowthStats(n, max(lengths), min(lengths)))
    return stats


def repair_first_letter(s: Substitution) -> Substitution:
    """Find a growing letter ``b`` and power ``k`` with ``zeta^k(b)`` starting with ``b``.

    Only first letters matter: ``zeta^k(b)`` starts with ``f^k(b)`` where
    ``f`` maps a letter to the first letter of its image. The search is
    capped at ``k <= |A| * max rule length``.
    """
    growing = growing_letters(s)
    first = {a: img[0] for a, img in s.rules.items()}
    cap = len(s.alphabet) * s.max_length
    for b in s.alphabet.letters:
        if b not in growing:
            continue
        c = b
        for k in range(1, cap + 1):
            c = first[c]
            if c == b:
                repaired = Substitution(s.alphabet, power(s, k).rules, b)
                log.info("repaired condition 1 with axiom %s and power %d",
                         s.alphabet.name(b), k)
                return repaired
    raise InvalidSubstitution(1, f"no growing letter returns to itself within {cap} steps")
