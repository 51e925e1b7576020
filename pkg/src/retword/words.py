"""Finite-word primitives.

A word is a plain :class:`str` in which every character is one letter.
Alphabets whose display names are all single characters use those
characters directly, so the Fibonacci word over ``0, 1`` is literally
``"01001010..."``.  Alphabets with longer names (``"a.1"``, ``"10"``) are
mapped onto private-use code points; :class:`Alphabet` converts between
the two views.

Positions are 0-based everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

_PRIVATE_BASE = 0xF0000
_PRIVATE_SIZE = 0xFFFE


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of letters with display names."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise InputError("alphabet must be nonempty")
        if any(not isinstance(n, str) or not n for n in names):
            raise InputError("alphabet names must be nonempty strings")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate alphabet names in {list(names)}")
        if len(names) > _PRIVATE_SIZE:
            raise InputError("alphabet too large")

    @classmethod
    def indexed(cls, size: int) -> Alphabet:
        """The alphabet ``{1, ..., size}`` used for return-word numbers."""
        return cls(tuple(str(i) for i in range(1, size + 1)))

    def __len__(self):
        return len(self.names)

    @cached_property
    def letters(self) -> tuple[str, ...]:
        if all(len(n) == 1 for n in self.names):
            return self.names
        return tuple(chr(_PRIVATE_BASE + i) for i in range(len(self.names)))

    @cached_property
    def _by_name(self):
        return dict(zip(self.names, self.letters))

    @cached_property
    def _by_letter(self):
        return dict(zip(self.letters, self.names))

    @cached_property
    def _position(self):
        return {c: i for i, c in enumerate(self.letters)}

    @property
    def plain(self) -> bool:
        """True when letters and display names coincide."""
        return self.letters is self.names

    def letter(self, name: str) -> str:
        try:
            return self._by_name[name]
        except KeyError:
            raise InputError(f"unknown letter {name!r}") from None

    def name(self, letter: str) -> str:
        return self._by_letter[letter]

    def index(self, letter: str) -> int:
        """0-based position of ``letter`` in the alphabet."""
        return self._position[letter]

    def __contains__(self, letter):
        return letter in self._position

    def word(self, names: Iterable[str]) -> str:
        return "".join(self.letter(n) for n in names)

    def names_of(self, word: str) -> list[str]:
        return [self._by_letter[c] for c in word]

    def render(self, word: str, sep: str | None = None) -> str:
        """Human-readable form of ``word``.

        Plain alphabets print the word as is; otherwise names are joined
        with ``sep`` (a space by default).
        """
        if sep is None:
            sep = "" if self.plain else " "
        return sep.join(self._by_letter[c] for c in word)

    def check(self, word: str) -> None:
        for i, c in enumerate(word):
            if c not in self._position:
                raise InputError(f"letter at position {i} is not in the alphabet")

    def from_indices(self, indices: Sequence[int]) -> str:
        """Word whose letters are the 1-based alphabet positions ``indices``."""
        letters = self.letters
        return "".join(letters[i - 1] for i in indices)

    def to_indices(self, word: str) -> tuple[int, ...]:
        pos = self._position
        return tuple(pos[c] + 1 for c in word)


def occurrences(w: str, u: str) -> list[int]:
    """All (possibly overlapping) positions where ``u`` occurs in ``w``."""
    if not u:
        raise InputError("empty pattern")
    found = []
    i = w.find(u)
    while i != -1:
        found.append(i)
        i = w.find(u, i + 1)
    return found


def primitive_root(w: str) -> tuple[str, int]:
    """Return ``(p, k)`` with ``w == p * k`` and ``p`` primitive."""
    if not w:
        raise InputError("primitive root of the empty word")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    raise AssertionError("unreachable")


def is_primitive_word(w: str) -> bool:
    return primitive_root(w)[1] == 1


def max_power_index(w: str) -> int:
    """Largest ``k`` such that some ``v**k`` (``v`` nonempty) is a factor of ``w``.

    For each period ``p`` the maximal runs of ``w[i] == w[i + p]`` give the
    longest factors of period ``p``; a run of length ``r`` hosts a power of
    exponent ``(r + p) // p``.
    """
    if not w:
        raise InputError("power index of the empty word")
    n = len(w)
    codes = np.frombuffer(w.encode("utf-32-le"), dtype=np.uint32)
    best = 1
    for p in range(1, n // 2 + 1):
        # a run must reach (best + 1) * p - p matches to improve on best
        needed = best * p
        if needed > n - p:
            break
        eq = codes[:-p] == codes[p:]
        if not eq.any():
            continue
        run = _longest_run(eq)
        best = max(best, (run + p) // p)
    return best


def _longest_run(mask: np.ndarray) -> int:
    padded = np.concatenate(([False], mask, [False]))
    edges = np.flatnonzero(padded[1:] != padded[:-1])
    if edges.size == 0:
        return 0
    return int((edges[1::2] - edges[::2]).max())


def probe_period(w: str, max_period: int) -> int | None:
    """Smallest ``p <= max_period`` with ``w[i] == w[i + p]`` throughout."""
    for p in range(1, max_period + 1):
        if p >= len(w) or w[p:] == w[:-p]:
            return p
    return None


def factors(w: str, n: int) -> set[str]:
    """Distinct length-``n`` factors of ``w``."""
    return {w[i:i + n] for i in range(len(w) - n + 1)}
