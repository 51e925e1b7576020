"""Return words over a prefix, read off a finite window by brute force.

Return words are numbered 1, 2, ... in order of first appearance in the
decomposition of the sequence.  ``theta(i)`` is the word numbered ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DecodingError, InputError, WindowTooSmall
from .sequences import SequenceOracle
from .words import occurrences

CERTIFIED = "certified"
STABILIZED = "stabilized"
PARTIAL = "partial"


@dataclass(frozen=True)
class ReturnWordIndex:
    u: str
    words: tuple[str, ...]
    status: str
    window: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        object.__setattr__(self, "_numbers", {w: i for i, w in enumerate(self.words, 1)})

    @property
    def card(self) -> int:
        return len(self.words)

    def theta(self, i: int) -> str:
        if not 1 <= i <= len(self.words):
            raise InputError(f"return-word index {i} out of range 1..{len(self.words)}")
        return self.words[i - 1]

    def number(self, w: str) -> int:
        return self._numbers[w]

    def encode(self, w: str) -> tuple[int, ...]:
        return encode(self, w)

    def decode(self, d: Sequence[int]) -> str:
        return decode(self, d)

    @property
    def lengths(self) -> list[int]:
        return [len(w) for w in self.words]


@dataclass(frozen=True)
class DerivedPrefix:
    indices: tuple[int, ...]
    index: ReturnWordIndex

    def __len__(self):
        return len(self.indices)

    @property
    def word(self) -> str:
        return decode(self.index, self.indices)


def _scan(x: str, u: str):
    """Return words between consecutive occurrences of ``u`` in ``x``.

    Yields the numbering, the derived index word of ``x[:last occurrence]``,
    the first-appearance position of each word, and occurrence counts.
    """
    occ = occurrences(x, u)
    if len(occ) < 2:
        raise WindowTooSmall(
            f"window too small: {len(occ)} occurrence(s) of the prefix in {len(x)} symbols")
    numbers: dict[str, int] = {}
    first_seen: list[int] = []
    counts: list[int] = []
    derived = []
    for a, b in zip(occ, occ[1:]):
        w = x[a:b]
        i = numbers.get(w)
        if i is None:
            i = numbers[w] = len(numbers) + 1
            first_seen.append(a)
            counts.append(0)
        counts[i - 1] += 1
        derived.append(i)
    return list(numbers), tuple(derived), first_seen, counts


def _check_prefix(x: str, u: str):
    if not u:
        raise InputError("prefix must be nonempty")
    if not x.startswith(u):
        raise InputError("u is not a prefix of the sequence")


def extract(o: SequenceOracle, u: str, window: int) -> ReturnWordIndex:
    """Return words over the prefix ``u`` seen in the first ``window`` symbols.

    The index is *stabilized* when no new return word shows up in the second
    half of the window and every word was seen at least twice; otherwise it
    is *partial*.
    """
    return _extract(o, u, window)[0]


def _extract(o, u, window):
    if window < 2 * len(u):
        raise InputError(f"window {window} shorter than twice the prefix length {len(u)}")
    x = o.prefix(window)
    _check_prefix(x, u)
    words, derived, first_seen, counts = _scan(x, u)
    stable = max(first_seen) < window / 2 and min(counts) >= 2
    index = ReturnWordIndex(u, words, STABILIZED if stable else PARTIAL, window)
    return index, derived


def extract_word(x: str, u: str) -> ReturnWordIndex:
    """As :func:`extract`, over an already materialised finite word."""
    _check_prefix(x, u)
    words, _, first_seen, counts = _scan(x, u)
    stable = max(first_seen) < len(x) / 2 and min(counts) >= 2
    return ReturnWordIndex(u, words, STABILIZED if stable else PARTIAL, len(x))


def derived_prefix(o: SequenceOracle, u: str, window: int) -> DerivedPrefix:
    """Derived index word of the longest fully decomposed prefix of the window."""
    index, derived = _extract(o, u, window)
    return DerivedPrefix(derived, index)


def encode(idx: ReturnWordIndex, w: str) -> tuple[int, ...]:
    """Decompose ``w`` over the return words of ``idx``.

    Exhaustive dynamic programming over suffixes, so no prefix-code
    property is assumed.  Raises :class:`DecodingError` at the end of the
    longest decomposable prefix when ``w`` has no decomposition, and when
    it has two (which would mean the words are not a code).
    """
    words = idx.words
    n = len(w)
    ways = [0] * (n + 1)
    step: list[str | None] = [None] * (n + 1)
    ways[n] = 1
    for i in range(n - 1, -1, -1):
        total = 0
        for h in words:
            j = i + len(h)
            if j <= n and ways[j] and w.startswith(h, i):
                total += ways[j]
                if step[i] is None:
                    step[i] = h
        ways[i] = min(total, 2)
    if ways[0] == 0:
        raise DecodingError("word is not a concatenation of return words",
                            _longest_parse(words, w))
    if ways[0] > 1:
        raise DecodingError("word has two decompositions", 0)
    out, i = [], 0
    while i < n:
        h = step[i]
        out.append(idx.number(h))
        i += len(h)
    return tuple(out)


def _longest_parse(words, w):
    reach = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for h in words:
            j = i + len(h)
            if j not in reach and w.startswith(h, i):
                reach.add(j)
                frontier.append(j)
    return max(reach)


def decode(idx: ReturnWordIndex, d: Sequence[int]) -> str:
    return "".join(idx.theta(i) for i in d)

