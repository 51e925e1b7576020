"""On-demand prefixes of infinite sequences.

Every oracle keeps a cached prefix that only ever grows; :meth:`prefix`
extends it under a lock so concurrent callers see prefixes of one and the
same sequence.
"""

from __future__ import annotations

import os
import threading

from .errors import InputError, ResourceError, WindowTooSmall
from .substitution import Morphism, Substitution, validate
from .words import Alphabet, occurrences

DEFAULT_MAX_PREFIX = 10**7


def max_prefix_cap() -> int:
    value = os.environ.get("RETWORD_MAX_PREFIX")
    if value is None:
        return DEFAULT_MAX_PREFIX
    try:
        cap = int(value)
    except ValueError:
        raise InputError(f"RETWORD_MAX_PREFIX must be an integer, got {value!r}") from None
    if cap <= 0:
        raise InputError("RETWORD_MAX_PREFIX must be positive")
    return cap


class SequenceOracle:
    """Base class: subclasses implement :meth:`_grow`."""

    kind = "abstract"

    def __init__(self, alphabet: Alphabet, max_prefix: int | None = None):
        self.alphabet = alphabet
        self.max_prefix = max_prefix_cap() if max_prefix is None else max_prefix
        self._buf = ""
        self._lock = threading.Lock()

    def prefix(self, n: int) -> str:
        if n < 0:
            raise InputError("prefix length must be nonnegative")
        if n > self.max_prefix:
            raise ResourceError(f"prefix length {n} exceeds cap {self.max_prefix}")
        buf = self._buf
        if len(buf) >= n:
            return buf[:n]
        with self._lock:
            if len(self._buf) < n:
                self._buf = self._grow(self._buf, n)
            return self._buf[:n]

    def __getitem__(self, key):
        if isinstance(key, slice):
            if key.stop is None:
                raise InputError("open slices of an infinite sequence")
            return self.prefix(key.stop)[key]
        return self.prefix(key + 1)[key]

    @property
    def cached(self) -> int:
        return len(self._buf)

    def _grow(self, buf: str, n: int) -> str:
        raise NotImplementedError


class FixedPointOracle(SequenceOracle):
    """The fixed point ``lim zeta^i(alpha)`` of a valid substitution."""

    kind = "fixed-point"

    def __init__(self, substitution: Substitution, max_prefix: int | None = None):
        validate(substitution)
        super().__init__(substitution.alphabet, max_prefix)
        self.substitution = substitution
        self._consumed = 0

    def _grow(self, buf, n):
        s = self.substitution
        if not buf:
            buf = s.image(s.axiom)
            self._consumed = 1
        # invariant: buf == zeta(buf[:j])
        j = self._consumed
        while len(buf) < n:
            chunk = buf[j:j + max(1, n - len(buf))]
            if not chunk:
                raise AssertionError("fixed-point generation stalled")
            buf += s(chunk)
            j += len(chunk)
        self._consumed = j
        return buf


class ImageOracle(SequenceOracle):
    """The image of another oracle's sequence under a nonerasing morphism."""

    kind = "image"

    def __init__(self, source: SequenceOracle, morphism: Morphism, max_prefix: int | None = None):
        if morphism.source != source.alphabet:
            raise InputError("morphism source alphabet differs from the sequence alphabet")
        super().__init__(morphism.target, max_prefix)
        self.source = source
        self.morphism = morphism
        self._consumed = 0

    def _grow(self, buf, n):
        j = self._consumed
        while len(buf) < n:
            need = n - len(buf)
            chunk = self.source.prefix(j + need)[j:]
            buf += self.morphism(chunk)
            j += len(chunk)
        self._consumed = j
        return buf


class PeriodicOracle(SequenceOracle):
    """The purely periodic sequence ``word word word ...``."""

    kind = "periodic"

    def __init__(self, word: str, alphabet: Alphabet | None = None, max_prefix: int | None = None):
        if not word:
            raise InputError("period word must be nonempty")
        if alphabet is None:
            alphabet = Alphabet(tuple(sorted(set(word))))
        alphabet.check(word)
        super().__init__(alphabet, max_prefix)
        self.word = word

    def _grow(self, buf, n):
        reps = -(-n // len(self.word))
        return self.word * max(reps, 1)


class ExplicitOracle(SequenceOracle):
    """A finite stored word standing in for a sequence; prefixes beyond it fail."""

    kind = "explicit"

    def __init__(self, word: str, alphabet: Alphabet | None = None):
        if alphabet is None:
            alphabet = Alphabet(tuple(sorted(set(word)))) if word else Alphabet(("_",))
        alphabet.check(word)
        super().__init__(alphabet, max_prefix=len(word))
        self._buf = word

    def _grow(self, buf, n):
        raise ResourceError(f"explicit sequence has only {len(buf)} symbols")


def fixed_point(s: Substitution, **kw) -> FixedPointOracle:
    return FixedPointOracle(s, **kw)


def image_oracle(o: SequenceOracle, m: Morphism) -> ImageOracle:
    return ImageOracle(o, m)


def recurrence_gap(o: SequenceOracle, u: str, n: int) -> int:
    """Largest distance between consecutive occurrences of ``u`` in ``o.prefix(n)``."""
    occ = occurrences(o.prefix(n), u)
    if len(occ) < 2:
        raise WindowTooSmall(f"insufficient window: {len(occ)} occurrence(s) in {n} symbols")
    return max(b - a for a, b in zip(occ, occ[1:]))
