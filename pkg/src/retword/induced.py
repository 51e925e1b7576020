"""Induced substitutions on return-word numbers and derived-set enumeration.

For a fixed point ``X`` of ``zeta`` and a prefix ``u``, the induced
substitution sends return word number ``i`` to the numbers of the return
words making up ``zeta(theta(i))``.  Its fixed point is the derived
sequence of ``X`` over ``u``.  It is built here by an exact closure: no
window is scanned beyond the first return word.

Closure numbering: indices are processed in the order they were assigned
and each image is scanned left to right.  Because the derived sequence is
``tau(d0) tau(d1) ...`` and a letter can only be new inside the *first*
image of each index, this reproduces first-appearance order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ConsistencyError, HypothesisError, InputError, ResourceError
from .returns import CERTIFIED, ReturnWordIndex, derived_prefix, encode
from .sequences import FixedPointOracle, ImageOracle, SequenceOracle
from .substitution import Morphism, Substitution, is_primitive, validate
from .words import Alphabet, occurrences

log = logging.getLogger(__name__)

DEFAULT_MAX_CARD = 10_000
DEFAULT_COMPARE_DEPTH = 10_000


class ReturnWordNumbering:
    """Mutable first-come numbering of return words used while closing."""

    def __init__(self, u: str, words=()):
        self.u = u
        self.words: list[str] = []
        self._numbers: dict[str, int] = {}
        for w in words:
            self.register(w)

    def register(self, w: str) -> int:
        i = self._numbers.get(w)
        if i is None:
            self.words.append(w)
            i = self._numbers[w] = len(self.words)
        return i

    def theta(self, i: int) -> str:
        return self.words[i - 1]

    def __len__(self):
        return len(self.words)

    def freeze(self, status=CERTIFIED) -> ReturnWordIndex:
        return ReturnWordIndex(self.u, tuple(self.words), status)


def _split_block(block: str, u: str, register) -> tuple[int, ...]:
    # block is followed in the sequence by a word starting with u, so the
    # occurrences of u in block + u below len(block) are genuine
    w = block + u
    occ = occurrences(w, u)
    if not occ or occ[0] != 0 or occ[-1] != len(block):
        raise ConsistencyError("block does not start with the prefix or misses its successor")
    return tuple(register(w[a:b]) for a, b in zip(occ, occ[1:]))


def block_decompose(s: Substitution, numbering: ReturnWordNumbering, i: int) -> tuple[int, ...]:
    """Numbers of the return words composing ``zeta(theta(i))``.

    Unseen return words are registered with fresh numbers.
    """
    return _split_block(s(numbering.theta(i)), numbering.u, numbering.register)


@dataclass(frozen=True)
class InducedSubstitution:
    index: ReturnWordIndex
    images: tuple[tuple[int, ...], ...]

    @property
    def card(self) -> int:
        return len(self.images)

    @property
    def key(self):
        return self.images

    def tau(self, i: int) -> tuple[int, ...]:
        return self.images[i - 1]

    @cached_property
    def substitution(self) -> Substitution:
        alphabet = Alphabet.indexed(self.card)
        rules = {alphabet.letters[i]: alphabet.from_indices(img)
                 for i, img in enumerate(self.images)}
        return Substitution(alphabet, rules, alphabet.letters[0])

    @cached_property
    def oracle(self) -> FixedPointOracle:
        return FixedPointOracle(self.substitution)

    def fixed_point_prefix(self, n: int) -> tuple[int, ...]:
        sub = self.substitution
        return sub.alphabet.to_indices(self.oracle.prefix(n))


def _first_return_word(oracle: SequenceOracle, u: str) -> str:
    n = max(16, 4 * len(u))
    while True:
        x = oracle.prefix(n)
        if not x.startswith(u):
            raise InputError("u is not a prefix of the fixed point")
        j = x.find(u, 1)
        if j != -1:
            return x[:j]
        if n >= oracle.max_prefix:
            raise ResourceError("prefix never recurs within the prefix cap")
        n = min(2 * n, oracle.max_prefix)


def induced_substitution(s: Substitution, u: str, oracle: FixedPointOracle | None = None,
                         max_card: int = DEFAULT_MAX_CARD) -> InducedSubstitution:
    """Exact induced substitution of the fixed point of ``s`` over its prefix ``u``."""
    if not u:
        raise InputError("prefix must be nonempty")
    if oracle is None:
        oracle = FixedPointOracle(s)
    numbering = ReturnWordNumbering(u, [_first_return_word(oracle, u)])
    images = []
    i = 1
    while i <= len(numbering):
        images.append(block_decompose(s, numbering, i))
        if len(numbering) > max_card:
            raise ResourceError(f"closure did not terminate within {max_card} return words")
        i += 1
    induced = InducedSubstitution(numbering.freeze(), tuple(images))
    if induced.images[0][0] != 1:
        raise ConsistencyError("induced substitution does not start with 1")
    return induced


@dataclass(frozen=True)
class ProjectionMap:
    """Return-word map from a fixed point ``X`` to its image ``Y = phi(X)``.

    ``images[i - 1]`` is the derived index word over ``v`` of ``phi(theta_X(i))``.
    """

    x: InducedSubstitution
    y_index: ReturnWordIndex
    images: tuple[tuple[int, ...], ...]
    morphism: Morphism

    @property
    def key(self):
        return self.x.key, self.images

    @property
    def max_image_length(self) -> int:
        return max(len(img) for img in self.images)

    def apply(self, d) -> tuple[int, ...]:
        out = []
        for i in d:
            out.extend(self.images[i - 1])
        return tuple(out)

    def derived_prefix(self, n: int) -> tuple[int, ...]:
        """First ``n`` symbols of the derived sequence of ``Y`` over ``v``."""
        m = max(1, n)
        while True:
            d = self.apply(self.x.fixed_point_prefix(m))
            if len(d) >= n:
                return d[:n]
            m *= 2


def lambda_map(s: Substitution, m: Morphism, v_len: int,
               oracle: FixedPointOracle | None = None,
               max_card: int = DEFAULT_MAX_CARD) -> ProjectionMap:
    """Map X-side return-word numbers to Y-side index words, ``Y = m(X)``.

    ``u`` and ``v`` are the length-``v_len`` prefixes of ``X`` and ``Y``.
    ``v`` is a prefix of ``m(u)``, so each ``m(theta_X(i))`` is followed in
    ``Y`` by ``v`` and splits exactly at the occurrences of ``v``.
    """
    if v_len < 1:
        raise InputError("v_len must be >= 1")
    if m.source != s.alphabet:
        raise InputError("morphism source alphabet differs from the substitution alphabet")
    if oracle is None:
        oracle = FixedPointOracle(s)
    u = oracle.prefix(v_len)
    v = ImageOracle(oracle, m).prefix(v_len)
    x = induced_substitution(s, u, oracle, max_card)
    numbering = ReturnWordNumbering(v)
    images = tuple(_split_block(m(w), v, numbering.register) for w in x.index.words)
    return ProjectionMap(x, numbering.freeze(), images, m)


@dataclass
class DerivedClass:
    number: int
    representative: InducedSubstitution | ProjectionMap
    first_seen_at_prefix_len: int
    prefix_lens: list[int] = field(default_factory=list)

    @property
    def induced(self) -> InducedSubstitution:
        rep = self.representative
        return rep.x if isinstance(rep, ProjectionMap) else rep

    @property
    def alphabet_size(self) -> int:
        return self.induced.card

    @property
    def sequence_alphabet_size(self) -> int:
        """Letters of the derived sequence this class stands for."""
        rep = self.representative
        return rep.y_index.card if isinstance(rep, ProjectionMap) else rep.card

    def derived_sequence_prefix(self, n: int) -> tuple[int, ...]:
        rep = self.representative
        if isinstance(rep, ProjectionMap):
            return rep.derived_prefix(n)
        return rep.fixed_point_prefix(n)

    def to_dict(self) -> dict:
        out = {
            "alphabet_size": self.alphabet_size,
            "tau_rules": {str(i): list(img) for i, img in enumerate(self.induced.images, 1)},
            "first_seen_at_prefix_len": self.first_seen_at_prefix_len,
        }
        rep = self.representative
        if isinstance(rep, ProjectionMap):
            out["y_alphabet_size"] = rep.y_index.card
            out["lambda"] = {str(i): list(img) for i, img in enumerate(rep.images, 1)}
        return out


@dataclass
class PrefixEntry:
    prefix_len: int
    class_number: int
    card: int
    min_return: int
    max_return: int
    y_card: int | None = None
    y_min_return: int | None = None
    y_max_return: int | None = None
    max_lambda: int | None = None


@dataclass
class DerivedSetReport:
    n_max: int
    stability_window: int
    classes: list[DerivedClass]
    entries: list[PrefixEntry]
    primitive: bool
    compare_depth: int
    equal_up_to: list[tuple[int, int]]
    image: bool = False
    normalized: bool = False

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def last_new_class_at(self) -> int:
        return max(c.first_seen_at_prefix_len for c in self.classes)

    @property
    def stabilized(self) -> bool:
        """No new class among the last ``stability_window`` prefix lengths."""
        return self.last_new_class_at <= self.n_max - self.stability_window

    @property
    def sequence_class_count(self) -> int:
        """Classes after merging those whose derived sequences agree to ``compare_depth``."""
        parent = list(range(len(self.classes) + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.equal_up_to:
            parent[find(a)] = find(b)
        return len({find(c.number) for c in self.classes})

    @property
    def lambda_bound(self) -> float | None:
        """Empirical ``M / L`` over the run (image reports only)."""
        if not self.image:
            return None
        hi = max(max(e.max_return / e.prefix_len, e.y_max_return / e.prefix_len)
                 for e in self.entries)
        lo = min(min(e.min_return / e.prefix_len, e.y_min_return / e.prefix_len)
                 for e in self.entries)
        return hi / lo

    @property
    def max_lambda_length(self) -> int | None:
        if not self.image:
            return None
        return max(e.max_lambda for e in self.entries)

    def to_dict(self) -> dict:
        out = {
            "n_max": self.n_max,
            "stability_window": self.stability_window,
            "stabilized": self.stabilized,
            "tau_class_count": self.class_count,
            "sequence_class_count": self.sequence_class_count,
            "compare_depth": self.compare_depth,
            "equal_up_to": [list(p) for p in self.equal_up_to],
            "last_new_class_at": self.last_new_class_at,
            "primitive": self.primitive,
            "minimality_verified": self.primitive,
            "classes": [c.to_dict() for c in self.classes],
            "class_by_prefix_len": [e.class_number for e in self.entries],
            "card_by_prefix_len": [e.card for e in self.entries],
        }
        if self.image:
            out["normalized"] = self.normalized
            out["y_card_by_prefix_len"] = [e.y_card for e in self.entries]
            out["max_lambda_length"] = self.max_lambda_length
            out["lambda_bound"] = self.lambda_bound
        return out


def _map_jobs(fn, items, jobs):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _collect(results, n_max, stability_window, primitive, compare_depth, image, normalized):
    classes: list[DerivedClass] = []
    by_key = {}
    entries = []
    for n, (rep, entry) in enumerate(results, 1):
        key = rep.key
        cls = by_key.get(key)
        if cls is None:
            cls = by_key[key] = DerivedClass(len(classes) + 1, rep, n)
            classes.append(cls)
        cls.prefix_lens.append(n)
        entry.class_number = cls.number
        entries.append(entry)
    equal = _equal_up_to(classes, compare_depth)
    return DerivedSetReport(n_max, stability_window, classes, entries, primitive,
                            compare_depth, equal, image, normalized)


def _equal_up_to(classes, depth):
    pairs = []
    if depth <= 0:
        return pairs
    prefixes = {}
    for c in classes:
        prefixes[c.number] = c.derived_sequence_prefix(depth)
    for a in classes:
        for b in classes:
            if a.number < b.number and a.sequence_alphabet_size == b.sequence_alphabet_size \
                    and prefixes[a.number] == prefixes[b.number]:
                pairs.append((a.number, b.number))
    return pairs


def _check_run_args(n_max, stability_window):
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    if not 0 <= stability_window < n_max:
        raise InputError("stability_window must lie in [0, n_max)")


def derived_set_fixed_point(s: Substitution, n_max: int, stability_window: int,
                            compare_depth: int = DEFAULT_COMPARE_DEPTH, jobs: int = 1,
                            max_card: int = DEFAULT_MAX_CARD) -> DerivedSetReport:
    """Induced substitutions over every prefix of length ``1..n_max``, deduplicated."""
    _check_run_args(n_max, stability_window)
    validate(s)
    primitive = is_primitive(s)[0]
    if not primitive:
        log.warning("substitution is not primitive; minimality unverified")
    oracle = FixedPointOracle(s)
    oracle.prefix(n_max)

    def work(n):
        x = induced_substitution(s, oracle.prefix(n), oracle, max_card)
        lengths = x.index.lengths
        return x, PrefixEntry(n, 0, x.card, min(lengths), max(lengths))

    results = _map_jobs(work, range(1, n_max + 1), jobs)
    return _collect(results, n_max, stability_window, primitive, compare_depth, False, False)


def derived_set_image(s: Substitution, m: Morphism, n_max: int, stability_window: int,
                      compare_depth: int = DEFAULT_COMPARE_DEPTH, jobs: int = 1,
                      max_card: int = DEFAULT_MAX_CARD) -> DerivedSetReport:
    """Derived-set enumeration for ``Y = m(X)``, keyed on ``(tau_u, lambda_u)``.

    A morphism that is not letter-to-letter is first replaced by an
    equivalent projection through :func:`retword.normalizer.letter_to_letter`.
    """
    _check_run_args(n_max, stability_window)
    validate(s)
    normalized = False
    if not m.letter_to_letter:
        from .normalizer import letter_to_letter

        pres = letter_to_letter(s, m)
        s, m = pres.tau, pres.chi
        normalized = True
    primitive = is_primitive(s)[0]
    if not primitive:
        log.warning("substitution is not primitive; minimality unverified")
    oracle = FixedPointOracle(s)
    oracle.prefix(n_max)

    def work(n):
        lam = lambda_map(s, m, n, oracle, max_card)
        xl = lam.x.index.lengths
        yl = lam.y_index.lengths
        entry = PrefixEntry(n, 0, lam.x.card, min(xl), max(xl), lam.y_index.card,
                            min(yl), max(yl), lam.max_image_length)
        return lam, entry

    results = _map_jobs(work, range(1, n_max + 1), jobs)
    return _collect(results, n_max, stability_window, primitive, compare_depth, True, normalized)


def substitution_from_repeat(o: SequenceOracle, u: str, v: str, window: int,
                             check_hypothesis: bool = True) -> Substitution:
    """Substitution ``i -> encode_u(theta_v(i))`` from two prefixes with equal derived sequences.

    Checked on the window: ``u`` is a prefix of ``v``, both derived prefixes
    agree, and (with ``check_hypothesis``) every ``t u`` with ``t`` a return
    word over ``u`` is a factor of every return word over ``v``; that last
    condition is what makes the result primitive.
    """
    if not u or not v.startswith(u):
        raise HypothesisError("u must be a nonempty prefix of v")
    du = derived_prefix(o, u, window)
    dv = derived_prefix(o, v, window)
    if du.index.card != dv.index.card:
        raise HypothesisError(
            f"derived sequences use {du.index.card} and {dv.index.card} letters")
    for k, (a, b) in enumerate(zip(du.indices, dv.indices)):
        if a != b:
            raise HypothesisError(f"derived sequences differ at position {k}")
    if check_hypothesis:
        for t in du.index.words:
            for w in dv.index.words:
                if t + u not in w:
                    raise HypothesisError(
                        "some return word over v misses t u for a return word t over u")
    hu = du.index
    images = [encode(hu, w) for w in dv.index.words]
    alphabet = Alphabet.indexed(hu.card)
    rules = {alphabet.letters[i]: alphabet.from_indices(img) for i, img in enumerate(images)}
    sub = Substitution(alphabet, rules, alphabet.letters[0])
    validate(sub)
    if not is_primitive(sub)[0]:
        log.warning("repeat substitution is not primitive")
    return sub


__all__ = [
    "DerivedClass", "DerivedSetReport", "InducedSubstitution", "ProjectionMap",
    "ReturnWordNumbering", "block_decompose", "derived_set_fixed_point",
    "derived_set_image", "induced_substitution", "lambda_map",
    "substitution_from_repeat",
]
