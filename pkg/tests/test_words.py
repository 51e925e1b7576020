import pytest
from hypothesis import given, strategies as st

import oracles
from retword.errors import InputError
from retword.words import (Alphabet, max_power_index, occurrences, primitive_root,
                           probe_period)

words2 = st.text(alphabet="ab", max_size=200)
words3 = st.text(alphabet="abc", max_size=200)
short = st.text(alphabet="abc", min_size=1, max_size=5)


def test_occurrences_examples():
    assert occurrences("abab", "ab") == [0, 2]
    assert occurrences("aaaa", "aa") == [0, 1, 2]
    fib = "".join(oracles.iterate({"0": "01", "1": "0"}, "0", 8))
    assert fib == "01001010"
    assert occurrences(fib, "0") == oracles.occurrences(fib, "0") == [0, 2, 3, 5, 7]


def test_occurrences_empty_pattern():
    with pytest.raises(InputError, match="empty pattern"):
        occurrences("abc", "")


@given(st.one_of(words2, words3), short)
def test_occurrences_match_naive_scan(w, u):
    assert occurrences(w, u) == oracles.occurrences(w, u)


@pytest.mark.parametrize("w, root, k", [("abab", "ab", 2), ("a", "a", 1),
                                        ("aabaab", "aab", 2), ("aaaa", "a", 4)])
def test_primitive_root_examples(w, root, k):
    assert primitive_root(w) == (root, k)


def test_primitive_root_empty():
    with pytest.raises(InputError):
        primitive_root("")


@given(st.text(alphabet="ab", min_size=1, max_size=30), st.integers(1, 4))
def test_primitive_root_round_trip(v, reps):
    w = v * reps
    p, k = primitive_root(w)
    assert p * k == w
    assert primitive_root(p) == (p, 1)


@given(st.text(alphabet="ab", min_size=1, max_size=6), st.integers(2, 5), st.data())
def test_factor_vuv_of_power_is_power(v, n, data):
    # for primitive v, any factor v u v of v^n has u a power of v (possibly empty)
    v, _ = primitive_root(v)
    w = v * n
    i = data.draw(st.integers(0, len(w)))
    j = data.draw(st.integers(i, len(w)))
    f = w[i:j]
    if len(f) >= 2 * len(v) and f.startswith(v) and f.endswith(v):
        u = f[len(v):len(f) - len(v)]
        assert u == "" or primitive_root(u)[0] == v


@pytest.mark.parametrize("w, k", [("aaa", 3), ("ab", 1), ("abab", 2), ("aabaabaab", 3)])
def test_max_power_index_examples(w, k):
    assert max_power_index(w) == k


def test_thue_morse_prefix_64_is_cube_free():
    tm = oracles.iterate({"a": "ab", "b": "ba"}, "a", 64)
    assert oracles.power_index(tm) == 2
    assert max_power_index("".join(tm)) == 2


@given(st.text(alphabet="ab", min_size=1, max_size=40))
def test_max_power_index_matches_census(w):
    assert max_power_index(w) == oracles.power_index(w)


@given(st.text(alphabet="abc", min_size=1, max_size=40))
def test_index_one_iff_square_free(w):
    assert (max_power_index(w) == 1) == (not oracles.is_power_factor(w, 2))
    if any(a == b for a, b in zip(w, w[1:])):
        assert max_power_index(w) >= 2


def test_probe_period_examples():
    assert probe_period("ababab", 3) == 2
    assert probe_period("abcabd", 3) is None
    assert probe_period("ab" * 25, 10) == 2


def test_alphabet_plain_and_private():
    plain = Alphabet(("0", "1"))
    assert plain.plain and plain.word(["1", "0"]) == "10"
    fancy = Alphabet(("a.1", "a.2", "b.1"))
    assert not fancy.plain
    w = fancy.word(["a.2", "b.1"])
    assert len(w) == 2 and fancy.names_of(w) == ["a.2", "b.1"]
    assert fancy.render(w) == "a.2 b.1"


def test_alphabet_rejects_duplicates_and_empty():
    with pytest.raises(InputError):
        Alphabet(("a", "a"))
    with pytest.raises(InputError):
        Alphabet(())


def test_indexed_alphabet_round_trip():
    for size in (3, 12):
        a = Alphabet.indexed(size)
        idx = (1, size, 2, 1)
        assert a.to_indices(a.from_indices(idx)) == idx
