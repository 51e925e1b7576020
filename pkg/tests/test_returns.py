import random

import pytest

import oracles
import properties
from retword import library
from retword.errors import DecodingError, InputError, WindowTooSmall
from retword.returns import (PARTIAL, STABILIZED, ReturnWordIndex, decode, derived_prefix,
                             encode, extract)
from retword.sequences import PeriodicOracle, fixed_point


@pytest.fixture
def fibx():
    return fixed_point(library.fibonacci())


def test_extract_fibonacci(fibx):
    idx = extract(fibx, "0", 100)
    assert idx.words == ("01", "0")
    assert idx.number("01") == 1 and idx.number("0") == 2
    assert idx.status == STABILIZED
    assert extract(fibx, "01", 200).words == ("010", "01")


def test_extract_periodic():
    idx = extract(PeriodicOracle("ab"), "a", 20)
    assert idx.words == ("ab",)


def test_extract_matches_naive_scan(named_sub):
    o = fixed_point(named_sub)
    x = o.prefix(2000)
    for n in (1, 2, 5, 9):
        words, derived = oracles.return_words(x, x[:n])
        d = derived_prefix(o, x[:n], 2000)
        assert d.index.words == tuple("".join(w) for w in words)
        assert list(d.indices) == derived


def test_extract_errors(fibx):
    with pytest.raises(InputError, match="not a prefix"):
        extract(fibx, "1", 100)
    with pytest.raises(InputError):
        extract(fibx, "0100", 7)
    with pytest.raises(WindowTooSmall, match="window too small"):
        extract(fibx, "0100101", 14)


def test_partial_status():
    # a word seen once near the end of a short window is not trusted
    assert extract(fixed_point(library.tribonacci()), "abac", 16).status == PARTIAL


H = ReturnWordIndex("0", ("01", "0"), STABILIZED)
AB = ReturnWordIndex("a", ("ab",), STABILIZED)


def test_encode_examples():
    assert encode(H, "01001") == (1, 2, 1)
    assert encode(AB, "ababab") == (1, 1, 1)
    with pytest.raises(DecodingError) as exc:
        encode(H, "1")
    assert exc.value.position == 0
    with pytest.raises(DecodingError) as exc:
        encode(H, "0110")
    assert exc.value.position == 2


def test_encode_rejects_non_code():
    bad = ReturnWordIndex("a", ("a", "ab", "b"), PARTIAL)
    with pytest.raises(DecodingError, match="two decompositions"):
        encode(bad, "ab")


def test_decode_examples():
    assert decode(H, [1, 2, 1]) == "01001"
    assert decode(H, []) == ""
    assert decode(AB, [1, 1]) == "abab"
    with pytest.raises(InputError):
        decode(H, [3])


def test_derived_prefix_examples(fibx):
    assert derived_prefix(fibx, "0", 30).indices[:10] == (1, 2, 1, 1, 2, 1, 2, 1, 1, 2)
    assert derived_prefix(fibx, "01", 200).indices[:5] == (1, 2, 1, 1, 2)
    assert set(derived_prefix(PeriodicOracle("ab"), "a", 50).indices) == {1}
    d = derived_prefix(fibx, "010", 500)
    assert fibx.prefix(500).startswith(d.word)


def test_structural_claims(named_sub):
    o = fixed_point(named_sub)
    rng = random.Random(7)
    x = o.prefix(6000)
    for n in (1, 2, 3, 7, 15):
        properties.check_partial_sums(o, x[:n], 3000)
        properties.check_nested(o, x[:n], x[:n + rng.randint(1, 10)], 6000)
        properties.check_derived_of_derived(o, x[:n], rng.randint(1, 4), 6000)
        properties.check_code(o, x[:n], 3000, rng)


def test_singleton_for_periodic_long_prefix():
    o = PeriodicOracle("abb")
    for n in range(1, 20):
        u = o.prefix(n)
        assert extract(o, u, 200).card == 1
