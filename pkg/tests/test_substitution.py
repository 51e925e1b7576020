import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from retword import library
from retword.errors import InputError, InvalidSubstitution
from retword.substitution import (Substitution, growing_letters, growth_stats,
                                  incidence_matrix, is_primitive, power,
                                  repair_first_letter, validate)


@st.composite
def substitutions(draw, max_letters=3, max_len=3):
    d = draw(st.integers(1, max_letters))
    names = "abc"[:d]
    rules = {c: draw(st.text(alphabet=names, min_size=1, max_size=max_len)) for c in names}
    return Substitution.from_names(rules, "a", list(names))


def test_validate_fibonacci(fib):
    report = validate(fib)
    assert report.ok and report.bounded == frozenset()


def test_validate_flags_bounded_letter():
    s = library.bounded_letter()
    report = validate(s)
    assert report.ok
    assert report.bounded == {s.alphabet.letter("2")}


def test_validate_condition_one():
    s = Substitution.from_names({"1": "21", "2": "12"})
    with pytest.raises(InvalidSubstitution) as exc:
        validate(s)
    assert exc.value.condition == 1
    assert not validate(s, strict=False).ok


def test_validate_condition_two():
    s = Substitution.from_names({"a": "ab", "b": "b"}, "b")
    with pytest.raises(InvalidSubstitution) as exc:
        validate(s)
    assert exc.value.condition == 2


def test_construction_rejects_partial_and_empty():
    with pytest.raises(InputError):
        Substitution.from_names({"a": "ab"}, names=["a", "b"])
    with pytest.raises(InputError):
        Substitution.from_names({"a": "a", "b": ""})


@settings(max_examples=300)
@given(substitutions())
def test_growth_classification_matches_iterated_lengths(s):
    # bounded letters are stable from step d on; growing ones strictly grow
    # within every d further steps
    d = len(s.alphabet)
    rules = dict(s.rules)
    growing = growing_letters(s)
    for a in s.alphabet.letters:
        grows = oracles.lengths_after(rules, a, 3 * d) > oracles.lengths_after(rules, a, d)
        assert grows == (a in growing)
    report = validate(s, strict=False)
    rule_ok = s.rules[s.axiom][0] == s.axiom
    assert report.ok == (rule_ok and s.axiom in growing)


def test_is_primitive_examples(thue_morse):
    assert is_primitive(library.bounded_letter()) == (False, None)
    assert is_primitive(library.primitive_cover())[0]
    assert is_primitive(thue_morse) == (True, 1)
    assert is_primitive(library.fibonacci()) == (True, 2)


@settings(max_examples=200)
@given(substitutions())
def test_is_primitive_matches_word_powers(s):
    d = len(s.alphabet)
    rules = dict(s.rules)
    expected = None
    for k in range(1, (d - 1) ** 2 + 2):
        if all(set(s.alphabet.letters) <= set(oracles.apply_n(rules, b, k))
               for b in s.alphabet.letters):
            expected = k
            break
    assert is_primitive(s) == (expected is not None, expected)


def test_power_examples(fib):
    assert power(fib, 1) == fib
    assert dict(power(fib, 2).rules) == {"0": "010", "1": "01"}
    s = library.minimal_nonprimitive()
    assert dict(power(s, 2).rules) == {"1": "1211" + "2" + "1211" + "1211", "2": "2"}


@settings(max_examples=50)
@given(substitutions(), st.integers(1, 3), st.integers(1, 3))
def test_power_composition(s, m, n):
    pm, pn, pmn = power(s, m), power(s, n), power(s, m + n)
    for a in s.alphabet.letters:
        assert pmn.rules[a] == pm(pn.rules[a])


def test_incidence_matrix_examples(fib, thue_morse):
    assert incidence_matrix(fib).tolist() == [[1, 1], [1, 0]]
    assert incidence_matrix(thue_morse).tolist() == [[1, 1], [1, 1]]
    m = incidence_matrix(library.bounded_letter())
    assert m[:, 1].tolist() == [0, 1, 0]


@settings(max_examples=50)
@given(substitutions(), st.integers(1, 5))
def test_incidence_of_power_is_matrix_power(s, n):
    m = incidence_matrix(s)
    assert (incidence_matrix(power(s, n)) == np.linalg.matrix_power(m, n)).all()
    assert (m.sum(axis=0) == [len(s.rules[a]) for a in s.alphabet.letters]).all()


@settings(max_examples=50)
@given(substitutions())
def test_primitivity_invariant_under_square(s):
    assert is_primitive(s)[0] == is_primitive(power(s, 2))[0]


def test_growth_stats_examples(fib, thue_morse):
    first = growth_stats(fib, 1)[0]
    assert (first.S, first.I) == (2, 1)
    third = growth_stats(thue_morse, 3)[-1]
    assert (third.S, third.I) == (8, 8)


def test_growth_stats_fibonacci_lengths():
    # |zeta^n(0)| = F(n+2), |zeta^n(1)| = F(n+1); ratio of consecutive Fibonacci numbers
    fibs = [1, 1]
    while len(fibs) < 14:
        fibs.append(fibs[-1] + fibs[-2])
    stats = growth_stats(library.fibonacci(), 10)
    for g in stats:
        assert g.S == fibs[g.n + 1] and g.I == fibs[g.n]
        assert g.ratio <= 2
    rules = {"0": "01", "1": "0"}
    assert stats[-1].S == oracles.lengths_after(rules, "0", 10)


def test_growth_stats_exact_for_large_n(thue_morse):
    assert growth_stats(thue_morse, 200)[-1].S == 2**200


def test_repair_first_letter():
    s = Substitution.from_names({"1": "21", "2": "12"})
    fixed = repair_first_letter(s)
    validate(fixed)
    assert dict(fixed.rules) == dict(power(s, 2).rules)
    stuck = Substitution.from_names({"a": "bb", "b": "b"})
    with pytest.raises(InvalidSubstitution):
        repair_first_letter(stuck)
