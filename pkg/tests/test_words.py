import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exotic4.fpgroup import (
    IDENTITY,
    AlphabetError,
    Word,
    commutator,
    conjugate,
    cyclic_reduce,
    invert,
    map_word,
    multiply,
    parse_word,
    power,
    reduce,
)
from exotic4.fpgroup.words import exponent_vector, is_reduced
from oracles import naive_reduce
from strategies import GENS, words

a, b, c = (Word.gen(x) for x in "abc")


def test_reduce_examples():
    assert reduce(Word((("a", 1), ("a", -1)))) == IDENTITY
    assert reduce(parse_word("a*b*b^-1*a")) == a * a
    w = parse_word("a*b*a^-1")
    assert reduce(w) == w


def test_products_and_commutators():
    assert commutator(a, a) == IDENTITY
    assert invert(a * invert(b)) == b * invert(a)
    assert str(commutator(a, b)) == "a*b*a^-1*b^-1"
    assert multiply(a, invert(a)) == IDENTITY


def test_alphabet_mismatch():
    with pytest.raises(AlphabetError):
        multiply(a, Word.gen("z"), alphabet=("a", "b"))
    with pytest.raises(AlphabetError):
        commutator(a, Word.gen("z"), alphabet=("a",))


def test_zero_power_is_identity():
    assert power(a * b, 0) == IDENTITY
    assert power(a, -2) == parse_word("a^-2")


def test_map_word_examples():
    x = Word.gen("x")
    assert map_word(Word.gen("a1"), {"a1": Word.gen("a1'")}) == Word.gen("a1'")
    assert map_word(IDENTITY, {}) == IDENTITY
    assert map_word(commutator(a, b), {"a": x, "b": IDENTITY}) == IDENTITY
    with pytest.raises(AlphabetError):
        map_word(a * b, {"a": x})


def test_cyclic_reduce():
    assert cyclic_reduce(parse_word("b*a*b^-1")) == a
    assert conjugate(a, b) == parse_word("b*a*b^-1")


def test_sign_validation():
    with pytest.raises(ValueError):
        Word((("a", 2),))


# 10^4 randomized cases in total across the properties below
PROPERTY = settings(max_examples=2500, derandomize=True, deadline=None)


@PROPERTY
@given(words)
def test_reduce_idempotent_and_matches_oracle(w):
    r = reduce(w)
    assert reduce(r) == r
    assert is_reduced(r)
    assert len(r) <= len(w)
    assert r.letters == naive_reduce(w.letters)


@PROPERTY
@given(words, words)
def test_inverse_laws(u, v):
    assert reduce(u * invert(u) * v) == reduce(v)
    assert multiply(u, invert(u)) == IDENTITY
    assert invert(invert(u)) == u
    assert invert(multiply(u, v)) == multiply(invert(v), invert(u))
    assert commutator(u, v) == reduce(u * v * invert(u) * invert(v))


@PROPERTY
@given(words, words, st.fixed_dictionaries({g: words for g in GENS}))
def test_map_word_is_a_homomorphism(u, v, images):
    lhs = map_word(multiply(u, v), images)
    rhs = reduce(map_word(u, images) * map_word(v, images))
    assert lhs == rhs
    assert map_word(invert(u), images) == invert(map_word(u, images))


@PROPERTY
@given(words, words)
def test_exponent_sums_are_additive(u, v):
    eu, ev = exponent_vector(u, GENS), exponent_vector(v, GENS)
    assert exponent_vector(multiply(u, v), GENS) == [x + y for x, y in zip(eu, ev)]
    assert exponent_vector(commutator(u, v), GENS) == [0, 0, 0]
