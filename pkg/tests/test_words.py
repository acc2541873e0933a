import pytest
from hypothesis import given, strategies as st

from rotederiv.words import (
    exchange,
    factor_complexity,
    first_appearance_form,
    is_palindrome,
    is_stable,
    parikh_mod2,
    s_inverse,
    s_map,
)

binary = st.text(alphabet="01", max_size=60)


def test_s_map_examples():
    assert s_map("001110001100") == "01001001010"
    assert s_map("0") == ""
    with pytest.raises(ValueError):
        s_map("")


def test_s_inverse_examples():
    assert s_inverse("01001001010") == "001110001100"
    assert s_inverse("", "1") == "1"
    with pytest.raises(ValueError):
        s_inverse("01", "2")


@given(binary, st.sampled_from("01"))
def test_s_inverse_round_trip(u, first):
    v = s_inverse(u, first)
    assert len(v) == len(u) + 1 and v[0] == first
    assert s_map(v) == u


@given(binary.filter(bool))
def test_s_map_ignores_exchange(v):
    assert s_map(exchange(v)) == s_map(v)


@given(binary, binary)
def test_parikh_is_additive(u, v):
    assert parikh_mod2(u + v) == parikh_mod2(u) ^ parikh_mod2(v)


@given(binary)
def test_stability_matches_parikh(u):
    assert is_stable(u) == parikh_mod2(u).stable
    # a stable block lifts to a word ending in the letter it starts with
    assert is_stable(u) == (s_inverse(u, "0")[-1] == "0")


def test_factor_complexity():
    assert factor_complexity("0101", 2) == 2
    assert factor_complexity("abc", 0) == 1
    with pytest.raises(ValueError):
        factor_complexity("01", 3)


def test_first_appearance_form():
    assert first_appearance_form("BBCAB") == "AABCA"
    assert first_appearance_form("") == ""


@given(st.text(alphabet="ABC", max_size=30))
def test_first_appearance_form_is_idempotent(w):
    f = first_appearance_form(w)
    assert first_appearance_form(f) == f
    assert first_appearance_form(w.translate(str.maketrans("ABC", "CAB"))) == f


def test_palindrome():
    assert is_palindrome("010") and not is_palindrome("01")
