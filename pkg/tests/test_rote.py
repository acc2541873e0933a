import pytest
from hypothesis import given, settings, strategies as st

from corpus import FIXED, random_directives
from rotederiv.morphisms import DirectiveSpec
from rotederiv.oracle import return_words_scan
from rotederiv.rote import (
    FactorizationError,
    PrefixType,
    block_factorize,
    generate_rote,
    iter_blocks,
    parikh_matrix_of,
    prefix_matrix,
    prefix_type,
    rote_derived,
    rote_prefix,
    rote_return_words,
    type_sequence,
)
from rotederiv.sturmian import SturmianContext, adaptive_text, generate, return_words
from rotederiv.words import exchange, factor_complexity, s_map

V = "001110001100011100011000111000110001110011"


def test_example_rote_prefix():
    assert generate_rote("|bBb", 42) == V
    assert generate_rote("|bBb", 1) == "0"
    assert generate_rote("|bBb", 0) == ""


def test_example_return_words():
    triple = rote_return_words("|bBb", 1)
    assert rote_prefix("|bBb", 1) == "00"
    assert prefix_type("|bBb", 1) == PrefixType("US", 1)
    assert triple.as_set() == {"0", "0011", "00111"}
    # named in block order rr, rsr, s
    assert (triple.A, triple.B, triple.C) == ("0011", "00111", "0")


def test_fibonacci_triples():
    assert rote_return_words("|bB", 0).as_dict() == {"A": "0", "B": "0111", "C": "011"}
    assert rote_return_words("|bB", 1).as_set() == {"0011", "00111", "0"}


def test_fibonacci_types():
    assert [str(t) for t in type_sequence("|bB", 7)] == ["SU(1)", "US(1)", "UU(1)"] * 2 + ["SU(1)"]


def test_example_types():
    assert [str(t) for t in type_sequence("|bBb", 3)] == ["SU(1)", "US(1)", "UU(2)"]
    assert str(prefix_matrix("|bBb", 2)) == "[[0,1],[1,1]]"


def test_prefix_type_parse_and_blocks():
    t = PrefixType.parse("SU(2)")
    assert str(t) == "SU(2)"
    assert t.blocks() == ("r", "srrrs", "srrs")
    assert PrefixType.parse("UU(1)").blocks("0", "1") == ("00", "01", "10")
    for bad in ("SS(1)", "SU(0)", "SU"):
        with pytest.raises(ValueError):
            PrefixType.parse(bad)


def test_block_factorize():
    su = PrefixType("SU", 1).blocks()
    assert block_factorize("rsrrs", su) == "ab"
    assert block_factorize("rsrrsrrsrsr", su) == "abaaca"
    assert block_factorize("r", su) == "a"
    with pytest.raises(FactorizationError):
        block_factorize("rss", su)
    with pytest.raises(ValueError):
        list(iter_blocks("rr", ("r", "rr", "s")))
    assert "".join(iter_blocks("rsrrs" + "sr", su, partial=True)) == "ab"


def test_derived_goldens():
    assert rote_derived("|bB", 0, 18) == "ABABAACAACAABABAAC"
    assert rote_derived("|bB", 1, 18) == "BBCACACBBCACACBBBC"
    assert rote_derived("|bB", 2, 17) == "BACCBACCBBACBBACB"
    assert rote_derived("|bB", 2, 0) == ""


CORPUS = FIXED + random_directives(20)


@pytest.mark.parametrize("d", CORPUS, ids=str)
def test_types_and_matrices(d):
    ctx = SturmianContext(d)
    for n in range(10):
        pair = return_words(ctx, n)
        # the product formula agrees with the Parikh vectors of r and s
        assert prefix_matrix(ctx, n) == parikh_matrix_of(pair.r, pair.s)
        assert prefix_matrix(ctx, n).det == 1
        kind = prefix_type(ctx, n)
        assert kind.k == d.run_length(n)


@pytest.mark.parametrize("d", CORPUS, ids=str)
def test_rote_language(d):
    ctx = SturmianContext(d)
    v = generate_rote(ctx, 2000)
    assert v[0] == "0" and s_map(v) == generate(ctx, 1999)
    for n in range(1, 11):
        assert factor_complexity(v, n) == 2 * n
    # closed under exchange
    assert {v[i : i + 6] for i in range(1990)} == {exchange(v[i : i + 6]) for i in range(1990)}


@settings(max_examples=30, deadline=None)
@given(
    st.text(alphabet="bB", max_size=3),
    st.text(alphabet="bB", min_size=2, max_size=6).filter(lambda p: set(p) == {"b", "B"}),
    st.integers(0, 7),
)
def test_three_return_words_property(pre, per, n):
    ctx = SturmianContext(DirectiveSpec(pre, per))
    x = rote_prefix(ctx, n)
    triple = rote_return_words(ctx, n)
    text = adaptive_text(lambda m: generate_rote(ctx, m), x, 4 * (len(x) + len("".join(triple.as_set()))), 60)
    scan = return_words_scan(x, text)
    assert scan.complete
    assert scan.return_words == triple.as_set()
    assert len(triple.as_set()) == 3
