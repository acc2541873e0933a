import pytest
from hypothesis import given, strategies as st

from rotederiv.morphisms import (
    IDENTITY,
    M_B,
    M_BETA,
    O_BETA,
    PHI_B,
    PHI_BETA,
    SL2_F2,
    DirectiveParseError,
    DirectiveSpec,
    InvalidDirective,
    Mod2Matrix,
    Morphism,
    compose_directive,
    directive_matrix,
    incidence_mod2,
    is_primitive,
    letter_action_edges,
)

directive_words = st.text(alphabet="bB", max_size=12)


def test_elementary_images():
    assert PHI_B("01") == "001"
    assert PHI_BETA("01") == "101"


def test_composition_order():
    # phi_{b B} = phi_b o phi_B
    assert compose_directive("bB")["0"] == PHI_B(PHI_BETA("0")) == "010"
    assert compose_directive("")("0110") == "0110"


def test_parse_and_str():
    m = Morphism.parse("0->010, 1->01")
    assert str(m) == "0->010,1->01"
    with pytest.raises(ValueError):
        Morphism.parse("0=>1")
    with pytest.raises(ValueError):
        Morphism.parse("0->1,0->0")


def test_power_and_fixed_point():
    fib = Morphism.parse("0->01,1->0")
    assert (fib ** 3)["0"] == "01001"
    assert fib.fixed_point("0", 8) == "01001010"
    with pytest.raises(ValueError):
        Morphism.parse("0->1,1->0").fixed_point("0", 3)


def test_primitivity():
    assert is_primitive(compose_directive("bB"))
    assert not is_primitive(compose_directive("bbb"))
    assert is_primitive(Morphism.parse("A->AB,B->ABAACAACA,C->ABAACA"))
    assert not is_primitive(Morphism.parse("A->A,B->BC,C->CB"))


@given(directive_words)
def test_directive_matrix_is_incidence_mod_2(z):
    assert directive_matrix(z) == incidence_mod2(compose_directive(z))


@given(directive_words, directive_words)
def test_matrix_is_multiplicative(y, z):
    assert directive_matrix(y + z) == directive_matrix(y) @ directive_matrix(z)


def test_six_matrices():
    assert len(set(SL2_F2)) == 6
    assert all(m.det == 1 for m in SL2_F2)
    every = {Mod2Matrix(a, b, c, d) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)}
    assert {m for m in every if m.det == 1} == set(SL2_F2)


def test_graph_path_example():
    # start at O_b, follow beta then b
    edges = {(m, letter): target for m, letter, target in letter_action_edges()}
    step = edges[(IDENTITY, "B")]
    assert step == M_BETA
    assert edges[(step, "b")] == Mod2Matrix(0, 1, 1, 1) == M_B @ M_BETA @ IDENTITY


def test_matrix_render():
    assert str(O_BETA) == "[[0,1],[1,0]]"
    assert O_BETA.to_list() == [[0, 1], [1, 0]]
    with pytest.raises(ValueError):
        Mod2Matrix(2, 0, 0, 1)


class TestDirectiveSpec:
    def test_parse_forms(self):
        assert str(DirectiveSpec.parse("|bB")) == "|bB"
        assert DirectiveSpec.parse("bbB").is_finite
        for bad in ("b|B|b", "b|", "x|bB"):
            with pytest.raises(DirectiveParseError):
                DirectiveSpec.parse(bad)

    def test_canonical_form(self):
        assert DirectiveSpec.parse("|bBbB") == DirectiveSpec.parse("|bB")
        assert DirectiveSpec.parse("B|bB") == DirectiveSpec.parse("|Bb")
        assert DirectiveSpec.parse("bB|bB") == DirectiveSpec.parse("|bB")

    def test_validate(self):
        for bad in ("bbB", "|b", "bB|BB"):
            with pytest.raises(InvalidDirective):
                DirectiveSpec.parse(bad).validate()
        DirectiveSpec.parse("bb|bB").validate()

    def test_letters_and_shift(self):
        d = DirectiveSpec.parse("bbb|bB")
        assert d.prefix(7) == "bbbbBbB"
        assert d.shift(4) == DirectiveSpec.parse("|Bb")
        assert d.run_length(0) == 4
        assert d.shift(4).normalized() == DirectiveSpec.parse("|bB")

    @given(st.text(alphabet="bB", max_size=4), st.text(alphabet="bB", min_size=1, max_size=5), st.integers(0, 12))
    def test_shift_agrees_with_letters(self, pre, per, n):
        d = DirectiveSpec(pre, per)
        naive = pre + per * 30
        assert d.prefix(20) == naive[:20]
        assert d.shift(n).prefix(10) == naive[n : n + 10]
