import pytest

from corpus import FIXED
from rotederiv.oracle import derived_scan, occurrences, return_words_scan
from rotederiv.rote import generate_rote, rote_derived, rote_prefix, rote_return_words
from rotederiv.sturmian import SturmianContext, generate
from rotederiv.words import exchange, first_appearance_form, s_map


def test_occurrences():
    u = generate("|bBb", 12)
    assert occurrences("0", u) == [0, 2, 3, 5, 6, 8, 10, 11]
    assert occurrences("ab", "") == []
    with pytest.raises(ValueError):
        occurrences("", "01")


def test_example_scans():
    assert return_words_scan("0", generate("|bBb", 2000)).return_words == {"01", "0"}
    scan = return_words_scan("00", generate_rote("|bBb", 2000))
    assert scan.return_words == {"0", "0011", "00111"}
    assert scan.complete


def test_single_occurrence():
    scan = return_words_scan("0110", "0110")
    assert scan.return_words == frozenset() and not scan.complete
    assert derived_scan("0110", "0110") == ""
    with pytest.raises(ValueError):
        return_words_scan("1", "0110")


def test_canonical_naming():
    text = generate_rote("|bB", 3000)
    naming = {"0": "A", "0111": "B", "011": "C"}
    assert derived_scan("0", text, naming).startswith("ABABAACAACA")
    with pytest.raises(KeyError):
        derived_scan("0", text, {"0": "A"})
    with pytest.raises(ValueError):
        derived_scan("0", text, "bogus")


def test_fibonacci_is_its_own_derivated_sequence():
    f = generate("|bB", 3000)
    for w in ("0", "010", "010010"):
        d = derived_scan(w, f)
        assert f.startswith(d.translate(str.maketrans("AB", "01")))


@pytest.mark.parametrize("d", FIXED, ids=str)
def test_naming_modes_agree(d):
    ctx = SturmianContext(d)
    text = generate_rote(ctx, 6000)
    for n in range(5):
        x = rote_prefix(ctx, n)
        naming = {w: k for k, w in rote_return_words(ctx, n).as_dict().items()}
        canonical = derived_scan(x, text, naming)
        assert first_appearance_form(canonical) == derived_scan(x, text)
        assert canonical.startswith(rote_derived(ctx, n, min(len(canonical), 100)))


@pytest.mark.parametrize("d", FIXED, ids=str)
def test_occurrence_correspondence(d):
    ctx = SturmianContext(d)
    v = generate_rote(ctx, 1500)
    u = s_map(v)
    for n in range(1, 6):
        x = rote_prefix(ctx, n)
        w = s_map(x)
        if len(w) == 0:
            continue
        ends = set(occurrences(x, v)) | set(occurrences(exchange(x), v))
        assert set(occurrences(w, u)) == {i for i in ends if i + len(w) <= len(u)}
