import pytest
from hypothesis import given
from hypothesis import strategies as st

from occlang import (
    Borderedness,
    border_lengths,
    classify_bordered,
    commutes,
    count_occurrences,
    decompose_bordered,
    power_count_params,
    primitive_root,
)
from occlang.errors import (
    EmptyPatternError,
    EmptyWordError,
    InconsistentDecompositionError,
    NotBorderedError,
)
from occlang.words import Alphabet, segment

from helpers import BIN, nonempty_words_upto, scan_count, words_upto


def test_count_occurrences_examples():
    assert count_occurrences("banana", "ana") == 2
    assert count_occurrences("aaaa", "aa") == 3
    assert count_occurrences("abc", "d") == 0
    assert count_occurrences("ab", "abc") == 0


def test_count_occurrences_rejects_empty_pattern():
    with pytest.raises(EmptyPatternError):
        count_occurrences("abc", "")


def test_count_occurrences_matches_position_scan_exhaustively():
    for w in words_upto(BIN, 8):
        for p in nonempty_words_upto(BIN, 3):
            assert count_occurrences(w, p) == scan_count(w, p)


@given(st.text(alphabet="ab", max_size=30), st.text(alphabet="ab", min_size=1, max_size=5))
def test_count_occurrences_matches_position_scan_random(w, p):
    assert count_occurrences(w, p) == scan_count(w, p)


def test_border_lengths_examples():
    assert border_lengths("alfalfa") == [1, 4]
    assert border_lengths("abc") == []
    assert border_lengths("aaaa") == [1, 2, 3]
    with pytest.raises(EmptyWordError):
        border_lengths("")


def test_classify_bordered_examples():
    assert classify_bordered("entanglement", "ent") is Borderedness.DISJOINT
    assert classify_bordered("alfalfa", "alfa") is Borderedness.OVERLAPPING
    assert classify_bordered("ent", "ent") is Borderedness.NOT_BORDERED
    assert classify_bordered("en", "ent") is Borderedness.NOT_BORDERED
    with pytest.raises(EmptyPatternError):
        classify_bordered("abc", "")


def test_border_lengths_agree_with_classification():
    for w in nonempty_words_upto(BIN, 12):
        borders = set(border_lengths(w))
        for b in range(1, len(w)):
            is_border = classify_bordered(w, w[:b]) is not Borderedness.NOT_BORDERED
            assert (b in borders) == is_border


def test_decompose_bordered_examples():
    dec = decompose_bordered("entanglement", "ent")
    assert (dec.u, dec.v, dec.e) == ("ent", "anglem", 0)
    assert dec.border() == "ent" and dec.bordered_word() == "entanglement"

    dec = decompose_bordered("alfalfa", "alfa")
    assert (dec.u, dec.v, dec.e) == ("a", "lf", 1)
    assert ("alf") * 1 + "a" == "alfa"
    assert ("alf") * 2 + "a" == "alfalfa"

    dec = decompose_bordered("abab", "ab")
    assert (dec.u, dec.v, dec.e) == ("ab", "", 0)


def test_decompose_bordered_rejects_unbordered():
    with pytest.raises(NotBorderedError):
        decompose_bordered("abc", "ab")
    with pytest.raises(NotBorderedError):
        decompose_bordered("ent", "ent")


def test_decompose_bordered_reconstructs_exhaustively():
    # every bordered (z, y) with |z| <= 16 over the binary alphabet
    for z in nonempty_words_upto(BIN, 16):
        for b in border_lengths(z):
            dec = decompose_bordered(z, z[:b])
            assert dec.u
            assert dec.border() == z[:b]
            assert dec.bordered_word() == z


def test_power_count_params_examples():
    # counted in (uv)^{e+1} and (uv)^{e+2}
    from occlang import BorderDecomposition

    params = power_count_params(BorderDecomposition("a", "lf", 1), "alfa")
    assert (params.c, params.d) == (1, 1)
    assert (scan_count("alfalf", "alfa"), scan_count("alfalfalf", "alfa")) == (1, 2)

    params = power_count_params(BorderDecomposition("ab", "", 0), "ab")
    assert (params.c, params.d) == (scan_count("ab", "ab"), scan_count("abab", "ab") - 1)
    assert (params.c, params.d) == (1, 1)

    params = power_count_params(BorderDecomposition("a", "a", 0), "a")
    assert (params.c, params.d) == (2, 2)


def test_power_count_params_rejects_mismatched_decomposition():
    from occlang import BorderDecomposition

    with pytest.raises(InconsistentDecompositionError):
        power_count_params(BorderDecomposition("a", "b", 1), "aa")


def test_power_count_linear_law():
    # count of y in (uv)^i is (i-e)d + c - d for i in e+1..e+5
    for z in nonempty_words_upto(BIN, 12):
        for b in border_lengths(z):
            y = z[:b]
            dec = decompose_bordered(z, y)
            params = power_count_params(dec, y)
            assert params.c >= 1 and params.d >= 1
            uv = dec.period_word()
            for i in range(dec.e + 1, dec.e + 6):
                assert count_occurrences(uv * i, y) == (i - dec.e) * params.d + params.c - params.d


def test_primitive_root_examples():
    assert primitive_root("abab") == ("ab", 2)
    assert primitive_root("abc") == ("abc", 1)
    assert primitive_root("aaaa") == ("a", 4)
    with pytest.raises(EmptyWordError):
        primitive_root("")


def test_commutes_examples():
    assert commutes("ab", "abab")
    assert not commutes("ab", "ba")


def test_commutes_iff_same_primitive_root():
    roots = {w: primitive_root(w)[0] for w in nonempty_words_upto(BIN, 6)}
    ws = list(roots)
    for x in ws:
        for y in ws:
            assert commutes(x, y) == (roots[x] == roots[y])


@given(st.text(alphabet="ab", min_size=1, max_size=8), st.integers(1, 5))
def test_primitive_root_reconstructs(w, reps):
    root, k = primitive_root(w * reps)
    assert root * k == w * reps
    assert primitive_root(root) == (root, 1)


def test_segment_is_one_based_inclusive():
    assert segment("abcdef", 2, 4) == "bcd"
    assert segment("abcdef", 1, 6) == "abcdef"
    assert segment("abcdef", 4, 3) == ""


def test_alphabet_basics():
    a = Alphabet("012")
    assert len(a) == 3 and "2" in a and "3" not in a
    assert a.index("1") == 1
    assert list(a.words_of_length(1)) == ["0", "1", "2"]
    with pytest.raises(ValueError):
        Alphabet("aa")
    with pytest.raises(ValueError):
        Alphabet(["ab"])
