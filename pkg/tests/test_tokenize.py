import string

from hypothesis import given
from hypothesis import strategies as st

from ngramspell import context_window, tokenize


def test_plain_sentence_is_fully_checkable():
    toks = tokenize("they also work with plastic modil kits")
    assert len(toks) == 7
    assert [t.normalized for t in toks] == [
        "they",
        "also",
        "work",
        "with",
        "plastic",
        "modil",
        "kits",
    ]
    assert all(t.checkable for t in toks)


def test_trailing_punctuation_stays_in_surface_only():
    toks = tokenize("fill out the from.")
    assert len(toks) == 4
    last = toks[3]
    assert last.surface == "from."
    assert last.normalized == "from"
    assert last.checkable
    assert last.ends_sentence


def test_digits_and_single_letters_are_not_checkable():
    toks = tokenize("v2.0 x")
    assert [t.surface for t in toks] == ["v2.0", "x"]
    assert toks[0].normalized == ""
    assert not toks[0].checkable
    assert toks[1].normalized == "x"
    assert not toks[1].checkable


def test_hyphenated_words_split():
    toks = tokenize("state-of-the-art")
    assert [t.surface for t in toks] == ["state", "of", "the", "art"]
    assert toks.reconstruct() == "state-of-the-art"


def test_surrounding_punctuation_is_stripped():
    (tok,) = tokenize("'hello,'").tokens
    assert tok.normalized == "hello"
    assert tok.checkable


def test_interior_apostrophe_blocks_checking():
    (tok,) = tokenize("don't").tokens
    assert tok.normalized == ""
    assert not tok.checkable


def test_casefold_is_unicode_aware():
    (tok,) = tokenize("Straße").tokens
    assert tok.normalized == "strasse"
    assert tok.checkable


def test_sentence_end_detection():
    toks = tokenize('one. two!) three" four')
    assert [t.ends_sentence for t in toks] == [True, True, False, False]


def test_empty_and_whitespace_only():
    assert len(tokenize("")) == 0
    assert len(tokenize("  \n\t ")) == 0
    assert tokenize("  \n").reconstruct() == "  \n"


@given(st.text(alphabet=string.printable + "äöüßéñ—", max_size=200))
def test_reconstruction_is_lossless(text):
    assert tokenize(text).reconstruct() == text


@given(st.text(alphabet=string.printable, max_size=200))
def test_spans_strictly_increase(text):
    toks = tokenize(text)
    last_end = 0
    for i, tok in enumerate(toks):
        start, end = tok.span
        assert tok.index == i
        assert start >= last_end
        assert end > start
        assert text[start:end] == tok.surface
        cs, ce = tok.core_span
        assert start <= cs <= ce <= end
        last_end = end


@given(st.lists(st.text(alphabet=string.ascii_lowercase, min_size=2, max_size=8), min_size=1, max_size=20))
def test_idempotent_on_normalized_join(words):
    joined = " ".join(words)
    once = [t.normalized for t in tokenize(joined)]
    assert once == words
    again = [t.normalized for t in tokenize(" ".join(once))]
    assert again == once


def test_context_window_basic():
    toks = tokenize("they also work with plastic modil kits")
    assert context_window(toks, 5) == ("also", "work", "with", "plastic")
    assert context_window(toks, 0) == ()
    assert context_window(toks, 2) == ("they", "also")


def test_context_window_stops_at_sentence_boundary():
    toks = tokenize("they also. work with plastic modil kits")
    assert context_window(toks, 5) == ("work", "with", "plastic")


def test_context_window_stops_at_non_checkable_tokens():
    toks = tokenize("version 2 of the modil kit")
    assert context_window(toks, 4) == ("of", "the")
