import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ngramspell import (
    ErrorKind,
    NgramIndex,
    detect_errors,
    detect_realword_suspects,
    partition,
    tokenize,
)


class TestPartition:
    def test_even_split(self):
        assert [len(r) for r in partition(8, 4)] == [2, 2, 2, 2]

    def test_remainder_goes_to_first_workers(self):
        assert [len(r) for r in partition(7, 3)] == [3, 2, 2]

    def test_more_workers_than_items(self):
        assert [len(r) for r in partition(2, 4)] == [1, 1, 0, 0]

    def test_zero_workers_rejected(self):
        with pytest.raises(ValueError):
            partition(5, 0)

    @given(st.integers(min_value=0, max_value=500), st.integers(min_value=1, max_value=16))
    def test_covers_range_exactly_once(self, n, p):
        ranges = partition(n, p)
        assert len(ranges) == p
        flat = [i for r in ranges for i in r]
        assert flat == list(range(n))
        sizes = [len(r) for r in ranges]
        assert max(sizes) - min(sizes) <= 1
        assert sorted(sizes, reverse=True) == sizes


class TestDetectErrors:
    def test_flags_the_misspelling(self, paper_index):
        toks = tokenize("they also work with plastic modil kits")
        errors = detect_errors(toks, paper_index)
        assert [(e.token_index, e.word) for e in errors] == [(5, "modil")]
        assert errors[0].kind is ErrorKind.NON_WORD

    def test_clean_text_yields_nothing(self, paper_index):
        toks = tokenize("they also work with plastic model kits")
        assert detect_errors(toks, paper_index) == []

    def test_non_checkable_tokens_are_ignored(self, paper_index):
        toks = tokenize("xqzw v2.0 a")
        errors = detect_errors(toks, paper_index)
        assert [(e.token_index, e.word) for e in errors] == [(0, "xqzw")]

    def test_worker_count_does_not_change_output(self, paper_index):
        vocab = list(paper_index.lexicon_words) + ["blorp", "snarf", "qwk"]
        rng = random.Random(13)
        text = " ".join(rng.choice(vocab) for _ in range(2000))
        toks = tokenize(text)
        base = detect_errors(toks, paper_index, p=1)
        for p in (2, 4, 8):
            assert detect_errors(toks, paper_index, p=p) == base

    def test_matches_sequential_membership_oracle(self, paper_index):
        vocab = list(paper_index.lexicon_words) + ["blorp", "snarf"]
        rng = random.Random(99)
        text = " ".join(rng.choice(vocab) for _ in range(500))
        toks = tokenize(text)
        lexicon = {w for w, _ in paper_index.items(1)}
        expected = [
            i for i, t in enumerate(toks) if t.checkable and t.normalized not in lexicon
        ]
        assert [e.token_index for e in detect_errors(toks, paper_index, p=4)] == expected


class TestRealwordSuspects:
    def test_flags_from_after_fill_out_the(self, realword_index):
        toks = tokenize("fill out the from")
        suspects = detect_realword_suspects(toks, realword_index)
        assert [(s.token_index, s.word) for s in suspects] == [(3, "from")]
        assert suspects[0].kind is ErrorKind.REAL_WORD_SUSPECT

    def test_supported_context_is_not_flagged(self, realword_index):
        toks = tokenize("fill out the form")
        assert detect_realword_suspects(toks, realword_index) == []

    def test_min_context_gate(self, realword_index):
        toks = tokenize("out the from")
        assert detect_realword_suspects(toks, realword_index, min_context=5) == []

    def test_no_flag_without_improving_candidate(self):
        ix = NgramIndex(
            {
                1: {"green": 5, "tea": 5, "leaf": 5, "rock": 5},
                2: {"green tea": 4},
            }
        )
        toks = tokenize("green rock")
        assert detect_realword_suspects(toks, ix) == []

    def test_never_overlaps_non_word_errors(self, realword_index):
        toks = tokenize("fill out the from qqq")
        non_word = {e.token_index for e in detect_errors(toks, realword_index)}
        suspects = {e.token_index for e in detect_realword_suspects(toks, realword_index)}
        assert not non_word & suspects

    def test_worker_count_does_not_change_output(self, realword_index):
        toks = tokenize("choose from the menu . fill out the from . fill out the form")
        base = detect_realword_suspects(toks, realword_index, p=1)
        for p in (2, 4, 8):
            assert detect_realword_suspects(toks, realword_index, p=p) == base
