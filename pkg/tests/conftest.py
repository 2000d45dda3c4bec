import pytest

from ngramspell import NgramIndex

SENTENCE_COUNTS = {
    "they": 30,
    "also": 40,
    "work": 35,
    "with": 60,
    "plastic": 12,
    "kits": 8,
}

# One lexicon entry per word of the four posting-list walkthroughs, plus a
# frequency so ties rank deterministically.
CANDIDATE_COUNTS = {
    "mold": 4,
    "modal": 3,
    "model": 18,
    "mom": 9,
    "mother": 14,
    "mole": 2,
    "mode": 7,
    "rode": 3,
    "triode": 1,
    "encode": 2,
    "lading": 1,
    "ladino": 1,
    "radian": 2,
    "radiant": 2,
    "din": 1,
    "parading": 1,
    "rail": 3,
    "peril": 1,
    "derail": 1,
    "aril": 1,
    "bail": 2,
    "broil": 1,
}


@pytest.fixture(scope="session")
def paper_index() -> NgramIndex:
    """Fixture index for the running 'modil' example sentence."""
    return NgramIndex(
        {
            1: {**SENTENCE_COUNTS, **CANDIDATE_COUNTS},
            2: {
                "they also": 3,
                "also work": 5,
                "work with": 6,
                "with plastic": 2,
                "plastic model": 6,
            },
            3: {"also work with": 3, "work with plastic": 2},
            4: {"work with plastic model": 2},
            5: {
                "also work with plastic model": 17,
                "also work with plastic modal": 2,
            },
        }
    )


@pytest.fixture(scope="session")
def realword_index() -> NgramIndex:
    """Fixture index where 'fill out the from' is a correctable real-word error."""
    return NgramIndex(
        {
            1: {
                "fill": 20,
                "out": 30,
                "the": 90,
                "form": 12,
                "from": 40,
                "menu": 5,
                "choose": 4,
                "frog": 2,
                "fort": 2,
            },
            2: {
                "fill out": 12,
                "out the": 11,
                "the form": 9,
                "choose from": 4,
                "the menu": 5,
            },
            3: {"out the form": 9, "from the menu": 4},
            4: {"fill out the form": 9},
        }
    )
