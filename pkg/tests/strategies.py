from __future__ import annotations

from hypothesis import strategies as st

from circuit_twists.words import Alphabet, Letter, Word


def letters(alphabet: Alphabet):
    return st.builds(Letter, st.sampled_from(alphabet.symbols), st.sampled_from((1, -1)))


def words(alphabet: Alphabet, max_size: int = 12, min_size: int = 0):
    return st.lists(letters(alphabet), min_size=min_size, max_size=max_size).map(
        lambda xs: Word(alphabet, tuple(xs))
    )
