"""
Word problem for the affine Artin group of type Ã(n-1).

The generators ``s1 .. sn`` are realised inside the type-B Artin group on ``n`` vertices:
``s_i`` for ``i < n`` maps to itself and ``s_n`` maps to ``δ s(n-1) δ^-1`` with
``δ = t s1 ... s(n-1)``. This embedding is injective, so equality of affine words is
decided by type-B normal forms. Its image is the kernel of the ``t``-degree map.

A second, independent route realises type-B words as braids on ``n+1`` strands with
strand 1 as a pole (``t -> σ1^2``, ``s_i -> σ(i+1)``) and compares them in type A.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import garside
from .errors import AlphabetError
from .words import Alphabet, Word, artin_b_alphabet, s_alphabet, substitute


def affine_alphabet(n: int) -> Alphabet:
    return s_alphabet(n)


@dataclass(frozen=True)
class AffineWord:
    n: int
    word: Word

    def __post_init__(self):
        if self.n < 3:
            raise AlphabetError(f"affine words need n >= 3 circuit curves, got {self.n}")
        if self.word.alphabet != affine_alphabet(self.n):
            raise AlphabetError(f"affine word for n={self.n} must use {affine_alphabet(self.n).symbols}")

    @classmethod
    def parse(cls, n: int, text: str) -> AffineWord:
        return cls(n, affine_alphabet(n).parse(text))


def delta_word(n: int) -> Word:
    """``δ = t s1 ... s(n-1)`` over the type-B alphabet."""
    b = artin_b_alphabet(n)
    return b.word(*b.symbols)


def embedding_images(n: int) -> dict[str, Word]:
    b = artin_b_alphabet(n)
    d = delta_word(n)
    images = {f"s{i}": b.word(f"s{i}") for i in range(1, n)}
    images[f"s{n}"] = d * b.word(f"s{n - 1}") * d.inverse()
    return images


def _as_affine(w: AffineWord | Word) -> AffineWord:
    return w if isinstance(w, AffineWord) else AffineWord(w.alphabet.arity, w)


def to_b_word(w: AffineWord | Word) -> Word:
    w = _as_affine(w)
    return substitute(w.word, embedding_images(w.n), artin_b_alphabet(w.n))


def t_degree(w: Word) -> int:
    return sum(sign for g, sign in w.letters if g == "t")


def affine_equal(w1: AffineWord | Word, w2: AffineWord | Word) -> bool:
    w1, w2 = _as_affine(w1), _as_affine(w2)
    if w1.n != w2.n:
        raise AlphabetError(f"rank mismatch: {w1.n} vs {w2.n}")
    return garside.equal("B", w1.n, to_b_word(w1), to_b_word(w2))


def affine_normal_form(w: AffineWord | Word) -> garside.GarsideNormalForm:
    """Type-B normal form of the image; a complete invariant of the affine element."""
    w = _as_affine(w)
    return garside.normal_form("B", w.n, to_b_word(w))


def affine_is_trivial(w: AffineWord | Word) -> bool:
    return affine_normal_form(w).is_identity


def strand_images(n: int) -> dict[str, Word]:
    a = s_alphabet(n)
    images = {"t": a.word("s1", "s1")}
    images.update({f"s{i}": a.word(f"s{i + 1}") for i in range(1, n)})
    return images


def to_strand_word(n: int, w: Word) -> Word:
    """Braid on ``n+1`` strands (type A alphabet ``s1 .. sn``) for a type-B word."""
    if w.alphabet != artin_b_alphabet(n):
        raise AlphabetError(f"expected a word over {artin_b_alphabet(n).symbols}")
    return substitute(w, strand_images(n), s_alphabet(n))


def strand_oracle_equal(n: int, w1: Word, w2: Word) -> bool:
    if n < 2:
        raise AlphabetError("the strand model needs n >= 2")
    return garside.equal("A", n + 1, to_strand_word(n, w1), to_strand_word(n, w2))
