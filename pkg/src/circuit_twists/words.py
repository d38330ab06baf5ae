"""
Free-group words over named generator alphabets.

A :class:`Word` is an immutable sequence of signed letters, all taken from a single
declared :class:`Alphabet`. Three alphabet families are used throughout the package:

- the twist alphabet ``T1 .. Tn`` (Dehn twists about the curves of a circuit),
- the type-B Artin alphabet ``t, s1 .. s(n-1)``,
- the plain alphabet ``s1 .. sm`` (types A, D and affine A).

Text syntax: whitespace separated tokens such as ``T3 T2^-1 s1 t``; an optional
integer exponent ``^k`` expands to ``|k|`` copies of the letter or its inverse.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import AlphabetError, SubstitutionError

_TOKEN = re.compile(r"^(t|s\d+|T\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Alphabet:
    """A finite ordered set of generator symbols."""

    name: str
    symbols: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f"duplicate symbols in alphabet {self.name}")

    @property
    def arity(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def index(self, symbol: str) -> int:
        return self.symbols.index(symbol)

    def word(self, *items: str | tuple[str, int]) -> Word:
        """Build a word from symbols (sign +1) or ``(symbol, sign)`` pairs."""
        letters = [Letter(x, 1) if isinstance(x, str) else Letter(*x) for x in items]
        return Word(self, tuple(letters))

    def parse(self, text: str) -> Word:
        return parse_word(text, self)

    def identity(self) -> Word:
        return Word(self, ())


def twist_alphabet(n: int) -> Alphabet:
    return Alphabet("T", tuple(f"T{i}" for i in range(1, n + 1)))


def artin_b_alphabet(n: int) -> Alphabet:
    """Generators ``t, s1 .. s(n-1)`` of the type-B Artin group on ``n`` vertices."""
    return Alphabet("B", ("t",) + tuple(f"s{i}" for i in range(1, n)))


def s_alphabet(m: int) -> Alphabet:
    return Alphabet("s", tuple(f"s{i}" for i in range(1, m + 1)))


class Letter(NamedTuple):
    generator: str
    sign: int

    def inverse(self) -> Letter:
        return Letter(self.generator, -self.sign)

    def __str__(self) -> str:
        return self.generator if self.sign == 1 else f"{self.generator}^-1"


@dataclass(frozen=True)
class Word:
    """An immutable word; not necessarily freely reduced."""

    alphabet: Alphabet
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(Letter(*x) for x in self.letters))
        for g, sign in self.letters:
            if g not in self.alphabet:
                raise AlphabetError(f"generator {g!r} is not in alphabet {self.alphabet.name}{self.alphabet.symbols}")
            if sign not in (1, -1):
                raise AlphabetError(f"letter sign must be +1 or -1, got {sign!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.alphabet, self.letters[item])
        return self.letters[item]

    def __mul__(self, other: Word) -> Word:
        """Concatenation (no reduction)."""
        if not isinstance(other, Word):
            return NotImplemented
        _check_same_alphabet(self, other)
        return Word(self.alphabet, self.letters + other.letters)

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        return Word(self.alphabet, base.letters * abs(k))

    def inverse(self) -> Word:
        return Word(self.alphabet, tuple(x.inverse() for x in reversed(self.letters)))

    @property
    def is_reduced(self) -> bool:
        return all(a != b.inverse() for a, b in zip(self.letters, self.letters[1:]))

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        _check_same_alphabet(self.lhs, self.rhs)

    @property
    def alphabet(self) -> Alphabet:
        return self.lhs.alphabet

    def relator(self) -> Word:
        """The freely reduced word ``lhs * rhs^-1``, trivial exactly when the relation holds."""
        return reduce(self.lhs * self.rhs.inverse())

    def __str__(self) -> str:
        return f"{self.lhs or '1'} = {self.rhs or '1'}"


def _check_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetError(f"cannot mix alphabets {u.alphabet.symbols} and {v.alphabet.symbols}")


def parse_word(text: str, alphabet: Alphabet) -> Word:
    letters: list[Letter] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise AlphabetError(f"cannot parse token {token!r}")
        k = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([Letter(m.group(1), 1 if k > 0 else -1)] * abs(k))
    return Word(alphabet, tuple(letters))


def reduce(w: Word) -> Word:
    """Freely reduce ``w``."""
    stack: list[Letter] = []
    for x in w.letters:
        if stack and stack[-1] == x.inverse():
            stack.pop()
        else:
            stack.append(x)
    return Word(w.alphabet, tuple(stack))


def cyclic_reduce(w: Word) -> Word:
    """Shortest word conjugate to ``w`` in the free group, obtained by stripping inverse end pairs."""
    letters = reduce(w).letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == letters[j - 1].inverse():
        i += 1
        j -= 1
    return Word(w.alphabet, letters[i:j])


@dataclass(frozen=True)
class ExponentVector:
    counts: Mapping[str, int]
    total: int


def exponent_vector(w: Word) -> ExponentVector:
    """Signed letter count per generator of the alphabet, plus the overall sum."""
    c: Counter[str] = Counter()
    for g, sign in w.letters:
        c[g] += sign
    counts = {g: c[g] for g in w.alphabet.symbols if g in c}
    return ExponentVector(counts, sum(counts.values()))


def total_exponent(w: Word) -> int:
    return sum(sign for _, sign in w.letters)


def is_homogeneous(r: Relation) -> bool:
    return total_exponent(r.lhs) == total_exponent(r.rhs)


def substitute(w: Word, images: Mapping[str, Word], target: Alphabet | None = None) -> Word:
    """Image of ``w`` under the homomorphism ``g -> images[g]``, freely reduced.

    ``target`` fixes the codomain alphabet; it defaults to the alphabet of the images
    and must be given when ``images`` is empty.
    """
    if target is None:
        alphabets = {v.alphabet for v in images.values()}
        if len(alphabets) != 1:
            raise AlphabetError("images must share one alphabet; pass target= explicitly")
        (target,) = alphabets
    out: list[Letter] = []
    for g, sign in w.letters:
        try:
            img = images[g]
        except KeyError:
            raise SubstitutionError(g) from None
        if img.alphabet != target:
            raise AlphabetError(f"image of {g} is not over alphabet {target.symbols}")
        out.extend(img.letters if sign == 1 else img.inverse().letters)
    return reduce(Word(target, tuple(out)))


def relabel(w: Word, mapping: Mapping[str, str], target: Alphabet) -> Word:
    """Rename generators letter by letter (a substitution by single letters)."""
    return substitute(w, {g: target.word(mapping[g]) for g in w.alphabet.symbols if g in mapping}, target)


def product(words: Iterable[Word], alphabet: Alphabet) -> Word:
    letters: list[Letter] = []
    for u in words:
        if u.alphabet != alphabet:
            raise AlphabetError(f"cannot mix alphabets {u.alphabet.symbols} and {alphabet.symbols}")
        letters.extend(u.letters)
    return Word(alphabet, tuple(letters))


def word_from_symbols(alphabet: Alphabet, symbols: Sequence[str], sign: int = 1) -> Word:
    return Word(alphabet, tuple(Letter(g, sign) for g in symbols))


def random_word(alphabet: Alphabet, length: int, rng) -> Word:
    """Uniform random word (not reduced) of the given length; ``rng`` is a ``random.Random``."""
    return Word(alphabet, tuple(Letter(rng.choice(alphabet.symbols), rng.choice((1, -1))) for _ in range(length)))
