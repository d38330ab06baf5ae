"""
Word problem for the spherical Artin groups of types A, B and D.

Every element is brought into left-greedy normal form ``Δ^p x1 ... xm`` where the
simple factors ``xi`` are elements of the Coxeter group, modelled as (signed)
permutations in window notation ``w = (w(1), ..., w(n))``:

- type A, ``n`` strands: permutations of ``1..n``; ``s_i`` is the transposition ``(i i+1)``.
- type B, rank ``n``: signed permutations; ``t`` flips the sign at position 1 and
  ``s_i`` swaps positions ``i, i+1``.
- type D, rank ``n``: signed permutations with an even number of sign changes; the fork
  generator ``s1`` sends ``(1, 2)`` to ``(-2, -1)``, and ``s_k = (k-1 k)`` for ``k >= 2``.

Products are compositions, ``(xy)(i) = x(y(i))``, so right multiplication by a
generator acts on positions and left multiplication acts on values. A simple element
``x`` corresponds to the positive braid lifting a reduced word of ``x``; ``x y`` is again
simple iff the lengths add.

Per-model tables (generators, Δ, descent caches) are filled lazily and only ever grow,
so concurrent readers see consistent values.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from .diagrams import DiagramKind, build_diagram
from .errors import AlphabetError, GarsideError
from .words import Alphabet, Word, artin_b_alphabet, s_alphabet

Perm = tuple[int, ...]
TYPES = ("A", "B", "D")


def _compose(x: Perm, y: Perm) -> Perm:
    return tuple(x[v - 1] if v > 0 else -x[-v - 1] for v in y)


def _inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w, 1):
        out[abs(v) - 1] = i if v > 0 else -i
    return tuple(out)


def _length_a(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def _length_b(w: Perm) -> int:
    n = len(w)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    nsp = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
    return inv + nsp + sum(1 for v in w if v < 0)


def _length_d(w: Perm) -> int:
    n = len(w)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    nsp = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
    return inv + nsp


def positive_root_count(type_: str, n: int) -> int:
    return {"A": n * (n - 1) // 2, "B": n * n, "D": n * (n - 1)}[type_]


def diagram_kind(type_: str, n: int) -> DiagramKind:
    """Diagram presenting the group; type A on ``n`` strands is the diagram A(n-1)."""
    return DiagramKind(type_, n - 1 if type_ == "A" else n)


class CoxeterModel:
    """Permutation model of one finite Coxeter group together with its Garside data."""

    def __init__(self, type_: str, n: int):
        if type_ not in TYPES:
            raise GarsideError(f"no Garside model for type {type_!r}")
        if (type_ == "A" and n < 2) or (type_ == "B" and n < 2) or (type_ == "D" and n < 3):
            raise GarsideError(f"type {type_} needs a larger rank than {n}")
        self.type = type_
        self.n = n
        self.identity: Perm = tuple(range(1, n + 1))
        if type_ == "A":
            self.alphabet: Alphabet = s_alphabet(n - 1)
            gens = [self._transposition(i) for i in range(1, n)]
            self._length = _length_a
            tests = [("swap", i - 1) for i in range(1, n)]
        elif type_ == "B":
            self.alphabet = artin_b_alphabet(n)
            flip = (-1,) + self.identity[1:]
            gens = [flip] + [self._transposition(i) for i in range(1, n)]
            self._length = _length_b
            tests = [("neg", 0)] + [("swap", i - 1) for i in range(1, n)]
        else:
            self.alphabet = s_alphabet(n)
            fork = (-2, -1) + self.identity[2:]
            gens = [fork] + [self._transposition(i) for i in range(1, n)]
            self._length = _length_d
            tests = [("fork", 0)] + [("swap", i - 1) for i in range(1, n)]
        self.labels: tuple[str, ...] = self.alphabet.symbols
        self.gens: tuple[Perm, ...] = tuple(gens)
        self.index = {g: i for i, g in enumerate(self.labels)}
        self._tests = tests
        self._check_presentation()
        self.delta = self._greedy_ascent()
        self.delta_length = self._length(self.delta)
        if self.delta_length != positive_root_count(type_, n):
            raise GarsideError(
                f"type {type_}{n}: longest element has length {self.delta_length}, "
                f"expected {positive_root_count(type_, n)}"
            )
        self.complements = tuple(_compose(self.delta, g) for g in self.gens)
        self._rdesc: dict[Perm, int] = {}
        self._tau: dict[Perm, Perm] = {}
        self._pairs: dict[tuple[Perm, Perm], tuple[Perm, Perm]] = {}

    def _transposition(self, i: int) -> Perm:
        w = list(self.identity)
        w[i - 1], w[i] = w[i], w[i - 1]
        return tuple(w)

    def _check_presentation(self) -> None:
        d = build_diagram(diagram_kind(self.type, self.n))
        assert d.labels == self.labels
        for i, s in enumerate(self.labels):
            if self.gens[i] == self.identity or _compose(self.gens[i], self.gens[i]) != self.identity:
                raise GarsideError(f"generator {s} is not an involution")
            if self._length(self.gens[i]) != 1:
                raise GarsideError(f"generator {s} does not have length 1")
            for j in range(i + 1, len(self.labels)):
                order = self._order(_compose(self.gens[i], self.gens[j]))
                if order != d.weight(s, self.labels[j]):
                    raise GarsideError(
                        f"type {self.type}{self.n}: {s}{self.labels[j]} has order {order}, "
                        f"diagram weight is {d.weight(s, self.labels[j])}"
                    )

    def _order(self, w: Perm, bound: int = 64) -> int:
        x, k = w, 1
        while x != self.identity:
            x, k = _compose(x, w), k + 1
            if k > bound:
                return bound
        return k

    def _greedy_ascent(self) -> Perm:
        w = self.identity
        grown = True
        while grown:
            grown = False
            for g in self.gens:
                if self._length(_compose(w, g)) > self._length(w):
                    w = _compose(w, g)
                    grown = True
        return w

    # --- basic arithmetic -------------------------------------------------

    def length(self, w: Perm) -> int:
        return self._length(w)

    def mul(self, x: Perm, y: Perm) -> Perm:
        return _compose(x, y)

    def inverse(self, w: Perm) -> Perm:
        return _inverse(w)

    def is_element(self, w: Sequence[int]) -> bool:
        if sorted(abs(v) for v in w) != list(self.identity):
            return False
        if self.type == "A":
            return all(v > 0 for v in w)
        if self.type == "D":
            return sum(1 for v in w if v < 0) % 2 == 0
        return True

    def right_descents(self, w: Perm) -> int:
        """Bitmask of generators ``s`` with ``l(ws) < l(w)``."""
        mask = self._rdesc.get(w)
        if mask is None:
            mask = 0
            for i, (kind, j) in enumerate(self._tests):
                if kind == "swap":
                    hit = w[j] > w[j + 1]
                elif kind == "neg":
                    hit = w[0] < 0
                else:
                    hit = w[0] + w[1] < 0
                if hit:
                    mask |= 1 << i
            self._rdesc[w] = mask
        return mask

    def left_descents(self, w: Perm) -> int:
        """Bitmask of generators ``s`` with ``l(sw) < l(w)``."""
        return self.right_descents(_inverse(w))

    def tau(self, w: Perm) -> Perm:
        """Conjugation by the Garside element, ``Δ^-1 w Δ``."""
        out = self._tau.get(w)
        if out is None:
            out = _compose(_inverse(self.delta), _compose(w, self.delta))
            self._tau[w] = out
        return out

    def left_weight(self, a: Perm, b: Perm) -> tuple[Perm, Perm]:
        """Move generators from the front of ``b`` to the end of ``a`` until the pair is left-weighted."""
        key = (a, b)
        out = self._pairs.get(key)
        if out is None:
            while True:
                m = self.left_descents(b) & ~self.right_descents(a)
                if not m:
                    break
                g = self.gens[(m & -m).bit_length() - 1]
                a, b = _compose(a, g), _compose(g, b)
            out = (a, b)
            self._pairs[key] = out
        return out

    def is_left_weighted(self, a: Perm, b: Perm) -> bool:
        return self.left_descents(b) & ~self.right_descents(a) == 0


@functools.cache
def model(type_: str, n: int) -> CoxeterModel:
    return CoxeterModel(type_, n)


@dataclass(frozen=True)
class SimpleElement:
    type: str
    n: int
    perm: Perm

    def __post_init__(self):
        if not model(self.type, self.n).is_element(self.perm):
            raise GarsideError(f"{self.perm} is not an element of the type {self.type}{self.n} Coxeter group")

    @property
    def length(self) -> int:
        return model(self.type, self.n).length(self.perm)

    def __mul__(self, other: SimpleElement) -> SimpleElement:
        """Coxeter-group product (the braid product only when the lengths add)."""
        return SimpleElement(self.type, self.n, _compose(self.perm, other.perm))

    def to_json(self) -> list[int]:
        return list(self.perm)


@dataclass(frozen=True)
class GarsideNormalForm:
    type: str
    n: int
    p: int
    factors: tuple[SimpleElement, ...]

    @property
    def is_identity(self) -> bool:
        return self.p == 0 and not self.factors

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_json(self) -> dict:
        return {"p": self.p, "factors": [f.to_json() for f in self.factors]}

    def __str__(self) -> str:
        body = " ".join(str(list(f.perm)) for f in self.factors)
        return f"Δ^{self.p}" + (f" {body}" if body else "")


def generator_simple(type_: str, n: int, label: str) -> SimpleElement:
    m = model(type_, n)
    if label not in m.index:
        raise AlphabetError(f"unknown generator {label!r} for type {type_}{n}; expected one of {m.labels}")
    return SimpleElement(type_, n, m.gens[m.index[label]])


def delta(type_: str, n: int) -> SimpleElement:
    return SimpleElement(type_, n, model(type_, n).delta)


def _multiply_simple(m: CoxeterModel, factors: list[Perm], y: Perm) -> None:
    """Right-multiply a left-weighted factor list by the simple ``y``, in place."""
    factors.append(y)
    i = len(factors) - 2
    while i >= 0:
        a, b = factors[i], factors[i + 1]
        a2, b2 = m.left_weight(a, b)
        if a2 == a:
            break
        factors[i], factors[i + 1] = a2, b2
        i -= 1
    if factors[-1] == m.identity:
        factors.pop()


def _is_normal(m: CoxeterModel, factors: Sequence[Perm]) -> bool:
    if any(f == m.identity or f == m.delta for f in factors):
        return False
    return all(m.is_left_weighted(a, b) for a, b in zip(factors, factors[1:]))


def _finish(m: CoxeterModel, p: int, factors: list[Perm]) -> tuple[int, list[Perm]]:
    """Absorb leading Δ's, drop identities, and sweep to a fixed point as a safeguard."""
    limit = (len(factors) + 1) ** 2 + 1
    passes = 0
    while True:
        while factors and factors[0] == m.delta:
            factors.pop(0)
            p += 1
        factors = [f for f in factors if f != m.identity]
        if _is_normal(m, factors):
            return p, factors
        passes += 1
        if passes > limit:
            raise GarsideError(f"normalisation did not converge within {limit} passes")
        for i in range(len(factors) - 1):
            factors[i], factors[i + 1] = m.left_weight(factors[i], factors[i + 1])


def _check_alphabet(m: CoxeterModel, w: Word) -> None:
    if w.alphabet != m.alphabet:
        raise AlphabetError(
            f"word over {w.alphabet.symbols} cannot be read in type {m.type}{m.n} "
            f"(alphabet {m.alphabet.symbols})"
        )


def normal_form(type_: str, n: int, w: Word) -> GarsideNormalForm:
    """Left-greedy normal form of the element represented by ``w``.

    A negative letter ``s^-1`` is rewritten as ``Δ^-1 y`` with ``y s = Δ``; the Δ^-1 is
    pushed to the front, conjugating the factors already collected by ``τ``.
    """
    m = model(type_, n)
    _check_alphabet(m, w)
    p = 0
    factors: list[Perm] = []
    for g, sign in w.letters:
        i = m.index[g]
        if sign == 1:
            _multiply_simple(m, factors, m.gens[i])
        else:
            p -= 1
            factors = [m.tau(f) for f in factors]
            _multiply_simple(m, factors, m.complements[i])
    p, factors = _finish(m, p, factors)
    return GarsideNormalForm(type_, n, p, tuple(SimpleElement(type_, n, f) for f in factors))


def equal(type_: str, n: int, w1: Word, w2: Word) -> bool:
    if w1.alphabet != w2.alphabet:
        raise AlphabetError("cannot compare words over different alphabets")
    return normal_form(type_, n, w1) == normal_form(type_, n, w2)


def is_trivial(type_: str, n: int, w: Word) -> bool:
    return normal_form(type_, n, w).is_identity


def delta_word(type_: str, n: int) -> Word:
    """A positive word for Δ, read off a reduced expression of the longest element."""
    m = model(type_, n)
    letters: list[str] = []
    w = m.delta
    while w != m.identity:
        i = (m.right_descents(w) & -m.right_descents(w)).bit_length() - 1
        letters.append(m.labels[i])
        w = _compose(w, m.gens[i])
    return m.alphabet.word(*reversed(letters))
