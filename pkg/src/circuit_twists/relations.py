"""
Named relations between Dehn twists about the curves of a circuit.

All relations are over the twist alphabet ``T1 .. Tn``. Helpers translate them into
the Artin groups where they can be decided: the affine group (``T_i -> s_i``) and the
type-D group via the substitution realising the quotient by the cycle relation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import garside
from .errors import AlphabetError
from .words import Relation, Word, s_alphabet, substitute, total_exponent, twist_alphabet


class Orientation(str, enum.Enum):
    CCW = "ccw"
    CW = "cw"

    @property
    def symbol(self) -> str:
        return "↺" if self is Orientation.CCW else "↻"

    def reversed(self) -> Orientation:
        return Orientation.CW if self is Orientation.CCW else Orientation.CCW

    @classmethod
    def parse(cls, value: str | Orientation) -> Orientation:
        if isinstance(value, Orientation):
            return value
        aliases = {"ccw": cls.CCW, "↺": cls.CCW, "cw": cls.CW, "↻": cls.CW}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"orientation must be 'ccw' or 'cw', got {value!r}") from None


def _need_circuit(n: int) -> None:
    if n < 3:
        raise AlphabetError(f"a circuit needs n >= 3 curves, got {n}")


def _twists(n: int, indices) -> Word:
    return twist_alphabet(n).word(*[f"T{i}" for i in indices])


def _down(a: int, b: int) -> range:
    return range(a, b - 1, -1)


def cycle_relation(n: int, orientation: Orientation | str = Orientation.CCW) -> Relation:
    """``Tn..T1 Tn..T3 = T(n-1)..T1 Tn..T2`` (ccw) or ``T1..Tn T1..T(n-2) = T2..Tn T1..T(n-1)`` (cw)."""
    _need_circuit(n)
    if Orientation.parse(orientation) is Orientation.CCW:
        lhs = _twists(n, [*_down(n, 1), *_down(n, 3)])
        rhs = _twists(n, [*_down(n - 1, 1), *_down(n, 2)])
    else:
        lhs = _twists(n, [*range(1, n + 1), *range(1, n - 1)])
        rhs = _twists(n, [*range(2, n + 1), *range(1, n)])
    return Relation(lhs, rhs)


def commutation_form(n: int) -> Relation:
    """``g T1 = T1 g`` with ``g = Tn..T2 T3^-1..Tn^-1``."""
    _need_circuit(n)
    g = _twists(n, _down(n, 2)) * _twists(n, _down(n, 3)).inverse()
    t1 = _twists(n, [1])
    return Relation(g * t1, t1 * g)


def circuit_relations(n: int) -> list[Relation]:
    """Braid relations for cyclically adjacent twists, commutation for the rest."""
    _need_circuit(n)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, b = _twists(n, [i]), _twists(n, [j])
            if j - i in (1, n - 1):
                out.append(Relation(a * b * a, b * a * b))
            else:
                out.append(Relation(a * b, b * a))
    return out


def reverse_labels(w: Word) -> Word:
    """Renumber the circuit backwards, ``T_i -> T_(n+1-i)``."""
    n = w.alphabet.arity
    alphabet = twist_alphabet(n)
    return substitute(w, {f"T{i}": alphabet.word(f"T{n + 1 - i}") for i in range(1, n + 1)}, alphabet)


def reverse_relation(r: Relation) -> Relation:
    return Relation(reverse_labels(r.lhs), reverse_labels(r.rhs))


def as_affine(w: Word) -> Word:
    """Read a twist word in the affine Artin group, ``T_i -> s_i``."""
    n = w.alphabet.arity
    s = s_alphabet(n)
    return substitute(w, {f"T{i}": s.word(f"s{i}") for i in range(1, n + 1)}, s)


def dn_substitution(n: int) -> dict[str, Word]:
    """Images of the twists in the type-D Artin group of rank ``n``.

    ``T1 -> (sn..s3) s1 (sn..s3)^-1`` and ``T_i -> s_i`` for ``i >= 2``; ``s1, s2`` are the
    fork generators and ``s3 .. sn`` the tail.
    """
    _need_circuit(n)
    s = s_alphabet(n)
    h = s.word(*[f"s{i}" for i in _down(n, 3)])
    images = {"T1": h * s.word("s1") * h.inverse()}
    images.update({f"T{i}": s.word(f"s{i}") for i in range(2, n + 1)})
    return images


def to_dn_word(w: Word) -> Word:
    n = w.alphabet.arity
    return substitute(w, dn_substitution(n), s_alphabet(n))


def holds_in_dn(r: Relation) -> bool:
    """Whether the twist relation holds in the type-D quotient, decided by Garside normal forms."""
    n = r.alphabet.arity
    return garside.equal("D", n, to_dn_word(r.lhs), to_dn_word(r.rhs))


def chain_full_twist_check(n: int) -> bool:
    """``(σ1 ... σ(n-1))^n = Δ^2`` in the braid group on ``n`` strands."""
    if not 3 <= n <= 8:
        raise ValueError(f"full-twist check is defined for 3 <= n <= 8, got {n}")
    a = s_alphabet(n - 1)
    w = a.word(*a.symbols) ** n
    nf = garside.normal_form("A", n, w)
    return nf.p == 2 and not nf.factors


def odd_closed_relation(n: int) -> Relation:
    """``(T(n-1)..T1)^(2n) = 1``."""
    _need_circuit(n)
    return Relation(_twists(n, _down(n - 1, 1)) ** (2 * n), twist_alphabet(n).identity())


def not_artin6_relation(n: int) -> Relation:
    """``(T(n-1)..T3)^(n-2) = T1 T_β`` with ``T_β = f T1 f^-1`` and ``f = Tn..T3 T3..Tn``."""
    _need_circuit(n)
    f = _twists(n, [*_down(n, 3), *range(3, n + 1)])
    t1 = _twists(n, [1])
    return Relation(_twists(n, _down(n - 1, 3)) ** (n - 2), t1 * f * t1 * f.inverse())


@dataclass(frozen=True)
class InhomogeneityReport:
    total_lhs: int
    total_rhs: int

    @property
    def inhomogeneous(self) -> bool:
        return self.total_lhs != self.total_rhs

    def to_json(self) -> dict:
        return {"total_lhs": self.total_lhs, "total_rhs": self.total_rhs, "inhomogeneous": self.inhomogeneous}


def inhomogeneity_report(r: Relation) -> InhomogeneityReport:
    return InhomogeneityReport(total_exponent(r.lhs), total_exponent(r.rhs))


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows} is not 1")

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, o: SL2Matrix) -> SL2Matrix:
        return SL2Matrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __pow__(self, k: int) -> SL2Matrix:
        out = SL2Matrix(1, 0, 0, 1)
        for _ in range(k):
            out = out @ self
        return out


TORUS_T1 = SL2Matrix(1, 1, 0, 1)
TORUS_T2 = SL2Matrix(1, 0, -1, 1)


def sl2z_check() -> bool:
    """Twists about meridian and longitude of the torus: braid relation and ``(T1 T2)`` of order 6."""
    identity = SL2Matrix(1, 0, 0, 1)
    t1, t2 = TORUS_T1, TORUS_T2
    braid = t1 @ t2 @ t1 == t2 @ t1 @ t2
    c = t1 @ t2
    order_six = c ** 6 == identity and all(c ** k != identity for k in range(1, 6))
    return braid and order_six
