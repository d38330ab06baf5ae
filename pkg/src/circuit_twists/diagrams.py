"""
Artin/Coxeter diagrams and their defining relations.

Weights follow the convention ``weight = number of edges + 2``: weight 2 means the two
generators commute, weight 3 gives the braid relation, weight 4 the relation of length 4,
and ``math.inf`` leaves the pair free. Unlisted pairs have weight 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Mapping

from .errors import DiagramError, SpecError
from .words import Alphabet, Relation, Word, artin_b_alphabet, s_alphabet

FAMILIES = ("A", "B", "D", "E", "Atilde")


@dataclass(frozen=True)
class DiagramKind:
    """A catalog diagram; ``n`` is always the number of vertices."""

    family: str
    n: int

    def __post_init__(self):
        lo = {"A": 1, "B": 2, "D": 3, "Atilde": 3}
        if self.family not in FAMILIES:
            raise DiagramError(f"unknown diagram family {self.family!r}")
        if self.family == "E":
            if self.n not in (6, 7, 8):
                raise DiagramError(f"E({self.n}) is not defined; E needs n in 6, 7, 8")
        elif self.n < lo[self.family]:
            raise DiagramError(f"{self.family}({self.n}) needs at least {lo[self.family]} vertices")

    def __str__(self) -> str:
        if self.family == "Atilde":
            return f"Ã({self.n - 1})"
        return f"{self.family}({self.n})"


@dataclass(frozen=True)
class ArtinDiagram:
    labels: tuple[str, ...]
    weights: Mapping[frozenset, float] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[frozenset, float] = {}
        for pair, w in dict(self.weights).items():
            pair = frozenset(pair)
            if len(pair) != 2:
                raise DiagramError(f"self-edges are not allowed: {sorted(pair)}")
            if not pair <= set(self.labels):
                raise DiagramError(f"edge {sorted(pair)} uses unknown vertices")
            if w != math.inf and (int(w) != w or w < 2):
                raise DiagramError(f"weight must be an integer >= 2 or inf, got {w!r}")
            if w != 2:
                clean[pair] = w if w == math.inf else int(w)
        object.__setattr__(self, "weights", clean)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def alphabet(self) -> Alphabet:
        if self.labels and self.labels[0] == "t":
            return artin_b_alphabet(self.n)
        if self.labels == s_alphabet(self.n).symbols:
            return s_alphabet(self.n)
        return Alphabet("custom", self.labels)

    def weight(self, s: str, t: str) -> float:
        if s == t:
            raise DiagramError("weight of a vertex with itself is undefined")
        return self.weights.get(frozenset((s, t)), 2)

    def __hash__(self):
        return hash((self.labels, frozenset(self.weights.items())))


def _path(labels: tuple[str, ...]) -> dict[frozenset, int]:
    return {frozenset(p): 3 for p in zip(labels, labels[1:])}


def build_diagram(kind: DiagramKind) -> ArtinDiagram:
    """Standard diagram for a catalog kind.

    Type B uses ``t, s1 .. s(n-1)`` with ``t`` at the weight-4 end. Type D uses ``s1, s2``
    for the two fork vertices (both joined to ``s3``) and ``s3 .. sn`` for the tail. Affine
    type uses ``s1 .. sn`` arranged in an ``n``-cycle.
    """
    n = kind.n
    if kind.family == "A":
        labels = s_alphabet(n).symbols
        return ArtinDiagram(labels, _path(labels))
    if kind.family == "B":
        labels = artin_b_alphabet(n).symbols
        weights = _path(labels)
        weights[frozenset(("t", "s1"))] = 4
        return ArtinDiagram(labels, weights)
    if kind.family == "D":
        labels = s_alphabet(n).symbols
        weights = _path(labels[1:])
        weights[frozenset(("s1", "s3"))] = 3
        return ArtinDiagram(labels, weights)
    if kind.family == "E":
        # s1 - s3 - s4 - ... - sn with s2 hanging off s4
        labels = s_alphabet(n).symbols
        weights = _path(("s1",) + labels[2:])
        weights[frozenset(("s2", "s4"))] = 3
        return ArtinDiagram(labels, weights)
    labels = s_alphabet(n).symbols
    weights = _path(labels)
    weights[frozenset((labels[-1], labels[0]))] = 3
    return ArtinDiagram(labels, weights)


def alternating(s: str, t: str, length: int, alphabet: Alphabet) -> Word:
    return alphabet.word(*[(s, t)[i % 2] for i in range(length)])


def relators(d: ArtinDiagram) -> list[Relation]:
    """One alternating relation ``sts... = tst...`` per finite-weight pair."""
    alphabet = d.alphabet
    out = []
    for s, t in combinations(d.labels, 2):
        w = d.weight(s, t)
        if w == math.inf:
            continue
        out.append(Relation(alternating(s, t, w, alphabet), alternating(t, s, w, alphabet)))
    return out


def is_irreducible(d: ArtinDiagram) -> bool:
    """Connectivity of the graph whose edges are the pairs of weight at least 3."""
    if not d.labels:
        return False
    adjacent = {v: set() for v in d.labels}
    for pair, w in d.weights.items():
        if w >= 3:
            s, t = tuple(pair)
            adjacent[s].add(t)
            adjacent[t].add(s)
    seen, todo = {d.labels[0]}, [d.labels[0]]
    while todo:
        for u in adjacent[todo.pop()] - seen:
            seen.add(u)
            todo.append(u)
    return len(seen) == len(d.labels)


def diagram_from_json(data: Mapping[str, Any]) -> ArtinDiagram:
    """``{"kind": "B", "n": 4}`` or ``{"n": 4, "weights": [["s1", "s2", 3], ...]}``.

    The explicit form takes optional ``"labels"``; otherwise vertices are ``s1 .. sn``, or
    ``t, s1 .. s(n-1)`` when some weight mentions ``t``. A weight may be ``"inf"``.
    """

    if "n" not in data or not isinstance(data["n"], int):
        raise SpecError("n", "an integer vertex count is required")
    if "kind" in data:
        try:
            return build_diagram(DiagramKind(str(data["kind"]), data["n"]))
        except DiagramError as e:
            raise SpecError("kind", str(e)) from None
    rows = data.get("weights", [])
    if "labels" in data:
        labels = tuple(data["labels"])
    elif any("t" in row[:2] for row in rows):
        labels = artin_b_alphabet(data["n"]).symbols
    else:
        labels = s_alphabet(data["n"]).symbols
    if len(labels) != data["n"]:
        raise SpecError("labels", f"expected {data['n']} labels, got {len(labels)}")
    weights = {}
    for row in rows:
        if len(row) != 3:
            raise SpecError("weights", f"each entry must be [s, t, weight], got {row!r}")
        s, t, w = row
        weights[frozenset((s, t))] = math.inf if w in ("inf", "infinity", None) else w
    try:
        return ArtinDiagram(labels, weights)
    except DiagramError as e:
        raise SpecError("weights", str(e)) from None
