"""
Ribbon-graph model of a regular neighbourhood of a circuit of curves, with discs glued in.

Vertex ``v_i`` is the intersection point of ``α_i`` and ``α_(i+1)`` (indices mod ``n``);
curve ``α_i`` consists of two arcs, ``a_i`` from ``v_(i-1)`` to ``v_i`` and ``b_i`` back. A
dart is a pair ``(vertex, role)`` with role ``co``/``ci`` (outgoing/incoming ``α_i`` at
``v_i``) or ``no``/``ni`` (the same for ``α_(i+1)``). The counter-clockwise rotation at
a vertex is ``(co, no, ci, ni)``, or ``(co, ni, ci, no)`` at a flipped vertex.

The homeomorphism type only depends on the parity of the number of flipped vertices;
the model flips ``v_n`` alone when the parity is odd. Boundary components are the
orbits of ``dart -> rotation(other end of its arc)``; the labels read along an orbit
increase cyclically (``1, 2, ..., n``) exactly for the ↺ components.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, replace
from typing import Any, Mapping, Sequence

from .errors import SpecError, SurfaceError
from .relations import Orientation

Dart = tuple[int, str]


class NeighbourhoodKind(str, enum.Enum):
    N = "N"
    M = "M"


class DiscKind(str, enum.Enum):
    D1 = "D1"  # caps an n-gon
    D2 = "D2"  # caps a 2n-gon


class Polygon(str, enum.Enum):
    N_GON = "n-gon"
    TWO_N_GON = "2n-gon"
    OTHER = "other"


_ROTATION = ("co", "no", "ci", "ni")
_FLIPPED = ("co", "ni", "ci", "no")


@dataclass(frozen=True)
class _Face:
    darts: tuple[Dart, ...]
    labels: tuple[int, ...]


@functools.cache
def _ribbon_graph(n: int, parity: int) -> tuple[dict[Dart, Dart], dict[Dart, Dart], dict[Dart, int]]:
    rotation: dict[Dart, Dart] = {}
    for v in range(n):
        order = _FLIPPED if (parity and v == n - 1) else _ROTATION
        for k in range(4):
            rotation[(v, order[k])] = (v, order[(k + 1) % 4])
    other_end: dict[Dart, Dart] = {}
    label: dict[Dart, int] = {}
    for i in range(1, n + 1):
        here, prev = (i - 1) % n, (i - 2) % n
        for x, y in (((prev, "no"), (here, "ci")), ((here, "co"), (prev, "ni"))):
            other_end[x], other_end[y] = y, x
            label[x] = label[y] = i
    return rotation, other_end, label


def _classify(labels: Sequence[int], n: int) -> tuple[Polygon, Orientation | None]:
    k = len(labels)
    polygon = {n: Polygon.N_GON, 2 * n: Polygon.TWO_N_GON}.get(k, Polygon.OTHER)
    steps = {(labels[(j + 1) % k] - labels[j]) % n for j in range(k)}
    if steps == {1}:
        return polygon, Orientation.CCW
    if steps == {n - 1}:
        return polygon, Orientation.CW
    return polygon, None


@functools.cache
def _faces(n: int, parity: int) -> tuple[_Face, ...]:
    rotation, other_end, label = _ribbon_graph(n, parity)
    seen: set[Dart] = set()
    faces = []
    for d in sorted(rotation):
        if d in seen:
            continue
        darts, x = [], d
        while x not in seen:
            seen.add(x)
            darts.append(x)
            x = rotation[other_end[x]]
        faces.append(_Face(tuple(darts), tuple(label[y] for y in darts)))

    def key(f: _Face):
        _, orientation = _classify(f.labels, n)
        return (len(f.darts), orientation is not Orientation.CCW, min(f.darts))

    return tuple(sorted(faces, key=key))


@functools.cache
def _cross_involution(n: int, parity: int) -> tuple[int, ...]:
    """Action on boundary ids of the involution turning every crossing by π (rotation squared)."""
    rotation, _, _ = _ribbon_graph(n, parity)
    faces = _faces(n, parity)
    where = {d: i for i, f in enumerate(faces) for d in f.darts}
    return tuple(where[rotation[rotation[f.darts[0]]]] for f in faces)


@dataclass(frozen=True)
class DiscAttachment:
    boundary: int
    kind: DiscKind
    orientation: Orientation | None = None


@dataclass(frozen=True)
class BoundaryComponent:
    id: int
    sides: int
    polygon: Polygon
    orientation_class: Orientation | None
    labels: tuple[int, ...]
    cap: DiscKind | None = None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "sides": self.sides,
            "polygon": self.polygon.value,
            "orientation": self.orientation_class.value if self.orientation_class else None,
            "labels": list(self.labels),
            "cap": self.cap.value if self.cap else None,
        }


def _parity_for(n: int, kind: NeighbourhoodKind, chirality: Orientation) -> int:
    if n % 2 == 0:
        return 0 if kind is NeighbourhoodKind.N else 1
    if kind is NeighbourhoodKind.M:
        raise SurfaceError("M requires even n")
    return 1 if chirality is Orientation.CCW else 0


@dataclass(frozen=True)
class CircuitSurface:
    n: int
    twist_parity: int
    attached_discs: tuple[DiscAttachment, ...] = ()
    marked_discs: int = 0
    annuli: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise SurfaceError(f"a circuit needs n >= 3 curves, got {self.n}")
        if self.twist_parity not in (0, 1):
            raise SurfaceError("twist parity must be 0 or 1")
        ids = [a.boundary for a in self.attached_discs]
        if len(set(ids)) != len(ids):
            raise SurfaceError("a boundary component can be capped at most once")
        if any(not 0 <= i < len(_faces(self.n, self.twist_parity)) for i in ids):
            raise SurfaceError("attachment refers to a missing boundary component")
        object.__setattr__(self, "attached_discs", tuple(sorted(self.attached_discs, key=lambda a: a.boundary)))
        if self.marked_discs < 0 or self.annuli < 0:
            raise SurfaceError("marked disc and annulus counts must be non-negative")
        free = len(_faces(self.n, self.twist_parity)) - len(ids)
        if self.marked_discs + 2 * self.annuli > free:
            raise SurfaceError(
                f"{self.marked_discs} marked discs and {self.annuli} annuli need "
                f"{self.marked_discs + 2 * self.annuli} open boundary components, only {free} left"
            )

    @classmethod
    def from_twist_bits(cls, n: int, bits: Sequence[bool | int]) -> CircuitSurface:
        if len(bits) != n:
            raise SurfaceError(f"expected {n} twist bits, got {len(bits)}")
        return cls(n, sum(map(bool, bits)) % 2)

    @property
    def kind(self) -> NeighbourhoodKind:
        if self.n % 2 == 1:
            return NeighbourhoodKind.N
        return NeighbourhoodKind.M if self.twist_parity else NeighbourhoodKind.N

    @property
    def chirality(self) -> Orientation:
        """Meaningful for odd ``n`` only; even neighbourhoods are their own mirror images."""
        if self.n % 2 == 1 and self.twist_parity == 0:
            return Orientation.CW
        return Orientation.CCW

    @property
    def name(self) -> str:
        base = f"{self.kind.value}^{self.n}"
        if self.n % 2 == 1 and self.chirality is Orientation.CW:
            base += "_↻"
        parts = []
        for a in self.attached_discs:
            tag = "Δ¹" if a.kind is DiscKind.D1 else "Δ²"
            parts.append(tag + (f"_{a.orientation.symbol}" if a.orientation and self.n % 2 == 0 else ""))
        extras = []
        if self.marked_discs:
            extras.append(f"{self.marked_discs}×marked disc")
        if self.annuli:
            extras.append(f"{self.annuli}×annulus")
        return " ∪ ".join([base, *parts, *extras])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind.value,
            "chirality": self.chirality.value,
            "discs": [{"boundary": a.boundary, "kind": a.kind.value} for a in self.attached_discs],
            "marked_discs": self.marked_discs,
            "annuli": self.annuli,
        }


def build_neighbourhood(
    n: int, kind: NeighbourhoodKind | str = "N", chirality: Orientation | str = Orientation.CCW
) -> CircuitSurface:
    if n < 3:
        raise SurfaceError(f"a circuit needs n >= 3 curves, got {n}")
    kind = NeighbourhoodKind(kind)
    return CircuitSurface(n, _parity_for(n, kind, Orientation.parse(chirality)))


def all_components(s: CircuitSurface) -> list[BoundaryComponent]:
    caps = {a.boundary: a.kind for a in s.attached_discs}
    out = []
    for i, f in enumerate(_faces(s.n, s.twist_parity)):
        polygon, orientation = _classify(f.labels, s.n)
        out.append(BoundaryComponent(i, len(f.darts), polygon, orientation, f.labels, caps.get(i)))
    return out


def boundary_components(s: CircuitSurface) -> list[BoundaryComponent]:
    """Open (uncapped) boundary components."""
    return [c for c in all_components(s) if c.cap is None]


def cross_involution(s: CircuitSurface) -> tuple[int, ...]:
    return _cross_involution(s.n, s.twist_parity)


def attach_disc(s: CircuitSurface, boundary_id: int, kind: DiscKind | str) -> CircuitSurface:
    kind = DiscKind(kind)
    components = all_components(s)
    if not 0 <= boundary_id < len(components):
        raise SurfaceError(f"{s.name} has no boundary component {boundary_id}")
    target = components[boundary_id]
    if target.cap is not None:
        raise SurfaceError(f"boundary component {boundary_id} of {s.name} is already capped")
    wanted = Polygon.N_GON if kind is DiscKind.D1 else Polygon.TWO_N_GON
    if target.polygon is not wanted:
        raise SurfaceError(
            f"no such disc exists: a {kind.value} cap needs an {wanted.value} boundary, "
            f"component {boundary_id} of {s.name} is a {target.sides}-gon"
        )
    attachment = DiscAttachment(boundary_id, kind, target.orientation_class)
    return replace(s, attached_discs=s.attached_discs + (attachment,))


def attach_extras(s: CircuitSurface, marked_discs: int = 0, annuli: int = 0) -> CircuitSurface:
    """Glue once-marked discs and annuli along remaining boundary; recorded as counts only."""
    return replace(s, marked_discs=s.marked_discs + marked_discs, annuli=s.annuli + annuli)


def euler_characteristic(s: CircuitSurface) -> int:
    return s.n - 2 * s.n + len(s.attached_discs)


def genus(s: CircuitSurface) -> int:
    g2 = 2 - euler_characteristic(s) - len(boundary_components(s))
    assert g2 % 2 == 0 and g2 >= 0, "inconsistent ribbon graph"
    return g2 // 2


@dataclass(frozen=True)
class QuotientType:
    base: str  # disc | annulus | sphere | other
    marked_points: int
    euler_characteristic: int
    boundary_components: int

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "marked_points": self.marked_points,
            "euler_characteristic": self.euler_characteristic,
            "boundary_components": self.boundary_components,
        }


def quotient_type(s: CircuitSurface) -> QuotientType | None:
    """Quotient by the cross-involution, or ``None`` when the involution does not extend.

    The involution extends over the caps iff the set of capped components is invariant;
    every cap on a component it maps to itself contributes one more fixed point.
    """
    iota = cross_involution(s)
    capped = {a.boundary for a in s.attached_discs}
    if {iota[i] for i in capped} != capped:
        return None
    fixed = s.n + sum(1 for i in capped if iota[i] == i)
    chi = (euler_characteristic(s) + fixed) // 2
    open_ids = [c.id for c in boundary_components(s)]
    orbits = {frozenset((i, iota[i])) for i in open_ids}
    b = len(orbits)
    base = "other"
    if 2 - chi - b == 0:
        base = {0: "sphere", 1: "disc", 2: "annulus"}.get(b, "other")
    return QuotientType(base, fixed, chi, b)


def disc_orientations(s: CircuitSurface) -> set[Orientation]:
    """Orientation classes of the n-gon caps, i.e. of the embedded closed discs the circuit bounds."""
    return {a.orientation for a in s.attached_discs if a.kind is DiscKind.D1 and a.orientation is not None}


def bounds_embedded_disc(s: CircuitSurface) -> tuple[bool, Orientation | None]:
    found = disc_orientations(s)
    if not found:
        return False, None
    return True, Orientation.CCW if Orientation.CCW in found else Orientation.CW


def surface_from_json(data: Mapping[str, Any]) -> CircuitSurface:
    """Parse ``{"n": 4, "kind": "N", "chirality": "ccw", "discs": [{"boundary": 0, "kind": "D1"}], ...}``.

    ``"twist_bits"`` (one boolean per crossing) may replace ``kind``/``chirality``.
    """
    if not isinstance(data, Mapping):
        raise SpecError("<root>", "surface spec must be a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise SpecError("n", "an integer number of curves is required")
    if n < 3:
        raise SpecError("n", f"a circuit needs n >= 3 curves, got {n}")
    known = {"n", "kind", "chirality", "twist_bits", "discs", "marked_discs", "annuli"}
    for key in data:
        if key not in known:
            raise SpecError(key, "unknown field")
    try:
        if "twist_bits" in data:
            surface = CircuitSurface.from_twist_bits(n, list(data["twist_bits"]))
        else:
            kind = data.get("kind", "N")
            if kind not in ("N", "M"):
                raise SpecError("kind", f"must be 'N' or 'M', got {kind!r}")
            try:
                chirality = Orientation.parse(data.get("chirality", "ccw"))
            except ValueError as e:
                raise SpecError("chirality", str(e)) from None
            try:
                surface = build_neighbourhood(n, kind, chirality)
            except SurfaceError as e:
                raise SpecError("kind", str(e)) from None
    except SurfaceError as e:
        raise SpecError("twist_bits", str(e)) from None
    discs = data.get("discs", [])
    if not isinstance(discs, list):
        raise SpecError("discs", "must be a list")
    for k, disc in enumerate(discs):
        where = f"discs[{k}]"
        if not isinstance(disc, Mapping) or "boundary" not in disc or "kind" not in disc:
            raise SpecError(where, "each disc needs 'boundary' and 'kind'")
        if disc["kind"] not in ("D1", "D2"):
            raise SpecError(f"{where}.kind", f"must be 'D1' or 'D2', got {disc['kind']!r}")
        if not isinstance(disc["boundary"], int):
            raise SpecError(f"{where}.boundary", "must be an integer component id")
        try:
            surface = attach_disc(surface, disc["boundary"], disc["kind"])
        except SurfaceError as e:
            raise SpecError(where, str(e)) from None
    extras = {}
    for key in ("marked_discs", "annuli"):
        value = data.get(key, 0)
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise SpecError(key, "must be a non-negative integer")
        extras[key] = value
    try:
        return attach_extras(surface, **extras)
    except SurfaceError as e:
        raise SpecError("marked_discs" if extras["marked_discs"] else "annuli", str(e)) from None
