"""
Group classification of circuit surfaces and the cycle-relation decision procedure.

The verdict on each cycle relation comes from the disc-bounding criterion. Where the
group is known to be an Artin group with a solvable word problem, the verdict is
backed by a normal-form certificate computed independently:

- affine type: the relators are mapped into type B and shown to be non-trivial;
- a single n-gon cap: the relators are mapped into type D, where the matching cycle
  relator is trivial and the other one is not.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from . import affine, garside
from .errors import SpecError
from .relations import (
    Orientation,
    as_affine,
    commutation_form,
    cycle_relation,
    reverse_relation,
    to_dn_word,
)
from .surfaces import (
    CircuitSurface,
    DiscKind,
    NeighbourhoodKind,
    all_components,
    attach_disc,
    attach_extras,
    boundary_components,
    bounds_embedded_disc,
    build_neighbourhood,
    disc_orientations,
    euler_characteristic,
    genus,
    quotient_type,
    surface_from_json,
)
from .words import Relation


class GroupFamily(str, enum.Enum):
    A = "A"
    D = "D"
    ATILDE = "Atilde"
    SL2Z = "SL2Z"
    NOT_ARTIN = "NotArtin"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class GroupAssignment:
    family: GroupFamily
    rank: int | None
    reference: str

    @property
    def label(self) -> str:
        if self.family is GroupFamily.A:
            return f"A(A_{self.rank})"
        if self.family is GroupFamily.D:
            return f"A(D_{self.rank})"
        if self.family is GroupFamily.ATILDE:
            return f"A(Ã_{self.rank})"
        if self.family is GroupFamily.SL2Z:
            return "SL(2,ℤ)"
        if self.family is GroupFamily.NOT_ARTIN:
            return "not Artin"
        return "unknown"

    def to_json(self) -> dict:
        return {"family": self.family.value, "rank": self.rank, "label": self.label, "reference": self.reference}


def _cap_counts(s: CircuitSurface) -> tuple[int, int, int, int]:
    d1 = [a for a in s.attached_discs if a.kind is DiscKind.D1]
    d2 = len(s.attached_discs) - len(d1)
    ccw = sum(1 for a in d1 if a.orientation is Orientation.CCW)
    return len(d1), d2, ccw, len(d1) - ccw


def classify_group(s: CircuitSurface) -> GroupAssignment:
    """Lookup of the group generated by the twists, by neighbourhood type and caps."""
    n = s.n
    d1, d2, ccw, cw = _cap_counts(s)
    if s.kind is NeighbourhoodKind.M:
        base = GroupAssignment(GroupFamily.ATILDE, n - 1, "2n-gon-caps" if d2 else "regular-neighbourhood")
    elif n % 2 == 1:
        base = {
            (0, 0): GroupAssignment(GroupFamily.ATILDE, n - 1, "regular-neighbourhood"),
            (1, 0): GroupAssignment(GroupFamily.D, n, "single-n-gon-cap"),
            (2, 0): GroupAssignment(GroupFamily.A, n - 1, "two-n-gon-caps"),
            (0, 1): GroupAssignment(GroupFamily.ATILDE, n - 1, "2n-gon-caps"),
            (1, 1): GroupAssignment(GroupFamily.NOT_ARTIN, None, "n-gon-and-2n-gon-caps"),
            (2, 1): GroupAssignment(GroupFamily.NOT_ARTIN, None, "closed-chain-inhomogeneous"),
        }[(d1, d2)]
    else:
        hi, lo = max(ccw, cw), min(ccw, cw)
        if (hi, lo) == (0, 0):
            base = GroupAssignment(GroupFamily.ATILDE, n - 1, "regular-neighbourhood")
        elif (hi, lo) == (1, 0):
            base = GroupAssignment(GroupFamily.D, n, "single-n-gon-cap")
        elif (hi, lo) == (2, 0):
            base = GroupAssignment(GroupFamily.A, n - 1, "two-n-gon-caps")
        elif n == 4:
            base = {
                (1, 1): GroupAssignment(GroupFamily.A, 3, "n4-isotopic-curves"),
                (2, 1): GroupAssignment(GroupFamily.A, 2, "n4-isotopic-curves"),
                (2, 2): GroupAssignment(GroupFamily.SL2Z, None, "torus"),
            }[(hi, lo)]
        else:
            base = GroupAssignment(GroupFamily.NOT_ARTIN, None, "both-orientations-inhomogeneous")
    if s.marked_discs or s.annuli:
        if base.family is GroupFamily.ATILDE:
            return GroupAssignment(GroupFamily.ATILDE, n - 1, base.reference + "+marked-discs-annuli")
        return GroupAssignment(GroupFamily.UNKNOWN, None, "off-table")
    return base


@dataclass(frozen=True)
class CertificateEntry:
    relation: str  # "ccw", "cw" or "commutation"
    holds: bool
    normal_form: garside.GarsideNormalForm

    def to_json(self) -> dict:
        nf = self.normal_form
        return {
            "relation": self.relation,
            "holds": self.holds,
            "group": f"{nf.type}{nf.n}",
            "normal_form": nf.to_json(),
            "normal_form_length": nf.canonical_length,
        }


@dataclass(frozen=True)
class Certificate:
    kind: str  # "affine-nontrivial" | "dn-quotient" | "theorem-only"
    entries: tuple[CertificateEntry, ...] = ()

    def verdict(self, orientation: Orientation) -> bool | None:
        for e in self.entries:
            if e.relation == orientation.value:
                return e.holds
        return None

    def to_json(self) -> dict:
        return {"kind": self.kind, "entries": [e.to_json() for e in self.entries]}


def _relators(n: int) -> list[tuple[str, Relation]]:
    return [
        (Orientation.CCW.value, cycle_relation(n, Orientation.CCW)),
        (Orientation.CW.value, cycle_relation(n, Orientation.CW)),
        ("commutation", commutation_form(n)),
    ]


def affine_certificate(n: int) -> Certificate:
    entries = []
    for name, r in _relators(n):
        nf = affine.affine_normal_form(as_affine(r.relator()))
        entries.append(CertificateEntry(name, nf.is_identity, nf))
    return Certificate("affine-nontrivial", tuple(entries))


def dn_certificate(n: int, orientation: Orientation) -> Certificate:
    """Images in type D of the relators; for a ↻ cap the circuit is renumbered backwards first."""
    entries = []
    for name, r in _relators(n):
        if orientation is Orientation.CW:
            r = reverse_relation(r)
        nf = garside.normal_form("D", n, to_dn_word(r.relator()))
        entries.append(CertificateEntry(name, nf.is_identity, nf))
    return Certificate("dn-quotient", tuple(entries))


def _is_single_n_gon_cap(s: CircuitSurface) -> bool:
    return (
        s.kind is NeighbourhoodKind.N
        and len(s.attached_discs) == 1
        and s.attached_discs[0].kind is DiscKind.D1
        and not s.marked_discs
        and not s.annuli
    )


@dataclass
class AnalysisReport:
    surface: CircuitSurface
    group: GroupAssignment
    status: dict[Orientation, bool]
    certificate: Certificate
    disc: tuple[bool, Orientation | None] = (False, None)
    notes: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """Certificate verdicts (where present) agree with the disc-bounding verdicts."""
        for o in Orientation:
            v = self.certificate.verdict(o)
            if v is not None and v != self.status[o]:
                return False
        return self.disc[0] == any(self.status.values())

    def to_json(self) -> dict:
        s = self.surface
        q = quotient_type(s)
        return {
            "surface": s.to_json(),
            "name": s.name,
            "boundary": [c.to_json() for c in all_components(s)],
            "open_boundary_components": len(boundary_components(s)),
            "euler_characteristic": euler_characteristic(s),
            "genus": genus(s),
            "quotient": q.to_json() if q else "involution does not extend",
            "bounds_embedded_disc": self.disc[0],
            "disc_orientation": self.disc[1].value if self.disc[1] else None,
            "disc_orientations": sorted(o.value for o in disc_orientations(s)),
            "group": self.group.to_json(),
            "cycle_relation": {
                o.value: {"holds": self.status[o], "relation": str(cycle_relation(s.n, o))} for o in Orientation
            },
            "certificate": self.certificate.to_json(),
            "consistent": self.consistent,
            "notes": self.notes,
        }

    def to_text(self) -> str:
        s = self.surface
        q = quotient_type(s)
        lines = [
            f"surface: {s.name}",
            "boundary: "
            + ", ".join(
                f"#{c.id} {c.sides}-gon {c.orientation_class.symbol if c.orientation_class else '?'}"
                + (f" capped {c.cap.value}" if c.cap else "")
                for c in all_components(s)
            ),
            f"euler characteristic: {euler_characteristic(s)}, genus: {genus(s)}",
            "quotient: " + (f"{q.base} with {q.marked_points} marked points" if q else "involution does not extend"),
            f"bounds embedded disc: {'yes' if self.disc[0] else 'no'}"
            + (f" ({', '.join(sorted(o.symbol for o in disc_orientations(s)))})" if self.disc[0] else ""),
            f"group: {self.group.label} [{self.group.reference}]",
        ]
        for o in Orientation:
            lines.append(f"cycle relation {o.symbol}: {'holds' if self.status[o] else 'fails'}")
        lines.append(f"certificate: {self.certificate.kind}")
        for e in self.certificate.entries:
            lines.append(
                f"  {e.relation}: {'trivial' if e.holds else 'non-trivial'} in {e.normal_form.type}{e.normal_form.n}"
                f" (p={e.normal_form.p}, {e.normal_form.canonical_length} factors)"
            )
        lines.append(f"consistent: {'yes' if self.consistent else 'NO'}")
        lines.extend(f"note: {x}" for x in self.notes)
        return "\n".join(lines)


def decide_cycle_relation(s: CircuitSurface) -> AnalysisReport:
    found = disc_orientations(s)
    status = {o: o in found for o in Orientation}
    group = classify_group(s)
    notes = []
    if group.family is GroupFamily.ATILDE:
        certificate = affine_certificate(s.n)
    elif _is_single_n_gon_cap(s):
        certificate = dn_certificate(s.n, s.attached_discs[0].orientation)
    else:
        certificate = Certificate("theorem-only")
        if group.family is GroupFamily.UNKNOWN:
            notes.append("marked discs or annuli on a surface whose group is not affine: group left undetermined")
    return AnalysisReport(s, group, status, certificate, bounds_embedded_disc(s), notes)


def analyze(path: str | Path) -> AnalysisReport:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise SpecError("<file>", f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise SpecError("<file>", f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return decide_cycle_relation(surface_from_json(data))


def base_neighbourhoods(n: int) -> list[CircuitSurface]:
    if n % 2:
        return [build_neighbourhood(n, "N", Orientation.CCW), build_neighbourhood(n, "N", Orientation.CW)]
    return [build_neighbourhood(n, "N"), build_neighbourhood(n, "M")]


def capped_surfaces(n: int) -> Iterator[CircuitSurface]:
    """Every neighbourhood of an ``n``-circuit with every admissible set of capped components."""
    for base in base_neighbourhoods(n):
        components = all_components(base)
        for k in range(len(components) + 1):
            for chosen in itertools.combinations(components, k):
                s = base
                for c in chosen:
                    s = attach_disc(s, c.id, DiscKind.D1 if c.polygon.value == "n-gon" else DiscKind.D2)
                yield s


def surface_variants(s: CircuitSurface) -> Iterator[CircuitSurface]:
    """``s`` plus the variants with one extra marked disc or annulus where boundary remains."""
    yield s
    free = len(boundary_components(s))
    if free >= 1:
        yield attach_extras(s, marked_discs=1)
    if free >= 2:
        yield attach_extras(s, annuli=1)
    if free >= 3:
        yield attach_extras(s, marked_discs=1, annuli=1)
