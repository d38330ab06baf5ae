"""Battery of verification checks behind ``verify-suite``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import affine, diagrams, garside, relations, surfaces
from .engine import GroupFamily, capped_surfaces, decide_cycle_relation, surface_variants
from .words import Word, exponent_vector, is_homogeneous, random_word, reduce


@dataclass
class CheckResult:
    name: str
    reference: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name} ({self.reference}): {self.detail} [{self.seconds:.2f}s]"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "reference": self.reference,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _timed(name: str, reference: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    passed, detail = fn()
    return CheckResult(name, reference, passed, detail, time.perf_counter() - t0)


def conjugated_relator_pairs(type_: str, n: int, count: int, rng: random.Random) -> list[tuple[Word, Word]]:
    """Pairs ``(w, w u r u^-1)`` with ``r`` a random defining relator and ``u`` random."""
    m = garside.model(type_, n)
    rels = [r.relator() for r in diagrams.relators(diagrams.build_diagram(garside.diagram_kind(type_, n)))]
    out = []
    for _ in range(count):
        w = random_word(m.alphabet, rng.randint(0, 12), rng)
        u = random_word(m.alphabet, rng.randint(0, 6), rng)
        out.append((w, w * u * rng.choice(rels) * u.inverse()))
    return out


def check_presentation(ns: range, pairs: int, seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed)
    combos = [(t, n) for t in garside.TYPES for n in ns]
    bad_rel = [
        (t, n, str(r))
        for t, n in combos
        for r in diagrams.relators(diagrams.build_diagram(garside.diagram_kind(t, n)))
        if not garside.equal(t, n, r.lhs, r.rhs)
    ]
    per = -(-pairs // len(combos))
    bad_pairs = sum(
        1 for t, n in combos for w1, w2 in conjugated_relator_pairs(t, n, per, rng) if not garside.equal(t, n, w1, w2)
    )
    ok = not bad_rel and bad_pairs == 0
    return ok, f"relator failures {len(bad_rel)}, pair failures {bad_pairs}/{per * len(combos)}"


def check_garside_sanity(ns: range, twist_ns: range) -> tuple[bool, str]:
    problems = []
    for t in garside.TYPES:
        for n in ns:
            m = garside.model(t, n)
            if m.delta_length != garside.positive_root_count(t, n):
                problems.append(f"l(Δ) {t}{n}")
            d2 = garside.delta_word(t, n) ** 2
            for g in m.labels:
                x = m.alphabet.word(g)
                if not garside.equal(t, n, x * d2, d2 * x):
                    problems.append(f"Δ² central {t}{n} {g}")
    for n in twist_ns:
        if not relations.chain_full_twist_check(n):
            problems.append(f"full twist A{n}")
    return not problems, "ok" if not problems else "; ".join(problems)


def check_affine_nontrivial(ns: range) -> tuple[bool, str]:
    lengths, bad = [], []
    for n in ns:
        rels = [relations.cycle_relation(n, o) for o in relations.Orientation] + [relations.commutation_form(n)]
        for r in rels:
            nf = affine.affine_normal_form(relations.as_affine(r.relator()))
            if nf.is_identity:
                bad.append(f"n={n} {r}")
        ccw_nf = affine.affine_normal_form(relations.as_affine(rels[0].relator()))
        lengths.append(f"Ã{n - 1}:{ccw_nf.canonical_length}")
    return not bad, "cycle relator normal-form lengths " + " ".join(lengths) + ("" if not bad else f"; trivial: {bad}")


def check_dn_quotient(ns: range) -> tuple[bool, str]:
    bad = []
    for n in ns:
        if not all(relations.holds_in_dn(r) for r in relations.circuit_relations(n)):
            bad.append(f"circuit relations D{n}")
        if not relations.holds_in_dn(relations.cycle_relation(n, "ccw")):
            bad.append(f"cycle relator D{n}")
        if not relations.holds_in_dn(relations.commutation_form(n)):
            bad.append(f"commutation form D{n}")
    return not bad, "ok" if not bad else "; ".join(bad)


def oracle_pairs(n: int, count: int, rng: random.Random, max_length: int = 12) -> list[tuple[Word, Word]]:
    """Alternately an equal-by-construction pair (an affine relator inserted) and two independent words.

    Every word has at most ``max_length`` letters.
    """
    alphabet = affine.affine_alphabet(n)
    rels = [r.relator() for r in diagrams.relators(diagrams.build_diagram(diagrams.DiagramKind("Atilde", n)))]
    out = []
    for k in range(count):
        if k % 2:
            u = random_word(alphabet, rng.randint(0, max_length), rng)
            out.append((u, random_word(alphabet, rng.randint(0, max_length), rng)))
        else:
            r = rng.choice(rels)
            w = random_word(alphabet, rng.randint(0, max_length - len(r)), rng)
            cut = rng.randint(0, len(w))
            out.append((w, reduce(w[:cut] * r * w[cut:])))
    return out


def check_oracle(ns: range, pairs: int, seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed)
    disagreements, equal_count, total = 0, 0, 0
    for n in ns:
        for w1, w2 in oracle_pairs(n, pairs, rng):
            primary = affine.affine_equal(w1, w2)
            oracle = affine.strand_oracle_equal(n, affine.to_b_word(w1), affine.to_b_word(w2))
            disagreements += primary != oracle
            equal_count += primary
            total += 1
    return disagreements == 0, f"{total - disagreements}/{total} agree ({equal_count} equal pairs)"


def expected_components(n: int, kind: str) -> list[int]:
    if kind == "M":
        return [2 * n, 2 * n]
    return [n, n, 2 * n] if n % 2 else [n, n, n, n]


def check_surfaces(ns: range) -> tuple[bool, str]:
    bad = []
    for n in ns:
        for kind in ("N", "M") if n % 2 == 0 else ("N",):
            s = surfaces.build_neighbourhood(n, kind)
            sides = sorted(c.sides for c in surfaces.boundary_components(s))
            if sides != expected_components(n, kind):
                bad.append(f"{kind}{n} sides {sides}")
            if surfaces.euler_characteristic(s) != -n:
                bad.append(f"{kind}{n} χ")
            q = surfaces.quotient_type(s)
            if q is None or (q.base, q.marked_points) != ("annulus", n):
                bad.append(f"{kind}{n} quotient {q}")
            big = [c.id for c in surfaces.boundary_components(s) if c.sides == 2 * n]
            capped = s
            for i in big:
                capped = surfaces.attach_disc(capped, i, "D2")
            q = surfaces.quotient_type(capped)
            want = {1: ("disc", n + 1), 2: ("sphere", n + 2)}.get(len(big))
            if want and (q is None or (q.base, q.marked_points) != want):
                bad.append(f"{capped.name} quotient {q}")
    return not bad, "ok" if not bad else "; ".join(bad)


def check_theorem(ns: range) -> tuple[bool, str]:
    total, certified, bad = 0, 0, []
    for n in ns:
        for base in capped_surfaces(n):
            for s in surface_variants(base):
                report = decide_cycle_relation(s)
                total += 1
                certified += report.certificate.kind != "theorem-only"
                orientations = surfaces.disc_orientations(s)
                if any(report.status[o] != (o in orientations) for o in relations.Orientation):
                    bad.append(s.name)
                if not report.consistent:
                    bad.append(f"{s.name} (certificate)")
                if report.group.family is GroupFamily.UNKNOWN and not (s.marked_discs or s.annuli):
                    bad.append(f"{s.name} unclassified")
    return not bad, f"{total} surfaces, {certified} with certificates, {len(bad)} discrepancies" + (
        f": {bad[:5]}" if bad else ""
    )


def check_torus() -> tuple[bool, str]:
    c = relations.TORUS_T1 @ relations.TORUS_T2
    return relations.sl2z_check(), f"T1T2T1 = {(c @ relations.TORUS_T1).rows}, (T1T2)^3 = {(c ** 3).rows}"


def check_homogeneity(ns: range) -> tuple[bool, str]:
    bad = []
    for n in ns:
        if n % 2:
            rep = relations.inhomogeneity_report(relations.odd_closed_relation(n))
            if (rep.total_lhs, rep.total_rhs, rep.inhomogeneous) != (2 * n * (n - 1), 0, True):
                bad.append(f"odd-closed n={n}")
        if n >= 6:
            rep = relations.inhomogeneity_report(relations.not_artin6_relation(n))
            if (rep.total_lhs, rep.total_rhs, rep.inhomogeneous) != ((n - 3) * (n - 2), 2, True):
                bad.append(f"two-orientation chain n={n}")
        cyc = relations.cycle_relation(n)
        if not is_homogeneous(cyc) or exponent_vector(cyc.relator()).total != 0:
            bad.append(f"cycle n={n}")
    return not bad, "ok" if not bad else "; ".join(bad)


def verify_suite(n_max: int, random_pairs: int = 2000, oracle_pairs_per_n: int = 200, seed: int = 0) -> list[CheckResult]:
    if not 3 <= n_max <= 8:
        raise ValueError(f"n_max must lie in 3..8, got {n_max}")
    small = range(3, min(n_max, 6) + 1)
    full = range(3, n_max + 1)
    return [
        _timed("presentation soundness", "defining relations", lambda: check_presentation(small, random_pairs, seed)),
        _timed("garside sanity", "longest element, centre, full twist", lambda: check_garside_sanity(small, full)),
        _timed("affine non-triviality", "regular neighbourhood / 2n-gon caps", lambda: check_affine_nontrivial(full)),
        _timed("type D quotient", "single n-gon cap", lambda: check_dn_quotient(full)),
        _timed("strand oracle", "annular braids", lambda: check_oracle(range(3, min(n_max, 5) + 1), oracle_pairs_per_n, seed)),
        _timed("surface combinatorics", "neighbourhood boundary data", lambda: check_surfaces(range(3, max(n_max, 3) + 1))),
        _timed("cycle relation detects discs", "main theorem", lambda: check_theorem(small)),
        _timed("torus", "SL(2,Z)", check_torus),
        _timed("homogeneity", "inhomogeneous relations", lambda: check_homogeneity(full)),
    ]
