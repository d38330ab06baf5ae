"""Acceptance battery: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they are
also collected into the terminal summary of any pytest run.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager

import pytest

import conftest
from circuit_twists import affine, garside, relations, surfaces
from circuit_twists.diagrams import build_diagram, relators
from circuit_twists.engine import capped_surfaces, decide_cycle_relation, surface_variants
from circuit_twists.suite import conjugated_relator_pairs, expected_components, oracle_pairs
from circuit_twists.words import exponent_vector, is_homogeneous


class Outcome:
    def __init__(self):
        self.ok = False
        self.detail = ""


@contextmanager
def criterion(number: int, name: str, budget: float | None = None):
    out = Outcome()
    t0 = time.perf_counter()
    try:
        yield out
    finally:
        seconds = time.perf_counter() - t0
        within = budget is None or seconds < budget
        passed = out.ok and within
        limit = f" (budget {budget:.0f}s)" if budget else ""
        line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {name}: {out.detail} in {seconds:.2f}s{limit}"
        conftest.ACCEPTANCE[number] = line
        print(line)
    assert out.ok, out.detail
    assert within, f"criterion {number} took {seconds:.2f}s, budget {budget}s"


def test_1_presentation_soundness():
    with criterion(1, "presentation soundness", budget=10) as out:
        combos = [(t, n) for t in "ABD" for n in range(3, 7)]
        bad_relators = [
            (t, n, str(r))
            for t, n in combos
            for r in relators(build_diagram(garside.diagram_kind(t, n)))
            if not garside.equal(t, n, r.lhs, r.rhs)
        ]
        rng = random.Random(2024)
        per = -(-10_000 // len(combos))
        checked = failures = 0
        for t, n in combos:
            for w1, w2 in conjugated_relator_pairs(t, n, per, rng):
                checked += 1
                failures += not garside.equal(t, n, w1, w2)
        out.ok = not bad_relators and failures == 0 and checked >= 10_000
        out.detail = f"{len(bad_relators)} relator failures, {failures}/{checked} random pairs unequal"


def test_2_garside_sanity():
    with criterion(2, "Garside engine sanity", budget=5) as out:
        problems = []
        for t in "ABD":
            for n in range(3 if t == "D" else 2, 7):
                m = garside.model(t, n)
                if m.delta_length != garside.positive_root_count(t, n):
                    problems.append(f"l(Δ) {t}{n}")
                d2 = garside.delta_word(t, n) ** 2
                for g in m.labels:
                    x = m.alphabet.word(g)
                    if not garside.equal(t, n, x * d2, d2 * x):
                        problems.append(f"Δ² {t}{n} {g}")
        for n in range(3, 7):
            a = garside.model("A", n).alphabet
            if not garside.equal("A", n, a.word(*a.symbols) ** n, garside.delta_word("A", n) ** 2):
                problems.append(f"full twist {n}")
        out.ok = not problems
        out.detail = "root counts, centrality, full twist n=3..6 verified" if not problems else "; ".join(problems)


def test_3_affine_nontriviality():
    with criterion(3, "affine non-triviality", budget=30) as out:
        trivial, lengths = [], []
        for n in range(3, 9):
            for r in (
                relations.cycle_relation(n, "ccw"),
                relations.cycle_relation(n, "cw"),
                relations.commutation_form(n),
            ):
                nf = affine.affine_normal_form(relations.as_affine(r.relator()))
                if nf.is_identity:
                    trivial.append(f"n={n} {r}")
                lengths.append(nf.canonical_length)
        out.ok = not trivial
        out.detail = f"{len(lengths) - len(trivial)}/{len(lengths)} relators non-trivial for n=3..8"


def test_4_dn_quotient():
    with criterion(4, "triviality in the type-D quotient", budget=30) as out:
        bad = []
        for n in range(3, 9):
            bad += [f"n={n} {r}" for r in relations.circuit_relations(n) if not relations.holds_in_dn(r)]
            if not garside.is_trivial("D", n, relations.to_dn_word(relations.cycle_relation(n, "ccw").relator())):
                bad.append(f"cycle relator n={n}")
        out.ok = not bad
        out.detail = "circuit relations hold and cycle relator is trivial for n=3..8" if not bad else "; ".join(bad)


def test_5_oracle_equivalence():
    with criterion(5, "strand oracle equivalence") as out:
        rng = random.Random(5)
        total = disagree = equal_pairs = 0
        for n in (3, 4, 5):
            pairs = oracle_pairs(n, 1000, rng, max_length=12)
            assert all(len(u) <= 12 and len(v) <= 12 for u, v in pairs)
            for u, v in pairs:
                primary = affine.affine_equal(u, v)
                oracle = affine.strand_oracle_equal(n, affine.to_b_word(u), affine.to_b_word(v))
                total += 1
                disagree += primary != oracle
                equal_pairs += primary
        out.ok = disagree == 0 and total >= 3000
        out.detail = f"{total - disagree}/{total} pairs agree ({equal_pairs} equal, {total - equal_pairs} unequal)"


def test_6_surface_combinatorics():
    with criterion(6, "surface combinatorics") as out:
        bad = []
        for n in range(3, 11):
            for kind in ("N", "M") if n % 2 == 0 else ("N",):
                s = surfaces.build_neighbourhood(n, kind)
                if sorted(c.sides for c in surfaces.boundary_components(s)) != expected_components(n, kind):
                    bad.append(f"{kind}{n} sides")
                if surfaces.euler_characteristic(s) != -n:
                    bad.append(f"{kind}{n} χ")
                q = surfaces.quotient_type(s)
                if (q.base, q.marked_points) != ("annulus", n):
                    bad.append(f"{kind}{n} bare quotient")
                big = [c.id for c in surfaces.boundary_components(s) if c.sides == 2 * n]
                if big:
                    one = surfaces.quotient_type(surfaces.attach_disc(s, big[0], "D2"))
                    if (one.base, one.marked_points) != ("disc", n + 1):
                        bad.append(f"{kind}{n} one 2n-gon cap")
                if len(big) == 2:
                    both = surfaces.attach_disc(surfaces.attach_disc(s, big[0], "D2"), big[1], "D2")
                    q2 = surfaces.quotient_type(both)
                    if (q2.base, q2.marked_points) != ("sphere", n + 2):
                        bad.append(f"{kind}{n} two 2n-gon caps")
        out.ok = not bad
        out.detail = "boundary multisets, χ and quotients match for n=3..10" if not bad else "; ".join(bad)


def test_7_theorem_end_to_end():
    with criterion(7, "cycle relation iff embedded disc") as out:
        total = certified = 0
        bad = []
        for n in range(3, 7):
            for base in capped_surfaces(n):
                for s in surface_variants(base):
                    total += 1
                    report = decide_cycle_relation(s)
                    found = surfaces.disc_orientations(s)
                    if report.status != {o: o in found for o in relations.Orientation}:
                        bad.append(s.name)
                    if report.certificate.kind != "theorem-only":
                        certified += 1
                        if not report.consistent:
                            bad.append(f"{s.name} certificate")
        out.ok = not bad
        out.detail = f"{total} surfaces, {certified} with Garside certificates, {len(bad)} discrepancies"


def test_8_torus():
    with criterion(8, "torus case") as out:
        out.ok = relations.sl2z_check()
        c = relations.TORUS_T1 @ relations.TORUS_T2
        out.detail = f"(T1T2)^6 = {(c ** 6).rows}, (T1T2)^3 = {(c ** 3).rows}"


def test_9_homogeneity():
    with criterion(9, "homogeneity inferences") as out:
        bad = []
        for n in range(3, 11):
            if n % 2:
                rep = relations.inhomogeneity_report(relations.odd_closed_relation(n))
                if (rep.total_lhs, rep.total_rhs, rep.inhomogeneous) != (2 * n * (n - 1), 0, True):
                    bad.append(f"odd-closed n={n}")
            if n >= 6:
                rep = relations.inhomogeneity_report(relations.not_artin6_relation(n))
                if (rep.total_lhs, rep.total_rhs, rep.inhomogeneous) != ((n - 3) * (n - 2), 2, True):
                    bad.append(f"two-orientation n={n}")
            cyc = relations.cycle_relation(n)
            if relations.inhomogeneity_report(cyc).inhomogeneous or not is_homogeneous(cyc):
                bad.append(f"cycle n={n}")
            if sum(exponent_vector(cyc.relator()).counts.values()) != 0:
                bad.append(f"cycle vector n={n}")
        out.ok = not bad
        out.detail = "inhomogeneous relators flagged, cycle relation homogeneous, n=3..10" if not bad else "; ".join(bad)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
