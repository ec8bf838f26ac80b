"""Acceptance suite: one test per criterion, at the stated tolerances.

Each test prints a single PASS/FAIL line with its runtime; run with
``pytest tests/test_acceptance.py -v -s`` to see them as they complete.
"""

import random
import time
from math import gcd, pi

from crosscap import audit, homology, invariants, mobius, words
from crosscap.invariants import ValueKind
from crosscap.knots import CableKnot, TorusKnot, TorusParams


class _Criterion:
    def __init__(self, number: int, description: str, budget_seconds: float):
        self.number = number
        self.description = description
        self.budget = budget_seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None and elapsed < self.budget else "FAIL"
        print(
            f"{status} criterion {self.number}: {self.description} "
            f"({elapsed:.2f}s, budget {self.budget:g}s)"
        )
        if exc_type is None:
            assert elapsed < self.budget, (
                f"criterion {self.number} overran its {self.budget}s budget: "
                f"{elapsed:.2f}s"
            )
        return False


def torus(a, b):
    return TorusKnot(TorusParams(a, b))


def test_criterion_1_family_values():
    with _Criterion(1, "gamma values on T(2k,2k-1) for k=2..10", 1.0):
        for k in range(2, 11):
            report = invariants.invariant_report(torus(2 * k, 2 * k - 1))
            assert report.gamma_i.is_known and report.gamma_i.value == 1
            assert report.gamma_3.is_known and report.gamma_3.value == k
            assert report.gamma_4.is_known and report.gamma_4.value == k - 1


def test_criterion_2_decision_surface():
    with _Criterion(2, "gamma_I decision surface, torus <=30 and cables <=10", 5.0):
        for a in range(-30, 31):
            for b in range(-30, 31):
                if a == 0 or b == 0 or gcd(abs(a), abs(b)) != 1:
                    continue
                value = invariants.gamma_I(torus(a, b))
                aa, bb = abs(a), abs(b)
                nontrivial = min(aa, bb) >= 2
                even = aa % 2 == 0 or bb % 2 == 0
                if nontrivial and even:
                    assert value.is_known and value.value == 1, (a, b)
                elif nontrivial:
                    assert value.kind is ValueKind.LOWER_BOUND, (a, b)
                    assert value.value == 2, (a, b)
                else:
                    assert value.is_known and value.value == 0, (a, b)
        companions = [torus(2, 3), torus(2, 5), torus(3, 5),
                      CableKnot(TorusParams(4, 3), torus(2, 3))]
        for companion in companions:
            for winding in list(range(2, 11)) + list(range(-10, -1)):
                for meridional in range(-10, 11):
                    if meridional == 0 or gcd(abs(winding), abs(meridional)) != 1:
                        continue
                    cable = CableKnot(TorusParams(winding, meridional), companion)
                    value = invariants.gamma_I(cable)
                    if winding % 2 == 0:
                        assert value.is_known and value.value == 1, cable
                    else:
                        assert value.kind is ValueKind.LOWER_BOUND, cable
                        assert value.value == 2, cable


def test_criterion_3_mesh_certification():
    with _Criterion(3, "swept band certification at theta_steps=256", 30.0):
        for p, q in [(1, 3), (1, 5), (2, 3), (2, 5), (3, 5)]:
            params = mobius.SweepParams(p=p, q=q, theta_steps=256)
            mesh = mobius.build_mobius(params)
            tol = 3.0 * mobius.max_edge_length(mesh)
            report = mobius.verify_mesh(mesh, params, tol=tol)
            assert report.euler_characteristic == 0, (p, q)
            assert report.boundary_component_count == 1, (p, q)
            assert report.orientable is False, (p, q)
            assert report.boundary_class == (2 * p, q), (p, q)
            theta_total, phi_total = mobius.boundary_winding_angles(
                mesh, params.ring_radius
            )
            assert abs(theta_total - 2 * pi * 2 * p) < 1e-6, (p, q)
            assert abs(phi_total - 2 * pi * q) < 1e-6, (p, q)
            points = mobius.self_intersection_points(mesh, params)
            if p == 1:
                assert len(points) == 0, (p, q)
            else:
                distances = mobius.distance_to_core_circle(
                    points, params.ring_radius
                )
                assert distances.max() <= tol, (p, q)
            assert report.max_offcore_selfintersection_distance <= tol, (p, q)


def test_criterion_4_parity_obstruction():
    with _Criterion(4, "relator insertions never change parity", 2.0):
        odd = (-9, -7, -5, -3, -1, 1, 3, 5, 7, 9)
        rng = random.Random(20260809)
        pool = [words.random_word(rng, max_len=40) for _ in range(200)]
        for p in odd:
            for q in odd:
                if gcd(abs(p), abs(q)) != 1:
                    continue
                for _ in range(1000):
                    w = pool[rng.randrange(len(pool))]
                    position = rng.randrange(len(w) + 1)
                    direction = "forward" if rng.getrandbits(1) else "backward"
                    spliced = words.insert_relator(w, position, p, q, direction)
                    assert words.algebraic_length_parity(spliced) == (
                        words.algebraic_length_parity(w)
                    ), (p, q, position, direction)
        for _ in range(1000):
            w = words.random_word(rng, max_len=40)
            assert words.algebraic_length_parity(w * w) == 0
        assert words.square_conjugate_obstruction(3, 5) is True
        assert words.square_conjugate_obstruction(4, 3) is False


def test_criterion_5_strand_counts():
    with _Criterion(5, "transitive strand counts up to 10000", 1.0):
        assert words.transitive_strand_counts(10_000) == {1, 2}


def test_criterion_6_formula_consistency():
    with _Criterion(6, "genus and crosscap formulas on the twisted families", 1.0):
        for n in range(2, 11):
            for p in range(0, 11, 2):
                first = TorusParams(2 * n - 1, 2 * n + p * (2 * n - 1))
                assert invariants.seifert_genus_torus(first).value == (
                    (n - 1) * (2 * n - 1) * (1 + p)
                ), (n, p)
                assert invariants.gamma3_torus(first).value == (p + 2 * n) // 2, (n, p)
                second = TorusParams(2 * n, 2 * n - 1 + 2 * p * n)
                assert invariants.seifert_genus_torus(second).value == (
                    (2 * n - 1) * (n - 1 + p * n)
                ), (n, p)


def test_criterion_7_homology_gap():
    with _Criterion(7, "embedded component bound for n=2..100", 1.0):
        previous_gap = None
        for n in range(2, 101):
            report = homology.embedded_component_bound(n)
            assert report.chi_immersed == 1
            assert report.chi_embedded_component_max == 1 - n
            assert report.surgery_slope == 2 * n * (2 * n - 1)
            assert homology.bredon_wood_chi_max(n) == 2 - n
            assert report.gap == n
            if previous_gap is not None:
                assert report.gap > previous_gap
            previous_gap = report.gap


def test_criterion_8_audit_runs_clean():
    with _Criterion(8, "full audit under one minute", 60.0):
        results = audit.run_audit(seed=0)
        failures = [r for r in results if not r.ok]
        assert not failures, "; ".join(f"{r.name}: {r.detail}" for r in failures)
