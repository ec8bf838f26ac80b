"""Self-contained property suites for every module, run by ``crosscap audit``.

Each check re-derives an invariant by brute force or exhaustive enumeration
and compares it against the library path.  The whole suite is sized to
finish in well under a minute on default scales.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable

from . import homology, invariants, knots, mobius, words


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check(name: str, fn: Callable[[], None]) -> CheckResult:
    try:
        fn()
    except AssertionError as exc:
        return CheckResult(name, False, str(exc) or "assertion failed")
    except Exception as exc:  # a crash is a failure, not an abort
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, True)


# --- knot model -------------------------------------------------------------


def _knot_normalization(seed: int) -> None:
    rng = random.Random(seed)
    for _ in range(2000):
        a = rng.randint(-40, 40)
        b = rng.randint(-40, 40)
        if a == 0 or b == 0:
            continue
        t = knots.TorusParams(a, b)
        result = knots.validate(knots.TorusKnot(t))
        if gcd(abs(a), abs(b)) != 1:
            assert not result.ok, f"validate missed gcd violation on ({a}, {b})"
            continue
        assert result.ok, f"validate rejected coprime ({a}, {b})"
        norm = knots.normalize_torus(t)
        again = knots.normalize_torus(norm)
        assert norm == again, f"normalization not idempotent on ({a}, {b})"
        swapped = knots.normalize_torus(knots.TorusParams(b, a))
        mirrored = knots.normalize_torus(knots.TorusParams(-a, -b))
        assert norm == swapped == mirrored, f"normalization asymmetric on ({a}, {b})"


def _knot_grammar() -> None:
    samples = [
        "unknot",
        "torus(3,4)",
        "torus(-5,-3)",
        "cable(4,3; torus(2,3))",
        "cable(6,5; cable(4,3; torus(2,3)))",
        "external(6_1; hyperbolic=yes, slice=yes)",
        "external(granny)",
    ]
    for text in samples:
        k = knots.parse_knot(text)
        assert knots.parse_knot(knots.format_knot(k)) == k, f"round-trip broke {text}"


# --- invariants -------------------------------------------------------------


def _gamma_i_decision_surface() -> None:
    for a in range(-30, 31):
        for b in range(-30, 31):
            if a == 0 or b == 0 or gcd(abs(a), abs(b)) != 1:
                continue
            k = knots.TorusKnot(knots.TorusParams(a, b))
            value = invariants.gamma_I(k)
            norm = knots.normalize_torus(knots.TorusParams(a, b))
            if norm is None:
                assert value.is_known and value.value == 0, f"unknot case ({a},{b})"
            elif norm.winding % 2 == 0 or norm.meridional % 2 == 0:
                assert value.is_known and value.value == 1, f"even case ({a},{b})"
            else:
                assert value.kind is invariants.ValueKind.LOWER_BOUND
                assert value.value == 2, f"odd-odd case ({a},{b})"


def _gamma_i_cables() -> None:
    companions = [
        knots.TorusKnot(knots.TorusParams(2, 3)),
        knots.TorusKnot(knots.TorusParams(3, 5)),
        knots.TorusKnot(knots.TorusParams(2, 5)),
    ]
    for companion in companions:
        for winding in range(2, 11):
            for meridional in range(1, 11):
                if gcd(winding, meridional) != 1:
                    continue
                k = knots.CableKnot(knots.TorusParams(winding, meridional), companion)
                value = invariants.gamma_I(k)
                if winding % 2 == 0:
                    assert value.is_known and value.value == 1, f"cable {k}"
                else:
                    assert value.kind is invariants.ValueKind.LOWER_BOUND, f"cable {k}"


def _genus_families() -> None:
    for n in range(2, 11):
        for p in range(0, 11, 2):
            first = knots.TorusParams(2 * n - 1, 2 * n + p * (2 * n - 1))
            g = invariants.seifert_genus_torus(first)
            assert g.value == (n - 1) * (2 * n - 1) * (1 + p), f"genus {first}"
            c = invariants.gamma3_torus(first)
            assert c.is_known and c.value == (p + 2 * n) // 2, f"gamma3 {first}"
            second = knots.TorusParams(2 * n, 2 * n - 1 + 2 * p * n)
            g2 = invariants.seifert_genus_torus(second)
            assert g2.value == (2 * n - 1) * (n - 1 + p * n), f"genus {second}"


def _gap_growth() -> None:
    rows = invariants.gap_table(50)
    previous = None
    for k, row in zip(range(2, 51), rows):
        assert row.gamma_i.value == 1
        assert row.gamma_3.value == k
        assert row.gamma_4.value == k - 1
        assert row.gamma_3.value >= row.gamma_4.value
        assert row.gap_3i == k - 1 and row.gap_4i == k - 2
        if previous is not None:
            assert row.gap_3i > previous[0] and row.gap_4i > previous[1]
        previous = (row.gap_3i, row.gap_4i)


# --- swept band -------------------------------------------------------------

_AUDIT_MESH_CASES = [(1, 3), (1, 5), (2, 3), (2, 5), (3, 5)]


def _mesh_certification() -> None:
    for p, q in _AUDIT_MESH_CASES:
        params = mobius.SweepParams(p=p, q=q, theta_steps=256)
        mesh = mobius.build_mobius(params)
        report = mobius.verify_mesh(mesh, params)
        assert report.euler_characteristic == 0, f"chi for ({p},{q})"
        assert report.boundary_component_count == 1, f"boundary for ({p},{q})"
        assert not report.orientable, f"orientability for ({p},{q})"
        assert report.boundary_class == (2 * p, q), f"class for ({p},{q})"
        assert report.core_multiplicity == p, f"core sheets for ({p},{q})"
        tol = 3.0 * mobius.max_edge_length(mesh)
        assert report.max_offcore_selfintersection_distance <= tol, (
            f"double points stray {report.max_offcore_selfintersection_distance} "
            f"from the core for ({p},{q}), tolerance {tol}"
        )
        if p == 1:
            points = mobius.self_intersection_points(mesh, params)
            assert len(points) == 0, "p=1 band must be embedded"


def _mesh_monodromy() -> None:
    for p in range(1, 21):
        for q in range(-20, 21):
            if q == 0 or gcd(2 * p, abs(q)) != 1 or 2 * p * abs(q) > 40:
                continue
            length, flipped = mobius.chord_cycle(p, q)
            assert length == p, f"chord cycle for ({p},{q}) has length {length}"
            assert flipped, f"chord cycle for ({p},{q}) came back unflipped"


def _mesh_small_parameter_sweep() -> None:
    p = 1
    while 2 * p <= 40:
        for q_abs in range(1, 40 // (2 * p) + 1):
            if gcd(2 * p, q_abs) != 1:
                continue
            for q in (q_abs, -q_abs):
                params = mobius.SweepParams(
                    p=p, q=q, theta_steps=max(8, 4 * p * q_abs), chord_steps=3
                )
                mesh = mobius.build_mobius(params)
                assert mobius.euler_characteristic(mesh) == 0, f"chi ({p},{q})"
                assert len(mobius.boundary_cycles(mesh)) == 1, f"boundary ({p},{q})"
                assert not mobius.is_orientable(mesh), f"orientable ({p},{q})"
        p += 1


def _mesh_refinement_stability() -> None:
    base = mobius.SweepParams(p=2, q=3, theta_steps=32, chord_steps=4)
    fine = mobius.SweepParams(p=2, q=3, theta_steps=64, chord_steps=8)
    report_a = mobius.verify_mesh(mobius.build_mobius(base), base)
    report_b = mobius.verify_mesh(mobius.build_mobius(fine), fine)
    for field in (
        "euler_characteristic",
        "boundary_component_count",
        "orientable",
        "boundary_class",
        "core_multiplicity",
    ):
        assert getattr(report_a, field) == getattr(report_b, field), field


# --- group words ------------------------------------------------------------


def _parity_invariance(seed: int) -> None:
    rng = random.Random(seed)
    pool = [words.random_word(rng) for _ in range(200)]
    odd = (-9, -7, -5, -3, -1, 1, 3, 5, 7, 9)
    pairs = [
        (p, q) for p in odd for q in odd if gcd(abs(p), abs(q)) == 1
    ]
    for p, q in pairs:
        for round_index in range(1000):
            w = pool[rng.randrange(len(pool))]
            parity = words.algebraic_length_parity(w)
            pos = rng.randrange(len(w.letters) + 1)
            direction = "forward" if rng.getrandbits(1) else "backward"
            w2 = words.insert_relator(w, pos, p, q, direction)
            assert words.algebraic_length_parity(w2) == parity, (
                f"insertion of ({p},{q}) changed parity"
            )
            if round_index % 20 == 0:
                cancellable = words.cancellable_positions(w2)
                if cancellable:
                    w3 = words.cancel_pair(w2, rng.choice(cancellable))
                    assert words.algebraic_length_parity(w3) == parity, (
                        f"cancellation after ({p},{q}) changed parity"
                    )


def _even_relator_witness() -> None:
    for p, q in ((4, 3), (3, 4), (2, 5), (9, 8)):
        w = words.parse_word("x y x")
        w2 = words.insert_relator(w, 1, p, q)
        assert (
            words.algebraic_length_parity(w2)
            != words.algebraic_length_parity(w)
        ), f"odd-length relator ({p},{q}) should flip parity"


def _squares_are_even(seed: int) -> None:
    rng = random.Random(seed)
    for _ in range(1000):
        w = words.random_word(rng)
        assert words.algebraic_length_parity(w * w) == 0, f"square of {w}"


def _strand_counts() -> None:
    assert words.transitive_strand_counts(10_000) == {1, 2}


# --- homology ---------------------------------------------------------------


def _gap_reports() -> None:
    previous = None
    for n in range(2, 101):
        report = homology.embedded_component_bound(n)
        assert report.surgery_slope == 2 * n * (2 * n - 1)
        assert report.chi_immersed == 1
        assert report.chi_embedded_component_max == 1 - n
        assert report.gap == n
        assert report.chi_embedded_component_max + 1 == homology.bredon_wood_chi_max(n)
        if previous is not None:
            assert report.gap > previous
        previous = report.gap


def _twist_monotonicity() -> None:
    for n in range(2, 11):
        prev = None
        for chi in range(1, -21, -1):
            p = homology.minimal_twist_contradiction(chi, n)
            if prev is not None:
                assert p >= prev, f"twist count dropped as chi fell at ({chi},{n})"
            prev = p
    for chi in range(-20, 2):
        prev = None
        for n in range(2, 11):
            p = homology.minimal_twist_contradiction(chi, n)
            if prev is not None:
                assert p <= prev, f"twist count rose with n at ({chi},{n})"
            prev = p


def _genus_cross_check() -> None:
    for n in range(2, 11):
        for p in range(0, 11, 2):
            t = knots.TorusParams(2 * n - 1, 2 * n + p * (2 * n - 1))
            assert (
                invariants.seifert_genus_torus(t).value
                == homology.twisted_seifert_genus(n, p)
            ), f"genus mismatch at ({n},{p})"


def run_audit(seed: int = 0) -> list[CheckResult]:
    """Run every property suite; results carry one line per check."""
    suites: list[tuple[str, Callable[[], None]]] = [
        ("knots: normalization idempotent, symmetric, gcd fuzz",
         lambda: _knot_normalization(seed)),
        ("knots: grammar round-trip", _knot_grammar),
        ("invariants: gamma_I decision surface, entries <= 30",
         _gamma_i_decision_surface),
        ("invariants: gamma_I on cables, winding <= 10", _gamma_i_cables),
        ("invariants: genus/crosscap twisted families", _genus_families),
        ("invariants: gap table strictly increasing to k = 50", _gap_growth),
        ("mobius: certify swept bands at theta_steps = 256", _mesh_certification),
        ("mobius: every band with 2p|q| <= 40 is one Moebius band",
         _mesh_small_parameter_sweep),
        ("mobius: chord monodromy is one flipped cycle", _mesh_monodromy),
        ("mobius: refinement leaves integer report unchanged",
         _mesh_refinement_stability),
        ("words: relator insertions and cancellations keep parity",
         lambda: _parity_invariance(seed)),
        ("words: odd-length relators flip parity", _even_relator_witness),
        ("words: squares always have parity 0", lambda: _squares_are_even(seed)),
        ("words: transitive strand counts up to 10000", _strand_counts),
        ("homology: gap reports for n = 2..100", _gap_reports),
        ("homology: twist contradiction monotone", _twist_monotonicity),
        ("homology: genus formulas agree across modules", _genus_cross_check),
    ]
    return [_check(name, fn) for name, fn in suites]
