"""Acceptance suite: one test per criterion, exact tolerances throughout.

Each test prints a single `ACCEPTANCE <n> ...: PASS/FAIL (<elapsed>)` line
(visible with `pytest -s`); the stated runtime targets are printed for
inspection rather than asserted, so slow machines cannot flip a
mathematically correct run to red.
"""

import random
import time

from sagakit.algebra import (NotRegularSequence, from_inverse_system,
                             from_regular_sequence)
from sagakit.apolarity import is_cone
from sagakit.cli import build_parser, cmd_analyze
from sagakit.corpus import analysis_matches_expected, load_corpus
from sagakit.gnlab import (check_ggn, check_k1_bound, check_ker_coker,
                           corrupt_sample, degenerate_pair_search,
                           gn_map_check, monomial_quadric_ci, perazzo_algebra,
                           perazzo_fixture, sample_gamma, theorem_c_experiment)
from sagakit.lefschetz import (SLP, WLP, hessian_slp_crosscheck,
                               lefschetz_probe)
from sagakit.polyring import (FieldSpec, Polynomial, RATIONAL, monomial_basis,
                              parse_poly)
from sagakit.seeding import child_seed

PERAZZO = "x0*x3^2 + 2*x1*x3*x4 + x2*x4^2"
FERMAT4 = "x0^3 + x1^3 + x2^3 + x3^3"


class _Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        return False


def _line(num, label, ok, clock, target):
    verdict = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num} [{label}]: {verdict} "
          f"({clock.elapsed:.2f}s, target < {target})")


def _random_form(rng, n_vars, degree):
    basis = monomial_basis(n_vars, degree)
    while True:
        p = Polynomial(n_vars, RATIONAL,
                       {m: rng.randint(-3, 3) for m in basis})
        if not p.is_zero:
            return p


def _random_regular_quadrics(rng):
    basis = monomial_basis(5, 2)
    while True:
        forms = [Polynomial(5, RATIONAL,
                            {m: rng.randint(-4, 4) for m in basis})
                 for _ in range(5)]
        try:
            return from_regular_sequence(forms)
        except NotRegularSequence:
            continue


def test_acceptance_1_perazzo_fixture():
    with _Clock() as clock:
        report = perazzo_fixture(seed=1729)
        musts = ["ann2_dimension", "ann2_span_equality", "hilbert_vector",
                 "pairing_is_identity", "socle_class_equalities", "not_a_cone",
                 "hessian_vanishes"]
        ok = report.passed and all(report.assertions[m] for m in musts)
    _line(1, "perazzo fixture", ok, clock, "1s")
    assert ok, report.failing()


def test_acceptance_2_rank_hessian_crosscheck():
    with _Clock() as clock:
        forms = [parse_poly(PERAZZO, 5), parse_poly(FERMAT4, 4),
                 parse_poly("x0*x1", 2)]
        rng = random.Random(20_02)
        built = 0
        while built < 5:
            g = _random_form(rng, rng.choice([3, 4, 5]), 3)
            forms.append(g)
            built += 1
        ok = True
        for idx, g in enumerate(forms):
            point = [1] * g.n_vars
            # one fixed point plus seven seeded random points: 8 probes each
            ok = ok and hessian_slp_crosscheck(g, point, trials=7,
                                               seed=child_seed(2, idx))
    _line(2, "rank/hessian cross-check", ok, clock, "5s")
    assert ok


def test_acceptance_3_low_codimension_witnesses():
    with _Clock() as clock:
        rng = random.Random(30_03)
        ok = True
        built = 0
        while built < 25:
            n_vars = rng.choice([3, 4])
            degree = rng.choice([3, 4, 5])
            g = _random_form(rng, n_vars, degree)
            if is_cone(g):
                continue  # resample until the degree-1 annihilator vanishes
            algebra = from_inverse_system(g)
            assert algebra.codimension <= 4
            probe = lefschetz_probe(algebra, SLP, 1, trials=8,
                                    seed=child_seed(3, built))
            ok = ok and probe.holds
            built += 1
    _line(3, "codimension <= 4 strong witnesses", ok, clock, "30s")
    assert ok


def test_acceptance_4_quadric_ci_experiment():
    with _Clock() as clock:
        report = theorem_c_experiment(20, seed=42)
        ok = report.passed and report.skipped + report.passes == 20
        for entry in report.per_trial:
            if entry["status"] == "skip":
                continue
            ok = ok and entry["hilbert"] == [1, 5, 10, 10, 5, 1]
            ok = ok and entry["slp1"]["holds"] and entry["slp1"]["max_rank"] == 5
            ok = ok and entry["slp2"]["holds"] and entry["slp2"]["max_rank"] == 10
    _line(4, "quadric complete-intersection experiment", ok, clock, "60s")
    assert ok


def test_acceptance_5_gamma_identities():
    with _Clock() as clock:
        algebra = perazzo_algebra()
        ok = True
        for i in range(32):
            sample = sample_gamma(algebra, 1, seed=child_seed(5, i))
            ok = ok and check_ker_coker(algebra, sample)
            ok = ok and check_ggn(algebra, sample, t_values=(1, -1, 2, 7))
            yc = sample.y.coords
            ok = ok and yc[1] * yc[1] == yc[0] * yc[2]
            ok = ok and not yc[3] and not yc[4]
            bad = corrupt_sample(algebra, sample, seed=child_seed(50, i))
            ok = ok and not check_ker_coker(algebra, bad)
            ok = ok and not check_ggn(algebra, bad, t_values=(1, -1, 2, 7))
    _line(5, "incidence identities on 32 samples", ok, clock, "5s")
    assert ok


def test_acceptance_6_gn_map_identity():
    with _Clock() as clock:
        report = gn_map_check(perazzo_algebra(), x_samples=16, seed=6)
        ok = report.passed
        # the closed-form discrepancy must be recorded as a note, not a failure
        ok = ok and report.data["printed_map_matches_composition"] is False
        ok = ok and bool(report.notes)
        ok = ok and "composed_map" in report.data
    _line(6, "composed polar-map identity", ok, clock, "5s")
    assert ok


def test_acceptance_7_kernel_bounds():
    with _Clock() as clock:
        instances = [from_regular_sequence(monomial_quadric_ci())]
        rng = random.Random(70_07)
        for _ in range(3):
            instances.append(_random_regular_quadrics(rng))
        ok = True
        for inst_idx, algebra in enumerate(instances):
            draw = random.Random(child_seed(7, inst_idx))
            for h in range(1, 5):
                for _ in range(25):
                    eta = algebra.random_element(h, draw)
                    ok = ok and check_k1_bound(algebra, eta)
            probe = lefschetz_probe(algebra, WLP, 1, trials=8,
                                    seed=child_seed(71, inst_idx))
            # an injectivity witness: maximal rank 5 out of dim 5
            ok = ok and probe.holds and probe.max_rank_found == 5
    _line(7, "kernel dimension bounds", ok, clock, "30s")
    assert ok


def test_acceptance_8_degenerate_pairs_mod_p():
    with _Clock() as clock:
        f101 = FieldSpec.prime(101)
        monomial = from_regular_sequence(monomial_quadric_ci(f101))
        rng = random.Random(80_08)
        basis = monomial_basis(5, 2)
        while True:
            forms = [Polynomial(5, f101, {m: rng.randint(0, 100) for m in basis})
                     for _ in range(5)]
            try:
                random_ci = from_regular_sequence(forms)
                break
            except NotRegularSequence:
                continue
        found = []
        for algebra in (monomial, random_ci):
            for seed in range(3):
                pair = degenerate_pair_search(algebra, seed=seed, budget=64)
                if pair is not None:
                    found.append(pair)
        ok = len(found) >= 3
        for pair in found:
            ok = ok and pair.dim_k2_q in (6, 7) and pair.dim_k1_q <= 2
    _line(8, "degenerate pairs over F_101", ok, clock, "60s")
    assert ok


def test_acceptance_9_structural_gates():
    with _Clock() as clock:
        parser = build_parser()
        ok = True
        for entry in load_corpus():
            polys = entry.polynomials()
            algebra = (from_inverse_system(polys) if entry.kind == "form"
                       else from_regular_sequence(polys))
            ok = ok and algebra.hilbert_symmetric()
            ok = ok and algebra.is_standard()
            for s in range(algebra.socle_degree + 1):
                ok = ok and algebra.pairing_check(s)[0]
            args = parser.parse_args(["analyze", "--corpus", entry.name])
            report, code = cmd_analyze(args)
            ok = ok and code == 0 and analysis_matches_expected(report, entry)
    _line(9, "structural gates on the corpus", ok, clock, "10s")
    assert ok
