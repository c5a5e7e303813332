"""Acceptance criteria 1-13, one test each, printed as pass/fail lines."""
import itertools
import time

import numpy as np
from sympy import Rational
from sympy.physics.quantum.cg import CG

from qdef import hopf
from qdef.algebra import CATALOG_NAMES, check_consistency, make_catalog_algebra, map_g, map_p_delta
from qdef.coupling import couple, qcg, verify_coupled_action
from qdef.qarith import QContext, q_number, raise_closed_form, raise_map
from qdef.reps import (apply_map_p_delta, aq1_spectrum, build_aq1_unirrep, build_suq2_unirrep,
                       casimir_matrix, gamma, ladder_spectrum, rep_commutation_residuals,
                       sigma_j0, transmute_check)

Q_GRID = (0.3, 0.5, 0.9)
COL = (1, -1)


def _worst(records, prefix=""):
    sel = [r for r in records if r.identity.startswith(prefix)]
    assert sel, f"no records named {prefix!r}"
    return max(r.residual for r in sel)


def test_criterion_01_commutation(acceptance_report):
    t0 = time.perf_counter()
    worst = 0.0
    for q, N, d in itertools.product(Q_GRID, range(9), COL):
        worst = max(worst, *rep_commutation_residuals(build_aq1_unirrep(N, d, QContext(q))).values())
    elapsed = time.perf_counter() - t0
    assert acceptance_report(1, "commutation relations", worst, 1e-9, f", {elapsed:.2f}s")
    assert elapsed < 5.0


def test_criterion_02_casimir(acceptance_report):
    off = value = 0.0
    for q, N, d in itertools.product(Q_GRID, range(9), COL):
        ctx = QContext(q)
        rep = build_aq1_unirrep(N, d, ctx)
        h = float(make_catalog_algebra("aq1", ctx).H(gamma(N, d, ctx)))
        off = max(off, np.max(np.abs(casimir_matrix(rep) - h * np.eye(N + 1))))
        value = max(value, abs(h - q_number(N / 2, ctx) * q_number(N / 2 + 1, ctx)))
    assert acceptance_report(2, "Casimir scalar and equal to [N/2][N/2+1]", max(off, value), 1e-9)


def test_criterion_03_consistency(acceptance_report):
    samples = np.random.default_rng(2024).uniform(-5.0, 5.0, 100)
    worst = 0.0
    for q, name in itertools.product(Q_GRID, CATALOG_NAMES):
        r = check_consistency(make_catalog_algebra(name, QContext(q, p=0.7)), samples)
        assert r.passed, (name, q, r)
        worst = max(worst, r.max_residual)
    assert acceptance_report(3, "consistency condition (scaled residual)", worst, 1e-10)


def test_criterion_04_map_p_delta(acceptance_report):
    entry = trip = 0.0
    for q in Q_GRID:
        ctx = QContext(q)
        for N, d in itertools.product(range(7), COL):
            a = apply_map_p_delta(build_suq2_unirrep(N, ctx), d)
            b = build_aq1_unirrep(N, d, ctx)
            entry = max(entry, np.max(np.abs(a.J0 - b.J0)), np.max(np.abs(a.Jp - b.Jp)),
                        np.max(np.abs(a.Jm - b.Jm)), abs(a.casimir - b.casimir))
        z = np.linspace(-6.0, 6.0, 241)
        for d in COL:
            trip = max(trip, np.max(np.abs(map_g(map_p_delta(z, d, ctx), ctx) - z)))
    ok = acceptance_report(4, "map P_delta entrywise", entry, 1e-10)
    ok &= acceptance_report(4, "g inverts p_delta", trip, 1e-12)
    assert ok


def test_criterion_05_exponential_spectrum(acceptance_report):
    worst = 0.0
    fixed_exact = True
    for q in Q_GRID:
        ctx = QContext(q)
        for m in (-3.0, -0.5, 0.0, 0.7, 4.0):
            x = m
            for n in range(1, 31):
                x = raise_map(x, ctx)
                ref = raise_closed_form(m, n, ctx)
                worst = max(worst, abs(x - ref) / max(1.0, abs(ref)))
        fp = 1.0 / (q - 1.0)
        fixed_exact &= raise_map(fp, ctx) == fp
    assert fixed_exact
    assert acceptance_report(5, "exponential spectrum (relative)", worst, 1e-9)


def test_criterion_06_transmutation(acceptance_report):
    worst = 0.0
    for q, N, d in itertools.product(Q_GRID, range(7), COL):
        rep = build_aq1_unirrep(N, d, QContext(q))
        worst = max(worst, *transmute_check(rep).residuals.values())
    assert acceptance_report(6, "transmutation via sigma", worst, 1e-10)


def test_criterion_07_hopf_axioms(acceptance_report):
    t0 = time.perf_counter()
    recs = []
    for q in Q_GRID:
        ctx = QContext(q)
        for Ns in itertools.product(range(3), repeat=3):
            recs += hopf.check_hopf_axioms([build_aq1_unirrep(N, 1, ctx) for N in Ns], tol=1e-9)
    elapsed = time.perf_counter() - t0
    axioms = [r for r in recs if not r.identity.startswith("sigma")]
    worst = max(r.residual for r in axioms)
    assert all(r.passed for r in axioms)
    assert acceptance_report(7, f"Hopf axioms ({len(axioms)} checks)", worst, 1e-9, f", {elapsed:.1f}s")
    assert elapsed < 60.0


def test_criterion_08_sigma_laws(acceptance_report):
    recs = []
    for q in Q_GRID:
        ctx = QContext(q)
        for Ns in itertools.product(range(3), repeat=2):
            recs += hopf.check_sigma_laws([build_aq1_unirrep(N, 1, ctx) for N in Ns], tol=1e-9)
    assert all(r.passed for r in recs)
    assert acceptance_report(8, f"sigma transformation laws ({len(recs)} checks)", _worst(recs), 1e-9)


def test_criterion_09_r_matrix(acceptance_report):
    recs = []
    for q in Q_GRID:
        ctx = QContext(q)
        for Ns in itertools.product(range(3), repeat=2):
            recs += hopf.check_r_matrix([build_aq1_unirrep(N, 1, ctx) for N in Ns], tol=1e-8)
        for Ns in itertools.product(range(3), repeat=3):
            recs += hopf.check_r_fission([build_aq1_unirrep(N, 1, ctx) for N in Ns], tol=1e-8)
    names = {r.identity.split("[")[0] for r in recs}
    assert {"R-invertible", "R-intertwining"} <= names
    assert all(r.passed for r in recs)
    assert acceptance_report(9, f"R invertible, intertwining, fission ({len(recs)} checks)", _worst(recs), 1e-8)


def test_criterion_10_ybe_and_r_identities(acceptance_report):
    t0 = time.perf_counter()
    recs = []
    for q in Q_GRID:
        ctx = QContext(q)
        for N in (1, 2):
            recs += hopf.ybe_sweep([build_aq1_unirrep(N, 1, ctx)] * 3, tol=1e-8)
            recs += hopf.check_r_counit_antipode([build_aq1_unirrep(N, 1, ctx)] * 2, tol=1e-8)
    elapsed = time.perf_counter() - t0
    assert len([r for r in recs if r.identity == "coloured-YBE"]) == 8 * 2 * len(Q_GRID)
    assert all(r.passed for r in recs)
    assert acceptance_report(10, "coloured YBE and R counit/antipode", _worst(recs), 1e-8, f", {elapsed:.1f}s")
    assert elapsed < 120.0


def test_criterion_11_coupling(acceptance_report):
    orth = action = 0.0
    mixed = 0
    for q in Q_GRID:
        ctx = QContext(q)
        for N1, N2, zeta, eta, d in itertools.product(range(4), range(4), COL, COL, COL):
            r1, r2 = build_aq1_unirrep(N1, zeta, ctx), build_aq1_unirrep(N2, eta, ctx)
            recs = verify_coupled_action(r1, r2, d)
            dims = next(r for r in recs if r.identity == "block-dimensions")
            assert dims.passed and dims.residual == 0
            orth = max(orth, _worst(recs, "wigner-orthogonal"), _worst(recs, "wigner-complete"))
            action = max(action, _worst(recs, "coupled-J"))
            mixed += zeta != eta
    assert mixed == len(Q_GRID) * 16 * 4
    ok = acceptance_report(11, "Wigner matrix orthogonal", orth, 1e-10)
    ok &= acceptance_report(11, "coupled action equals unirrep matrices", action, 1e-9)
    assert ok


def test_criterion_12_classical_limit(acceptance_report):
    ctx = QContext(0.999)
    spec = 0.0
    for N in range(5):
        classical = N / 2 - np.arange(N + 1)
        spec = max(spec, np.max(np.abs(aq1_spectrum(N, 1, ctx) - classical)))
        # the delta=-1 family sits near 2/(q-1); sigma brings it back to the classical range
        minus = np.diag(sigma_j0(np.diag(aq1_spectrum(N, -1, ctx)), ctx))
        spec = max(spec, np.max(np.abs(minus - classical)))
    cg = 0.0
    half = Rational(1, 2)
    tables = [qcg(1, 1, ctx)] + [couple(build_aq1_unirrep(1, z, ctx), build_aq1_unirrep(1, e, ctx), d)[0]
                                 for z, e, d in itertools.product(COL, repeat=3)]
    for t in tables:
        for N, n1, n2 in itertools.product((2, 0), range(2), range(2)):
            for n in range(N + 1):
                ref = float(CG(half, half - n1, half, half - n2, Rational(N, 2), Rational(N, 2) - n).doit())
                cg = max(cg, abs(t.coefficient(n1, n2, N, n) - ref))
    ok = acceptance_report(12, "classical spectra at q=0.999", spec, 0.02)
    ok &= acceptance_report(12, "q-CG near classical CG", cg, 0.01)
    assert ok


def test_criterion_13_no_infinite_unirreps(acceptance_report):
    failures = 0
    seeds = 0
    for q in Q_GRID:
        ctx = QContext(q)
        spec = make_catalog_algebra("aq1", ctx)
        for N, d in itertools.product(range(7), COL):
            m = aq1_spectrum(N, d, ctx)
            c = float(spec.H(gamma(N, d, ctx)))
            for m0 in m:
                seeds += 1
                r = ladder_spectrum(spec, float(m0), N + 1, casimir=c)
                ok = (r.classification == "finite-candidate" and not r.violation
                      and len(r.raise_chain) <= N and len(r.lower_chain) <= N
                      and abs(r.top - m[0]) <= 1e-9 * max(1, abs(m[0]))
                      and abs(r.bottom - m[-1]) <= 1e-9 * max(1, abs(m[-1])))
                failures += not ok
    assert acceptance_report(13, f"ladders terminate both ways ({seeds} seeds)", failures, 0)
