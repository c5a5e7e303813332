import itertools
import json

import numpy as np
import pytest
from sympy import Rational
from sympy.physics.quantum.cg import CG

from qdef.coupling import allowed_blocks, couple, qcg, verify_coupled_action
from qdef.qarith import QContext
from qdef.reps import aq1_spectrum, build_aq1_unirrep

COL = (1, -1)


def rep(N, d, q=0.5):
    return build_aq1_unirrep(N, d, QContext(q))


def test_allowed_blocks():
    assert allowed_blocks(1, 1) == [2, 0]
    assert allowed_blocks(3, 1) == [4, 2]
    assert allowed_blocks(0, 2) == [2]


@pytest.mark.parametrize("q", [0.3, 0.5, 0.9])
def test_singlet_oracle(q):
    # hand-derived: the N=0 block of spin-1/2 ⊗ spin-1/2 is (q|up,down> - |down,up>)/sqrt(1+q^2)
    t = qcg(1, 1, QContext(q))
    n = np.sqrt(1 + q * q)
    assert t.coefficient(0, 1, 0, 0) == pytest.approx(q / n, abs=1e-13)
    assert t.coefficient(1, 0, 0, 0) == pytest.approx(-1 / n, abs=1e-13)
    assert t.coefficient(0, 0, 0, 0) == 0.0 and t.coefficient(1, 1, 0, 0) == 0.0


def test_top_coefficient_is_one():
    for N1, N2 in itertools.product(range(4), repeat=2):
        t = qcg(N1, N2, QContext(0.5))
        assert t.coefficient(0, 0, N1 + N2, 0) == pytest.approx(1.0, abs=1e-13)
        assert t.coefficient(N1, N2, N1 + N2, N1 + N2) == pytest.approx(1.0, abs=1e-13)


@pytest.mark.parametrize("q", [0.3, 0.5, 0.9])
def test_orthogonality(q):
    for N1, N2 in itertools.product(range(4), repeat=2):
        W = qcg(N1, N2, QContext(q)).matrix()
        np.testing.assert_allclose(W.T @ W, np.eye(W.shape[1]), atol=1e-10)
        np.testing.assert_allclose(W @ W.T, np.eye(W.shape[0]), atol=1e-10)


def test_classical_limit_matches_sympy():
    q = 0.999
    for N1, N2 in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        t = qcg(N1, N2, QContext(q))
        j1, j2 = Rational(N1, 2), Rational(N2, 2)
        for N, B in t.blocks.items():
            J = Rational(N, 2)
            for n1, n2, n in itertools.product(range(N1 + 1), range(N2 + 1), range(N + 1)):
                ref = float(CG(j1, j1 - n1, j2, j2 - n2, J, J - n).doit())
                assert t.coefficient(n1, n2, N, n) == pytest.approx(ref, abs=0.01)


def test_couple_spin_half_pair():
    for zeta, eta, d in itertools.product(COL, repeat=3):
        table, blocks = couple(rep(1, zeta), rep(1, eta), d)
        assert [b.N for b in blocks] == [2, 0]
        assert table.colours == (zeta, eta, d)
        for b in blocks:
            assert b.delta == d
            np.testing.assert_allclose(b.j0_eigs, aq1_spectrum(b.N, d, QContext(0.5)), atol=1e-12)


def test_couple_with_trivial_rep():
    table, blocks = couple(rep(0, 1), rep(2, -1), -1)
    assert list(table.blocks) == [2]
    np.testing.assert_allclose(np.abs(table.matrix()), np.eye(3), atol=1e-13)
    np.testing.assert_allclose(blocks[0].Jp, rep(2, -1).Jp, atol=1e-13)


def test_couple_matches_qcg_for_all_colours():
    ref = qcg(2, 1, QContext(0.5)).matrix()
    for zeta, eta, d in itertools.product(COL, repeat=3):
        table, _ = couple(rep(2, zeta), rep(1, eta), d)
        np.testing.assert_allclose(table.matrix(), ref, atol=1e-10)


@pytest.mark.parametrize("N1,N2", [(1, 1), (2, 1), (1, 3), (3, 2)])
def test_verify_coupled_action(N1, N2):
    for zeta, eta, d in itertools.product(COL, repeat=3):
        recs = verify_coupled_action(rep(N1, zeta), rep(N2, eta), d)
        names = {r.identity for r in recs}
        assert {"wigner-orthogonal", "wigner-complete", f"coupled-casimir[N={N1 + N2}]"} <= names
        assert all(r.passed for r in recs), [r for r in recs if not r.passed]


def test_couple_rejects_suq2():
    from qdef.reps import build_suq2_unirrep
    with pytest.raises(ValueError):
        couple(build_suq2_unirrep(1, QContext(0.5)), rep(1, 1), 1)


def test_wigner_json_shape():
    d = qcg(1, 1, QContext(0.5)).to_dict()
    d = json.loads(json.dumps(d))
    assert d["N1"] == 1 and d["N2"] == 1
    assert [b["N"] for b in d["blocks"]] == [2, 0]
    assert np.array(d["blocks"][0]["coeffs"]).shape == (4, 3)
