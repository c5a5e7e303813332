"""q-Clebsch-Gordan coefficients and the coupling of A+_q(1) unirreps.

Coefficients are obtained by decomposing a coupled ladder pair (J+, J-)
directly: the highest-weight vector of each block spans the kernel of the
coupled J+ on its weight space (orthogonal to blocks already found), and
the rest of the block follows by normalized application of the coupled J-.
Sign convention: in every highest-weight vector the coefficient with the
largest first-factor weight (smallest n1) is positive.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import null_space

from qdef.algebra import make_catalog_algebra, map_g
from qdef.hopf import CheckRecord, GENERATORS, Realization, coproduct_map
from qdef.linalg import max_abs, spectral_apply
from qdef.qarith import QContext
from qdef.reps import Unirrep, build_aq1_unirrep, build_suq2_unirrep, check_colour, gamma


class DecompositionError(RuntimeError):
    pass


@dataclass
class WignerTable:
    """Coefficients <n1, n2 | N, n> stored per block as arrays of shape ((N1+1)(N2+1), N+1).

    Row index n1 * (N2+1) + n2 runs over the product basis, column n over the block.
    """

    N1: int
    N2: int
    blocks: dict[int, np.ndarray]
    colours: tuple | None = None

    @property
    def dim(self) -> int:
        return (self.N1 + 1) * (self.N2 + 1)

    def matrix(self) -> np.ndarray:
        """Full orthogonal change of basis; columns ordered by N descending, then n."""
        return np.hstack([self.blocks[N] for N in sorted(self.blocks, reverse=True)])

    def coefficient(self, n1: int, n2: int, N: int, n: int) -> float:
        return float(self.blocks[N][n1 * (self.N2 + 1) + n2, n])

    def to_dict(self) -> dict:
        return {
            "N1": self.N1,
            "N2": self.N2,
            "colours": None if self.colours is None else list(self.colours),
            "blocks": [{"N": N, "coeffs": self.blocks[N].tolist()} for N in sorted(self.blocks, reverse=True)],
        }


def allowed_blocks(N1: int, N2: int) -> list[int]:
    return list(range(N1 + N2, abs(N1 - N2) - 1, -2))


def decompose(jp: np.ndarray, jm: np.ndarray, weights: np.ndarray, N1: int, N2: int,
              tol: float = 1e-9) -> dict[int, np.ndarray]:
    """Split a coupled ladder into irreducible blocks.

    ``weights`` holds the su_q(2) label (m1 + m2) of each product basis state.
    """
    D = jp.shape[0]
    n2 = N2 + 1
    found = np.zeros((D, 0))
    blocks = {}
    for N in allowed_blocks(N1, N2):
        idx = np.flatnonzero(np.abs(weights - N / 2.0) < 1e-9)
        constraints = jp[:, idx]
        if found.shape[1]:
            constraints = np.vstack([constraints, found[idx, :].T])
        kernel = null_space(constraints, rcond=tol)
        if kernel.shape[1] != 1:
            raise DecompositionError(
                f"highest weight N={N} has multiplicity {kernel.shape[1]}, expected 1")
        top = np.zeros(D)
        top[idx] = kernel[:, 0]
        # leading coefficient: smallest n1 with a nonzero entry
        lead = next(i for i in np.argsort(idx // n2, kind="stable") if abs(kernel[i, 0]) > tol)
        if kernel[lead, 0] < 0:
            top = -top
        cols = [top / np.linalg.norm(top)]
        for _ in range(N):
            v = jm @ cols[-1]
            cols.append(v / np.linalg.norm(v))
        B = np.column_stack(cols)
        blocks[N] = B
        found = np.hstack([found, B])
    if found.shape[1] != D:
        raise DecompositionError(f"blocks span {found.shape[1]} of {D} dimensions")
    return blocks


def suq2_coproduct(N1: int, N2: int, ctx: QContext) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """j+- ⊗ q^{j0} + q^{-j0} ⊗ j+- and the total weight, on the product of two su_q(2) unirreps."""
    a, b = build_suq2_unirrep(N1, ctx), build_suq2_unirrep(N2, ctx)
    q = ctx.q
    ka_inv, kb = np.diag(q ** -a.j0_eigs), np.diag(q ** b.j0_eigs)
    jp = np.kron(a.Jp, kb) + np.kron(ka_inv, b.Jp)
    jm = np.kron(a.Jm, kb) + np.kron(ka_inv, b.Jm)
    weights = np.add.outer(a.j0_eigs, b.j0_eigs).ravel()
    return jp, jm, weights


def qcg(N1: int, N2: int, ctx: QContext) -> WignerTable:
    """su_q(2) Wigner coefficients for the coproduct j+- ⊗ q^{j0} + q^{-j0} ⊗ j+-."""
    if N1 < 0 or N2 < 0:
        raise ValueError("N1 and N2 must be nonnegative")
    jp, jm, w = suq2_coproduct(N1, N2, ctx)
    return WignerTable(N1, N2, decompose(jp, jm, w, N1, N2))


@dataclass
class Coupling:
    table: WignerTable
    blocks: list[Unirrep]
    coproduct: Realization = field(repr=False)


def couple(rep1: Unirrep, rep2: Unirrep, delta: int) -> tuple[WignerTable, list[Unirrep]]:
    c = coupling(rep1, rep2, delta)
    return c.table, c.blocks


def coupling(rep1: Unirrep, rep2: Unirrep, delta: int) -> Coupling:
    """Decompose V1 ⊗ V2 under Delta^{zeta,eta}_delta, zeta and eta being the carriers' colours."""
    if rep1.delta is None or rep2.delta is None:
        raise ValueError("couple needs coloured A+_q(1) unirreps")
    delta = check_colour(delta)
    ctx = rep1.ctx
    zeta, eta = rep1.delta, rep2.delta
    D = coproduct_map(Realization.of(rep1), Realization.of(rep2), zeta, eta, delta)
    # g inverts p_delta, recovering the su_q(2) weight of each product state
    weights = map_g(np.diag(D.j0), ctx)
    rounded = np.round(2.0 * weights) / 2.0
    if max_abs(weights - rounded) > 1e-8:
        raise DecompositionError("coupled J0 spectrum is not of the form p_delta(half-integer)")
    blocks = decompose(D.jp, D.jm, rounded, rep1.N, rep2.N)
    table = WignerTable(rep1.N, rep2.N, blocks, (zeta, eta, delta))
    spec = make_catalog_algebra("aq1", ctx)
    out = []
    for N in sorted(blocks, reverse=True):
        B = blocks[N]
        j0, jp, jm = (B.T @ m @ B for m in (D.j0, D.jp, D.jm))
        C = jm @ jp + spectral_apply(spec.H, j0)
        value = float(np.mean(np.diag(C)))
        if max_abs(C - value * np.eye(N + 1)) > ctx.tolerance(abs(value)) * 10:
            raise DecompositionError(f"block N={N} has a non-scalar Casimir")
        out.append(Unirrep(spec, N, delta, np.diag(j0).copy(), jp, jm, value))
    return Coupling(table, out, D)


def verify_coupled_action(rep1: Unirrep, rep2: Unirrep, delta: int,
                          tol: float | None = None) -> list[CheckRecord]:
    """Compare the coupled-basis action of the coproduct with the standard unirrep matrices."""
    ctx = rep1.ctx
    c = coupling(rep1, rep2, delta)
    colours = (rep1.delta, rep2.delta, delta)
    dims = (rep1.dim, rep2.dim)
    W = c.table.matrix()
    D = c.table.dim

    def rec(name, res, scale):
        limit = tol if tol is not None else ctx.tolerance(scale)
        return CheckRecord(name, colours, dims, ctx.q, float(res), bool(res <= limit))

    out = [rec("wigner-orthogonal", max_abs(W.T @ W - np.eye(D)), 1.0),
           rec("wigner-complete", max_abs(W @ W.T - np.eye(D)), 1.0),
           rec("block-dimensions", abs(sum(b.dim for b in c.blocks) - D), 1.0)]
    ref = qcg(rep1.N, rep2.N, ctx)
    out.append(rec("wigner-colour-independent", max_abs(W - ref.matrix()), 1.0))
    full = {g: W.T @ c.coproduct.generator(g) @ W for g in GENERATORS}
    k = 0
    for block in c.blocks:
        std = build_aq1_unirrep(block.N, delta, ctx)
        sl = slice(k, k + block.dim)
        for g, expect in zip(GENERATORS, (std.J0, std.Jp, std.Jm)):
            M = full[g]
            off = M.copy()
            off[sl, sl] = 0.0
            res = max(max_abs(M[sl, sl] - expect), max_abs(off[:, sl]), max_abs(off[sl, :]))
            out.append(rec(f"coupled-{g}[N={block.N}]", res, max_abs(expect)))
        out.append(rec(f"coupled-casimir[N={block.N}]", abs(block.casimir - std.casimir), abs(std.casimir)))
        k += block.dim
    return out
