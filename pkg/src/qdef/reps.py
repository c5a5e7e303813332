"""Finite-dimensional unirreps of A+_q(1) and su_q(2), ladder spectra of
DQAs with affine G, Casimir and transmutation checks.

Basis convention: index n = 0..N with n = 0 the highest-weight state, so
J+ is strictly upper triangular, J- strictly lower triangular, and the
su_q(2) weight of basis vector n is N/2 - n.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from qdef.algebra import AlgebraSpec, make_catalog_algebra, map_p_delta
from qdef.linalg import max_abs, spectral_apply
from qdef.qarith import QContext, lower_map, q_number, raise_map

COLOURS = (1, -1)


def check_colour(value) -> int:
    if value not in COLOURS:
        raise ValueError(f"colour label must be +1 or -1, got {value!r}")
    return int(value)


@dataclass(frozen=True, eq=False)
class Unirrep:
    """An (N+1)-dimensional unirrep; ``delta`` is None for su_q(2)."""

    algebra: AlgebraSpec
    N: int
    delta: int | None
    j0_eigs: np.ndarray
    Jp: np.ndarray
    Jm: np.ndarray
    casimir: float

    @property
    def ctx(self) -> QContext:
        return self.algebra.ctx

    @property
    def dim(self) -> int:
        return self.N + 1

    @property
    def J0(self) -> np.ndarray:
        return np.diag(self.j0_eigs)

    @property
    def weights(self) -> np.ndarray:
        """su_q(2) labels N/2 - n of the basis vectors."""
        return self.N / 2.0 - np.arange(self.N + 1)

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra.to_dict(),
            "N": self.N,
            "delta": self.delta,
            "q": self.ctx.q,
            "j0": [float(x) for x in self.j0_eigs],
            "Jplus": self.Jp.tolist(),
            "Jminus": self.Jm.tolist(),
            "casimir": float(self.casimir),
        }


def _ladder_matrices(N: int, ctx: QContext) -> tuple[np.ndarray, np.ndarray]:
    n = np.arange(N)
    Jm = np.zeros((N + 1, N + 1))
    Jm[n + 1, n] = np.sqrt(q_number(n + 1, ctx) * q_number(N - n, ctx))
    return Jm.T.copy(), Jm


def gamma(N: int, delta: int, ctx: QContext) -> float:
    """Argument gamma^delta at which H gives the Casimir value of the N unirrep."""
    return map_p_delta(N / 2.0, delta, ctx)


def aq1_spectrum(N: int, delta: int, ctx: QContext) -> np.ndarray:
    """m^delta(n) = (1 - delta q^-(N-2n)/2)/(q-1), n = 0..N."""
    return map_p_delta(N / 2.0 - np.arange(N + 1), delta, ctx)


def build_aq1_unirrep(N: int, delta: int, ctx: QContext) -> Unirrep:
    if N < 0 or int(N) != N:
        raise ValueError(f"N must be a nonnegative integer, got {N!r}")
    delta = check_colour(delta)
    spec = make_catalog_algebra("aq1", ctx)
    Jp, Jm = _ladder_matrices(int(N), ctx)
    return Unirrep(spec, int(N), delta, aq1_spectrum(int(N), delta, ctx), Jp, Jm,
                   float(spec.H(gamma(int(N), delta, ctx))))


def build_suq2_unirrep(N: int, ctx: QContext) -> Unirrep:
    if N < 0 or int(N) != N:
        raise ValueError(f"N must be a nonnegative integer, got {N!r}")
    spec = make_catalog_algebra("suq2", ctx)
    Jp, Jm = _ladder_matrices(int(N), ctx)
    j = N / 2.0
    return Unirrep(spec, int(N), None, j - np.arange(N + 1), Jp, Jm, float(spec.H(j)))


def apply_map_p_delta(rep: Unirrep, delta: int) -> Unirrep:
    """Push an su_q(2) unirrep through P_delta: J0 = p_delta(j0), J+- unchanged."""
    if rep.algebra.name != "suq2":
        raise ValueError("apply_map_p_delta expects an su_q(2) unirrep")
    delta = check_colour(delta)
    ctx = rep.ctx
    spec = make_catalog_algebra("aq1", ctx)
    return Unirrep(spec, rep.N, delta, map_p_delta(rep.j0_eigs, delta, ctx),
                   rep.Jp.copy(), rep.Jm.copy(), float(spec.H(gamma(rep.N, delta, ctx))))


# --- ladder engine -------------------------------------------------------

CLASSIFICATIONS = ("bounded-below", "bounded-above", "unbounded", "finite-candidate", "fixed-point")


@dataclass
class LadderResult:
    m0: float
    raise_chain: list[float]
    lower_chain: list[float]
    classification: str
    side: str | None  # "above"/"below" the fixed point, None when G has no zero
    top: float | None = None
    bottom: float | None = None
    violation: bool = False  # a negative norm was met before a clean zero
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "m0": self.m0, "raise": self.raise_chain, "lower": self.lower_chain,
            "classification": self.classification, "side": self.side,
            "top": self.top, "bottom": self.bottom, "violation": self.violation,
        }


def _affine_coeffs(spec: AlgebraSpec) -> tuple[float, float]:
    a = float(spec.G(0.0))
    b = float(spec.G(1.0)) - a
    if abs(float(spec.G(-2.5)) - (a - 2.5 * b)) > 1e-12 * (1 + abs(a) + abs(b)):
        raise ValueError(f"ladder engine needs an affine G; {spec.name!r} is not")
    return a, b


def ladder_spectrum(spec: AlgebraSpec, m0: float, max_steps: int,
                    casimir: float | None = None) -> LadderResult:
    """Walk the J0 eigenvalue ladder from ``m0`` in both directions.

    J+ sends m to the root m' of m' - G(m') = m, J- sends m to m - G(m).
    With a Casimir value c, the squared norms are |J+|m>|^2 = c - H(m) and
    |J-|m>|^2 = c - H(m - G(m)); a chain stops at the first state where
    that norm is zero or negative beyond tolerance.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    ctx = spec.ctx
    a, b = _affine_coeffs(spec)
    standard = abs(a - 1.0) < 1e-15 and abs(b - (1.0 - ctx.q)) < 1e-15
    if standard:
        up = lambda m: raise_map(m, ctx)
        down = lambda m: lower_map(m, ctx)
    elif b != 1.0:
        up = lambda m: (m + a) / (1.0 - b)
        down = lambda m: m - float(spec.G(m))
    else:
        raise ValueError("G(z) = a + z gives no ladder")

    fixed = -a / b if b != 0.0 else None
    if fixed is not None and abs(m0 - fixed) <= ctx.tolerance(fixed):
        chain = [float(m0)] * max_steps
        return LadderResult(float(m0), chain, list(chain), "fixed-point", "at")
    side = None if fixed is None else ("above" if m0 > fixed else "below")

    def walk(step, norm_at):
        chain, m, end, bad = [], float(m0), None, False
        for _ in range(max_steps):
            if casimir is not None:
                hval = float(norm_at(m))
                norm2 = casimir - hval
                if norm2 <= ctx.tolerance(max(abs(casimir), abs(hval))):
                    bad = norm2 < -ctx.tolerance(max(abs(casimir), abs(hval)))
                    end = m
                    break
            m = float(step(m))
            chain.append(m)
        return chain, end, bad

    raise_chain, top, bad_up = walk(up, spec.H)
    lower_chain, bottom, bad_down = walk(down, lambda m: spec.H(down(m)))
    if top is not None and bottom is not None:
        kind = "finite-candidate"
    elif bottom is not None:
        kind = "bounded-below"
    elif top is not None:
        kind = "bounded-above"
    else:
        kind = "unbounded"
    return LadderResult(float(m0), raise_chain, lower_chain, kind, side, top, bottom, bad_up or bad_down)


# --- checks --------------------------------------------------------------

def commutation_residuals(J0, Jp, Jm, spec: AlgebraSpec) -> dict[str, float]:
    """Max-norm residuals of the three DQA commutation relations."""
    G = spectral_apply(spec.G, J0)
    F = spectral_apply(spec.F, J0)
    return {
        "[J0,J+]": max_abs(J0 @ Jp - Jp @ J0 - G @ Jp),
        "[J0,J-]": max_abs(J0 @ Jm - Jm @ J0 + Jm @ G),
        "[J+,J-]": max_abs(Jp @ Jm - Jm @ Jp - F),
    }


def rep_commutation_residuals(rep: Unirrep) -> dict[str, float]:
    return commutation_residuals(rep.J0, rep.Jp, rep.Jm, rep.algebra)


def casimir_matrix(rep: Unirrep) -> np.ndarray:
    return rep.Jm @ rep.Jp + spectral_apply(rep.algebra.H, rep.J0)


@dataclass(frozen=True)
class CasimirReport:
    expected: float
    off_scalar: float  # max |C - expected * I|
    alt_form: float  # max |J- J+ + H - (J+ J- + H - F)|
    passed: bool


def casimir_check(rep: Unirrep) -> CasimirReport:
    C = casimir_matrix(rep)
    alt = rep.Jp @ rep.Jm + spectral_apply(rep.algebra.H, rep.J0) - spectral_apply(rep.algebra.F, rep.J0)
    off = max_abs(C - rep.casimir * np.eye(rep.dim))
    diff = max_abs(C - alt)
    tol = rep.ctx.tolerance(abs(rep.casimir))
    return CasimirReport(rep.casimir, off, diff, off <= tol and diff <= tol)


def sigma_j0(J0: np.ndarray, ctx: QContext) -> np.ndarray:
    """Image of J0 under the involution sigma: 2 (q-1)^-1 - J0."""
    return 2.0 * ctx.fixed_point * np.eye(J0.shape[0]) - J0


@dataclass(frozen=True)
class TransmutationReport:
    residuals: dict
    passed: bool


def transmute_check(rep: Unirrep, partner: Unirrep | None = None) -> TransmutationReport:
    """Phi^{J^delta}(A) = Phi^{J^-delta}(sigma(A)) with T the identity in the n-ordered bases."""
    if rep.delta is None:
        raise ValueError("transmutation needs a coloured A+_q(1) unirrep")
    if partner is None:
        partner = build_aq1_unirrep(rep.N, -rep.delta, rep.ctx)
    if partner.dim != rep.dim:
        raise ValueError(f"dimension mismatch: {rep.dim} vs {partner.dim}")
    if partner.delta != -rep.delta:
        raise ValueError("partner must carry the opposite colour")
    res = {
        "J0": max_abs(rep.J0 - sigma_j0(partner.J0, rep.ctx)),
        "J+": max_abs(rep.Jp - partner.Jp),
        "J-": max_abs(rep.Jm - partner.Jm),
    }
    scale = max(max_abs(rep.J0), max_abs(rep.Jp))
    return TransmutationReport(res, max(res.values()) <= rep.ctx.tolerance(scale))
