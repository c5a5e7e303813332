"""Structure functions of deformed su(2) algebras.

Kind "PRA" has [j0, j+-] = +-j+- and [j+, j-] = f(j0), with Casimir
j- j+ + h(j0).  Kind "DQA" uses two deforming functions: [J0, J+] = G(J0) J+, and
H(z) - H(z - G(z)) = F(z) is needed for C = J- J+ + H(J0) to be central.

Structure functions are stored as vectorised callables so they can be
applied to scalars, sample grids or the diagonal of a J0 matrix alike.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import solve_triangular
from scipy.special import comb

from qdef.qarith import QContext, q_number

Func = Callable[[np.ndarray], np.ndarray]

CATALOG_NAMES = ("suq2", "witten21", "a3pq1", "aq1")


class SingularPointError(ValueError):
    """Raised when the inverse map g is evaluated at z = (q-1)^-1."""


@dataclass(frozen=True)
class AlgebraSpec:
    name: str
    kind: str  # "PRA" or "DQA"
    F: Func
    G: Func
    H: Func
    ctx: QContext
    descriptor: dict = field(default_factory=dict, compare=False)

    @property
    def serializable(self) -> bool:
        return self.name in CATALOG_NAMES

    def to_dict(self) -> dict:
        if not self.serializable:
            raise ValueError(f"algebra {self.name!r} is user-supplied and cannot be serialized")
        return {"name": self.name, "kind": self.kind, "q": self.ctx.q, "p": self.ctx.p}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, tol_abs: float | None = None, tol_rel: float | None = None) -> "AlgebraSpec":
        kwargs = {}
        if tol_abs is not None:
            kwargs["tol_abs"] = tol_abs
        if tol_rel is not None:
            kwargs["tol_rel"] = tol_rel
        ctx = QContext(data["q"], data.get("p"), **kwargs)
        spec = make_catalog_algebra(data["name"], ctx)
        if spec.kind != data.get("kind", spec.kind):
            raise ValueError(f"kind mismatch for {data['name']!r}")
        return spec

    @classmethod
    def from_json(cls, text: str) -> "AlgebraSpec":
        return cls.from_dict(json.loads(text))


def affine_g(ctx: QContext) -> Func:
    """G(z) = 1 + (1 - q) z, the deforming function shared by the DQA catalog."""
    q = ctx.q
    return lambda z: 1.0 + (1.0 - q) * np.asarray(z, dtype=float)


def _suq2(ctx: QContext) -> AlgebraSpec:
    return AlgebraSpec(
        "suq2", "PRA",
        F=lambda z: q_number(2.0 * np.asarray(z, dtype=float), ctx),
        G=lambda z: np.ones_like(np.asarray(z, dtype=float)),
        H=lambda z: q_number(z, ctx) * q_number(np.asarray(z, dtype=float) + 1.0, ctx),
        ctx=ctx,
        descriptor={"F": "[2z]_q", "G": "1", "H": "[z]_q [z+1]_q", "params": ["q"]},
    )


def _witten21(ctx: QContext) -> AlgebraSpec:
    q = ctx.q
    G = affine_g(ctx)

    def F(z):
        z = np.asarray(z, dtype=float)
        return 2.0 * z * (1.0 + (1.0 - q) * z)

    def H(z):
        z = np.asarray(z, dtype=float)
        return 2.0 / (1.0 + q) * z * (z + 1.0)

    return AlgebraSpec(
        "witten21", "DQA", F, G, H, ctx,
        descriptor={
            "F": "2z(1+(1-q)z)", "G": "1+(1-q)z", "H": "2(1+q)^-1 z(z+1)",
            "params": ["q"], "note": "A+_q(2,1); equivalent to Witten's first deformation of su(2)",
        },
    )


def _a3pq1(ctx: QContext) -> AlgebraSpec:
    if ctx.p is None:
        raise ValueError("algebra 'a3pq1' needs the second parameter p")
    q, p = ctx.q, ctx.p
    G = affine_g(ctx)

    def F(z):
        z = np.asarray(z, dtype=float)
        return 2.0 * z * (1.0 + (1.0 - q) * z) * (1.0 - (1.0 - p) * z)

    def H(z):
        z = np.asarray(z, dtype=float)
        pref = 2.0 / ((1.0 + q) * (1.0 + q + q * q))
        return pref * z * (z + 1.0) * (1.0 + (p + q) * q - (1.0 - p) * (1.0 + q) * z)

    return AlgebraSpec(
        "a3pq1", "DQA", F, G, H, ctx,
        descriptor={
            "F": "2z(1+(1-q)z)(1-(1-p)z)", "G": "1+(1-q)z",
            "H": "2((1+q)(1+q+q^2))^-1 z(z+1)(1+(p+q)q-(1-p)(1+q)z)",
            "params": ["q", "p"], "note": "A+_{p,q}(3,1)",
        },
    )


def _aq1(ctx: QContext) -> AlgebraSpec:
    q = ctx.q
    G = affine_g(ctx)
    k = q - 1.0 / q

    def F(z):
        g2 = G(z) ** 2
        return -(g2 - 1.0 / g2) / k

    def H(z):
        g2 = G(z) ** 2
        return (g2 / q + q / g2 - q - 1.0 / q) / k ** 2

    return AlgebraSpec(
        "aq1", "DQA", F, G, H, ctx,
        descriptor={
            "F": "-(G^2 - G^-2)/(q - q^-1)", "G": "1+(1-q)z",
            "H": "(q^-1 G^2 + q G^-2 - q - q^-1)/(q - q^-1)^2",
            "params": ["q"], "note": "A+_q(1); F and H are not polynomial in z",
        },
    )


_BUILDERS = {"suq2": _suq2, "witten21": _witten21, "a3pq1": _a3pq1, "aq1": _aq1}


def make_catalog_algebra(name: str, ctx: QContext) -> AlgebraSpec:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; choose from {', '.join(CATALOG_NAMES)}") from None
    return builder(ctx)


def custom_algebra(name: str, F: Func, G: Func, H: Func, ctx: QContext, kind: str = "DQA") -> AlgebraSpec:
    """Wrap user-supplied structure functions (not serializable)."""
    if name in CATALOG_NAMES:
        raise ValueError(f"{name!r} is reserved for the catalog")
    return AlgebraSpec(name, kind, F, G, H, ctx, descriptor={"F": "user", "G": "user", "H": "user"})


@dataclass(frozen=True)
class ConsistencyReport:
    """``max_residual`` is scaled by max(1, |operands|); ``max_abs_residual`` is raw."""

    max_residual: float
    worst_z: float | None
    passed: bool
    max_abs_residual: float = 0.0
    nan_at: float | None = None


def consistency_residuals(spec: AlgebraSpec, samples) -> tuple[np.ndarray, np.ndarray]:
    """Absolute residuals |H(z) - H(z - G(z)) - F(z)| and the operand scale at each sample."""
    z = np.asarray(samples, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        hz = spec.H(z)
        hs = spec.H(z - spec.G(z))
        fz = spec.F(z)
        res = np.abs(hz - hs - fz)
        scale = np.maximum.reduce([np.abs(hz), np.abs(hs), np.abs(fz)])
    return res, scale


def check_consistency(spec: AlgebraSpec, samples) -> ConsistencyReport:
    z = np.atleast_1d(np.asarray(samples, dtype=float))
    res, scale = consistency_residuals(spec, z)
    bad = ~np.isfinite(res)
    if bad.any():
        where = float(z[bad][0])
        return ConsistencyReport(float("nan"), where, False, float("nan"), nan_at=where)
    if z.size == 0:
        return ConsistencyReport(0.0, None, True)
    # H and F blow up like G^-2 near z = (q-1)^-1, so compare relative to the operands there
    scaled = res / np.maximum(1.0, scale)
    i = int(np.argmax(scaled))
    ok = bool(np.all(res <= np.maximum(spec.ctx.tol_abs, spec.ctx.tol_rel * scale)))
    return ConsistencyReport(float(scaled[i]), float(z[i]), ok, float(res.max()))


def solve_h_polynomial(f_coeffs) -> np.ndarray:
    """Polynomial h with h(z) - h(z-1) = f(z) and h(0) = 0.

    Coefficients are in ascending order (c0 + c1 z + ...).  The difference
    operator maps z^k to a polynomial of degree k-1, so the system for the
    coefficients h_1 ... h_{d+1} is upper triangular.
    """
    f = np.atleast_1d(np.asarray(f_coeffs, dtype=float))
    d = f.size - 1
    # column k-1 holds the coefficients of z^k - (z-1)^k
    A = np.zeros((d + 1, d + 1))
    for k in range(1, d + 2):
        for i in range(k):
            A[i, k - 1] = -comb(k, i, exact=True) * (-1) ** (k - i)
    h = solve_triangular(A, f, lower=False)
    return np.concatenate([[0.0], h])


def map_p_delta(z, delta: int, ctx: QContext):
    """p_delta(z) = (1 - delta q^-z)/(q - 1), taking su_q(2) weights to A+_q(1) eigenvalues."""
    if delta not in (1, -1):
        raise ValueError(f"colour must be +1 or -1, got {delta!r}")
    q = ctx.q
    out = (1.0 - delta * q ** (-np.asarray(z, dtype=float))) / (q - 1.0) + 0.0  # no -0.0
    return float(out) if np.ndim(out) == 0 else out


def map_g(z, ctx: QContext):
    """g(z) = ln(G(z)^2) / ln(q^-2), the common inverse of both p_delta."""
    q = ctx.q
    g = 1.0 + (1.0 - q) * np.asarray(z, dtype=float)
    if np.any(np.abs(g) <= np.finfo(float).eps * (1.0 + np.abs(np.asarray(z, dtype=float)))):
        raise SingularPointError(f"g is singular at z = (q-1)^-1 = {ctx.fixed_point!r}")
    out = np.log(g * g) / np.log(q ** -2)
    return float(out) if np.ndim(out) == 0 else out
