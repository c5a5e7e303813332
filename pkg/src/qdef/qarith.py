"""q-deformed arithmetic and the exponential ladder maps.

Everything here is plain double precision.  ``QContext`` carries the
deformation parameters together with the tolerances used by every
identity check in the package.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL_ABS = 1e-10
DEFAULT_TOL_REL = 1e-9


@dataclass(frozen=True)
class QContext:
    """Deformation parameters ``q`` (and optionally ``p``) plus tolerances."""

    q: float
    p: float | None = None
    tol_abs: float = DEFAULT_TOL_ABS
    tol_rel: float = DEFAULT_TOL_REL

    def __post_init__(self):
        if not (0.0 < self.q < 1.0) or not math.isfinite(self.q):
            raise ValueError(f"q must lie in (0, 1), got {self.q!r}")
        if self.p is not None and not (self.p > 0.0 and math.isfinite(self.p)):
            raise ValueError(f"p must be positive, got {self.p!r}")
        if not (self.tol_abs > 0.0 and self.tol_rel > 0.0):
            raise ValueError("tolerances must be positive")

    @classmethod
    def from_env(cls, q: float, p: float | None = None, tol: float | None = None) -> "QContext":
        """Build a context, taking the absolute tolerance from ``QDEF_TOL`` if set."""
        if tol is None and os.environ.get("QDEF_TOL"):
            tol = float(os.environ["QDEF_TOL"])
        if tol is None:
            return cls(q, p)
        return cls(q, p, tol_abs=tol, tol_rel=max(tol, DEFAULT_TOL_REL))

    @property
    def fixed_point(self) -> float:
        """The J0 eigenvalue (q-1)^-1 left invariant by both ladder maps."""
        return 1.0 / (self.q - 1.0)

    def tolerance(self, scale: float = 0.0) -> float:
        return max(self.tol_abs, self.tol_rel * abs(scale))

    def close(self, a, b) -> bool:
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        scale = max(np.max(np.abs(a), initial=0.0), np.max(np.abs(b), initial=0.0))
        return bool(np.max(np.abs(a - b), initial=0.0) <= self.tolerance(scale))


def q_number(x, ctx: QContext):
    """[x]_q = (q^x - q^-x) / (q - q^-1); accepts scalars or arrays."""
    q = ctx.q
    x = np.asarray(x, dtype=float)
    out = (q ** x - q ** (-x)) / (q - 1.0 / q)
    return float(out) if out.ndim == 0 else out


def q_factorial(n: int, ctx: QContext) -> float:
    if n < 0 or int(n) != n:
        raise ValueError(f"q_factorial needs a nonnegative integer, got {n!r}")
    out = 1.0
    for k in range(1, int(n) + 1):
        out *= q_number(k, ctx)
    return out


def raise_map(m, ctx: QContext):
    """J0 eigenvalue after one application of J+: q^-1 (m + 1)."""
    # written around the fixed point c so that m = c maps to itself bit-exactly
    c = ctx.fixed_point
    return c + (m - c) / ctx.q


def lower_map(m, ctx: QContext):
    """J0 eigenvalue after one application of J-: q m - 1."""
    """J0 eigenvalue after one application of J-: q m - 1."""
    c = ctx.fixed_point
    return c + ctx.q * (m - c)


def raise_closed_form(m: float, n: int, ctx: QContext) -> float:
    """n-step raise in closed form, m q^-n - (1 - q^-n)/(1 - q)."""
    q = ctx.q
    return m * q ** (-n) - (1.0 - q ** (-n)) / (1.0 - q)


def lower_closed_form(m: float, n: int, ctx: QContext) -> float:
    q = ctx.q
    return m * q ** n - (1.0 - q ** n) / (1.0 - q)
