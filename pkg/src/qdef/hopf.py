"""Two-colour quasitriangular Hopf structure of A+_q(1).

Every structure map is handled through a ``Realization``: the images of
the generators J0, J+, J- under an algebra homomorphism (or
antihomomorphism) into matrices.  A unirrep is a realization; composing it
with sigma, a coproduct, the counit or the antipode gives another one.
Identities between maps A -> A (x A) are checked by comparing generator
images, which is enough because every map involved is an algebra
(anti)homomorphism.

Colour conventions: a realization "has colour c" when c G(J0) is positive
definite on it.  A unirrep of colour delta has G(J0) = delta q^-j0, which is
what makes log_q(delta G(J0)) and the coloured coproducts well defined.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from qdef.algebra import AlgebraSpec, make_catalog_algebra
from qdef.linalg import embed, max_abs, spectral_apply, swap_operator
from qdef.qarith import QContext, q_factorial
from qdef.reps import COLOURS, Unirrep, build_aq1_unirrep, check_colour

GENERATORS = ("J0", "J+", "J-")
SYMBOLS = ("1", "J0", "J+", "J-", "G", "G^-1")


class ColourMismatchError(ValueError):
    """A coloured map was applied to a carrier on the wrong side of (q-1)^-1."""


# --- realizations ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Realization:
    j0: np.ndarray
    jp: np.ndarray
    jm: np.ndarray
    ctx: QContext
    anti: bool = False

    @classmethod
    def of(cls, rep: Unirrep) -> "Realization":
        return cls(rep.J0, rep.Jp, rep.Jm, rep.ctx)

    @property
    def dim(self) -> int:
        return self.j0.shape[0]

    def func(self, f) -> np.ndarray:
        return spectral_apply(f, self.j0)

    def G(self) -> np.ndarray:
        return np.eye(self.dim) + (1.0 - self.ctx.q) * self.j0

    def image(self, symbol: str) -> np.ndarray:
        if symbol == "1":
            return np.eye(self.dim)
        if symbol == "J0":
            return self.j0
        if symbol == "J+":
            return self.jp
        if symbol == "J-":
            return self.jm
        if symbol == "G":
            return self.G()
        if symbol == "G^-1":
            return np.linalg.inv(self.G())
        raise ValueError(f"unknown generator symbol {symbol!r}")

    def word(self, symbols) -> np.ndarray:
        """Image of an ordered product of symbols (reversed for an antihomomorphism)."""
        mats = [self.image(s) for s in symbols]
        if self.anti:
            mats.reverse()
        out = np.eye(self.dim)
        for m in mats:
            out = out @ m
        return out

    def evaluate(self, combo) -> np.ndarray:
        """Image of a linear combination [(coef, word), ...]."""
        return sum(c * self.word(w) for c, w in combo)

    def generator(self, gen: str) -> np.ndarray:
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        return self.image(gen)

    def colour(self) -> int | None:
        g = np.linalg.eigvalsh(self.G())
        if np.all(g > 0):
            return 1
        if np.all(g < 0):
            return -1
        return None


def require_colour(r: Realization, colour: int, what: str = "carrier") -> None:
    got = r.colour()
    if got != colour:
        raise ColourMismatchError(
            f"{what} has colour {got}, expected {colour:+d}: the map is only defined on "
            f"the {'upper' if colour == 1 else 'lower'} side of (q-1)^-1")


def direct_sum(*parts: Realization) -> Realization:
    from qdef.linalg import direct_sum as ds

    if len({p.anti for p in parts}) != 1:
        raise ValueError("cannot mix homomorphisms and antihomomorphisms")
    return Realization(ds(*[p.j0 for p in parts]), ds(*[p.jp for p in parts]),
                       ds(*[p.jm for p in parts]), parts[0].ctx, parts[0].anti)


# --- symbolic images of the generators ---------------------------------------

def sigma_apply(gen: str, ctx: QContext, s: int = -1) -> list[tuple[float, tuple[str, ...]]]:
    """sigma_s(gen) as a linear combination of words; sigma_+ = id, sigma_- = sigma."""
    s = check_colour(s)
    if gen not in GENERATORS and gen != "G":
        raise ValueError(f"unknown generator {gen!r}")
    if s == 1:
        return [(1.0, (gen,))]
    if gen == "J0":
        return [(2.0 * ctx.fixed_point, ("1",)), (-1.0, ("J0",))]
    if gen == "G":
        # G is affine in J0 with G(2(q-1)^-1 - z) = -G(z)
        return [(-1.0, ("G",))]
    return [(1.0, (gen,))]


def coproduct_terms(gen: str, zeta: int, eta: int, delta: int, ctx: QContext):
    """Delta^{zeta,eta}_delta(gen) as [(coef, left_word, right_word), ...]."""
    c = ctx.fixed_point
    if gen == "J0":
        return [(c, ("1",), ("1",)), (-delta * zeta * eta * c, ("G",), ("G",))]
    if gen in ("J+", "J-"):
        return [(float(eta), (gen,), ("G^-1",)), (float(zeta), ("G",), (gen,))]
    raise ValueError(f"unknown generator {gen!r}")


def antipode_terms(gen: str, zeta: int, delta: int, ctx: QContext, inverse: bool = False):
    """S^zeta_delta(gen), or its inverse map, as a linear combination of words."""
    q, c = ctx.q, ctx.fixed_point
    if gen == "J0":
        # the J0 part of S is its own inverse: G(S(J0)) = zeta delta G^-1
        return [(c, ("1",)), (-zeta * delta * c, ("G^-1",))]
    if gen == "J+":
        return [(-(1.0 / q if inverse else q), ("J+",))]
    if gen == "J-":
        return [(-(q if inverse else 1.0 / q), ("J-",))]
    raise ValueError(f"unknown generator {gen!r}")


def counit(gen: str, delta: int, ctx: QContext) -> float:
    delta = check_colour(delta)
    if gen == "J0":
        return (1.0 - delta) * ctx.fixed_point
    if gen in ("J+", "J-"):
        return 0.0
    raise ValueError(f"unknown generator {gen!r}")


# --- maps on realizations -----------------------------------------------------

def sigma_map(r: Realization, s: int) -> Realization:
    """r o sigma_s."""
    s = check_colour(s)
    if s == 1:
        return r
    return Realization(2.0 * r.ctx.fixed_point * np.eye(r.dim) - r.j0, r.jp, r.jm, r.ctx, r.anti)


def counit_map(delta: int, ctx: QContext) -> Realization:
    z = np.zeros((1, 1))
    return Realization(np.array([[counit("J0", delta, ctx)]]), z, z.copy(), ctx)


def coproduct_map(r1: Realization, r2: Realization, zeta: int, eta: int, delta: int,
                  check: bool = True) -> Realization:
    """(r1 ⊗ r2) o Delta^{zeta,eta}_delta, acting on the tensor product of the carriers."""
    if r1.anti or r2.anti:
        raise ValueError("coproduct_map expects homomorphic slot realizations")
    if check:
        require_colour(r1, zeta, "first factor")
        require_colour(r2, eta, "second factor")
    ctx = r1.ctx

    def img(gen):
        return sum(c * np.kron(r1.word(a), r2.word(b))
                   for c, a, b in coproduct_terms(gen, zeta, eta, delta, ctx))

    return Realization(img("J0"), img("J+"), img("J-"), ctx)


def antipode_map(r: Realization, zeta: int, delta: int, inverse: bool = False) -> Realization:
    """r o S^zeta_delta (or r o (S^zeta_delta)^-1); an antihomomorphism."""
    if r.anti:
        raise ValueError("antipode_map expects a homomorphic realization")
    ctx = r.ctx
    imgs = [r.evaluate(antipode_terms(g, zeta, delta, ctx, inverse)) for g in GENERATORS]
    return Realization(*imgs, ctx=ctx, anti=True)


def relation_residuals(r: Realization, spec: AlgebraSpec | None = None) -> dict[str, float]:
    """Residuals of the DQA relations under r, with products reversed for antihomomorphisms."""
    spec = spec or make_catalog_algebra("aq1", r.ctx)
    J0, Jp, Jm = r.j0, r.jp, r.jm
    G, F = r.func(spec.G), r.func(spec.F)
    if not r.anti:
        return {
            "[J0,J+]": max_abs(J0 @ Jp - Jp @ J0 - G @ Jp),
            "[J0,J-]": max_abs(J0 @ Jm - Jm @ J0 + Jm @ G),
            "[J+,J-]": max_abs(Jp @ Jm - Jm @ Jp - F),
        }
    return {
        "[J0,J+]": max_abs(Jp @ J0 - J0 @ Jp - Jp @ G),
        "[J0,J-]": max_abs(Jm @ J0 - J0 @ Jm + G @ Jm),
        "[J+,J-]": max_abs(Jm @ Jp - Jp @ Jm - F),
    }


# --- matrix-level convenience wrappers -------------------------------------------

def _colour_of(rep: Unirrep) -> int:
    if rep.delta is None:
        raise ValueError("coloured Hopf maps need A+_q(1) unirreps")
    return rep.delta


def coproduct_matrix(gen: str, rep1: Unirrep, rep2: Unirrep, delta: int,
                     zeta: int | None = None, eta: int | None = None) -> np.ndarray:
    """Delta^{zeta,eta}_delta(gen) on V1 ⊗ V2; zeta, eta default to the carriers' colours."""
    zeta = _colour_of(rep1) if zeta is None else check_colour(zeta)
    eta = _colour_of(rep2) if eta is None else check_colour(eta)
    r = coproduct_map(Realization.of(rep1), Realization.of(rep2), zeta, eta, check_colour(delta))
    return r.generator(gen)


def antipode_matrix(gen: str, rep: Unirrep, zeta: int, delta: int) -> np.ndarray:
    return antipode_map(Realization.of(rep), check_colour(zeta), check_colour(delta)).generator(gen)


# --- R-matrix ------------------------------------------------------------------

@dataclass(frozen=True)
class RSeries:
    """R^{zeta,eta} = q^{2 log_q(zeta G) ⊗ log_q(eta G)} sum_n c_n ((zeta G)^-1 J+)^n ⊗ (eta G J-)^n."""

    zeta: int
    eta: int
    ctx: QContext

    LEFT_WORD = ("G^-1", "J+")
    RIGHT_WORD = ("G", "J-")

    def coefficient(self, n: int) -> float:
        q = self.ctx.q
        return (1.0 - q ** -2) ** n * q ** (n * (n - 1) / 2.0) / q_factorial(n, self.ctx)

    def terms(self, n_max: int):
        """Symbolic terms (n, coefficient, left word, right word) up to n_max.

        The colour signs zeta^n eta^n are folded into the coefficient.
        """
        return [(n, self.coefficient(n) * (self.zeta * self.eta) ** n,
                 self.LEFT_WORD * n, self.RIGHT_WORD * n) for n in range(n_max + 1)]

    def log_factor(self, r: Realization, colour: int) -> tuple[np.ndarray, np.ndarray]:
        """Eigenbasis of r(J0) and the values of log_q(colour G) on it."""
        w, U = _eigh_or_diag(r.j0)
        g = colour * (1.0 + (1.0 - self.ctx.q) * w)
        if np.any(g <= 0):
            raise ColourMismatchError(
                f"log_q({colour:+d} G(J0)) needs a positive spectrum; got min {g.min():.3g}")
        return U, np.log(g) / math.log(self.ctx.q)

    def prefactor(self, r1: Realization, r2: Realization) -> np.ndarray:
        U, a = self.log_factor(r1, self.zeta)
        V, b = self.log_factor(r2, self.eta)
        d = self.ctx.q ** (2.0 * np.outer(a, b).ravel())
        W = np.kron(U, V)
        return (W * d) @ W.T

    def evaluate(self, r1: Realization, r2: Realization) -> np.ndarray:
        """Matrix of the series under slot realizations r1, r2.

        J+ and J- are nilpotent on finite carriers, so the sum stops at
        n = min(dim1, dim2) - 1; the next term is checked to vanish.

        When a slot is an antihomomorphism, each elementary tensor
        a_k x_n ⊗ b_k y_n of prefactor times series has its factors reversed
        in that slot only, so the prefactor is expanded over the spectral
        projectors of the left J0 image instead of being multiplied in.
        """
        X = r1.word(self.LEFT_WORD) * self.zeta
        Y = r2.word(self.RIGHT_WORD) * self.eta
        n_max = min(r1.dim, r2.dim) - 1
        powers = []
        Xn, Yn = np.eye(r1.dim), np.eye(r2.dim)
        for n in range(n_max + 1):
            powers.append((self.coefficient(n), Xn, Yn))
            Xn, Yn = Xn @ X, Yn @ Y
        scale = max(1.0, max(max_abs(np.kron(a, b)) * abs(c) for c, a, b in powers))
        tail = max_abs(Xn) * max_abs(Yn)
        if tail > self.ctx.tol_abs * scale:
            raise ArithmeticError(f"R-series failed to truncate: next term has size {tail:.3g}")

        if not (r1.anti or r2.anti):
            series = sum(c * np.kron(a, b) for c, a, b in powers)
            return self.prefactor(r1, r2) @ series
        U, la = self.log_factor(r1, self.zeta)
        V, lb = self.log_factor(r2, self.eta)
        out = np.zeros((r1.dim * r2.dim,) * 2)
        for i in range(r1.dim):
            proj = np.outer(U[:, i], U[:, i])
            weight = (V * self.ctx.q ** (2.0 * la[i] * lb)) @ V.T
            for c, a, b in powers:
                left = a @ proj if r1.anti else proj @ a
                right = b @ weight if r2.anti else weight @ b
                out += c * np.kron(left, right)
        return out


def _eigh_or_diag(M: np.ndarray):
    d = np.diag(M)
    if not np.any(M - np.diag(d)):
        return d.copy(), np.eye(M.shape[0])
    return np.linalg.eigh(M)


def r_matrix(rep1: Unirrep, rep2: Unirrep) -> np.ndarray:
    rs = RSeries(_colour_of(rep1), _colour_of(rep2), rep1.ctx)
    return rs.evaluate(Realization.of(rep1), Realization.of(rep2))


def slot_map(rep: Unirrep | Realization, kind: str = "id", *colours: int) -> Realization:
    """Realization rep o M for M in {id, sigma, S, S^-1}; colours as in sigma_s, S^zeta_delta."""
    r = rep if isinstance(rep, Realization) else Realization.of(rep)
    if kind == "id":
        return r
    if kind == "sigma":
        return sigma_map(r, *colours)
    if kind == "S":
        return antipode_map(r, *colours)
    if kind == "S^-1":
        return antipode_map(r, *colours, inverse=True)
    raise ValueError(f"unknown slot map {kind!r}")


def r_series_map_eval(rs: RSeries, left: Realization, right: Realization) -> np.ndarray:
    """(left ⊗ right)(R): evaluate the series with each slot pushed through its map."""
    return rs.evaluate(left, right)


# --- verification records ---------------------------------------------------------

@dataclass(frozen=True)
class CheckRecord:
    identity: str
    colours: tuple
    dims: tuple
    q: float
    residual: float
    passed: bool

    def to_dict(self) -> dict:
        return {"identity": self.identity, "colours": list(self.colours), "dims": list(self.dims),
                "q": self.q, "residual": self.residual, "pass": self.passed}


def _record(name, colours, dims, ctx, lhs, rhs, tol=None) -> CheckRecord:
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    res = max_abs(lhs - rhs)
    if tol is None:
        tol = ctx.tolerance(max(max_abs(lhs), max_abs(rhs)))
    return CheckRecord(name, tuple(int(c) for c in colours), tuple(dims), ctx.q, res, bool(res <= tol))


def _merge(name, colours, dims, ctx, pairs, tol=None) -> CheckRecord:
    """One record for several (lhs, rhs) pairs, keeping the worst residual."""
    recs = [_record(name, colours, dims, ctx, a, b, tol) for a, b in pairs]
    worst = max(recs, key=lambda r: r.residual)
    return CheckRecord(name, worst.colours, worst.dims, ctx.q, worst.residual, all(r.passed for r in recs))


def _gens(r: Realization):
    return [r.generator(g) for g in GENERATORS]


class _Reps:
    """Cache of unirreps keyed by (N, colour)."""

    def __init__(self, ctx: QContext):
        self.ctx = ctx
        self._cache = {}

    def __call__(self, N: int, colour: int) -> Realization:
        key = (N, colour)
        if key not in self._cache:
            self._cache[key] = Realization.of(build_aq1_unirrep(N, colour, self.ctx))
        return self._cache[key]


def _dims_of(reps) -> tuple[list[int], QContext]:
    reps = list(reps)
    return [r.N for r in reps], reps[0].ctx


def check_hopf_axioms(reps, tol: float | None = None) -> list[CheckRecord]:
    """Generalized coassociativity, counit and antipode axioms over every colour assignment.

    Only the dimensions (and the q of the context) of ``reps`` are used;
    carriers of whatever colour each identity needs are built on demand.
    """
    Ns, ctx = _dims_of(reps)
    N1, N2, N3 = (Ns + Ns[-1:] * 3)[:3]
    R = _Reps(ctx)
    out = []
    dims3 = (N1 + 1, N2 + 1, N3 + 1)
    for zeta, eta, nu, mu, rho, delta in itertools.product(COLOURS, repeat=6):
        a, b, c = R(N1, zeta), R(N2, eta), R(N3, nu)
        lhs = coproduct_map(coproduct_map(a, b, zeta, eta, mu), c, mu, nu, delta)
        rhs = coproduct_map(a, coproduct_map(b, c, eta, nu, rho), zeta, rho, delta)
        out.append(_merge("coassociativity", (zeta, eta, nu, mu, rho, delta), dims3, ctx,
                          zip(_gens(lhs), _gens(rhs)), tol))
    for N in sorted(set(Ns)):
        for zeta, eta, delta in itertools.product(COLOURS, repeat=3):
            rep = R(N, delta)
            left = coproduct_map(counit_map(zeta, ctx), sigma_map(rep, eta * delta), zeta, eta, delta)
            right = coproduct_map(sigma_map(rep, zeta * delta), counit_map(eta, ctx), zeta, eta, delta)
            out.append(_merge("counit", (zeta, eta, delta), (N + 1,), ctx,
                              [*zip(_gens(left), _gens(rep)), *zip(_gens(right), _gens(rep))], tol))
        for mu, zeta, eta, delta in itertools.product(COLOURS, repeat=4):
            rep = R(N, mu)
            s_left, s_right = antipode_map(rep, mu, zeta), antipode_map(rep, mu, eta)
            pairs = []
            for gen in GENERATORS:
                expect = counit(gen, delta, ctx) * np.eye(rep.dim)
                for f1, f2 in ((s_left, sigma_map(rep, mu * eta)), (sigma_map(rep, mu * zeta), s_right)):
                    val = sum(c * f1.word(w1) @ f2.word(w2)
                              for c, w1, w2 in coproduct_terms(gen, zeta, eta, delta, ctx))
                    pairs.append((val, expect))
            out.append(_merge("antipode", (mu, zeta, eta, delta), (N + 1,), ctx, pairs, tol))
    for zeta, eta, delta in itertools.product(COLOURS, repeat=3):
        d = coproduct_map(R(N1, zeta), R(N2, eta), zeta, eta, delta)
        res = relation_residuals(d)
        out.append(CheckRecord("coproduct-homomorphism", (zeta, eta, delta), (N1 + 1, N2 + 1), ctx.q,
                               max(res.values()), max(res.values()) <= (tol or ctx.tolerance(max_abs(d.j0)))))
    for zeta, delta in itertools.product(COLOURS, repeat=2):
        for colour in COLOURS:
            s = antipode_map(R(N1, colour), zeta, delta)
            res = relation_residuals(s)
            out.append(CheckRecord("antipode-antihomomorphism", (colour, zeta, delta), (N1 + 1,), ctx.q,
                                   max(res.values()), max(res.values()) <= (tol or ctx.tolerance(max_abs(s.j0)))))
        e = counit_map(delta, ctx)
        res = relation_residuals(e)
        if zeta == 1:
            out.append(CheckRecord("counit-homomorphism", (delta,), (1,), ctx.q, max(res.values()),
                                   max(res.values()) <= (tol or ctx.tol_abs)))
    out.extend(check_sigma_laws(reps, tol))
    return out


def check_sigma_laws(reps, tol: float | None = None) -> list[CheckRecord]:
    """How coproducts, counits and antipodes transform under sigma_delta."""
    Ns, ctx = _dims_of(reps)
    N1, N2 = (Ns + Ns[-1:])[:2]
    R = _Reps(ctx)
    out = []
    for zeta, eta, delta, mu, nu, rho in itertools.product(COLOURS, repeat=6):
        a, b = R(N1, mu), R(N2, nu)
        lhs = coproduct_map(sigma_map(a, mu * zeta), sigma_map(b, nu * eta), zeta, eta, delta)
        rhs = sigma_map(coproduct_map(a, b, mu, nu, rho), rho * delta)
        out.append(_merge("sigma-coproduct", (zeta, eta, delta, mu, nu, rho), (N1 + 1, N2 + 1), ctx,
                          zip(_gens(lhs), _gens(rhs)), tol))
    for delta, zeta in itertools.product(COLOURS, repeat=2):
        lhs = sigma_map(counit_map(delta, ctx), delta * zeta)
        rhs = counit_map(zeta, ctx)
        out.append(_merge("sigma-counit", (delta, zeta), (1,), ctx, zip(_gens(lhs), _gens(rhs)), tol))
    for N in sorted(set(Ns)):
        for colour in COLOURS:
            rep = R(N, colour)
            for zeta, eta, delta, mu in itertools.product(COLOURS, repeat=4):
                lhs = antipode_map(sigma_map(rep, zeta * eta), eta, delta)
                rhs = sigma_map(antipode_map(rep, zeta, mu), mu * delta)
                out.append(_merge("sigma-antipode", (zeta, eta, delta, mu, colour), (N + 1,), ctx,
                                  zip(_gens(lhs), _gens(rhs)), tol))
    return out


def check_r_matrix(reps, tol: float | None = None) -> list[CheckRecord]:
    """Invertibility, intertwining, sigma-covariance and delta-independence of R^{zeta,eta}."""
    Ns, ctx = _dims_of(reps)
    N1, N2 = (Ns + Ns[-1:])[:2]
    R = _Reps(ctx)
    d1, d2 = N1 + 1, N2 + 1
    out = []
    P = swap_operator(d1, d2)
    for zeta, eta in itertools.product(COLOURS, repeat=2):
        a, b = R(N1, zeta), R(N2, eta)
        rs = RSeries(zeta, eta, ctx)
        Rm = rs.evaluate(a, b)
        Rinv = np.linalg.inv(Rm)
        cond = np.linalg.cond(Rm)
        out.append(_merge("R-invertible", (zeta, eta), (d1, d2), ctx,
                          [(Rm @ Rinv, np.eye(d1 * d2)), (Rinv @ Rm, np.eye(d1 * d2))], tol))
        if not np.isfinite(cond):
            out[-1] = CheckRecord("R-invertible", (zeta, eta), (d1, d2), ctx.q, float("inf"), False)
        for delta in COLOURS:
            D = coproduct_map(a, b, zeta, eta, delta)
            Dop = coproduct_map(b, a, eta, zeta, delta)
            pairs = [(P.T @ x @ P, Rm @ y @ Rinv) for x, y in zip(_gens(Dop), _gens(D))]
            out.append(_merge("R-intertwining", (zeta, eta, delta), (d1, d2), ctx, pairs, tol))
            # R^{zeta,eta} = (sigma_{zeta delta} ⊗ sigma_{eta delta})(R^delta) for either delta
            ext = RSeries(delta, delta, ctx).evaluate(sigma_map(a, zeta * delta), sigma_map(b, eta * delta))
            out.append(_record("R-delta-extension", (zeta, eta, delta), (d1, d2), ctx, ext, Rm, tol))
        for mu, nu in itertools.product(COLOURS, repeat=2):
            lhs = rs.evaluate(sigma_map(R(N1, mu), mu * zeta), sigma_map(R(N2, nu), nu * eta))
            rhs = RSeries(mu, nu, ctx).evaluate(R(N1, mu), R(N2, nu))
            out.append(_record("R-sigma-covariance", (zeta, eta, mu, nu), (d1, d2), ctx, lhs, rhs, tol))
        _, la = rs.log_factor(a, zeta)
        _, lb = rs.log_factor(b, eta)
        out.append(_merge("R-prefactor-logs", (zeta, eta), (d1, d2), ctx,
                          [(la, -(N1 - 2 * np.arange(d1)) / 2.0), (lb, -(N2 - 2 * np.arange(d2)) / 2.0)], tol))
    return out


def check_r_fission(reps, tol: float | None = None) -> list[CheckRecord]:
    """(Delta ⊗ sigma)(R) = R13 R23 and (sigma ⊗ Delta)(R) = R13 R12 on triple products."""
    Ns, ctx = _dims_of(reps)
    N1, N2, N3 = (Ns + Ns[-1:] * 3)[:3]
    R = _Reps(ctx)
    dims = (N1 + 1, N2 + 1, N3 + 1)
    out = []

    def Rij(c1, c2, i, j, Na, Nb):
        return embed(RSeries(c1, c2, ctx).evaluate(R(Na, c1), R(Nb, c2)), dims, (i, j))

    for zeta, eta, lam, mu, nu in itertools.product(COLOURS, repeat=5):
        left = coproduct_map(R(N1, lam), R(N2, mu), lam, mu, zeta)
        lhs = RSeries(zeta, eta, ctx).evaluate(left, sigma_map(R(N3, nu), nu * eta))
        rhs = Rij(lam, nu, 0, 2, N1, N3) @ Rij(mu, nu, 1, 2, N2, N3)
        out.append(_record("R-fission-left", (zeta, eta, lam, mu, nu), dims, ctx, lhs, rhs, tol))
        right = coproduct_map(R(N2, mu), R(N3, nu), mu, nu, eta)
        lhs = RSeries(zeta, eta, ctx).evaluate(sigma_map(R(N1, lam), lam * zeta), right)
        rhs = Rij(lam, nu, 0, 2, N1, N3) @ Rij(lam, mu, 0, 1, N1, N2)
        out.append(_record("R-fission-right", (zeta, eta, lam, mu, nu), dims, ctx, lhs, rhs, tol))
    return out


def check_r_counit_antipode(reps, tol: float | None = None) -> list[CheckRecord]:
    """Counit and antipode identities satisfied by R^{zeta,eta}."""
    Ns, ctx = _dims_of(reps)
    N1, N2 = (Ns + Ns[-1:])[:2]
    R = _Reps(ctx)
    d1, d2 = N1 + 1, N2 + 1
    out = []
    for zeta, eta in itertools.product(COLOURS, repeat=2):
        rs = RSeries(zeta, eta, ctx)
        out.append(_record("R-counit-left", (zeta, eta), (1, d2), ctx,
                           rs.evaluate(counit_map(zeta, ctx), R(N2, eta)), np.eye(d2), tol))
        out.append(_record("R-counit-right", (zeta, eta), (d1, 1), ctx,
                           rs.evaluate(R(N1, zeta), counit_map(eta, ctx)), np.eye(d1), tol))
        for lam, mu in itertools.product(COLOURS, repeat=2):
            target = np.linalg.inv(RSeries(lam, mu, ctx).evaluate(R(N1, lam), R(N2, mu)))
            lhs = rs.evaluate(antipode_map(R(N1, lam), lam, zeta), sigma_map(R(N2, mu), mu * eta))
            out.append(_record("R-antipode", (zeta, eta, lam, mu), (d1, d2), ctx, lhs, target, tol))
            lhs = rs.evaluate(sigma_map(R(N1, lam), lam * zeta), antipode_map(R(N2, mu), mu, eta, inverse=True))
            out.append(_record("R-antipode-inverse", (zeta, eta, lam, mu), (d1, d2), ctx, lhs, target, tol))
    return out


def check_coloured_ybe(rep1: Unirrep, rep2: Unirrep, rep3: Unirrep, tol: float | None = None) -> CheckRecord:
    """R12 R13 R23 = R23 R13 R12 with colours read off the three carriers."""
    ctx = rep1.ctx
    cols = tuple(_colour_of(r) for r in (rep1, rep2, rep3))
    rs = [Realization.of(r) for r in (rep1, rep2, rep3)]
    dims = tuple(r.dim for r in (rep1, rep2, rep3))

    def Rij(i, j):
        return embed(RSeries(cols[i], cols[j], ctx).evaluate(rs[i], rs[j]), dims, (i, j))

    R12, R13, R23 = Rij(0, 1), Rij(0, 2), Rij(1, 2)
    return _record("coloured-YBE", cols, dims, ctx, R12 @ R13 @ R23, R23 @ R13 @ R12, tol)


def ybe_sweep(reps, tol: float | None = None) -> list[CheckRecord]:
    Ns, ctx = _dims_of(reps)
    N1, N2, N3 = (Ns + Ns[-1:] * 3)[:3]
    return [check_coloured_ybe(build_aq1_unirrep(N1, z, ctx), build_aq1_unirrep(N2, e, ctx),
                               build_aq1_unirrep(N3, m, ctx), tol)
            for z, e, m in itertools.product(COLOURS, repeat=3)]
