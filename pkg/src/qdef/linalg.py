"""Small matrix helpers: spectral calculus, tensor-slot embedding, swaps."""
from __future__ import annotations

from functools import reduce

import numpy as np


def spectral_apply(f, M: np.ndarray) -> np.ndarray:
    """f(M) for a real symmetric M; diagonal input never goes through eigh."""
    M = np.asarray(M, dtype=float)
    d = np.diag(M)
    if not np.any(M - np.diag(d)):
        return np.diag(np.asarray(f(d), dtype=float))
    w, U = np.linalg.eigh(M)
    return (U * np.asarray(f(w), dtype=float)) @ U.T


def kron_all(*mats) -> np.ndarray:
    return reduce(np.kron, mats)


def swap_operator(d1: int, d2: int) -> np.ndarray:
    """Permutation P with P (u ⊗ v) = v ⊗ u for u in C^d1, v in C^d2."""
    P = np.zeros((d1 * d2, d1 * d2))
    for i in range(d1):
        for j in range(d2):
            P[j * d1 + i, i * d2 + j] = 1.0
    return P


def embed(M: np.ndarray, dims: tuple[int, ...], slots: tuple[int, int]) -> np.ndarray:
    """Place a two-slot operator M (on V_a ⊗ V_b) into slots ``(a, b)`` of a larger product.

    ``slots`` may be in either order; the result acts as the identity on the
    remaining factors.
    """
    a, b = slots
    n = len(dims)
    rest = [k for k in range(n) if k not in slots]
    full = np.kron(M, np.eye(int(np.prod([dims[k] for k in rest]))))
    # full acts on (a, b, *rest); permute tensor legs back to natural order
    order = [a, b, *rest]
    T = full.reshape([dims[k] for k in order] * 2)
    perm = [order.index(k) for k in range(n)]
    T = T.transpose(perm + [p + n for p in perm])
    D = int(np.prod(dims))
    return T.reshape(D, D)


def max_abs(M) -> float:
    return float(np.max(np.abs(M), initial=0.0))


def direct_sum(*mats) -> np.ndarray:
    n = sum(m.shape[0] for m in mats)
    out = np.zeros((n, n))
    k = 0
    for m in mats:
        d = m.shape[0]
        out[k:k + d, k:k + d] = m
        k += d
    return out
