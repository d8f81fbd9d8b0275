"""Spectral radius of the adjacency tensor of a connected k-graph.

The solver is a shifted Collatz-Wielandt power iteration: every positive
vector ``x`` gives the bracket

    min_v (A x)_v / x_v^(k-1)  <=  rho  <=  max_v (A x)_v / x_v^(k-1)

and the update ``x <- (A x + x^[k-1])^[1/(k-1)]`` tightens it monotonically.
The identity shift makes the iteration primitive, so loose cycles and other
periodic structures still converge.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Hypergraph, is_connected
from .errors import ConvergenceFailure, InvalidArgument

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 200_000


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    eigenvector: np.ndarray
    lower_bound: float
    upper_bound: float
    iterations: int

    @property
    def gap(self) -> float:
        return self.upper_bound - self.lower_bound


def apply_adjacency(H: Hypergraph, x) -> np.ndarray:
    """``(A x^{k-1})_v = sum over edges e containing v of prod_{u in e-v} x_u``."""
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,):
        raise InvalidArgument(f"vector has shape {x.shape}, expected ({H.n},)")
    E = H.edge_array
    xe = x[E]
    # product of the other k-1 entries, without dividing (x may contain zeros)
    left = np.cumprod(np.hstack([np.ones((H.m, 1)), xe[:, :-1]]), axis=1)
    right = np.cumprod(np.hstack([np.ones((H.m, 1)), xe[:, :0:-1]]), axis=1)[:, ::-1]
    others = left * right
    return np.bincount(E.ravel(), weights=others.ravel(), minlength=H.n)


def _bounds(H, x):
    y = apply_adjacency(H, x)
    ratio = y / x ** (H.k - 1)
    return y, ratio.min(), ratio.max()


def spectral_radius(H: Hypergraph, tol: float = DEFAULT_TOL,
                    max_iter: int = DEFAULT_MAX_ITER, history: list | None = None) -> SpectralResult:
    """Certified spectral radius; ``upper - lower <= tol`` on return.

    If ``history`` is a list, the ``(lower, upper)`` pair of every iterate is
    appended to it.
    """
    if tol <= 0:
        raise InvalidArgument("tol must be positive")
    if not is_connected(H):
        raise InvalidArgument("spectral_radius needs a connected hypergraph")
    k = H.k
    x = np.full(H.n, H.n ** (-1.0 / k))
    lo, hi = -np.inf, np.inf
    for it in range(max_iter + 1):
        y, cur_lo, cur_hi = _bounds(H, x)
        # the bracket is valid for every iterate; keep the best one seen
        lo, hi = max(lo, cur_lo), min(hi, cur_hi)
        if history is not None:
            history.append((lo, hi))
        if hi - lo <= tol:
            x = x / np.sum(x ** k) ** (1.0 / k)
            return SpectralResult(0.5 * (lo + hi), x, lo, hi, it)
        x = (y + x ** (k - 1)) ** (1.0 / (k - 1))
        x /= np.sum(x ** k) ** (1.0 / k)
    raise ConvergenceFailure(
        f"bound gap {hi - lo:.3e} > {tol:.1e} after {max_iter} iterations", lo, hi, max_iter)


def rayleigh(H: Hypergraph, x) -> float:
    """``k * sum_e prod_{v in e} x_v`` for a vector with ``sum x_i^k = 1``."""
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,) or np.any(x < 0):
        raise InvalidArgument("rayleigh needs a nonnegative vector of length n")
    if abs(np.sum(x ** H.k) - 1.0) > 1e-12:
        raise InvalidArgument("rayleigh needs sum(x**k) == 1")
    return float(H.k * np.prod(x[H.edge_array], axis=1).sum())


def alpha_of(H: Hypergraph, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(H, tol).rho ** (-H.k)
