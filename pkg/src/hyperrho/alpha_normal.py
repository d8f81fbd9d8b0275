"""Weighted incidence matrices: construction, classification, consistency."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Hypergraph, cycle_basis, konig_representation
from .errors import InvalidArgument
from .spectral import SpectralResult

DEFAULT_TOL = 1e-8

ALPHA_NORMAL = "alpha_normal"
STRICTLY_SUBNORMAL = "strictly_subnormal"
SUBNORMAL = "subnormal"
STRICTLY_SUPERNORMAL = "strictly_supernormal"
SUPERNORMAL = "supernormal"
NONE = "none"


@dataclass(frozen=True)
class WeightedIncidence:
    """Positive weights ``B(v, e)`` on the incidences of a hypergraph.

    Keys are ``(vertex, edge_index)`` with edge indices into ``H.edges``.
    """

    weights: dict[tuple[int, int], float]

    def __getitem__(self, key):
        return self.weights[key]

    def as_array(self, H: Hypergraph) -> np.ndarray:
        """Weights laid out like ``H.edge_array``."""
        try:
            arr = np.array([[self.weights[v, j] for v in e] for j, e in enumerate(H.edges)],
                           dtype=float)
        except KeyError as exc:
            raise InvalidArgument(f"missing weight for incidence {exc.args[0]}") from None
        if len(self.weights) != H.m * H.k:
            raise InvalidArgument("weights defined off the incidences of H")
        if np.any(arr <= 0):
            raise InvalidArgument("weights must be positive")
        return arr

    @classmethod
    def from_array(cls, H: Hypergraph, arr) -> WeightedIncidence:
        return cls({(v, j): float(arr[j][i]) for j, e in enumerate(H.edges)
                    for i, v in enumerate(e)})

    def replace(self, updates: dict[tuple[int, int], float]) -> WeightedIncidence:
        w = dict(self.weights)
        for key in updates:
            if key not in w:
                raise InvalidArgument(f"{key} is not an incidence")
        w.update(updates)
        return WeightedIncidence(w)


@dataclass(frozen=True)
class NormalityReport:
    vertex_sums: np.ndarray
    edge_products: np.ndarray
    alpha: float
    tol: float
    classification: str
    consistent: bool

    def records(self):
        """One dict per vertex sum and per edge product."""
        for v, s in enumerate(self.vertex_sums):
            yield {"kind": "vertex_sum", "index": v, "value": float(s)}
        for j, p in enumerate(self.edge_products):
            yield {"kind": "edge_product", "index": j, "value": float(p)}


def certificate_from_eigenvector(H: Hypergraph, result: SpectralResult) -> WeightedIncidence:
    """``B(v, e) = prod_{i in e} x_i / (x_v^k rho)``.

    This makes every vertex sum ``x_v (Ax)_v / (x_v^k rho) = 1`` and every
    edge product ``rho^{-k}``.
    """
    x = np.asarray(result.eigenvector, dtype=float)
    if x.shape != (H.n,):
        raise InvalidArgument("eigenvector length does not match H")
    if np.any(x <= 0):
        raise InvalidArgument("eigenvector must be strictly positive")
    E = H.edge_array
    # ratios first: the raw products underflow on large hypergraphs
    ratio = x[E][:, None, :] / x[E][:, :, None]
    B = np.prod(ratio, axis=2) / result.rho
    return WeightedIncidence.from_array(H, B)


def check_consistency(H: Hypergraph, B: WeightedIncidence, tol: float = DEFAULT_TOL) -> bool:
    """Alternating ratio product equals 1 on every fundamental cycle.

    The ratio product is multiplicative over the cycle space, so checking a
    basis covers every Berge cycle.
    """
    K = konig_representation(H)
    for cyc in cycle_basis(K):
        log_prod = 0.0
        L = len(cyc)
        for i in range(1, L, 2):
            j = cyc[i] - H.n
            prev_v, next_v = cyc[i - 1], cyc[(i + 1) % L]
            log_prod += math.log(B[next_v, j]) - math.log(B[prev_v, j])
        if abs(math.expm1(log_prod)) > tol:
            return False
    return True


def classify(H: Hypergraph, B: WeightedIncidence, alpha: float,
             tol: float = DEFAULT_TOL) -> NormalityReport:
    arr = B.as_array(H)
    sums = np.bincount(H.edge_array.ravel(), weights=arr.ravel(), minlength=H.n)
    prods = np.prod(arr, axis=1)
    ds, dp = sums - 1.0, prods - alpha
    if np.all(np.abs(ds) <= tol) and np.all(np.abs(dp) <= tol):
        label = ALPHA_NORMAL
    elif np.all(ds <= tol) and np.all(dp >= -tol):
        strict = np.any(ds < -tol) or np.any(dp > tol)
        label = STRICTLY_SUBNORMAL if strict else SUBNORMAL
    elif np.all(ds >= -tol) and np.all(dp <= tol):
        strict = np.any(ds > tol) or np.any(dp < -tol)
        label = STRICTLY_SUPERNORMAL if strict else SUPERNORMAL
    else:
        label = NONE
    return NormalityReport(sums, prods, alpha, tol, label, check_consistency(H, B, tol))
