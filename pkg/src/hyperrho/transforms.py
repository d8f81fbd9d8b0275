"""Edge moving, vertex splitting and vertex releasing.

Each operation returns a :class:`Transformed` holding the new hypergraph and
the fate of every old vertex. Eligibility for the monotonicity results is
checked by separate predicates so that ineligible inputs can still be
transformed and inspected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .alpha_normal import certificate_from_eigenvector
from .core import Hypergraph, cyclomatic_number, find_internal_paths, is_connected
from .errors import InvalidArgument
from .mobius import MobiusParams, alpha_star
from .spectral import DEFAULT_TOL, spectral_radius


class Transformed(NamedTuple):
    hypergraph: Hypergraph
    relabel: dict[int, int]  # old vertex -> new vertex; pruned vertices are absent
    fresh: tuple[int, ...] = ()  # ids of vertices created by the operation


@dataclass(frozen=True)
class MoveSpec:
    """Move each listed edge off its vertex ``v_i`` and onto ``target``."""

    target: int
    relocations: tuple[tuple[int, int], ...] = ()  # (edge index, v_i)


@dataclass(frozen=True)
class SplitSpec:
    """Split ``w``; edges in ``to_first`` keep ``w`` (as ``u_1``), the others
    move to the new far end ``u_k`` of the inserted edge."""

    w: int
    to_first: frozenset[int] = field(default_factory=frozenset)


@dataclass(frozen=True)
class ReleaseSpec:
    edge: int
    vertices: tuple[int, ...]


def _prune(k, n, edges, fresh=()):
    used = sorted({v for e in edges for v in e})
    new = {v: i for i, v in enumerate(used)}
    H = Hypergraph(k, len(used), tuple(tuple(new[v] for v in e) for e in edges))
    relabel = {v: new[v] for v in range(n) if v in new}
    return Transformed(H, relabel, tuple(new[v] for v in fresh))


def move_edges(H: Hypergraph, spec: MoveSpec) -> Transformed:
    u = spec.target
    if not 0 <= u < H.n:
        raise InvalidArgument(f"target {u} out of range")
    edges = list(H.edges)
    moved = set()
    for j, v in spec.relocations:
        e = H.edges[j]
        if j in moved:
            raise InvalidArgument(f"edge {j} listed twice")
        if u in e or v not in e:
            raise InvalidArgument(f"need target outside edge {j} and {v} inside it")
        edges[j] = tuple(sorted((set(e) - {v}) | {u}))
        moved.add(j)
    if len(set(edges)) != len(edges):
        raise InvalidArgument("moving creates a duplicate edge")
    return _prune(H.k, H.n, edges)


def split_vertex(H: Hypergraph, spec: SplitSpec) -> Transformed:
    w = spec.w
    inc = set(H.incident_edges[w])
    if not spec.to_first <= inc:
        raise InvalidArgument("to_first must list edges containing w")
    far = H.n
    fillers = list(range(H.n + 1, H.n + H.k - 1))
    edges = []
    for j, e in enumerate(H.edges):
        if j in inc and j not in spec.to_first:
            e = tuple(far if v == w else v for v in e)
        edges.append(e)
    edges.append(tuple([w, *fillers, far]))
    n = H.n + H.k - 1
    return Transformed(Hypergraph(H.k, n, tuple(edges)), {v: v for v in range(H.n)},
                       tuple([far, *fillers]))


def release_vertices(H: Hypergraph, spec: ReleaseSpec) -> Transformed:
    e = H.edges[spec.edge]
    shared = [v for v in e if H.degrees[v] >= 2]
    vs = list(spec.vertices)
    if not vs or len(set(vs)) != len(vs) or not set(vs) <= set(shared):
        raise InvalidArgument("released vertices must be distinct degree>=2 vertices of the edge")
    if len(vs) >= len(shared):
        raise InvalidArgument(f"must release fewer than all {len(shared)} shared vertices")
    fresh = list(range(H.n, H.n + len(vs)))
    sub = dict(zip(vs, fresh))
    edges = list(H.edges)
    edges[spec.edge] = tuple(sub.get(v, v) for v in e)
    return Transformed(Hypergraph(H.k, H.n + len(vs), tuple(edges)),
                       {v: v for v in range(H.n)}, tuple(fresh))


# -- eligibility predicates ---------------------------------------------------


def degree_two_split(H: Hypergraph, w: int) -> SplitSpec:
    """The split of a degree-2 vertex with one incident edge on each end."""
    inc = H.incident_edges[w]
    if len(inc) != 2:
        raise InvalidArgument(f"vertex {w} has degree {len(inc)}, expected 2")
    return SplitSpec(w, frozenset(inc[:1]))


def splitting_weight(H: Hypergraph, spec: SplitSpec, tol: float = DEFAULT_TOL):
    """``(phi(B_H(w, e_1)), alpha(H))`` where ``e_1`` is the edge kept on ``u_1``."""
    if len(H.incident_edges[spec.w]) != 2 or len(spec.to_first) != 1:
        raise InvalidArgument("needs a degree-2 vertex split one edge per end")
    res = spectral_radius(H, tol)
    B = certificate_from_eigenvector(H, res)
    (e1,) = spec.to_first
    alpha = res.rho ** (-H.k)
    return MobiusParams.from_alpha(alpha).phi(B[spec.w, e1]), alpha


def weight_split_eligible(H: Hypergraph, spec: SplitSpec, tol: float = DEFAULT_TOL) -> bool:
    """``phi(B_H(w, e_1)) < 0``: the hypothesis under which splitting ``w``
    lowers the spectral radius."""
    phi, _ = splitting_weight(H, spec, tol)
    return phi < 0


def internal_path_split_eligible(H: Hypergraph, w: int) -> bool:
    """``w`` is an end joint of an internal path whose two anchor edges each
    contain at least three vertices of degree > 1."""
    if H.degrees[w] != 2:
        return False

    def heavy(j):
        return sum(H.degrees[v] > 1 for v in H.edges[j]) >= 3

    for p in find_internal_paths(H):
        if w in (p.joints[0], p.joints[-1]) and heavy(p.start_anchor) and heavy(p.end_anchor):
            return True
    return False


def internal_path_joints(H: Hypergraph) -> list[int]:
    """All degree-2 joints lying on internal paths."""
    return sorted({w for p in find_internal_paths(H) for w in p.joints})


def splitting_is_rho_decreasing(H: Hypergraph, spec: SplitSpec, tol: float = DEFAULT_TOL) -> bool:
    if len(H.incident_edges[spec.w]) != 2:
        raise InvalidArgument("splitting monotonicity is stated for degree-2 vertices")
    H2 = split_vertex(H, spec).hypergraph
    return spectral_radius(H2, tol).rho < spectral_radius(H, tol).rho - tol


def is_loose_cycle(H: Hypergraph) -> bool:
    deg = H.degrees
    return (is_connected(H) and cyclomatic_number(H) == 1 and deg.max() == 2
            and all(sum(deg[v] == 2 for v in e) == 2 for e in H.edges))


def below_alpha_star(H: Hypergraph, tol: float = DEFAULT_TOL) -> bool:
    return spectral_radius(H, tol).rho ** (-H.k) < alpha_star()
