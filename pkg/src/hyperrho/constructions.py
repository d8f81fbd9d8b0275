"""Builders for the named hypergraph families.

Every builder lays out the joints (vertices of degree >= 2) first and fills
each edge up to ``k`` vertices with fresh degree-1 vertices afterwards, then
applies :meth:`Hypergraph.canonical`, so builds are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Hypergraph, cyclomatic_number, degree, is_pendant_edge
from .errors import InvalidArgument

FAMILIES = ("LoosePath", "LooseCycle", "CycleStar", "CyclePendantJoint",
            "C1", "C2", "C3", "PowerHypergraph")

_ARITY = {"LoosePath": 1, "LooseCycle": 1, "CycleStar": 1,
          "CyclePendantJoint": 1, "C1": 3, "C2": 3, "C3": 2}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters.

    ``PowerHypergraph`` carries the base graph edge list in ``base_edges``
    instead of ``params``.
    """

    family: str
    params: tuple[int, ...] = ()
    base_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidArgument(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.family != "PowerHypergraph" and len(self.params) != _ARITY[self.family]:
            raise InvalidArgument(
                f"{self.family} takes {_ARITY[self.family]} parameter(s), got {self.params}")

    def __str__(self):
        if self.family == "PowerHypergraph":
            return f"PowerHypergraph({list(self.base_edges)})"
        return f"{self.family}({','.join(map(str, self.params))})"


def LoosePath(n): return FamilySpec("LoosePath", (n,))
def LooseCycle(n): return FamilySpec("LooseCycle", (n,))
def CycleStar(n): return FamilySpec("CycleStar", (n,))
def CyclePendantJoint(n): return FamilySpec("CyclePendantJoint", (n,))
def C1(a, b, c): return FamilySpec("C1", (a, b, c))
def C2(a, b, c): return FamilySpec("C2", (a, b, c))
def C3(a, b): return FamilySpec("C3", (a, b))
def PowerHypergraph(edges): return FamilySpec("PowerHypergraph", (), tuple(map(tuple, edges)))


class _Layout:
    """Collects joint-only edges; fillers are added by ``finish``."""

    def __init__(self, k):
        self.k = k
        self.n_joints = 0
        self.edges: list[list[int]] = []

    def joint(self):
        self.n_joints += 1
        return self.n_joints - 1

    def edge(self, *joints):
        if len(set(joints)) != len(joints) or len(joints) > self.k:
            raise InvalidArgument(f"cannot place joints {joints} in one {self.k}-edge")
        self.edges.append(list(joints))

    def path(self, a, b, length):
        """Loose path of ``length`` edges from joint ``a`` to joint ``b``."""
        prev = a
        for _ in range(length - 1):
            w = self.joint()
            self.edge(prev, w)
            prev = w
        self.edge(prev, b)

    def finish(self):
        nxt = self.n_joints
        full = []
        for e in self.edges:
            fill = list(range(nxt, nxt + self.k - len(e)))
            nxt += len(fill)
            full.append(tuple(e + fill))
        return Hypergraph(self.k, nxt, tuple(full)).canonical()


def _require(cond, msg):
    if not cond:
        raise InvalidArgument(msg)


def _representative(family, p):
    # parameter orders that give isomorphic hypergraphs build identically
    if family == "C1":
        return (min(p[0], p[1]), max(p[0], p[1]), p[2])
    if family in ("C2", "C3"):
        return tuple(sorted(p))
    return p


def build(spec: FamilySpec, k: int) -> Hypergraph:
    """Canonically labelled member of ``spec``'s family with uniformity ``k``.

    C1 is symmetric in its first two lengths, C2 in all three and C3 in both,
    so those parameters are sorted first and equivalent specs build equal
    hypergraphs.
    """
    _require(k >= 3, f"uniformity must be >= 3, got {k}")
    L = _Layout(k)
    f, p = spec.family, _representative(spec.family, spec.params)
    if f == "LoosePath":
        (n,) = p
        _require(n >= 1, "LoosePath needs n >= 1")
        a = L.joint()
        b = L.joint()
        L.path(a, b, n)
    elif f in ("LooseCycle", "CycleStar", "CyclePendantJoint"):
        (n,) = p
        _require(n >= 2, f"{f} needs n >= 2")
        vs = [L.joint() for _ in range(n)]
        for i in range(n - 1):
            L.edge(vs[i], vs[i + 1])
        if f == "CycleStar":
            u = L.joint()
            L.edge(vs[-1], vs[0], u)
            L.edge(u)
        else:
            L.edge(vs[-1], vs[0])
            if f == "CyclePendantJoint":
                L.edge(vs[0])
    elif f in ("C1", "C2"):
        _require(all(x >= 1 for x in p), f"{f} path lengths must be >= 1")
        u1, u2, u3 = L.joint(), L.joint(), L.joint()
        v1, v2, v3 = L.joint(), L.joint(), L.joint()
        L.edge(u1, u2, u3)
        L.edge(v1, v2, v3)
        if f == "C1":
            L.path(u1, u3, p[0])
            L.path(v1, v3, p[1])
            L.path(u2, v2, p[2])
        else:
            L.path(u1, v1, p[0])
            L.path(u2, v2, p[1])
            L.path(u3, v3, p[2])
    elif f == "C3":
        _require(all(x >= 1 for x in p), "C3 path lengths must be >= 1")
        _require(k >= 4, "C3 needs four distinct anchors in one edge, so k >= 4")
        u1, u2, v1, v2 = (L.joint() for _ in range(4))
        L.edge(u1, u2, v1, v2)
        L.path(u1, u2, p[0])
        L.path(v1, v2, p[1])
    else:
        _require(len(spec.base_edges) > 0, "PowerHypergraph needs base edges")
        nv = 1 + max(max(e) for e in spec.base_edges)
        for _ in range(nv):
            L.joint()
        for a, b in spec.base_edges:
            L.edge(a, b)
    return L.finish()


def expected_edge_count(spec: FamilySpec) -> int:
    p = spec.params
    return {"LoosePath": lambda: p[0], "LooseCycle": lambda: p[0],
            "CycleStar": lambda: p[0] + 1, "CyclePendantJoint": lambda: p[0] + 1,
            "C1": lambda: sum(p) + 2, "C2": lambda: sum(p) + 2,
            "C3": lambda: sum(p) + 1,
            "PowerHypergraph": lambda: len(spec.base_edges)}[spec.family]()


def delete_edges(H: Hypergraph, drop: Iterable[int]) -> Hypergraph:
    """Remove edges by index, dropping vertices left isolated (order kept)."""
    drop = set(drop)
    kept = [e for j, e in enumerate(H.edges) if j not in drop]
    if not kept:
        raise InvalidArgument("cannot delete every edge")
    used = sorted({v for e in kept for v in e})
    new = {v: i for i, v in enumerate(used)}
    return Hypergraph(H.k, len(used), tuple(tuple(new[v] for v in e) for e in kept))


def base_of(H: Hypergraph) -> Hypergraph:
    """Strip pendant edges until none remain."""
    c = cyclomatic_number(H)
    if c < 1:
        raise InvalidArgument("base is only defined for cyclic hypergraphs")
    while True:
        pend = [j for j in range(H.m) if is_pendant_edge(H, j)]
        if not pend:
            return H.canonical()
        # one at a time: two pendant edges can share their only joint
        H = delete_edges(H, pend[:1])


def subdivide_edge(H: Hypergraph, e: Iterable[int], u: int, v: int) -> Hypergraph:
    """Replace ``e = {u, u_1..u_{k-2}, v}`` by ``f1 = {u, fresh.., w}`` and
    ``f2 = {w, u_1..u_{k-2}, v}`` where ``w`` and the k-2 vertices of ``f1``
    other than ``u`` and ``w`` are new."""
    j = H.edge_index(e)
    edge = H.edges[j]
    _require(u in edge and v in edge and u != v, "u and v must be distinct vertices of e")
    rest = [x for x in edge if x not in (u, v)]
    _require(all(degree(H, x) == 1 for x in rest),
             "the other k-2 vertices of e must have degree 1")
    w = H.n
    fresh = list(range(H.n + 1, H.n + H.k - 1))
    f1 = tuple([u, *fresh, w])
    f2 = tuple([w, *rest, v])
    edges = [x for i, x in enumerate(H.edges) if i != j] + [f1, f2]
    return Hypergraph(H.k, H.n + H.k - 1, tuple(edges))
