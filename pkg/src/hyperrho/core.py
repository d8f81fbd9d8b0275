"""Immutable k-uniform hypergraphs and their structural queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, TextIO

import numpy as np

from .errors import InvalidArgument

PENDANT = "pendant"
BRANCH = "branch"
PLAIN = "plain"


@dataclass(frozen=True)
class Hypergraph:
    """A simple k-uniform hypergraph on vertices ``0..n-1``.

    Edges are stored as strictly increasing tuples and kept in lexicographic
    order, so two hypergraphs with the same edge set compare equal.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 3:
            raise InvalidArgument(f"uniformity must be >= 3, got {self.k}")
        canon = []
        for e in self.edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != self.k or len(set(t)) != self.k:
                raise InvalidArgument(f"edge {e} is not a set of {self.k} vertices")
            if t[0] < 0 or t[-1] >= self.n:
                raise InvalidArgument(f"edge {e} has a vertex outside [0, {self.n})")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise InvalidArgument(f"duplicate edge {a}")
        covered = {v for e in canon for v in e}
        if len(covered) != self.n:
            missing = sorted(set(range(self.n)) - covered)
            raise InvalidArgument(f"isolated vertices {missing[:5]}")
        object.__setattr__(self, "edges", tuple(canon))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], k: int | None = None) -> Hypergraph:
        """Build from an edge list, inferring ``k`` and ``n``."""
        edges = [tuple(e) for e in edges]
        if not edges:
            raise InvalidArgument("a hypergraph needs at least one edge")
        if k is None:
            k = len(edges[0])
        n = 1 + max(max(e) for e in edges)
        return cls(k, n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.intp).reshape(self.m, self.k)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edge_array.ravel(), minlength=self.n)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _edge_index(self) -> dict[tuple[int, ...], int]:
        return {e: j for j, e in enumerate(self.edges)}

    def edge_index(self, e: Iterable[int]) -> int:
        t = tuple(sorted(e))
        try:
            return self._edge_index[t]
        except KeyError:
            raise InvalidArgument(f"{t} is not an edge") from None

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self._edge_index

    def relabel(self, mapping: Sequence[int] | Mapping[int, int]) -> Hypergraph:
        """Apply a vertex permutation ``v -> mapping[v]``."""
        return Hypergraph(self.k, self.n, tuple(tuple(mapping[v] for v in e) for e in self.edges))

    def canonical(self) -> Hypergraph:
        """Relabel to the builder convention: joints first, then fillers.

        Vertices of degree >= 2 keep their relative order and take the lowest
        ids. Degree-1 vertices follow, grouped by edge (edges ordered by their
        joint tuple) and by old id within an edge. This is a normal form for
        labelings, not an isomorphism invariant.
        """
        return self.relabel(canonical_order(self))

    def __str__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"


def canonical_order(H: Hypergraph) -> list[int]:
    deg = H.degrees
    joints = [v for v in range(H.n) if deg[v] >= 2]
    new = [-1] * H.n
    for i, v in enumerate(joints):
        new[v] = i
    nxt = len(joints)

    def key(e):
        js = tuple(v for v in e if deg[v] >= 2)
        fs = tuple(v for v in e if deg[v] < 2)
        return js, fs

    for e in sorted(H.edges, key=key):
        for v in e:
            if deg[v] < 2:
                new[v] = nxt
                nxt += 1
    return new


def degree(H: Hypergraph, v: int) -> int:
    if not 0 <= v < H.n:
        raise InvalidArgument(f"vertex {v} out of range [0, {H.n})")
    return int(H.degrees[v])


def components(H: Hypergraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted."""
    seen = [False] * H.n
    comps = []
    for s in range(H.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for j in H.incident_edges[v]:
                for u in H.edges[j]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(H: Hypergraph) -> bool:
    return len(components(H)) == 1


def cyclomatic_number(H: Hypergraph) -> int:
    return H.m * (H.k - 1) - H.n + len(components(H))


# -- Koenig representation ---------------------------------------------------


@dataclass(frozen=True)
class KonigGraph:
    """Bipartite incidence graph.

    Node ids ``0..n-1`` are vertex nodes and ``n..n+m-1`` are edge nodes;
    each link is a ``(vertex, edge_index)`` incidence.
    """

    n_left: int
    n_right: int
    links: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @property
    def num_nodes(self) -> int:
        return self.n_left + self.n_right

    def is_edge_node(self, node: int) -> bool:
        return node >= self.n_left

    def components(self) -> int:
        seen = [False] * self.num_nodes
        count = 0
        for s in range(self.num_nodes):
            if seen[s]:
                continue
            count += 1
            seen[s] = True
            stack = [s]
            while stack:
                a = stack.pop()
                for b in self.adjacency[a]:
                    if not seen[b]:
                        seen[b] = True
                        stack.append(b)
        return count

    def cycle_rank(self) -> int:
        return len(self.links) - self.num_nodes + self.components()


def konig_representation(H: Hypergraph) -> KonigGraph:
    links = tuple((v, j) for j, e in enumerate(H.edges) for v in e)
    adj: list[list[int]] = [[] for _ in range(H.n + H.m)]
    for v, j in links:
        adj[v].append(H.n + j)
        adj[H.n + j].append(v)
    return KonigGraph(H.n, H.m, links, tuple(tuple(a) for a in adj))


def cycle_basis(K: KonigGraph) -> list[list[int]]:
    """Fundamental cycles of a BFS spanning forest.

    Each cycle is a closed walk of node ids (first node not repeated) that
    starts at a vertex node and alternates vertex/edge nodes.
    """
    parent = [-1] * K.num_nodes
    depth = [-1] * K.num_nodes
    tree = set()
    for root in range(K.num_nodes):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in K.adjacency[a]:
                if depth[b] < 0:
                    depth[b] = depth[a] + 1
                    parent[b] = a
                    tree.add((min(a, b), max(a, b)))
                    queue.append(b)

    cycles = []
    for v, j in K.links:
        a, b = v, K.n_left + j
        if (min(a, b), max(a, b)) in tree:
            continue
        # climb both ends to their lowest common ancestor
        left, right = [a], [b]
        x, y = a, b
        while depth[x] > depth[y]:
            x = parent[x]
            left.append(x)
        while depth[y] > depth[x]:
            y = parent[y]
            right.append(y)
        while x != y:
            x, y = parent[x], parent[y]
            left.append(x)
            right.append(y)
        walk = left + right[-2::-1]
        start = next(i for i, node in enumerate(walk) if not K.is_edge_node(node))
        cycles.append(walk[start:] + walk[:start])
    return cycles


# -- edge classification and internal paths -----------------------------------


def is_pendant_edge(H: Hypergraph, j: int) -> bool:
    return sum(H.degrees[v] == 1 for v in H.edges[j]) >= H.k - 1


def is_branch_edge(H: Hypergraph, j: int) -> bool:
    deg = [H.degrees[v] for v in H.edges[j]]
    return any(d > 2 for d in deg) or sum(d > 1 for d in deg) >= 3


def classify_edge(H: Hypergraph, e: Iterable[int]) -> str:
    """Return ``"pendant"``, ``"branch"`` or ``"plain"``.

    An edge that is both pendant and branch (k-1 leaves plus one vertex of
    degree >= 3) is reported as pendant.
    """
    j = H.edge_index(e)
    if is_pendant_edge(H, j):
        return PENDANT
    if is_branch_edge(H, j):
        return BRANCH
    return PLAIN


@dataclass(frozen=True)
class LoosePathLocator:
    """An internal loose path between two branch edges.

    ``joints[i]`` is shared by ``path_edges[i-1]`` and ``path_edges[i]``;
    ``joints[0]`` lies in ``start_anchor`` and ``joints[-1]`` in ``end_anchor``.
    Edges are given as indices into ``H.edges``.
    """

    joints: tuple[int, ...]
    path_edges: tuple[int, ...]
    start_anchor: int
    end_anchor: int
    hypo: bool

    @property
    def length(self) -> int:
        return len(self.path_edges)

    @property
    def is_loop(self) -> bool:
        return self.start_anchor == self.end_anchor


def find_internal_paths(H: Hypergraph) -> list[LoosePathLocator]:
    deg = H.degrees
    branch = [is_branch_edge(H, j) for j in range(H.m)]
    found = {}
    for b in range(H.m):
        if not branch[b]:
            continue
        for w0 in H.edges[b]:
            if deg[w0] != 2:
                continue
            joints = [w0]
            path = []
            prev_edge = b
            w = w0
            ok = True
            while True:
                (nxt,) = [j for j in H.incident_edges[w] if j != prev_edge]
                if branch[nxt]:
                    end = nxt
                    break
                others = [u for u in H.edges[nxt] if u != w and deg[u] > 1]
                if len(others) != 1 or deg[others[0]] != 2:
                    ok = False
                    break
                path.append(nxt)
                w = others[0]
                joints.append(w)
                prev_edge = nxt
            if not ok:
                continue
            if path:
                key = ("p", frozenset(path))
            else:
                key = ("j", w0)
            if key in found:
                continue
            hypo = any(all(deg[u] <= 2 for u in H.edges[a]) for a in (b, end))
            found[key] = LoosePathLocator(tuple(joints), tuple(path), b, end, hypo)
    return sorted(found.values(), key=lambda p: (p.start_anchor, p.joints))


def is_subhypergraph(H1: Hypergraph, H2: Hypergraph,
                     embedding: Sequence[int] | Mapping[int, int] | None = None) -> bool:
    """True iff every edge of ``H1`` maps onto an edge of ``H2``."""
    if embedding is None:
        embedding = range(H1.n)
    images = [embedding[v] for v in range(H1.n)]
    if len(set(images)) != len(images):
        raise InvalidArgument("embedding is not injective")
    if H1.k != H2.k or H1.m > H2.m:
        return False
    if any(not 0 <= u < H2.n for u in images):
        return False
    return all(H2.has_edge(images[v] for v in e) for e in H1.edges)


# -- text format ---------------------------------------------------------------


def dumps(H: Hypergraph) -> str:
    lines = [f"{H.k} {H.n} {H.m}"]
    lines += [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Hypergraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise InvalidArgument("empty hypergraph file")
    try:
        k, n, m = (int(t) for t in rows[0])
        edges = [tuple(int(t) for t in r) for r in rows[1:]]
    except ValueError as exc:
        raise InvalidArgument(f"malformed hypergraph file: {exc}") from None
    if len(edges) != m:
        raise InvalidArgument(f"header says {m} edges, found {len(edges)}")
    return Hypergraph(k, n, tuple(edges))


def write(H: Hypergraph, fh: TextIO) -> None:
    fh.write(dumps(H))


def read(fh: TextIO) -> Hypergraph:
    return loads(fh.read())
