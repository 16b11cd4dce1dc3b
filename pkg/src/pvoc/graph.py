"""Core containers: immutable undirected graphs, partitions, and covers.

A ``Graph`` stores a simple undirected graph with contiguous internal
vertex ids 0..n-1 and keeps the original external labels around for I/O.
``Partition`` assigns every vertex exactly one community; ``Cover`` lets a
vertex belong to several.  All downstream modules (permanence, Louvain,
replication, metrics) operate on internal ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import EmptyGraph, IncompleteCover, NotDisjoint, UnknownVertex

ExtId = Hashable  # external vertex label: int or str in practice


def ext_sort_key(label):
    """Sort key for external labels: integers numerically, then strings."""
    if isinstance(label, bool):
        label = int(label)
    if isinstance(label, int):
        return (0, label)
    return (1, str(label))


class Graph:
    """Immutable simple undirected graph with sorted adjacency lists.

    Construct through :func:`build_graph` or :func:`induced_subgraph`; the
    constructor validates symmetry, simplicity and sortedness, so direct
    use with hand-built adjacency is safe but slower.
    """

    __slots__ = ("_adj", "_adj_sets", "_ext_ids", "_ext_index", "_m")

    def __init__(self, adjacency: Sequence[Sequence[int]], ext_ids: Sequence[ExtId]):
        if len(adjacency) == 0:
            raise EmptyGraph("a graph needs at least one vertex")
        if len(adjacency) != len(ext_ids):
            raise ValueError("adjacency and ext_ids lengths differ")
        n = len(adjacency)
        adj = tuple(tuple(nbrs) for nbrs in adjacency)
        adj_sets = tuple(frozenset(nbrs) for nbrs in adj)
        deg_total = 0
        for v, nbrs in enumerate(adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency of vertex {v} not sorted/unique")
            if v in adj_sets[v]:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if v not in adj_sets[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
            deg_total += len(nbrs)
        self._adj = adj
        self._adj_sets = adj_sets
        self._ext_ids = tuple(ext_ids)
        self._ext_index = {label: v for v, label in enumerate(self._ext_ids)}
        if len(self._ext_index) != n:
            raise ValueError("external labels are not unique")
        self._m = deg_total // 2

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(len(self._adj))

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj_sets[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once, as (u, v) with u < v."""
        for v, nbrs in enumerate(self._adj):
            for u in nbrs:
                if v < u:
                    yield (v, u)

    def ext_id(self, v: int) -> ExtId:
        return self._ext_ids[v]

    def ext_ids(self) -> tuple[ExtId, ...]:
        return self._ext_ids

    def internal_id(self, label: ExtId) -> int:
        try:
            return self._ext_index[label]
        except KeyError:
            raise UnknownVertex(f"vertex {label!r} is not in the graph") from None

    def has_label(self, label: ExtId) -> bool:
        return label in self._ext_index

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edges: Iterable[tuple[ExtId, ExtId]]) -> Graph:
    """Build a simple undirected graph from a list of external-id pairs.

    Self-loops are dropped and duplicate edges collapsed.  Internal ids are
    assigned in first-appearance order of the external labels, so builds
    are deterministic.

    Raises
    ------
    EmptyGraph
        If the edge list is empty.
    """
    index: dict[ExtId, int] = {}
    ext: list[ExtId] = []
    pairs: set[tuple[int, int]] = set()
    seen_any = False
    for a, b in edges:
        seen_any = True
        for label in (a, b):
            if label not in index:
                index[label] = len(ext)
                ext.append(label)
        u, v = index[a], index[b]
        if u == v:
            continue
        pairs.add((u, v) if u < v else (v, u))
    if not seen_any:
        raise EmptyGraph("empty edge list")
    adj: list[list[int]] = [[] for _ in ext]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return Graph(adj, ext)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on `vertices` with every edge of `g` internal to the set.

    The kept vertices are renumbered 0..k-1 in ascending order of their
    internal id in `g` (so ``sorted(vertices)`` is the old-id sequence of
    the new graph); external labels carry over.

    Raises
    ------
    EmptyGraph
        If `vertices` is empty.
    UnknownVertex
        If `vertices` contains an id outside the graph.
    """
    keep = sorted(set(vertices))
    if not keep:
        raise EmptyGraph("empty vertex set")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise UnknownVertex("vertex id outside the graph")
    remap = {old: new for new, old in enumerate(keep)}
    adj = [[remap[u] for u in g.neighbors(old) if u in remap] for old in keep]
    for nbrs in adj:
        nbrs.sort()
    return Graph(adj, [g.ext_id(old) for old in keep])


class Partition:
    """Disjoint community assignment: every vertex has exactly one label."""

    __slots__ = ("_labels", "_members")

    def __init__(self, labels: Sequence[Hashable]):
        if len(labels) == 0:
            raise ValueError("a partition must cover at least one vertex")
        members: dict[Hashable, set[int]] = {}
        for v, c in enumerate(labels):
            if c is None:
                raise ValueError(f"vertex {v} has no community")
            members.setdefault(c, set()).add(v)
        self._labels = tuple(labels)
        self._members = {c: frozenset(vs) for c, vs in members.items()}

    @classmethod
    def from_sets(cls, n: int, communities: Iterable[Iterable[int]]) -> "Partition":
        """Build from explicit member sets; they must tile 0..n-1 exactly."""
        labels: list = [None] * n
        for c, block in enumerate(communities):
            for v in block:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range")
                if labels[v] is not None:
                    raise NotDisjoint(f"vertex {v} appears in several communities")
                labels[v] = c
        if any(c is None for c in labels):
            missing = sum(1 for c in labels if c is None)
            raise IncompleteCover(f"{missing} vertices have no community")
        return cls(labels)

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def n_communities(self) -> int:
        return len(self._members)

    def __getitem__(self, v: int) -> Hashable:
        return self._labels[v]

    def community_of(self, v: int) -> Hashable:
        return self._labels[v]

    def members(self, label: Hashable) -> frozenset[int]:
        return self._members[label]

    def labels(self) -> list:
        return sorted(self._members)

    def as_labels(self) -> tuple:
        return self._labels

    def blocks(self) -> frozenset[frozenset[int]]:
        """Label-free view of the partition as a set of member sets."""
        return frozenset(self._members.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._labels == other._labels

    def __hash__(self):
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, communities={self.n_communities})"


class Cover:
    """Overlapping community structure: vertex -> non-empty set of labels.

    The vertex domain of a cover is the union of its communities; graph
    vertices outside the domain simply have no membership (SNAP ground
    truth regularly leaves vertices uncovered).  A cover with zero
    communities is allowed as a degenerate value; individual communities
    must be non-empty.
    """

    __slots__ = ("_members", "_memberships")

    def __init__(self, communities: Iterable[Iterable[int]], labels=None):
        sets = [frozenset(c) for c in communities]
        if labels is None:
            labels = range(len(sets))
        labels = list(labels)
        if len(labels) != len(sets):
            raise ValueError("labels and communities lengths differ")
        if len(set(labels)) != len(labels):
            raise ValueError("community labels are not unique")
        members: dict = {}
        memberships: dict[int, set] = {}
        for label, block in zip(labels, sets):
            if not block:
                raise ValueError(f"community {label!r} is empty")
            members[label] = block
            for v in block:
                memberships.setdefault(v, set()).add(label)
        self._members = members
        self._memberships = {v: frozenset(ls) for v, ls in memberships.items()}

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._memberships)

    @property
    def n_communities(self) -> int:
        return len(self._members)

    def memberships(self, v: int) -> frozenset:
        """Labels of the communities containing v (empty if uncovered)."""
        return self._memberships.get(v, frozenset())

    def members(self, label) -> frozenset[int]:
        return self._members[label]

    def labels(self) -> list:
        return sorted(self._members)

    def community_sets(self) -> list[frozenset[int]]:
        """Member sets in ascending label order."""
        return [self._members[c] for c in self.labels()]

    def blocks(self) -> frozenset[frozenset[int]]:
        return frozenset(self._members.values())

    def restrict(self, keep: Iterable[int]) -> "Cover":
        """Cover induced on `keep`; emptied communities are dropped."""
        keep = frozenset(keep)
        labels, sets = [], []
        for c in self.labels():
            block = self._members[c] & keep
            if block:
                labels.append(c)
                sets.append(block)
        return Cover(sets, labels=labels)

    def remap_vertices(self, mapping: Mapping[int, int]) -> "Cover":
        """Rename vertex ids via `mapping`, dropping vertices not mapped."""
        labels, sets = [], []
        for c in self.labels():
            block = {mapping[v] for v in self._members[c] if v in mapping}
            if block:
                labels.append(c)
                sets.append(block)
        return Cover(sets, labels=labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cover) and self._members == other._members

    def __hash__(self):
        return hash(frozenset(self._members.items()))

    def __repr__(self) -> str:
        return f"Cover(vertices={len(self._memberships)}, communities={self.n_communities})"


@dataclass(frozen=True)
class GroundTruthStats:
    """Summary statistics of a ground-truth cover."""

    n_communities: int
    avg_size: float
    avg_memberships: float


def ground_truth_stats(c: Cover) -> GroundTruthStats:
    """Community count, mean community size, mean memberships per vertex."""
    sizes = [len(c.members(label)) for label in c.labels()]
    n_covered = len(c.vertices)
    avg_size = sum(sizes) / len(sizes) if sizes else 0.0
    avg_memb = sum(sizes) / n_covered if n_covered else 0.0
    return GroundTruthStats(len(sizes), avg_size, avg_memb)


def partition_to_cover(p: Partition) -> Cover:
    """Lift a disjoint partition into a cover of singleton memberships."""
    labels = p.labels()
    return Cover([p.members(c) for c in labels], labels=labels)


def collapse_singleton_cover(c: Cover) -> Partition:
    """Inverse of :func:`partition_to_cover` for covers without overlap.

    Raises
    ------
    NotDisjoint
        If any vertex belongs to more than one community.
    IncompleteCover
        If the domain is not the contiguous range 0..n-1.
    """
    domain = c.vertices
    if not domain:
        raise IncompleteCover("cover has no vertices")
    n = max(domain) + 1
    if len(domain) != n:
        raise IncompleteCover("cover domain is not contiguous from 0")
    labels: list = [None] * n
    for v in range(n):
        ms = c.memberships(v)
        if len(ms) > 1:
            raise NotDisjoint(f"vertex {v} has {len(ms)} memberships")
        labels[v] = next(iter(ms))
    return Partition(labels)
