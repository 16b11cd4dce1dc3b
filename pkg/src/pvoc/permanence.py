"""Permanence: a vertex-level score of how firmly a vertex sits in its community.

For a vertex v with degree D(v), I(v) internal neighbors, a maximum of
E_max(v) edges into any single foreign community, and internal clustering
coefficient c_in(v) (fraction of connected pairs among v's same-community
neighbors), the score is

    I(v) / (E_max(v) * D(v)) - (1 - c_in(v))

A vertex with no external edge scores c_in(v) by definition.  Values lie
in [-1, 1]; -1 is reached exactly when I(v) = 0 under the convention
c_in = 0 for fewer than two internal neighbors.

All operations are pure reads over (Graph, assignment) and are safe to
evaluate concurrently.  The assignment argument is anything indexable by
vertex id (a Partition, or a hypothetical overlay during trial moves).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IsolatedVertex
from .graph import Graph, Partition


@dataclass(frozen=True)
class PermanenceView:
    """Cached per-vertex quantities under one community assignment.

    ``max_external`` is None when the vertex has no external edge.
    """

    vertex: int
    internal_degree: int
    degree: int
    max_external: int | None
    internal_clustering: float
    value: float


def _scan(g: Graph, assignment, v: int):
    """One pass over adj(v): internal neighbors and per-community external counts."""
    own = assignment[v]
    internal = []
    external: dict = {}
    for u in g.neighbors(v):
        c = assignment[u]
        if c == own:
            internal.append(u)
        else:
            external[c] = external.get(c, 0) + 1
    return internal, external


def _clustering(g: Graph, internal) -> float:
    k = len(internal)
    if k < 2:
        return 0.0
    links = 0
    for i, a in enumerate(internal):
        nbrs = g.neighbor_set(a)
        for b in internal[i + 1 :]:
            if b in nbrs:
                links += 1
    return 2.0 * links / (k * (k - 1))


def permanence_of(g: Graph, assignment, v: int) -> float:
    """Permanence of v under an arbitrary vertex->community assignment.

    Counts stay exact integers until the final division.
    """
    d = g.degree(v)
    if d == 0:
        raise IsolatedVertex(f"vertex {v} has degree 0")
    internal, external = _scan(g, assignment, v)
    c_in = _clustering(g, internal)
    if not external:
        return c_in
    e_max = max(external.values())
    return len(internal) / (e_max * d) - (1.0 - c_in)


def internal_clustering(g: Graph, p: Partition, v: int) -> float:
    """Fraction of connected pairs among v's same-community neighbors.

    Returns 0.0 when v has fewer than two internal neighbors.
    """
    internal, _ = _scan(g, p, v)
    return _clustering(g, internal)


def external_pull(g: Graph, p: Partition, v: int):
    """Per-community external edge counts of v and their maximum.

    Returns ``(e_max, counts)``; ``e_max`` is None and ``counts`` empty
    when v has no external edge.
    """
    _, external = _scan(g, p, v)
    if not external:
        return None, {}
    return max(external.values()), external


def permanence(g: Graph, p: Partition, v: int) -> float:
    """Permanence of v under the partition p.

    Raises
    ------
    IsolatedVertex
        If v has degree 0.
    """
    return permanence_of(g, p, v)


def permanence_view(g: Graph, p: Partition, v: int) -> PermanenceView:
    """All ingredients of the score for one vertex, for tables and debugging."""
    d = g.degree(v)
    if d == 0:
        raise IsolatedVertex(f"vertex {v} has degree 0")
    internal, external = _scan(g, p, v)
    c_in = _clustering(g, internal)
    if external:
        e_max = max(external.values())
        value = len(internal) / (e_max * d) - (1.0 - c_in)
    else:
        e_max = None
        value = c_in
    return PermanenceView(v, len(internal), d, e_max, c_in, value)


def neighborhood_permanence_sum(g: Graph, p: Partition, v: int) -> float:
    """Permanence of v plus the permanences of all its neighbors under p.

    This is the quantity the replication step compares before and after a
    trial move; only v and adj(v) can change when v's community changes.
    """
    return neighborhood_sum_of(g, p, v)


def neighborhood_sum_of(g: Graph, assignment, v: int) -> float:
    """Like :func:`neighborhood_permanence_sum` for any assignment overlay."""
    total = permanence_of(g, assignment, v)
    for u in g.neighbors(v):
        total += permanence_of(g, assignment, u)
    return total
