"""Permanence-guided vertex replication: disjoint partition -> overlapping cover.

Only boundary vertices (those with at least one neighbor outside their own
community) are candidates.  For each candidate v the sum of permanences
over v and its neighbors is measured once against the input partition
(Sum_O), then re-measured under a hypothetical move of v into each
distinct external neighbor community (Sum_N).  When |Sum_N - Sum_O| <=
theta the move is "free enough" and a replica of v is added to that
community; v always keeps its original membership.

Every trial is evaluated against the *original* partition — accepted
replicas never influence later trials — so the outcome is a pure function
of (graph, partition, theta) and is independent of processing order.
The number of communities never changes; replication only thickens them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

from .errors import InvalidTarget
from .graph import Cover, Graph, Partition
from .permanence import neighborhood_sum_of, permanence_of

DisjointDetector = Union[Partition, Callable[[Graph], Partition]]


@dataclass(frozen=True)
class ReplicationConfig:
    """theta is the tolerance on the neighborhood permanence-sum change."""

    theta: float = 0.05

    def __post_init__(self):
        if self.theta < 0:
            raise ValueError("theta must be >= 0")


@dataclass(frozen=True)
class ReplicationDecision:
    """Outcome of one trial move, for audit logs."""

    vertex: int
    source_community: object
    target_community: object
    sum_before: float
    sum_after: float
    accepted: bool


class _Moved:
    """Assignment overlay: like `base` except vertex v sits in `target`."""

    __slots__ = ("base", "v", "target")

    def __init__(self, base, v, target):
        self.base = base
        self.v = v
        self.target = target

    def __getitem__(self, u):
        return self.target if u == self.v else self.base[u]


def boundary_vertices(g: Graph, p: Partition) -> set[int]:
    """Vertices with at least one neighbor outside their own community."""
    out = set()
    for v in g.vertices():
        own = p[v]
        for u in g.neighbors(v):
            if p[u] != own:
                out.add(v)
                break
    return out


def external_neighbor_communities(g: Graph, p: Partition, v: int) -> list:
    """Distinct communities of v's external neighbors, ascending."""
    own = p[v]
    return sorted({p[u] for u in g.neighbors(v)} - {own})


def trial_move_sum(g: Graph, p: Partition, v: int, target) -> float:
    """Neighborhood permanence sum if v were moved into `target`.

    The partition is not mutated; the move exists only as an overlay, so
    emptying a singleton community needs no special handling.

    Raises
    ------
    InvalidTarget
        If `target` is v's own community or no neighbor of v is in it.
    """
    own = p[v]
    if target == own:
        raise InvalidTarget(f"vertex {v} already belongs to {target!r}")
    if all(p[u] != target for u in g.neighbors(v)):
        raise InvalidTarget(f"vertex {v} has no edge into community {target!r}")
    return neighborhood_sum_of(g, _Moved(p, v, target), v)


def vertex_replication(
    g: Graph,
    p: Partition,
    cfg: ReplicationConfig | None = None,
    *,
    vertex_order: Iterable[int] | None = None,
    decision_sink: Callable[[ReplicationDecision], None] | None = None,
) -> tuple[Cover, list[ReplicationDecision]]:
    """Replicate boundary vertices into the external communities they fit.

    Returns the overlapping cover (same community labels and count as `p`)
    and the full decision log.  `vertex_order` overrides the canonical
    ascending order — the cover provably does not depend on it, which the
    tests exercise.  `decision_sink` additionally receives each decision
    as it is made (e.g. to stream a large log to disk).
    """
    if cfg is None:
        cfg = ReplicationConfig()
    if vertex_order is None:
        order = sorted(boundary_vertices(g, p))
    else:
        order = list(vertex_order)
    decisions: list[ReplicationDecision] = []
    replicas: dict = {}
    base: dict[int, float] = {}  # baseline permanences, shared across vertices

    def perm_base(u: int) -> float:
        value = base.get(u)
        if value is None:
            value = permanence_of(g, p, u)
            base[u] = value
        return value

    for v in order:
        targets = external_neighbor_communities(g, p, v)
        if not targets:
            continue
        own = p[v]
        # same accumulation order as neighborhood_permanence_sum, so the
        # cached path is bit-identical to the public operation
        sum_before = perm_base(v)
        for u in g.neighbors(v):
            sum_before += perm_base(u)
        for target in targets:
            sum_after = neighborhood_sum_of(g, _Moved(p, v, target), v)
            accepted = abs(sum_after - sum_before) <= cfg.theta
            decision = ReplicationDecision(
                v, own, target, sum_before, sum_after, accepted
            )
            decisions.append(decision)
            if decision_sink is not None:
                decision_sink(decision)
            if accepted:
                replicas.setdefault(target, set()).add(v)
    labels = p.labels()
    communities = [set(p.members(c)) | replicas.get(c, set()) for c in labels]
    return Cover(communities, labels=labels), decisions


def detect(
    g: Graph, detector: DisjointDetector, cfg: ReplicationConfig | None = None
) -> Cover:
    """Run a disjoint detector (or use a ready partition), then replicate."""
    p = detector(g) if callable(detector) else detector
    cover, _ = vertex_replication(g, p, cfg)
    return cover


def format_decision(d: ReplicationDecision, ext_id=None) -> str:
    """One log line: vertex, source, target, sums (12 significant digits), flag.

    `ext_id` optionally maps the internal vertex id to an external label
    (the CLI passes ``graph.ext_id`` so logs line up with input files).
    """
    vertex = d.vertex if ext_id is None else ext_id(d.vertex)
    return (
        f"{vertex}\t{d.source_community}\t{d.target_community}\t"
        f"{d.sum_before:.12g}\t{d.sum_after:.12g}\t{int(d.accepted)}"
    )
