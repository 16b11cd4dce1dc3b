"""Vertex replication, step by step
=================================

A disjoint detector must put the butterfly's hub into exactly one of the
two triangles it belongs to.  The replication pass fixes that: for every
boundary vertex it measures the permanence sum over the vertex and its
neighbors, re-measures under a hypothetical move into each neighboring
community, and replicates the vertex wherever the difference is at most
theta.  Each trial runs against the original partition, so the result
does not depend on processing order.
"""

from pvoc import (
    Partition,
    ReplicationConfig,
    boundary_vertices,
    build_graph,
    louvain,
    vertex_replication,
)
from pvoc.replication import format_decision

g = build_graph([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
p = louvain(g)
print("butterfly partition from louvain:", sorted(sorted(b) for b in p.blocks()))
print("boundary vertices (have an external neighbor):",
      sorted(boundary_vertices(g, p)))
print()

cover, decisions = vertex_replication(g, p, ReplicationConfig(theta=0.05))
print("trial log (vertex, from, to, sum before, sum after, accepted):")
for d in decisions:
    print(" ", format_decision(d))
print()
print("the hub's move is perfectly symmetric (|delta| = 0), so it is")
print("replicated; the wing vertices would lose too much and stay put.")
print("overlapping cover:", sorted(sorted(b) for b in cover.blocks()))
print()

# --- theta controls the amount of overlap --------------------------------
print("replicas accepted at increasing theta (same butterfly):")
for theta in (0.0, 0.05, 0.5, 1.0):
    _, log = vertex_replication(g, p, ReplicationConfig(theta))
    n = sum(1 for d in log if d.accepted)
    print(f"  theta={theta:<5} -> {n} replica(s)")
print("the accepted set only ever grows with theta.")
