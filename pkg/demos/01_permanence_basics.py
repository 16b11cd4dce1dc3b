"""Permanence basics
==================

Permanence scores how firmly a vertex sits inside its community: internal
degree against the strongest external pull, discounted by how loosely its
internal neighbors hang together.  This script walks through the score on
three small graphs.
"""

from pvoc import Partition, build_graph, permanence_view

# --- a vertex inside a clique -------------------------------------------
# K4 plus a far-away edge; vertex 0 has no external edge and a fully
# connected internal neighborhood, the best possible situation.
g = build_graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5)])
p = Partition([0, 0, 0, 0, 1, 1])
view = permanence_view(g, p, 0)
print("clique member:", view)
print("  -> maximal permanence", view.value)
print()

# --- balanced external pull ---------------------------------------------
# A hub with three internal neighbors forming a triangle and six external
# edges spread 2/2/2 over three foreign communities.  The even spread
# keeps the external pull weak: no single community can claim the hub.
edges = [("v", "x1"), ("v", "x2"), ("v", "x3"),
         ("x1", "x2"), ("x1", "x3"), ("x2", "x3")]
for i in range(6):
    edges += [("v", f"e{i}"), (f"e{i}", f"f{i}")]
g = build_graph(edges)
labels = {g.internal_id(n): 0 for n in ("v", "x1", "x2", "x3")}
for i in range(6):
    labels[g.internal_id(f"e{i}")] = 1 + i // 2
    labels[g.internal_id(f"f{i}")] = 1 + i // 2
p = Partition([labels[v] for v in g.vertices()])
view = permanence_view(g, p, g.internal_id("v"))
print("balanced hub:", view)
print("  -> I/(Emax*D) - (1 - c_in) =",
      f"{view.internal_degree}/({view.max_external}*{view.degree}) - 0 =",
      view.value)
print()

# --- a badly placed vertex ----------------------------------------------
# Vertex 0 sits alone in its community: zero internal edges drive the
# score to the floor of -1.
g = build_graph([(0, 1), (0, 2), (1, 2)])
p = Partition([0, 1, 1])
print("misplaced vertex:", permanence_view(g, p, 0))

# --- full table for one graph -------------------------------------------
print()
print("butterfly graph, hub shared by two triangles:")
g = build_graph([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
p = Partition([0, 0, 0, 1, 1])
print("vertex  I  D  Emax  c_in   perm")
for v in g.vertices():
    w = permanence_view(g, p, v)
    e = "-" if w.max_external is None else w.max_external
    print(f"{v:>6}  {w.internal_degree}  {w.degree}  {e:>4}  "
          f"{w.internal_clustering:4.2f}  {w.value:+.3f}")
print("the hub's +0.25 is the signature of a vertex torn between two homes")
