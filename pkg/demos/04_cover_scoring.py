"""Scoring covers against ground truth
====================================

Three overlap-aware metrics quantify how close a detected cover is to the
truth: overlapping NMI (information-theoretic, per-community best match),
the Omega index (chance-corrected agreement on how many communities each
vertex pair shares), and symmetric best-match average F1.  A composite
score column-normalizes the three so the best method per metric gets 1.
"""

from pvoc import (
    Cover,
    avg_f1,
    community_size_extremes,
    composite_scores,
    jaccard,
    omega_index,
    onmi,
)

truth = Cover([{0, 1, 2, 3}, {3, 4, 5}, {6, 7}])
print("truth communities:", sorted(sorted(b) for b in truth.blocks()))
print()

candidates = {
    "exact": Cover([{0, 1, 2, 3}, {3, 4, 5}, {6, 7}]),
    "merged": Cover([{0, 1, 2, 3, 4, 5}, {6, 7}]),
    "no-overlap": Cover([{0, 1, 2, 3}, {4, 5}, {6, 7}]),
    "shifted": Cover([{0, 1, 2}, {3, 4, 5, 6}, {7}]),
}
print(f"{'method':<11} {'onmi':>7} {'omega':>7} {'f1':>7}")
scores = {}
for name, detected in candidates.items():
    o = onmi(detected, truth)
    w = omega_index(detected, truth)
    f = avg_f1(detected, truth)
    scores[name] = (o, max(0.0, w), f)
    print(f"{name:<11} {o:7.4f} {w:7.4f} {f:7.4f}")
print()

print("composite (each column scaled so the best method gets 1, max 3):")
for name, value in composite_scores(scores).items():
    print(f"  {name:<11} {value:.4f}")
print()

# --- the classic anti-correlated example ----------------------------------
c1 = Cover([{0, 1}, {2, 3}])
c2 = Cover([{0, 2}, {1, 3}])
print("crossed 4-vertex covers: omega =", omega_index(c1, c2),
      "(worse than chance, hence negative)")

# --- size extremes and jaccard --------------------------------------------
mx, mn, big, small = community_size_extremes(truth)
print(f"largest truth community has {mx} members, smallest {mn}")
print("jaccard of {0,1,2,3} vs {1,2,3,4}:", jaccard({0, 1, 2, 3}, {1, 2, 3, 4}))
