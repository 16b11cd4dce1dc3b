"""Agreement scores between detected and ground-truth community structure.

Disjoint structures are compared with normalized mutual information;
overlapping covers with the McDaid max-normalized overlapping NMI, the
Omega index (chance-corrected pair co-membership agreement), and the
symmetric best-match average F1.  All logarithms are base 2 and counting
stays in exact integers until the final divisions.

The strict metric functions require both structures to live on the same
vertex set and raise DomainMismatch otherwise; :func:`score_covers`
restricts both sides to their common domain first (logging the
restriction), which is how partially covered SNAP ground truth is
handled.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import log2

from .errors import DomainMismatch, EmptyCover, NotDisjoint
from .graph import Cover, Partition

log = logging.getLogger(__name__)

METRIC_KEYS = ("onmi", "omega", "avg_f1", "nmi")


def _nmi_from_labels(xs, ys) -> float:
    n = len(xs)
    cx = Counter(xs)
    cy = Counter(ys)
    hx = -sum(c / n * log2(c / n) for c in cx.values())
    hy = -sum(c / n * log2(c / n) for c in cy.values())
    if hx == 0.0 and hy == 0.0:
        return 1.0  # both sides constant: identical up to relabeling
    joint = Counter(zip(xs, ys))
    mi = 0.0
    for (a, b), c in joint.items():
        mi += c / n * log2(n * c / (cx[a] * cy[b]))
    value = 2.0 * mi / (hx + hy)
    return min(1.0, max(0.0, value))


def nmi_disjoint(p1: Partition, p2: Partition) -> float:
    """Normalized mutual information 2*I/(H1+H2) of two disjoint partitions.

    1.0 for identical partitions up to relabeling; defined as 1.0 when
    both sides are a single community (both entropies vanish).

    Raises
    ------
    DomainMismatch
        If the partitions cover different numbers of vertices.
    """
    if p1.n != p2.n:
        raise DomainMismatch(f"partition sizes differ: {p1.n} vs {p2.n}")
    return _nmi_from_labels(p1.as_labels(), p2.as_labels())


def _h(w: int, n: int) -> float:
    """Unnormalized entropy term -w*log2(w/n); 0 by convention at w=0."""
    return 0.0 if w <= 0 else -w * log2(w / n)


def _conditional_sum(sets_a, sets_b, n: int) -> float:
    """Sum over communities A of min admissible H(A|B), else H(A)."""
    total = 0.0
    for block_a in sets_a:
        size_a = len(block_a)
        h_a = _h(size_a, n) + _h(n - size_a, n)
        best = h_a
        for block_b in sets_b:
            both = len(block_a & block_b)
            only_a = size_a - both
            only_b = len(block_b) - both
            neither = n - both - only_a - only_b
            if _h(neither, n) + _h(both, n) < _h(only_a, n) + _h(only_b, n):
                continue  # inadmissible pairing: would reward anti-correlation
            cond = (
                _h(neither, n)
                + _h(only_a, n)
                + _h(only_b, n)
                + _h(both, n)
                - _h(only_b + both, n)
                - _h(neither + only_a, n)
            )
            if cond < best:
                best = cond
        total += max(best, 0.0)
    return total


def onmi(c1: Cover, c2: Cover) -> float:
    """Overlapping NMI (McDaid variant, max normalization) of two covers.

    Each community is a binary membership vector; per-community
    conditional entropies are admitted only when the 2x2 contingency
    favours correlation, the best (smallest) admissible partner is kept,
    and the averaged lack-of-information is normalized by
    max(H(C1), H(C2)).  Result in [0, 1].

    Raises
    ------
    DomainMismatch
        If the covers have different vertex sets.
    """
    if c1.vertices != c2.vertices:
        raise DomainMismatch("covers are over different vertex sets")
    n = len(c1.vertices)
    sets1 = c1.community_sets()
    sets2 = c2.community_sets()
    h1 = sum(_h(len(b), n) + _h(n - len(b), n) for b in sets1)
    h2 = sum(_h(len(b), n) + _h(n - len(b), n) for b in sets2)
    top = max(h1, h2)
    if top == 0.0:
        return 1.0  # every community is the whole vertex set on both sides
    cond1 = _conditional_sum(sets1, sets2, n)
    cond2 = _conditional_sum(sets2, sets1, n)
    mi = 0.5 * ((h1 - cond1) + (h2 - cond2))
    return min(1.0, max(0.0, mi / top))


def _pair_counts(c: Cover) -> dict[tuple[int, int], int]:
    """How many communities each unordered vertex pair shares (only >=1)."""
    counts: dict[tuple[int, int], int] = {}
    for block in c.community_sets():
        for pair in combinations(sorted(block), 2):
            counts[pair] = counts.get(pair, 0) + 1
    return counts


def omega_index(c1: Cover, c2: Cover) -> float:
    """Omega index: chance-corrected agreement on shared-community counts.

    With t_j(C) the set of vertex pairs co-occurring in exactly j
    communities of C and N = n(n-1)/2 pairs, the observed agreement is
    A = sum_j |t_j(c1) ∩ t_j(c2)| / N and the expected agreement is
    E = sum_j |t_j(c1)|·|t_j(c2)| / N^2; omega = (A-E)/(1-E), computed in
    exact integer arithmetic.  Total degenerate agreement (E = A = 1)
    returns 1.0.

    Raises
    ------
    DomainMismatch
        If the covers differ in vertex set or have fewer than 2 vertices.
    """
    if c1.vertices != c2.vertices:
        raise DomainMismatch("covers are over different vertex sets")
    n = len(c1.vertices)
    if n < 2:
        raise DomainMismatch("omega needs at least two vertices")
    n_pairs = n * (n - 1) // 2
    d1 = _pair_counts(c1)
    d2 = _pair_counts(c2)
    matched = n_pairs - len(d1.keys() | d2.keys())  # pairs in t_0 of both
    for pair, j in d1.items():
        if d2.get(pair) == j:
            matched += 1
    hist1 = Counter(d1.values())
    hist1[0] = n_pairs - len(d1)
    hist2 = Counter(d2.values())
    hist2[0] = n_pairs - len(d2)
    expected = sum(cnt * hist2.get(j, 0) for j, cnt in hist1.items())
    numerator = matched * n_pairs - expected
    denominator = n_pairs * n_pairs - expected
    if denominator == 0:
        return 1.0
    return numerator / denominator


def avg_f1(detected: Cover, truth: Cover) -> float:
    """Symmetric best-match average F1 between two community sets.

    F1(A,B) = 2|A∩B|/(|A|+|B|); the score averages, in both directions,
    each community's best F1 against the other side, then takes the mean
    of the two directions.

    Raises
    ------
    EmptyCover
        If either side has no communities.
    """
    det = detected.community_sets()
    tru = truth.community_sets()
    if not det or not tru:
        raise EmptyCover("average F1 needs at least one community per side")

    def best_mean(side_a, side_b):
        total = 0.0
        for block_a in side_a:
            best = 0.0
            for block_b in side_b:
                inter = len(block_a & block_b)
                if inter:
                    score = 2.0 * inter / (len(block_a) + len(block_b))
                    if score > best:
                        best = score
            total += best
        return total / len(side_a)

    return 0.5 * (best_mean(tru, det) + best_mean(det, tru))


def jaccard(a, b) -> float:
    """|a ∩ b| / |a ∪ b|; two empty sets count as identical (1.0)."""
    a = frozenset(a)
    b = frozenset(b)
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def composite_scores(per_method: dict) -> dict:
    """Column-normalized composite of (onmi, omega, f1) triples per method.

    Each metric column is divided by its maximum, so the best method gets
    1 per metric; the composite is the sum of the three normalized scores
    (maximum 3).  An all-zero column contributes 0 to every method.
    Scores must be non-negative (clip omega at 0 first).
    """
    if not per_method:
        raise ValueError("need at least one method")
    for method, triple in per_method.items():
        if len(triple) != 3:
            raise ValueError(f"{method}: expected (onmi, omega, f1)")
        if any(s < 0 for s in triple):
            raise ValueError(f"{method}: scores must be >= 0")
    maxima = [max(triple[i] for triple in per_method.values()) for i in range(3)]
    out = {}
    for method, triple in per_method.items():
        out[method] = sum(
            triple[i] / maxima[i] for i in range(3) if maxima[i] > 0
        )
    return out


def community_size_extremes(c: Cover):
    """(max size, min size, largest community, smallest community).

    Ties on size go to the community whose sorted member list is
    smallest.

    Raises
    ------
    EmptyCover
        If the cover has no communities.
    """
    if c.n_communities == 0:
        raise EmptyCover("no communities")
    canon = sorted(c.blocks(), key=lambda block: tuple(sorted(block)))
    largest = max(canon, key=len)
    smallest = min(canon, key=len)
    return len(largest), len(smallest), largest, smallest


_RANGES = {
    "onmi": (0.0, 1.0),
    "omega": (-1.0, 1.0),
    "avg_f1": (0.0, 1.0),
    "nmi": (0.0, 1.0),
}
_EPS = 1e-9


@dataclass(frozen=True)
class MetricReport:
    """Named scores for one detected-vs-truth comparison.

    Fields are None when the metric was not requested (or was refused,
    e.g. NMI on overlapping input).  Serializes to a flat key-value block
    and to a tab-separated row for tables.
    """

    onmi: float | None = None
    omega: float | None = None
    avg_f1: float | None = None
    nmi: float | None = None
    details: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        for key, (lo, hi) in _RANGES.items():
            value = getattr(self, key)
            if value is not None and not (lo - _EPS <= value <= hi + _EPS):
                raise ValueError(f"{key}={value} outside [{lo}, {hi}]")

    def scores(self) -> dict:
        return {k: getattr(self, k) for k in METRIC_KEYS if getattr(self, k) is not None}

    def to_text(self) -> str:
        return "\n".join(f"{k}\t{v:.12g}" for k, v in self.scores().items())

    @staticmethod
    def row_header(keys=METRIC_KEYS) -> str:
        return "\t".join(keys)

    def to_row(self, keys=METRIC_KEYS) -> str:
        cells = []
        for k in keys:
            v = getattr(self, k)
            cells.append("-" if v is None else f"{v:.12g}")
        return "\t".join(cells)


def score_covers(detected: Cover, truth: Cover, metrics=("onmi", "omega", "avg_f1")) -> MetricReport:
    """Score a detected cover against ground truth on their common domain.

    When the two covers do not span the same vertices both are restricted
    to the intersection first (the restriction is logged).  Requesting
    "nmi" demands singleton memberships on both sides and raises
    NotDisjoint otherwise.
    """
    unknown = set(metrics) - set(METRIC_KEYS)
    if unknown:
        raise ValueError(f"unknown metrics: {sorted(unknown)}")
    common = detected.vertices & truth.vertices
    if not common:
        raise DomainMismatch("covers share no vertices")
    if common != detected.vertices or common != truth.vertices:
        dropped = len(detected.vertices | truth.vertices) - len(common)
        log.info("restricting comparison to %d common vertices (%d dropped)",
                 len(common), dropped)
        detected = detected.restrict(common)
        truth = truth.restrict(common)
    values: dict = {}
    if "onmi" in metrics:
        values["onmi"] = onmi(detected, truth)
    if "omega" in metrics:
        values["omega"] = omega_index(detected, truth)
    if "avg_f1" in metrics:
        values["avg_f1"] = avg_f1(detected, truth)
    if "nmi" in metrics:
        order = sorted(common)
        for side in (detected, truth):
            if any(len(side.memberships(v)) != 1 for v in order):
                raise NotDisjoint("nmi requires disjoint structure on both sides")
        values["nmi"] = _nmi_from_labels(
            [next(iter(detected.memberships(v))) for v in order],
            [next(iter(truth.memberships(v))) for v in order],
        )
    return MetricReport(**values)
