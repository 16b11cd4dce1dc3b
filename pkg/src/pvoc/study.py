"""Empirical studies relating disjoint output to overlapping ground truth.

Three procedures:

* overlap stripping — remove every vertex with two or more ground-truth
  memberships from both the truth and a detected partition, then measure
  how similar the remainders are (NMI).  High similarity is the evidence
  that disjoint detectors already capture the non-overlapping part.
* subnetwork sampling — pick a random overlapping vertex u and induce the
  subgraph on everyone who shares a ground-truth community with u; this
  is how large ground-truth networks are broken into testable pieces.
* external-degree profile — per ground-truth membership count k, the mean
  and standard deviation of vertices' external degree in the detected
  partition; rising curves mean boundary vertices are the overlap
  candidates.

Vertices the ground truth leaves uncovered are excluded from all studies
(logged once per call).  Sampling uses ``random.Random`` (Mersenne
Twister) so fixed seeds reproduce bit-identical results.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateStudy, NoOverlapVertex
from .graph import Cover, Graph, Partition, induced_subgraph
from .metrics import _nmi_from_labels

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StripStudyResult:
    """Outcome of the overlap-stripping comparison.

    Community counts refer to the restricted structures actually
    compared (communities emptied by the stripping are dropped).
    """

    removed_count: int
    nmi: float
    n_truth_comms: int
    n_detected_comms: int


def _covered_vertices(g: Graph, truth: Cover) -> frozenset[int]:
    covered = truth.vertices
    uncovered = g.n - len(covered & frozenset(g.vertices()))
    if uncovered:
        log.info("excluding %d vertices without ground-truth membership", uncovered)
    return covered


def overlapping_vertices(truth: Cover) -> list[int]:
    """Vertices with at least two ground-truth memberships, ascending."""
    return sorted(v for v in truth.vertices if len(truth.memberships(v)) >= 2)


def strip_overlap_study(g: Graph, truth: Cover, p: Partition) -> StripStudyResult:
    """Strip multi-membership vertices, then NMI of truth vs partition.

    The restricted ground truth is disjoint by construction (every
    remaining vertex has exactly one membership), so plain NMI applies.

    Raises
    ------
    DegenerateStudy
        If stripping removes every covered vertex.
    """
    covered = _covered_vertices(g, truth)
    overlap = set(overlapping_vertices(truth))
    kept = sorted(covered - overlap)
    if not kept:
        raise DegenerateStudy("every covered vertex has multiple memberships")
    truth_labels = [next(iter(truth.memberships(v))) for v in kept]
    detected_labels = [p[v] for v in kept]
    return StripStudyResult(
        removed_count=len(overlap),
        nmi=_nmi_from_labels(truth_labels, detected_labels),
        n_truth_comms=len(set(truth_labels)),
        n_detected_comms=len(set(detected_labels)),
    )


def sample_subnetwork(g: Graph, truth: Cover, rng_seed: int) -> tuple[Graph, Cover]:
    """Induced subgraph around one random overlapping vertex, plus its truth.

    The vertex u is drawn (seeded) from all vertices with >= 2 ground
    truth memberships; the subnetwork holds every vertex sharing at least
    one truth community with u.  The returned cover is re-indexed to the
    subgraph's vertex ids.

    Raises
    ------
    NoOverlapVertex
        If the ground truth has no multi-membership vertex.
    """
    candidates = overlapping_vertices(truth)
    if not candidates:
        raise NoOverlapVertex("ground truth has no overlapping vertex")
    u = random.Random(rng_seed).choice(candidates)
    nodes: set[int] = set()
    for label in sorted(truth.memberships(u)):
        nodes |= truth.members(label)
    keep = sorted(nodes)
    sub = induced_subgraph(g, keep)
    remap = {old: new for new, old in enumerate(keep)}
    return sub, truth.remap_vertices(remap)


def external_degree_membership_profile(
    g: Graph, truth: Cover, p: Partition
) -> list[tuple[int, float, float]]:
    """Rows (k, mean external degree, std dev) grouped by membership count.

    The external degree of v is its number of neighbors assigned to a
    different community than v by the partition p; k is the number of
    ground-truth memberships of v.  Standard deviation is the population
    form (ddof=0).  Rows are ascending in k.
    """
    covered = _covered_vertices(g, truth)
    by_k: dict[int, list[int]] = {}
    for v in sorted(covered):
        own = p[v]
        ext = sum(1 for u in g.neighbors(v) if p[u] != own)
        by_k.setdefault(len(truth.memberships(v)), []).append(ext)
    rows = []
    for k in sorted(by_k):
        arr = np.asarray(by_k[k], dtype=float)
        rows.append((k, float(arr.mean()), float(arr.std())))
    return rows
