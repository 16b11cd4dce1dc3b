"""Disjoint community detection: Newman-Girvan modularity and Louvain.

The Louvain optimizer is the classic two-phase scheme: sweep single-vertex
moves to a local optimum, collapse communities into supernodes, repeat.
After the multi-level loop a final move sweep runs on the original graph,
so the returned partition is a local maximum of modularity under
single-vertex moves at the finest level.

Determinism contract: with ``seed=0`` vertices are visited in ascending
id order and equal-gain ties go to the lowest community id, so repeated
runs give identical partitions.  Any other seed shuffles the visit order
with a Mersenne-Twister ``random.Random(seed)``.

Partitions produced by external tools (e.g. Infomap) are imported from
LFR-style files with exactly one community id per node.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import IncompleteCover, NotDisjoint, ParseError
from .fileio import _lines, _open_read, parse_label
from .graph import Graph, Partition


@dataclass(frozen=True)
class LouvainConfig:
    """Knobs for the optimizer.

    max_passes bounds the number of aggregation levels; the local sweep
    inside a level always runs to convergence.  A single-vertex move is
    taken only when it improves modularity by more than
    min_modularity_gain, and levels stop once a whole level gains less.
    """

    max_passes: int = 32
    min_modularity_gain: float = 1e-7
    seed: int = 0

    def __post_init__(self):
        if self.max_passes < 1:
            raise ValueError("max_passes must be >= 1")
        if self.min_modularity_gain < 0:
            raise ValueError("min_modularity_gain must be >= 0")


def modularity(g: Graph, p: Partition) -> float:
    """Newman-Girvan modularity of a disjoint partition.

    Q = sum_c [ e_c/m - (d_c/2m)^2 ] with e_c the intra-community edge
    count and d_c the total degree of community c.  Defined as 0.0 for an
    edgeless graph.
    """
    m = g.m
    if m == 0:
        return 0.0
    intra: dict = {}
    deg: dict = {}
    for v in g.vertices():
        c = p[v]
        deg[c] = deg.get(c, 0) + g.degree(v)
    for u, v in g.edges():
        if p[u] == p[v]:
            c = p[u]
            intra[c] = intra.get(c, 0) + 1
    two_m = 2.0 * m
    q = 0.0
    for c, d_c in deg.items():
        q += intra.get(c, 0) / m - (d_c / two_m) ** 2
    return q


class _LevelGraph:
    """Weighted graph (with self-loops) used internally between levels."""

    __slots__ = ("nbw", "loops", "k", "two_m")

    def __init__(self, nbw, loops):
        self.nbw = nbw
        self.loops = loops
        self.k = [sum(nb.values()) + 2.0 * lp for nb, lp in zip(nbw, loops)]
        self.two_m = sum(self.k)

    @classmethod
    def from_graph(cls, g: Graph) -> "_LevelGraph":
        nbw = [{u: 1.0 for u in g.neighbors(v)} for v in g.vertices()]
        return cls(nbw, [0.0] * g.n)

    @property
    def size(self) -> int:
        return len(self.nbw)

    def aggregate(self, node2com, n_coms: int) -> "_LevelGraph":
        nbw = [dict() for _ in range(n_coms)]
        loops = [0.0] * n_coms
        for i, nb in enumerate(self.nbw):
            ci = node2com[i]
            loops[ci] += self.loops[i]
            for j, w in nb.items():
                if j < i:
                    continue
                cj = node2com[j]
                if ci == cj:
                    loops[ci] += w
                else:
                    nbw[ci][cj] = nbw[ci].get(cj, 0.0) + w
                    nbw[cj][ci] = nbw[cj].get(ci, 0.0) + w
        return _LevelGraph(nbw, loops)


def _local_move(lg: _LevelGraph, init, order, min_gain: float):
    """Sweep single-node moves until none improves Q by more than min_gain.

    Returns (node2com, sum_in, sum_tot); community labels are stable ints
    carried over from `init`.
    """
    node2com = list(init)
    m = lg.two_m / 2.0
    if m == 0:
        return node2com, {}, {}
    sum_tot: dict = {}
    sum_in: dict = {}
    for i, c in enumerate(node2com):
        sum_tot[c] = sum_tot.get(c, 0.0) + lg.k[i]
        sum_in[c] = sum_in.get(c, 0.0) + lg.loops[i]
    for i, nb in enumerate(lg.nbw):
        ci = node2com[i]
        for j, w in nb.items():
            if j < i and node2com[j] == ci:
                sum_in[ci] += w
    inv_m = 1.0 / m
    inv_2m2 = 1.0 / (2.0 * m * m)
    improved = True
    while improved:
        improved = False
        for i in order:
            c_old = node2com[i]
            k_i = lg.k[i]
            com_w: dict = {}
            for j, w in lg.nbw[i].items():
                cj = node2com[j]
                com_w[cj] = com_w.get(cj, 0.0) + w
            # take i out of its community before weighing alternatives
            sum_tot[c_old] -= k_i
            sum_in[c_old] -= com_w.get(c_old, 0.0) + lg.loops[i]
            stay_gain = (
                com_w.get(c_old, 0.0) * inv_m - k_i * sum_tot[c_old] * inv_2m2
            )
            best_c = c_old
            best_gain = stay_gain
            for c in sorted(com_w):
                if c == c_old:
                    continue
                gain = com_w[c] * inv_m - k_i * sum_tot[c] * inv_2m2
                if gain > best_gain:
                    best_gain = gain
                    best_c = c
            if best_c != c_old and best_gain - stay_gain > min_gain:
                improved = True
            else:
                best_c = c_old
            sum_tot[best_c] = sum_tot.get(best_c, 0.0) + k_i
            sum_in[best_c] = (
                sum_in.get(best_c, 0.0) + com_w.get(best_c, 0.0) + lg.loops[i]
            )
            node2com[i] = best_c
    return node2com, sum_in, sum_tot


def _q_of_sums(sum_in, sum_tot, two_m: float) -> float:
    if two_m == 0:
        return 0.0
    m = two_m / 2.0
    return sum(
        sum_in.get(c, 0.0) / m - (tot / two_m) ** 2 for c, tot in sum_tot.items()
    )


def _dense(node2com) -> tuple[list[int], int]:
    """Relabel communities 0..k-1 in first-appearance order."""
    remap: dict = {}
    out = []
    for c in node2com:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return out, len(remap)


def _order(size: int, rng) -> list[int]:
    order = list(range(size))
    if rng is not None:
        rng.shuffle(order)
    return order


def _louvain_details(g: Graph, cfg: LouvainConfig):
    """Full optimizer; returns (partition, incrementally tracked Q)."""
    rng = None if cfg.seed == 0 else random.Random(cfg.seed)
    level = _LevelGraph.from_graph(g)
    assignment = list(range(g.n))  # original vertex -> current level node
    q_prev = None
    q_incr = 0.0
    for _ in range(cfg.max_passes):
        node2com, sum_in, sum_tot = _local_move(
            level, range(level.size), _order(level.size, rng), cfg.min_modularity_gain
        )
        q_now = _q_of_sums(sum_in, sum_tot, level.two_m)
        if q_prev is not None and q_now - q_prev <= cfg.min_modularity_gain:
            break
        q_prev = q_now
        q_incr = q_now
        dense, n_coms = _dense(node2com)
        assignment = [dense[node] for node in assignment]
        if n_coms == level.size:
            break
        level = level.aggregate(dense, n_coms)
    # final sweep on the original graph: guarantees single-vertex local
    # optimality at the finest level, which aggregation alone does not
    fine = _LevelGraph.from_graph(g)
    node2com, sum_in, sum_tot = _local_move(
        fine, assignment, _order(g.n, rng), cfg.min_modularity_gain
    )
    q_incr = _q_of_sums(sum_in, sum_tot, fine.two_m)
    dense, _ = _dense(node2com)
    return Partition(dense), q_incr


def louvain(g: Graph, cfg: LouvainConfig | None = None) -> Partition:
    """Louvain modularity optimization; deterministic for ``cfg.seed=0``."""
    if cfg is None:
        cfg = LouvainConfig()
    part, _ = _louvain_details(g, cfg)
    return part


def import_partition(source, g: Graph) -> Partition:
    """Read a disjoint partition from an LFR-style community file.

    Each line must be ``node<TAB>cid`` with exactly one community id;
    that is how external disjoint detectors (e.g. Infomap runs converted
    with their own tooling) hand results to this package.

    Raises
    ------
    NotDisjoint
        If a node carries two or more community ids.
    IncompleteCover
        If some graph vertex has no line.
    UnknownVertex
        If a node is not a vertex of `g`.
    """
    labels: list = [None] * g.n
    with _open_read(source) as handle:
        for lineno, line in _lines(handle):
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise ParseError("expected 'node cid'", line=lineno)
            if len(parts) > 2:
                raise NotDisjoint(
                    f"line {lineno}: node {parts[0]} has {len(parts) - 1} community ids"
                )
            v = g.internal_id(parse_label(parts[0]))
            try:
                cid = int(parts[1])
            except ValueError:
                raise ParseError(
                    f"community id must be an integer, got {parts[1]!r}", line=lineno
                ) from None
            if labels[v] is not None and labels[v] != cid:
                raise NotDisjoint(
                    f"line {lineno}: node {parts[0]} already has community {labels[v]}"
                )
            labels[v] = cid
    missing = sum(1 for c in labels if c is None)
    if missing:
        raise IncompleteCover(f"{missing} graph vertices missing from partition file")
    return Partition(labels)
