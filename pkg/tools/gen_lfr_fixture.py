#!/usr/bin/env python3
"""Generate the committed LFR-style overlapping benchmark fixture.

Produces tests/fixtures/lfr_n1000/network.dat and community.dat in the
classic LFR output formats: a tab-separated edge list (1-indexed) and
one 'node TAB cid [cid ...]' line per node.  Topology follows the LFR
recipe: power-law degrees (exponent tau1) and community sizes (tau2),
mixing parameter mu controlling the external-edge fraction, a fraction
o_n of vertices belonging to o_m communities each, internal edges built
by stub matching inside each community and external stubs paired across
communities.

The fixture is generated once with a fixed seed and committed; rerun
this script only if the fixture parameters must change.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

N = 1000
TAU1 = 2.0  # degree exponent
TAU2 = 1.0  # community-size exponent
MU = 0.1
K_MIN, K_MAX = 12, 45
C_MIN, C_MAX = 25, 65
O_N = 0.05  # fraction of overlapping vertices
O_M = 2  # memberships per overlapping vertex
SEED = 555
OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "lfr_n1000"


def power_law_choices(rng, lo, hi, tau, count):
    values = list(range(lo, hi + 1))
    weights = [x**-tau for x in values]
    return rng.choices(values, weights=weights, k=count)


def draw_community_sizes(rng, total_slots):
    sizes = []
    while sum(sizes) < total_slots:
        sizes.append(power_law_choices(rng, C_MIN, C_MAX, TAU2, 1)[0])
    # (shrinking pass below trims the overshoot back to total_slots)
    excess = sum(sizes) - total_slots
    while excess > 0:
        i = rng.randrange(len(sizes))
        take = min(excess, sizes[i] - C_MIN)
        sizes[i] -= take
        excess -= take
        if sizes[i] == C_MIN and excess > 0 and all(s == C_MIN for s in sizes):
            sizes.pop()  # cannot shrink further; drop one community
            excess = sum(sizes) - total_slots
    return sizes


def assign_memberships(rng, degrees, overlap, sizes):
    """vertex -> list of community ids, respecting size capacities."""
    n_comms = len(sizes)
    remaining = list(sizes)
    demand = []  # (per-community internal degree, vertex, n_memberships)
    for v, k in enumerate(degrees):
        memb = O_M if v in overlap else 1
        internal = max(1, round((1.0 - MU) * k))
        demand.append((-(internal // memb), v, memb, internal))
    demand.sort()
    member_of: dict[int, list[int]] = {}
    for neg_need, v, memb, internal in demand:
        need = -neg_need
        feasible = [c for c in range(n_comms) if remaining[c] > 0 and sizes[c] - 1 >= need]
        if len(feasible) < memb:
            return None
        # weight by remaining room; draw without replacement for overlap nodes
        pool = list(feasible)
        wpool = [remaining[c] for c in feasible]
        chosen = []
        for _ in range(memb):
            pick = rng.choices(range(len(pool)), weights=wpool, k=1)[0]
            chosen.append(pool.pop(pick))
            wpool.pop(pick)
        for c in chosen:
            remaining[c] -= 1
        member_of[v] = sorted(chosen)
    return member_of


def pair_stubs(rng, stubs, forbidden, existing):
    """Randomly pair stubs avoiding self-loops, duplicates and `forbidden`."""
    edges = []
    stubs = list(stubs)
    rng.shuffle(stubs)
    retries = 0
    while len(stubs) >= 2 and retries < 200:
        a = stubs.pop()
        b = stubs.pop()
        key = (min(a, b), max(a, b))
        if a == b or key in existing or forbidden(a, b):
            stubs.extend((a, b))
            rng.shuffle(stubs)
            retries += 1
            continue
        existing.add(key)
        edges.append(key)
        retries = 0
    return edges


def build(seed=SEED, n=N):
    rng = random.Random(seed)
    degrees = power_law_choices(rng, K_MIN, K_MAX, TAU1, n)
    overlap = set(rng.sample(range(n), k=round(O_N * n)))
    total_slots = n + len(overlap) * (O_M - 1)
    member_of = None
    while member_of is None:
        sizes = draw_community_sizes(rng, total_slots)
        member_of = assign_memberships(rng, degrees, overlap, sizes)
    n_comms = len(sizes)
    members = [[] for _ in range(n_comms)]
    for v, cs in member_of.items():
        for c in cs:
            members[c].append(v)

    # split each vertex's internal degree across its communities
    internal_deg: dict[tuple[int, int], int] = {}
    for v, k in enumerate(degrees):
        cs = member_of[v]
        internal = max(1, round((1.0 - MU) * k))
        share, leftover = divmod(internal, len(cs))
        for i, c in enumerate(cs):
            d = min(share + (1 if i < leftover else 0), len(members[c]) - 1)
            internal_deg[(v, c)] = d

    existing: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for c in range(n_comms):
        stubs = []
        for v in members[c]:
            stubs.extend([v] * internal_deg[(v, c)])
        if len(stubs) % 2:
            stubs.pop(rng.randrange(len(stubs)))
        edges.extend(pair_stubs(rng, stubs, lambda a, b: False, existing))

    # external stubs: whatever of each vertex's degree is not internal
    placed = {v: 0 for v in range(n)}
    for (v, c), d in internal_deg.items():
        placed[v] += d
    ext_stubs = []
    for v, k in enumerate(degrees):
        ext_stubs.extend([v] * max(0, k - placed[v]))
    if len(ext_stubs) % 2:
        ext_stubs.pop(rng.randrange(len(ext_stubs)))
    shares_comm = lambda a, b: bool(set(member_of[a]) & set(member_of[b]))
    edges.extend(pair_stubs(rng, ext_stubs, shares_comm, existing))
    return degrees, member_of, edges, n_comms


def main():
    degrees, member_of, edges, n_comms = build()
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    with open(OUT_DIR / "network.dat", "w", newline="\n") as handle:
        for a, b in sorted(edges):
            handle.write(f"{a + 1}\t{b + 1}\n")
    with open(OUT_DIR / "community.dat", "w", newline="\n") as handle:
        for v in range(N):
            cids = " ".join(str(c + 1) for c in member_of[v])
            handle.write(f"{v + 1}\t{cids}\n")
    n_overlap = sum(1 for cs in member_of.values() if len(cs) > 1)
    print(
        f"wrote n={N} m={len(edges)} communities={n_comms} "
        f"overlapping={n_overlap} to {OUT_DIR}"
    )


if __name__ == "__main__":
    sys.exit(main())
