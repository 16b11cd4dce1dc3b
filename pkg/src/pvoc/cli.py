"""Command-line interface: detect, eval, bench, study, perm.

Every subcommand validates its inputs before creating any output file,
emits exactly one plain-text run manifest (to ``--manifest``, else next
to ``--out``, else to stderr), and keeps stdout/file output byte-stable
for identical inputs, flags and seeds.  Exit codes: 0 success, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from . import __version__
from .errors import NotDisjoint, PvocError
from .fileio import (
    read_edge_list,
    read_lfr_communities,
    read_snap_communities,
    write_cover,
)
from .graph import Cover, Graph, ext_sort_key
from .louvain import LouvainConfig, import_partition, louvain
from .metrics import MetricReport, composite_scores, score_covers
from .permanence import permanence_view
from .replication import ReplicationConfig, format_decision, vertex_replication
from .study import (
    external_degree_membership_profile,
    sample_subnetwork,
    strip_overlap_study,
)

log = logging.getLogger(__name__)

_METRIC_ALIASES = {"onmi": "onmi", "omega": "omega", "f1": "avg_f1", "nmi": "nmi"}


def _nonneg_float(text: str) -> float:
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _disjoint_spec(text: str):
    if text == "louvain":
        return ("louvain", None)
    if text.startswith("file:") and len(text) > 5:
        return ("file", text[5:])
    raise argparse.ArgumentTypeError("expected 'louvain' or 'file:<path>'")


def _metric_list(text: str):
    names = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not names:
        raise argparse.ArgumentTypeError("no metrics given")
    bad = [n for n in names if n not in _METRIC_ALIASES]
    if bad:
        raise argparse.ArgumentTypeError(
            f"unknown metrics {bad}; choose from onmi,omega,f1,nmi"
        )
    return tuple(dict.fromkeys(_METRIC_ALIASES[n] for n in names))


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("PVOC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer PVOC_THREADS=%r", env)
    return os.cpu_count() or 1


def _partition_for(args, g: Graph):
    kind, path = args.disjoint
    if kind == "louvain":
        return louvain(g, LouvainConfig(seed=getattr(args, "seed", 0)))
    return import_partition(path, g)


def _read_truth(path: str, fmt: str, g: Graph) -> Cover:
    if fmt == "lfr":
        return read_lfr_communities(path, g)
    cover, uncovered = read_snap_communities(path, g)
    if uncovered:
        log.info("%d graph vertices are uncovered by the ground truth", len(uncovered))
    return cover


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def _emit_manifest(args, fields: dict, started: str) -> None:
    lines = [
        f"command = {args.command}",
        f"version = {__version__}",
        f"started = {started}",
        f"finished = {datetime.now(timezone.utc).isoformat()}",
    ]
    lines += [f"{key} = {value}" for key, value in fields.items()]
    text = "\n".join(lines) + "\n"
    path = getattr(args, "manifest", None)
    if path is None and getattr(args, "out", None):
        path = str(args.out) + ".manifest"
    if path:
        _write_text(path, text)
    else:
        sys.stderr.write(text)


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def cmd_detect(args) -> int:
    started = datetime.now(timezone.utc).isoformat()
    g = read_edge_list(args.graph)
    p = _partition_for(args, g)
    cover, decisions = vertex_replication(g, p, ReplicationConfig(theta=args.theta))
    write_cover(cover, g, args.out)
    if args.decisions:
        _write_text(
            args.decisions,
            "".join(format_decision(d, g.ext_id) + "\n" for d in decisions),
        )
    accepted = sum(1 for d in decisions if d.accepted)
    sys.stdout.write(
        f"vertices\t{g.n}\nedges\t{g.m}\ncommunities\t{cover.n_communities}\n"
        f"trials\t{len(decisions)}\nreplicas\t{accepted}\n"
    )
    _emit_manifest(
        args,
        {
            "graph": args.graph,
            "disjoint": args.disjoint[1] or "louvain",
            "theta": _fmt(args.theta),
            "seed": args.seed,
            "out": args.out,
            "decisions": args.decisions or "-",
        },
        started,
    )
    return 0


def cmd_eval(args) -> int:
    started = datetime.now(timezone.utc).isoformat()
    g = read_edge_list(args.graph)
    truth = _read_truth(args.truth, args.truth_format, g)
    if args.detected_format == "lfr":
        detected = read_lfr_communities(args.detected, g)
    else:
        detected, _ = read_snap_communities(args.detected, g)
    requested = args.metrics
    base = tuple(m for m in requested if m != "nmi")
    report = score_covers(detected, truth, base) if base else MetricReport()
    nmi_value = None
    if "nmi" in requested:
        try:
            nmi_value = score_covers(detected, truth, ("nmi",)).nmi
        except NotDisjoint as exc:
            log.warning("nmi refused: %s", exc)
            sys.stderr.write(f"nmi refused: NotDisjoint: {exc}\n")
    merged = MetricReport(
        onmi=report.onmi, omega=report.omega, avg_f1=report.avg_f1, nmi=nmi_value
    )
    text = merged.to_text() + "\n"
    sys.stdout.write(text)
    if args.out:
        _write_text(args.out, text)
    _emit_manifest(
        args,
        {
            "graph": args.graph,
            "detected": args.detected,
            "truth": args.truth,
            "truth_format": args.truth_format,
            "metrics": ",".join(requested),
            "out": args.out or "-",
        },
        started,
    )
    return 0


def _subgraph_cover(cover: Cover, g: Graph, sub: Graph) -> Cover:
    """Restrict a full-graph cover to a sampled subgraph's vertex ids."""
    remap = {g.internal_id(sub.ext_id(j)): j for j in sub.vertices()}
    return cover.remap_vertices(remap)


def cmd_bench(args) -> int:
    started = datetime.now(timezone.utc).isoformat()
    g = read_edge_list(args.graph)
    truth = _read_truth(args.truth, args.truth_format, g)
    compare = []
    for path in args.compare or []:
        cover, _ = read_snap_communities(path, g)
        compare.append((path, cover))

    def run_sample(i: int):
        seed_i = args.seed + i
        sub, sub_truth = sample_subnetwork(g, truth, seed_i)
        part = louvain(sub, LouvainConfig(seed=0))
        detected, _ = vertex_replication(sub, part, ReplicationConfig(args.theta))
        rows = []
        reports = {"pvoc+louvain": score_covers(detected, sub_truth)}
        for name, cover in compare:
            reports[name] = score_covers(_subgraph_cover(cover, g, sub), sub_truth)
        for name, rep in reports.items():
            rows.append((i, seed_i, sub.n, sub.m, name, rep))
        return rows

    workers = _threads(args)
    if workers > 1 and args.samples > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_sample = list(pool.map(run_sample, range(args.samples)))
    else:
        per_sample = [run_sample(i) for i in range(args.samples)]

    lines = ["sample\tseed\tn\tm\tmethod\tonmi\tomega\tavg_f1"]
    sums: dict[str, list[float]] = {}
    for rows in per_sample:
        for i, seed_i, n, m, name, rep in rows:
            lines.append(
                f"{i}\t{seed_i}\t{n}\t{m}\t{name}\t"
                f"{_fmt(rep.onmi)}\t{_fmt(rep.omega)}\t{_fmt(rep.avg_f1)}"
            )
            acc = sums.setdefault(name, [0.0, 0.0, 0.0])
            acc[0] += rep.onmi
            acc[1] += rep.omega
            acc[2] += rep.avg_f1
    means = {
        name: tuple(total / args.samples for total in acc)
        for name, acc in sums.items()
    }
    for name, (o, w, f) in means.items():
        lines.append(f"mean\t-\t-\t-\t{name}\t{_fmt(o)}\t{_fmt(w)}\t{_fmt(f)}")
    if compare:
        lines.append("# composite")
        lines.append("method\tonmi\tomega\tavg_f1\tcomposite")
        clipped = {
            name: (o, max(0.0, w), f) for name, (o, w, f) in means.items()
        }
        for name, score in composite_scores(clipped).items():
            o, w, f = clipped[name]
            lines.append(
                f"{name}\t{_fmt(o)}\t{_fmt(w)}\t{_fmt(f)}\t{_fmt(score)}"
            )
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        _write_text(args.out, text)
    _emit_manifest(
        args,
        {
            "graph": args.graph,
            "truth": args.truth,
            "truth_format": args.truth_format,
            "samples": args.samples,
            "seed": args.seed,
            "theta": _fmt(args.theta),
            "compare": ",".join(args.compare or []) or "-",
            "threads": workers,
            "out": args.out or "-",
        },
        started,
    )
    return 0


def cmd_study(args) -> int:
    started = datetime.now(timezone.utc).isoformat()
    g = read_edge_list(args.graph)
    truth = _read_truth(args.truth, args.truth_format, g)
    p = _partition_for(args, g)
    if args.strip:
        result = strip_overlap_study(g, truth, p)
        text = (
            "removed\tnmi\ttruth_communities\tdetected_communities\n"
            f"{result.removed_count}\t{_fmt(result.nmi)}\t"
            f"{result.n_truth_comms}\t{result.n_detected_comms}\n"
        )
        mode = "strip"
    else:
        rows = external_degree_membership_profile(g, truth, p)
        lines = ["k\tmean_ext_degree\tstd_ext_degree"]
        lines += [f"{k}\t{_fmt(mean)}\t{_fmt(std)}" for k, mean, std in rows]
        text = "\n".join(lines) + "\n"
        mode = "profile"
    sys.stdout.write(text)
    if args.out:
        _write_text(args.out, text)
    _emit_manifest(
        args,
        {
            "graph": args.graph,
            "truth": args.truth,
            "truth_format": args.truth_format,
            "disjoint": args.disjoint[1] or "louvain",
            "mode": mode,
            "seed": args.seed,
            "out": args.out or "-",
        },
        started,
    )
    return 0


def cmd_perm(args) -> int:
    started = datetime.now(timezone.utc).isoformat()
    g = read_edge_list(args.graph)
    p = _partition_for(args, g)
    lines = ["vertex\tI\tD\tEmax\tc_in\tperm"]
    order = sorted(g.vertices(), key=lambda v: ext_sort_key(g.ext_id(v)))
    for v in order:
        view = permanence_view(g, p, v)
        e_max = 0 if view.max_external is None else view.max_external
        lines.append(
            f"{g.ext_id(v)}\t{view.internal_degree}\t{view.degree}\t{e_max}\t"
            f"{_fmt(view.internal_clustering)}\t{_fmt(view.value)}"
        )
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        _write_text(args.out, text)
    _emit_manifest(
        args,
        {
            "graph": args.graph,
            "disjoint": args.disjoint[1] or "louvain",
            "seed": args.seed,
            "out": args.out or "-",
        },
        started,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pvoc",
        description="Overlapping community detection by permanence-guided "
        "vertex replication, with evaluation and benchmarking tools.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at INFO")
    sub = parser.add_subparsers(dest="command", required=True)

    detect = sub.add_parser(
        "detect", help="disjoint detection plus replication; writes a cover file"
    )
    detect.add_argument("--graph", required=True, help="edge list file")
    detect.add_argument(
        "--disjoint",
        type=_disjoint_spec,
        default=("louvain", None),
        help="'louvain' (default) or 'file:<partition path>'",
    )
    detect.add_argument("--theta", type=_nonneg_float, default=0.05,
                        help="replication tolerance (default 0.05)")
    detect.add_argument("--seed", type=int, default=0, help="louvain vertex order seed")
    detect.add_argument("--out", required=True, help="cover output path")
    detect.add_argument("--decisions", help="optional replication decision log path")
    detect.add_argument("--manifest", help="manifest path (default <out>.manifest)")
    detect.add_argument("--threads", type=_positive_int, default=None,
                        help="worker cap (default PVOC_THREADS or CPU count)")
    detect.set_defaults(func=cmd_detect)

    evaluate = sub.add_parser("eval", help="score a detected cover against truth")
    evaluate.add_argument("--graph", required=True)
    evaluate.add_argument("--detected", required=True, help="detected cover file")
    evaluate.add_argument(
        "--detected-format", choices=("snap", "lfr"), default="snap"
    )
    evaluate.add_argument("--truth", required=True)
    evaluate.add_argument("--truth-format", choices=("lfr", "snap"), required=True)
    evaluate.add_argument(
        "--metrics",
        type=_metric_list,
        default=("onmi", "omega", "avg_f1"),
        help="comma list from onmi,omega,f1,nmi (default onmi,omega,f1)",
    )
    evaluate.add_argument("--out")
    evaluate.add_argument("--manifest")
    evaluate.set_defaults(func=cmd_eval)

    bench = sub.add_parser(
        "bench", help="sampled-subnetwork benchmark with aggregate scores"
    )
    bench.add_argument("--graph", required=True)
    bench.add_argument("--truth", required=True)
    bench.add_argument("--truth-format", choices=("lfr", "snap"), required=True)
    bench.add_argument("--samples", type=_positive_int, required=True,
                       help="number of sampled subnetworks")
    bench.add_argument("--seed", type=int, default=0,
                       help="base seed; sample i uses seed+i")
    bench.add_argument("--theta", type=_nonneg_float, default=0.05,
                       help="replication tolerance (default 0.05)")
    bench.add_argument(
        "--compare",
        type=lambda s: [p for p in s.split(",") if p],
        help="comma list of cover files to score alongside pvoc+louvain",
    )
    bench.add_argument("--out")
    bench.add_argument("--manifest")
    bench.add_argument("--threads", type=_positive_int, default=None,
                       help="worker cap (default PVOC_THREADS or CPU count)")
    bench.set_defaults(func=cmd_bench)

    study = sub.add_parser("study", help="overlap-strip study or degree profile")
    study.add_argument("--graph", required=True)
    study.add_argument("--truth", required=True)
    study.add_argument("--truth-format", choices=("lfr", "snap"), required=True)
    study.add_argument(
        "--disjoint", type=_disjoint_spec, default=("louvain", None),
        help="'louvain' (default) or 'file:<partition path>'",
    )
    study.add_argument("--seed", type=int, default=0,
                       help="louvain vertex order seed")
    mode = study.add_mutually_exclusive_group(required=True)
    mode.add_argument("--strip", action="store_true",
                      help="overlap-stripping comparison (NMI)")
    mode.add_argument("--profile", action="store_true",
                      help="external degree vs membership-count table")
    study.add_argument("--out")
    study.add_argument("--manifest")
    study.set_defaults(func=cmd_study)

    perm = sub.add_parser("perm", help="dump the per-vertex permanence table")
    perm.add_argument("--graph", required=True)
    perm.add_argument(
        "--disjoint", type=_disjoint_spec, default=("louvain", None),
        help="'louvain' (default) or 'file:<partition path>'",
    )
    perm.add_argument("--seed", type=int, default=0,
                      help="louvain vertex order seed")
    perm.add_argument("--out")
    perm.add_argument("--manifest")
    perm.set_defaults(func=cmd_perm)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except PvocError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
