"""Overlapping community detection by permanence-guided vertex replication.

The workflow: build or load an undirected graph, obtain a disjoint
partition (built-in Louvain or a file import), then post-process it with
:func:`pvoc.replication.vertex_replication`, which copies boundary
vertices into neighboring communities whenever the move barely changes
the local permanence balance.  Scoring against overlapping ground truth
uses ONMI, the Omega index and average F1.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateStudy,
    DomainMismatch,
    EmptyCover,
    EmptyGraph,
    IncompleteCover,
    InvalidTarget,
    IsolatedVertex,
    NoOverlapVertex,
    NotDisjoint,
    ParseError,
    PvocError,
    UnknownVertex,
    WriteError,
)
from .fileio import (
    FileFormat,
    read_communities,
    read_edge_list,
    read_lfr_communities,
    read_snap_communities,
    write_cover,
)
from .graph import (
    Cover,
    Graph,
    GroundTruthStats,
    Partition,
    build_graph,
    collapse_singleton_cover,
    ground_truth_stats,
    induced_subgraph,
    partition_to_cover,
)
from .louvain import LouvainConfig, import_partition, louvain, modularity
from .metrics import (
    MetricReport,
    avg_f1,
    community_size_extremes,
    composite_scores,
    jaccard,
    nmi_disjoint,
    omega_index,
    onmi,
    score_covers,
)
from .permanence import (
    PermanenceView,
    external_pull,
    internal_clustering,
    neighborhood_permanence_sum,
    permanence,
    permanence_view,
)
from .replication import (
    ReplicationConfig,
    ReplicationDecision,
    boundary_vertices,
    detect,
    trial_move_sum,
    vertex_replication,
)
from .study import (
    StripStudyResult,
    external_degree_membership_profile,
    sample_subnetwork,
    strip_overlap_study,
)

__all__ = [
    "__version__",
    # errors
    "PvocError", "EmptyGraph", "ParseError", "UnknownVertex", "IncompleteCover",
    "NotDisjoint", "IsolatedVertex", "InvalidTarget", "DomainMismatch",
    "EmptyCover", "DegenerateStudy", "NoOverlapVertex", "WriteError",
    # graph
    "Graph", "Partition", "Cover", "GroundTruthStats", "build_graph",
    "induced_subgraph", "partition_to_cover", "collapse_singleton_cover",
    "ground_truth_stats",
    # io
    "FileFormat", "read_edge_list", "read_lfr_communities",
    "read_snap_communities", "read_communities", "write_cover",
    # permanence
    "PermanenceView", "permanence", "permanence_view", "internal_clustering",
    "external_pull", "neighborhood_permanence_sum",
    # louvain
    "LouvainConfig", "louvain", "modularity", "import_partition",
    # replication
    "ReplicationConfig", "ReplicationDecision", "boundary_vertices",
    "trial_move_sum", "vertex_replication", "detect",
    # metrics
    "MetricReport", "nmi_disjoint", "onmi", "omega_index", "avg_f1", "jaccard",
    "composite_scores", "community_size_extremes", "score_covers",
    # study
    "StripStudyResult", "strip_overlap_study", "sample_subnetwork",
    "external_degree_membership_profile",
]
