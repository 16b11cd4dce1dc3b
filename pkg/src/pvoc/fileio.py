"""Readers and writers for the file formats the tool consumes and emits.

Formats:

* edge list: whitespace-separated vertex pairs, ``#`` starts a comment
  line; an optional third numeric column (a weight) is ignored with a
  warning because all analysis here is unweighted.
* LFR community file: ``node<TAB>cid[ cid ...]`` — one line per node,
  possibly several community ids (overlapping LFR mode).
* SNAP community file: one community per line, tab-separated node ids.
* cover output: SNAP format in a canonical order (communities ascending
  by smallest member, members ascending) so outputs are byte-stable.

Vertex tokens that look like integers are parsed as ``int``; anything
else is kept as a string label.
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from enum import Enum
from pathlib import Path

from .errors import EmptyGraph, IncompleteCover, ParseError, WriteError
from .graph import Cover, ExtId, Graph, build_graph, ext_sort_key

log = logging.getLogger(__name__)


class FileFormat(Enum):
    EDGE_LIST_TSV = "edge_list_tsv"
    LFR_COMMUNITY = "lfr_community"
    SNAP_COMMUNITY = "snap_community"
    COVER_OUT = "cover_out"


@contextmanager
def _open_read(source):
    # paths open in binary so _lines can decode (and fault) line by line
    if hasattr(source, "read"):
        yield source
    else:
        with open(source, "rb") as handle:
            yield handle


def _lines(handle):
    """Enumerate stripped lines from 1, mapping decode failures to ParseError."""
    for lineno, raw in enumerate(handle, start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise ParseError(
                    f"not valid UTF-8 text: {exc.reason}", line=lineno
                ) from exc
        yield lineno, raw.strip()


@contextmanager
def _open_write(sink):
    if hasattr(sink, "write"):
        yield sink
    else:
        try:
            with open(sink, "w", encoding="utf-8", newline="\n") as handle:
                yield handle
        except OSError as exc:
            raise WriteError(f"cannot write {sink}: {exc}") from exc


def parse_label(token: str) -> ExtId:
    """External vertex label from a token: int if it looks like one."""
    try:
        return int(token)
    except ValueError:
        return token


def read_edge_list(source) -> Graph:
    """Parse a '#'-commented whitespace-separated edge list into a Graph.

    `source` is a path or a text stream.  1-indexed LFR ids and arbitrary
    SNAP ids are both fine; labels are preserved as external ids.

    Raises
    ------
    ParseError
        On a line that is not two vertex tokens (plus an optional numeric
        weight, which is ignored with a warning).
    EmptyGraph
        If no edges were found.
    """
    edges: list[tuple[ExtId, ExtId]] = []
    weighted_lines = 0
    with _open_read(source) as handle:
        for lineno, line in _lines(handle):
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) == 2:
                pass
            elif len(parts) == 3:
                try:
                    float(parts[2])
                except ValueError:
                    raise ParseError(
                        f"expected a numeric weight, got {parts[2]!r}", line=lineno
                    ) from None
                weighted_lines += 1
            else:
                raise ParseError(
                    f"expected 'u v' or 'u v weight', got {len(parts)} fields",
                    line=lineno,
                )
            edges.append((parse_label(parts[0]), parse_label(parts[1])))
    if weighted_lines:
        log.warning(
            "ignoring edge weights on %d lines (analysis is unweighted)",
            weighted_lines,
        )
    if not edges:
        raise EmptyGraph("no edges in input")
    return build_graph(edges)


def read_lfr_communities(source, g: Graph) -> Cover:
    """Parse an LFR community file ('node TAB cid [cid ...]') into a Cover.

    Every vertex of `g` must appear on some line.

    Raises
    ------
    UnknownVertex
        If a node id is not a vertex of `g`.
    IncompleteCover
        If some graph vertex never appears.
    ParseError
        On lines without at least one community id, or non-integer ids.
    """
    memberships: dict[int, set[int]] = {}
    with _open_read(source) as handle:
        for lineno, line in _lines(handle):
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise ParseError("expected 'node cid [cid ...]'", line=lineno)
            v = g.internal_id(parse_label(parts[0]))
            for token in parts[1:]:
                try:
                    cid = int(token)
                except ValueError:
                    raise ParseError(
                        f"community id must be an integer, got {token!r}",
                        line=lineno,
                    ) from None
                memberships.setdefault(v, set()).add(cid)
    missing = g.n - len(memberships)
    if missing:
        raise IncompleteCover(f"{missing} graph vertices have no community line")
    communities: dict[int, set[int]] = {}
    for v, cids in memberships.items():
        for cid in cids:
            communities.setdefault(cid, set()).add(v)
    labels = sorted(communities)
    return Cover([communities[c] for c in labels], labels=labels)


def read_snap_communities(source, g: Graph) -> tuple[Cover, list[int]]:
    """Parse a SNAP community file (one community per line) for graph `g`.

    Returns the cover plus the sorted list of graph vertices that appear
    in no community; partial coverage is normal for SNAP ground truth and
    is not an error.

    Raises
    ------
    UnknownVertex
        If a node id is not a vertex of `g`.
    """
    communities: list[set[int]] = []
    with _open_read(source) as handle:
        for lineno, line in _lines(handle):
            if not line or line.startswith("#"):
                continue
            block = {g.internal_id(parse_label(tok)) for tok in line.split()}
            communities.append(block)
    cover = Cover(communities)
    uncovered = sorted(set(g.vertices()) - cover.vertices)
    return cover, uncovered


def write_cover(c: Cover, g: Graph, sink) -> None:
    """Write a cover in SNAP format using external ids, canonically ordered.

    Members are ascending within each line and communities are ordered by
    their smallest member (then lexicographically), so identical covers
    always serialize to identical bytes.  Duplicate communities write
    duplicate lines, keeping the round trip faithful.
    """
    lines = []
    for block in c.community_sets():
        members = sorted((g.ext_id(v) for v in block), key=ext_sort_key)
        lines.append((tuple(ext_sort_key(x) for x in members), members))
    lines.sort(key=lambda item: item[0])
    try:
        with _open_write(sink) as handle:
            for _, members in lines:
                handle.write("\t".join(str(x) for x in members))
                handle.write("\n")
    except OSError as exc:
        raise WriteError(str(exc)) from exc


def read_communities(source, g: Graph, kind: FileFormat):
    """Dispatch a community-file parse on `kind`; total over FileFormat.

    ``SNAP_COMMUNITY`` and ``COVER_OUT`` return ``(Cover, uncovered)``;
    ``LFR_COMMUNITY`` returns a full-coverage ``Cover``.
    """
    if kind is FileFormat.LFR_COMMUNITY:
        return read_lfr_communities(source, g)
    if kind in (FileFormat.SNAP_COMMUNITY, FileFormat.COVER_OUT):
        return read_snap_communities(source, g)
    if kind is FileFormat.EDGE_LIST_TSV:
        raise ValueError("edge lists are graphs, not community files")
    raise ValueError(f"unhandled format {kind!r}")


def read_any(source, kind: FileFormat, g: Graph | None = None):
    """Parse any supported format; edge lists ignore `g`."""
    if kind is FileFormat.EDGE_LIST_TSV:
        return read_edge_list(source)
    if g is None:
        raise ValueError(f"{kind.value} needs the graph to resolve vertex ids")
    return read_communities(source, g, kind)
