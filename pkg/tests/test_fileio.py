import io
import random

import pytest

from pvoc.errors import (
    EmptyGraph,
    IncompleteCover,
    ParseError,
    UnknownVertex,
)
from pvoc.fileio import (
    FileFormat,
    read_communities,
    read_edge_list,
    read_lfr_communities,
    read_snap_communities,
    write_cover,
)
from pvoc.graph import Cover, build_graph

from .conftest import random_cover, random_graph


def graph_of(text):
    return read_edge_list(io.StringIO(text))


class TestReadEdgeList:
    def test_simple(self):
        g = graph_of("1\t2\n2\t3\n")
        assert (g.n, g.m) == (3, 2)

    def test_comment_skip(self):
        g = graph_of("# comment\n5 7\n")
        assert (g.n, g.m) == (2, 1)
        assert set(g.ext_ids()) == {5, 7}

    def test_malformed_line_number(self):
        with pytest.raises(ParseError) as err:
            graph_of("1 2\nxyz\n")
        assert err.value.line == 2

    def test_weights_ignored_with_warning(self, caplog):
        with caplog.at_level("WARNING", logger="pvoc.fileio"):
            g = graph_of("1 2 0.5\n2 3 1.0\n")
        assert (g.n, g.m) == (3, 2)
        assert any("weight" in r.message for r in caplog.records)

    def test_bad_weight_token(self):
        with pytest.raises(ParseError):
            graph_of("1 2 x\n")

    def test_empty_file(self):
        with pytest.raises(EmptyGraph):
            graph_of("# nothing\n")

    def test_string_labels(self):
        g = graph_of("alice bob\nbob carol\n")
        assert g.has_label("alice") and g.has_label("carol")

    def test_crlf_line_endings(self, tmp_path):
        path = tmp_path / "dos.tsv"
        path.write_bytes(b"1\t2\r\n2\t3\r\n")
        g = read_edge_list(path)
        assert (g.n, g.m) == (3, 2)


class TestReadLfrCommunities:
    def test_overlapping_line(self):
        g = graph_of("1 2\n2 3\n")
        c = read_lfr_communities(io.StringIO("1\t1\n2\t1 2\n3\t2\n"), g)
        assert len(c.memberships(g.internal_id(2))) == 2
        assert c.n_communities == 2

    def test_missing_vertex(self):
        g = graph_of("1 2\n2 3\n")
        with pytest.raises(IncompleteCover):
            read_lfr_communities(io.StringIO("1\t1\n2\t1\n"), g)

    def test_unknown_vertex(self):
        g = graph_of("1 2\n")
        with pytest.raises(UnknownVertex):
            read_lfr_communities(io.StringIO("1\t1\n2\t1\n9\t1\n"), g)

    def test_single_community(self):
        g = graph_of("1 2\n2 3\n")
        c = read_lfr_communities(io.StringIO("1\t7\n2\t7\n3\t7\n"), g)
        assert c.n_communities == 1

    def test_line_without_cid(self):
        g = graph_of("1 2\n")
        with pytest.raises(ParseError):
            read_lfr_communities(io.StringIO("1\n2\t1\n"), g)


class TestReadSnapCommunities:
    def test_overlap_and_sideline(self):
        g = graph_of("1 2\n2 3\n3 4\n")
        c, uncovered = read_snap_communities(io.StringIO("1\t2\t3\n3\t4\n"), g)
        assert c.n_communities == 2
        assert len(c.memberships(g.internal_id(3))) == 2
        assert uncovered == []

    def test_empty_file(self):
        g = graph_of("1 2\n")
        c, uncovered = read_snap_communities(io.StringIO(""), g)
        assert c.n_communities == 0
        assert uncovered == [0, 1]

    def test_singleton_community(self):
        g = graph_of("1 2\n")
        c, uncovered = read_snap_communities(io.StringIO("1\n"), g)
        assert c.n_communities == 1
        assert uncovered == [g.internal_id(2)]

    def test_unknown_vertex(self):
        g = graph_of("1 2\n")
        with pytest.raises(UnknownVertex):
            read_snap_communities(io.StringIO("1\t5\n"), g)


class TestWriteCover:
    def test_canonical_order(self):
        g = graph_of("1 2\n2 3\n")
        ids = [g.internal_id(x) for x in (1, 2, 3)]
        c = Cover([{ids[1], ids[2]}, {ids[0], ids[1]}])
        out = io.StringIO()
        write_cover(c, g, out)
        assert out.getvalue() == "1\t2\n2\t3\n"

    def test_singleton(self):
        g = graph_of("7 8\n")
        out = io.StringIO()
        write_cover(Cover([{g.internal_id(7)}]), g, out)
        assert out.getvalue() == "7\n"

    def test_round_trip_random_covers(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_graph(rng, rng.randint(3, 30), 0.3)
            c = random_cover(rng, g.n, rng.randint(1, 5))
            out = io.StringIO()
            write_cover(c, g, out)
            back, _ = read_snap_communities(io.StringIO(out.getvalue()), g)
            assert back.blocks() == c.blocks()

    def test_write_read_write_is_stable(self):
        rng = random.Random(4)
        g = random_graph(rng, 25, 0.3)
        c = random_cover(rng, g.n, 4)
        first = io.StringIO()
        write_cover(c, g, first)
        back, _ = read_snap_communities(io.StringIO(first.getvalue()), g)
        second = io.StringIO()
        write_cover(back, g, second)
        assert first.getvalue() == second.getvalue()

    def test_duplicate_communities_survive_round_trip(self):
        g = graph_of("1 2\n2 3\n")
        ids = {x: g.internal_id(x) for x in (1, 2, 3)}
        c = Cover([{ids[1], ids[2]}, {ids[1], ids[2]}, {ids[3]}])
        out = io.StringIO()
        write_cover(c, g, out)
        assert out.getvalue() == "1\t2\n1\t2\n3\n"
        back, _ = read_snap_communities(io.StringIO(out.getvalue()), g)
        assert back.n_communities == 3


class TestDispatch:
    def test_total_over_community_kinds(self):
        g = graph_of("1 2\n2 3\n")
        lfr = read_communities(io.StringIO("1\t1\n2\t1\n3\t1\n"), g, FileFormat.LFR_COMMUNITY)
        assert lfr.n_communities == 1
        snap, _ = read_communities(io.StringIO("1\t2\n"), g, FileFormat.SNAP_COMMUNITY)
        assert snap.n_communities == 1
        cov, _ = read_communities(io.StringIO("1\t2\n"), g, FileFormat.COVER_OUT)
        assert cov.n_communities == 1

    def test_binary_garbage_is_parse_error(self, tmp_path):
        path = tmp_path / "garbage.bin"
        path.write_bytes(b"1\t2\n\xff\xfe\x00junk\n")
        with pytest.raises(ParseError) as err:
            read_edge_list(path)
        assert err.value.line == 2
        g = graph_of("1 2\n")
        for reader in (read_lfr_communities, read_snap_communities):
            with pytest.raises(ParseError):
                reader(path, g)

    def test_parser_never_crashes_on_noise(self):
        rng = random.Random(5)
        g = graph_of("1 2\n")
        for _ in range(50):
            junk = "".join(
                rng.choice("01 \t\n#ab\x00é~") for _ in range(rng.randint(0, 40))
            )
            for reader in (
                lambda s: read_edge_list(io.StringIO(s)),
                lambda s: read_lfr_communities(io.StringIO(s), g),
                lambda s: read_snap_communities(io.StringIO(s), g),
            ):
                try:
                    reader(junk)
                except (ParseError, EmptyGraph, UnknownVertex, IncompleteCover):
                    pass  # typed errors are the contract; anything else fails
