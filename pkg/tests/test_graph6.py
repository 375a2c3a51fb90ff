import itertools
import random

import pytest

from spectroham.graph6 import Graph6Error, emit_graph6, graph6_str, parse_graph6
from spectroham.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    empty_graph,
    petersen_graph,
)

# Values checked by hand against the format definition: 6-bit chunks of the
# column-major upper triangle, most significant bit first, offset by 63.
FROZEN = [
    (empty_graph(1), b"@"),
    (complete_graph(2), b"A_"),
    (complete_bipartite(4, 1), b"D?{"),
    (complete_bipartite(2, 3), b"D]o"),
    (petersen_graph(), b"IheA@GUAo"),
]


@pytest.mark.parametrize("graph,record", FROZEN, ids=lambda x: repr(x)[:20])
def test_frozen_records(graph, record):
    assert emit_graph6(graph) == record
    assert parse_graph6(record) == graph


def test_graph6_str_matches_bytes():
    assert graph6_str(petersen_graph()) == "IheA@GUAo"


def test_round_trip_exhaustive_small():
    for n in range(1, 6):
        for bits in range(1 << (n * (n - 1) // 2)):
            g = Graph(n, bits)
            assert parse_graph6(emit_graph6(g)) == g


def test_round_trip_random_large():
    rng = random.Random(2)
    for n in itertools.chain(range(6, 20), [40, 61, 62]):
        for _ in range(5):
            g = Graph(n, rng.getrandbits(n * (n - 1) // 2))
            assert parse_graph6(emit_graph6(g)) == g


def test_parse_accepts_header_and_newline():
    record = emit_graph6(complete_graph(3))
    assert parse_graph6(b">>graph6<<" + record) == complete_graph(3)
    assert parse_graph6(record + b"\n") == complete_graph(3)
    assert parse_graph6(record + b"\r\n") == complete_graph(3)
    assert parse_graph6(str(record, "ascii")) == complete_graph(3)


def test_parse_rejects_empty_record():
    with pytest.raises(Graph6Error, match="empty"):
        parse_graph6(b"")
    with pytest.raises(Graph6Error, match="empty"):
        parse_graph6(b"\n")


def test_parse_rejects_bytes_outside_alphabet():
    with pytest.raises(Graph6Error, match="invalid graph6 byte"):
        parse_graph6(b"B" + bytes([30]))
    with pytest.raises(Graph6Error, match="position 0"):
        parse_graph6(bytes([127]) + b"_")


def test_parse_rejects_long_size_form():
    with pytest.raises(Graph6Error, match="long size"):
        parse_graph6(b"~??@" + b"?" * 100)


def test_parse_rejects_zero_vertices():
    with pytest.raises(Graph6Error, match="zero vertices"):
        parse_graph6(b"?")


def test_parse_rejects_truncation():
    record = emit_graph6(petersen_graph())
    with pytest.raises(Graph6Error, match="truncated"):
        parse_graph6(record[:-1])


def test_parse_rejects_trailing_bytes():
    record = emit_graph6(complete_graph(3))
    with pytest.raises(Graph6Error, match="trailing"):
        parse_graph6(record + b"_")


def test_parse_rejects_nonzero_padding():
    # K3 packs 3 bits into one byte; the low 3 payload bits must stay clear
    record = emit_graph6(complete_graph(3))
    corrupted = record[:-1] + bytes([((record[-1] - 63) | 1) + 63])
    with pytest.raises(Graph6Error, match="padding"):
        parse_graph6(corrupted)


def test_emitted_length():
    # ceil(n(n-1)/2 / 6) body bytes plus one size byte
    for n in (1, 2, 10, 30, 62):
        record = emit_graph6(complete_graph(n))
        assert len(record) == 1 + (n * (n - 1) // 2 + 5) // 6
