import json
import random
from fractions import Fraction as F

import pytest

from harmcent import (
    CATERPILLAR_CENTRALITIES,
    CATERPILLAR_CENTRALIZATION,
    CATERPILLAR_DISTANCES_FROM_U,
    FamilySpec,
    Graph,
    bfs_distances,
    caterpillar_graph,
    distance_oracle_crosscheck,
    floyd_warshall_distances,
    full_report,
    full_sweep,
    generate,
    golden_fixtures,
    random_simple_graph,
    reciprocal_sum,
    records_to_csv,
    records_to_json,
    verify_family,
)
from harmcent.verify import sweep_specs, verify_spec


class TestGoldenFixture:
    def test_shape(self):
        g = caterpillar_graph()
        assert g.order == 10
        assert g.size() == 9  # a tree
        assert bfs_distances(g, 0).dist == CATERPILLAR_DISTANCES_FROM_U

    def test_reciprocal_sum_of_hub(self):
        assert reciprocal_sum(caterpillar_graph(), 0) == 6

    def test_all_centralities_and_centralization(self):
        fixture = golden_fixtures()[0]
        report = full_report(fixture.graph)
        assert report.centralities == fixture.centralities
        assert report.centralization == fixture.centralization

    def test_expected_values_are_the_published_ones(self):
        assert CATERPILLAR_CENTRALITIES[0] == F(2, 3)
        assert CATERPILLAR_CENTRALITIES[5] == F(4, 9)
        assert CATERPILLAR_CENTRALITIES[1] == F(47, 108)
        assert CATERPILLAR_CENTRALIZATION == F(29, 72)


class TestSweeps:
    def test_fan_sweep_all_match(self):
        records = verify_family("fan")
        central = [r for r in records if r.quantity == "centralization"]
        assert len(central) == 28  # m = 3..30
        assert all(r.match for r in records)

    def test_cycle_sweep_zero_both_sides(self):
        for r in verify_family("cycle"):
            if r.quantity == "centralization":
                assert r.closed == 0 and r.oracle == 0 and r.match

    def test_ladder_sweep_matches_with_notes(self):
        records = verify_family("ladder")
        assert all(r.match for r in records)
        notes = {
            r.note
            for r in records
            if r.quantity == "centralization" and r.params[0] % 2 == 0
        }
        assert len(notes) == 1
        (note,) = notes
        assert "prefactor" in note

    def test_prism_class_records_note_canonicalization(self):
        records = verify_family("prism", hi=8)
        class_records = [r for r in records if r.quantity.startswith("class:")]
        assert class_records and all(r.match for r in class_records)
        assert all("1/(2m-1)" in r.note for r in class_records)

    def test_verify_spec_quantities(self):
        records = verify_spec(FamilySpec("helm", (5,)))
        quantities = {r.quantity for r in records}
        assert quantities == {
            "centralization",
            "max_centrality",
            "class:helm_center",
            "class:helm_rim",
            "class:helm_pendant",
        }

    def test_path_min_max_single_record(self):
        records = verify_family("path", lo=3, hi=3)
        central = [r for r in records if r.quantity == "centralization"]
        assert len(central) == 1
        assert central[0].closed == 1 and central[0].match

    def test_pair_family_ranges(self):
        specs = sweep_specs("bipartite", hi=4)
        assert {s.params for s in specs} == {
            (a, b) for a in range(2, 5) for b in range(2, 5)
        }
        specs = sweep_specs("split", hi=3)
        assert {s.params for s in specs} == {
            (n, k) for n in range(2, 4) for k in range(1, 4)
        }

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            sweep_specs("moebius")

    def test_small_full_sweep_matches(self):
        records = full_sweep(hi=6)
        assert records and all(r.match for r in records)


class TestReports:
    def test_json_schema_and_determinism(self):
        records = verify_family("fan", hi=6)
        text = records_to_json(records)
        assert text == records_to_json(verify_family("fan", hi=6))
        payload = json.loads(text)
        assert payload[0].keys() == {
            "family",
            "params",
            "quantity",
            "closed",
            "oracle",
            "match",
            "note",
        }
        assert payload[0]["family"] == "fan"
        assert all(isinstance(row["match"], bool) for row in payload)

    def test_csv_header_and_rows(self):
        records = verify_family("ladder", hi=4)
        text = records_to_csv(records)
        lines = text.splitlines()
        assert lines[0] == "family,params,quantity,closed,oracle,match,note"
        assert len(lines) == len(records) + 1
        assert any(line.startswith("ladder,4,centralization,11/63,11/63,true") for line in lines)

    def test_rationals_serialized_reduced(self):
        records = verify_family("helm", lo=7, hi=7)
        payload = json.loads(records_to_json(records))
        central = [r for r in payload if r["quantity"] == "centralization"]
        assert central[0]["closed"] == "43/78"


class TestDistanceOracle:
    def test_floyd_warshall_known_values(self):
        g, _ = generate(FamilySpec("path", (4,)))
        assert floyd_warshall_distances(g) == [
            [0, 1, 2, 3],
            [1, 0, 1, 2],
            [2, 1, 0, 1],
            [3, 2, 1, 0],
        ]

    def test_prism_crosscheck(self):
        g, _ = generate(FamilySpec("prism", (5,)))
        assert distance_oracle_crosscheck(g)

    def test_disconnected_crosscheck(self):
        g = Graph(5)
        g.add_edge(0, 1)
        g.add_edge(2, 3)
        g.add_edge(3, 4)
        g.add_edge(2, 4)
        assert distance_oracle_crosscheck(g)
        assert floyd_warshall_distances(g)[0][2] is None

    def test_random_graphs_crosscheck(self):
        rng = random.Random(99)
        for _ in range(25):
            g = random_simple_graph(20, rng.choice((0.1, 0.3, 0.7)), rng)
            assert distance_oracle_crosscheck(g)


def test_random_graph_seeding_is_reproducible():
    a = random_simple_graph(15, 0.3, random.Random(4))
    b = random_simple_graph(15, 0.3, random.Random(4))
    c = random_simple_graph(15, 0.3, random.Random(5))
    assert a == b
    assert a != c
