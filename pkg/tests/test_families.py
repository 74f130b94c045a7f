import warnings

import pytest

from conftest import cartesian_product
from harmcent import (
    FamilySpec,
    Graph,
    generate,
    harmonic_centrality,
    parse_family_spec,
    vertices_with_role,
)
from harmcent import families


def make(family, *params):
    return generate(FamilySpec(family, params))


# (family, params, expected order, expected size); sizes follow the
# published family definitions, counted by hand.
COUNT_CASES = [
    ("path", (1,), 1, 0),
    ("path", (4,), 4, 3),
    ("path", (9,), 9, 8),
    ("cycle", (3,), 3, 3),
    ("cycle", (10,), 10, 10),
    ("fan", (3,), 4, 5),
    ("fan", (7,), 8, 13),
    ("wheel", (4,), 5, 8),
    ("wheel", (9,), 10, 18),
    ("bipartite", (2, 2), 4, 4),
    ("bipartite", (3, 4), 7, 12),
    ("ladder", (2,), 4, 4),
    ("ladder", (6,), 12, 16),
    ("crown", (3,), 6, 6),
    ("crown", (5,), 10, 20),
    ("prism", (3,), 6, 9),
    ("prism", (8,), 16, 24),
    ("star", (2,), 3, 2),
    ("star", (9,), 10, 9),
    ("book", (1,), 4, 4),
    ("book", (5,), 12, 16),
    ("helm", (3,), 7, 9),
    ("helm", (6,), 13, 18),
    ("split", (4, 3), 7, 18),
    ("split", (2, 1), 3, 3),
    ("complete", (1,), 1, 0),
    ("complete", (9,), 9, 36),
]


@pytest.mark.parametrize("family,params,order,size", COUNT_CASES)
def test_order_and_size(family, params, order, size):
    g, roles = make(family, *params)
    assert g.order == order
    assert g.size() == size
    assert len(roles) == order


def test_counts_match_closed_expressions():
    # order/size as closed expressions in the parameters
    for m in range(3, 12):
        assert make("fan", m)[0].size() == 2 * m - 1
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert make("wheel", m)[0].size() == 2 * m
        assert make("ladder", m)[0].size() == 3 * m - 2
        assert make("crown", m)[0].size() == m * (m - 1)
        assert make("prism", m)[0].size() == 3 * m
        assert make("book", m)[0].size() == 3 * m + 1
        assert make("helm", m)[0].size() == 3 * m
        assert make("complete", m)[0].size() == m * (m - 1) // 2
    for n in range(2, 7):
        for k in range(1, 7):
            assert make("split", n, k)[0].size() == n * (n - 1) // 2 + n * k
        for mm in range(2, 7):
            assert make("bipartite", mm, n)[0].size() == mm * n


class TestRoleMaps:
    def test_hub_families_place_hub_at_zero(self):
        for family, params in [("fan", (5,)), ("wheel", (5,)), ("star", (5,)), ("helm", (5,))]:
            _, roles = make(family, *params)
            assert roles[0].kind == families.HUB
            assert vertices_with_role(roles, families.HUB) == [0]

    def test_roles_are_total_and_indexed_like_subscripts(self):
        g, roles = make("helm", 4)
        assert [r.kind for r in roles] == (
            [families.HUB] + [families.CYCLE_VERTEX] * 4 + [families.PENDANT] * 4
        )
        assert [r.index for r in roles[1:5]] == [1, 2, 3, 4]
        assert [r.index for r in roles[5:]] == [1, 2, 3, 4]

    def test_helm_pendant_attached_to_matching_rim(self):
        g, roles = make("helm", 6)
        for i in range(1, 7):
            (pendant,) = vertices_with_role(roles, families.PENDANT, index=i)
            (rim,) = vertices_with_role(roles, families.CYCLE_VERTEX, index=i)
            assert g.neighbors(pendant) == [rim]

    def test_crown_adjacency_rule(self):
        m = 5
        g, roles = make("crown", m)
        for i in range(m):
            for j in range(m):
                assert g.has_edge(i, m + j) == (i != j)

    def test_ladder_rungs(self):
        m = 6
        g, roles = make("ladder", m)
        for i in range(m):
            assert g.has_edge(i, m + i)
        side1 = vertices_with_role(roles, families.RUNG, side=1)
        side2 = vertices_with_role(roles, families.RUNG, side=2)
        assert side1 == list(range(m)) and side2 == list(range(m, 2 * m))

    def test_bipartite_partition_roles(self):
        g, roles = make("bipartite", 3, 4)
        assert vertices_with_role(roles, families.PARTITION_U) == [0, 1, 2]
        assert vertices_with_role(roles, families.PARTITION_V) == [3, 4, 5, 6]
        for u in range(3):
            assert g.neighbors(u) == [3, 4, 5, 6]

    def test_book_hubs_adjacent_across_rung(self):
        m = 4
        g, roles = make("book", m)
        hubs = vertices_with_role(roles, families.HUB)
        assert hubs == [0, m + 1]
        assert g.has_edge(hubs[0], hubs[1])

    def test_split_clique_and_independent_set(self):
        n, k = 4, 3
        g, _ = make("split", n, k)
        for i in range(n):
            for j in range(i + 1, n):
                assert g.has_edge(i, j)
        for i in range(n, n + k):
            for j in range(i + 1, n + k):
                assert not g.has_edge(i, j)
            assert g.neighbors(i) == list(range(n))


class TestDomains:
    @pytest.mark.parametrize(
        "family,params",
        [
            ("path", (0,)),
            ("cycle", (2,)),
            ("fan", (2,)),
            ("wheel", (2,)),
            ("bipartite", (1, 3)),
            ("bipartite", (3, 1)),
            ("ladder", (1,)),
            ("crown", (2,)),
            ("prism", (2,)),
            ("star", (1,)),
            ("book", (0,)),
            ("helm", (2,)),
            ("split", (1, 2)),
            ("split", (3, 0)),
            ("complete", (0,)),
        ],
    )
    def test_out_of_domain_rejected(self, family, params):
        with pytest.raises(ValueError):
            FamilySpec(family, params)

    def test_wheel_boundary_warns(self):
        with pytest.warns(UserWarning):
            spec = FamilySpec("wheel", (3,))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            g, _ = generate(spec)
        # W_3 is K_4
        assert g.order == 4 and g.size() == 6

    def test_regular_wheel_does_not_warn(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            FamilySpec("wheel", (4,))

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            FamilySpec("torus", (3,))

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            FamilySpec("path", (3, 4))
        with pytest.raises(ValueError):
            FamilySpec("bipartite", (3,))


class TestSpecParsing:
    def test_basic(self):
        assert parse_family_spec("wheel:6") == FamilySpec("wheel", (6,))
        assert parse_family_spec("bipartite:3,2") == FamilySpec("bipartite", (3, 2))
        assert parse_family_spec("split:5,2") == FamilySpec("split", (5, 2))

    def test_case_and_whitespace(self):
        assert parse_family_spec(" PATH:7 ") == FamilySpec("path", (7,))
        assert parse_family_spec("Bipartite: 3 , 4") == FamilySpec("bipartite", (3, 4))

    @pytest.mark.parametrize(
        "text", ["cycle:2", "nonesuch:4", "path", "path:", "path:x", "wheel:4,5", "split:5"]
    )
    def test_bad_specs(self, text):
        with pytest.raises(ValueError):
            parse_family_spec(text)

    def test_str_round_trip(self):
        for spec in (FamilySpec("helm", (7,)), FamilySpec("split", (4, 3))):
            assert parse_family_spec(str(spec)) == spec


class TestStructuralIdentities:
    @pytest.mark.parametrize("family", ["cycle", "crown", "prism", "complete"])
    def test_vertex_transitive_families_uniform(self, family):
        for m in (3, 4, 5, 6):
            g, _ = make(family, m)
            degrees = {g.degree(u) for u in range(g.order)}
            assert len(degrees) == 1
            values = {harmonic_centrality(g, u) for u in range(g.order)}
            assert len(values) == 1

    def test_ladder_is_path_times_p2(self):
        for m in range(2, 9):
            path, _ = make("path", m)
            p2, _ = make("path", 2)
            assert make("ladder", m)[0] == cartesian_product(path, p2)

    def test_prism_is_cycle_times_p2(self):
        for m in range(3, 9):
            cycle, _ = make("cycle", m)
            p2, _ = make("path", 2)
            assert make("prism", m)[0] == cartesian_product(cycle, p2)

    def test_book_is_star_times_p2(self):
        for m in range(1, 9):
            star, _ = make("star", m) if m >= 2 else (None, None)
            if star is None:  # star generator starts at 2; build S_1 by hand
                star = Graph(2)
                star.add_edge(0, 1)
            p2, _ = make("path", 2)
            assert make("book", m)[0] == cartesian_product(star, p2)

    def test_crown_is_bipartite_minus_matching(self):
        for m in range(3, 8):
            crown, _ = make("crown", m)
            full, _ = make("bipartite", m, m)
            expected = {(u, m + v) for u in range(m) for v in range(m) if u != v}
            assert set(crown.edges()) == {(min(a, b), max(a, b)) for a, b in expected}
            removed = set(full.edges()) - set(crown.edges())
            assert removed == {(i, m + i) for i in range(m)}

    def test_star_is_k1m_up_to_isomorphism(self):
        for m in range(2, 8):
            star, _ = make("star", m)
            k1m = Graph(m + 1)
            for j in range(1, m + 1):  # bipartite layout with U = {0}
                k1m.add_edge(0, j)
            assert sorted(star.degree(u) for u in range(star.order)) == sorted(
                k1m.degree(u) for u in range(k1m.order)
            )
            assert sorted(
                harmonic_centrality(star, u) for u in range(star.order)
            ) == sorted(harmonic_centrality(k1m, u) for u in range(k1m.order))
