from fractions import Fraction

import pytest

from cmpoly.facet_family import (check_facet_hypothesis, check_validity_hypothesis,
                                 family_inequality, generate_family,
                                 is_disconnected_pair, lambda_set, path_precheck)
from cmpoly.graph_core import Graph, GraphError, generate
from cmpoly.matchings import enumerate_cm_sets, enumerate_connected_matchings

from conftest import random_connected_graph


class TestLambdaSet:
    def test_p6(self):
        assert lambda_set(generate("path:6"), 1, 5) == (3,)

    def test_c6_opposite(self):
        assert lambda_set(generate("cycle:6"), 1, 4) == ()

    def test_cube3_antipodal(self):
        g = generate("cube:3")
        e1 = g.edge_id(1, 2)    # 000-001
        e2 = g.edge_id(7, 8)    # 110-111
        lam = lambda_set(g, e1, e2)
        assert lam == (g.edge_id(3, 4), g.edge_id(5, 6))  # 010-011 and 100-101

    def test_brute_force_definition(self):
        from cmpoly.graph_core import line_distance
        for seed in range(8):
            g = random_connected_graph(seed)
            for e1 in range(1, g.m + 1):
                for e2 in range(e1 + 1, g.m + 1):
                    expect = tuple(sorted(
                        f for f in range(1, g.m + 1)
                        if line_distance(g, f, e1) == 2
                        and line_distance(g, f, e2) == 2))
                    assert lambda_set(g, e1, e2) == expect

    def test_same_edge_rejected(self):
        with pytest.raises(GraphError):
            lambda_set(generate("path:6"), 2, 2)


class TestDisconnectedPair:
    def test_adjacent_edges(self):
        assert not is_disconnected_pair(generate("path:4"), 1, 2)

    def test_c6(self):
        assert is_disconnected_pair(generate("cycle:6"), 1, 4)

    def test_k4_never(self):
        g = generate("complete:4")
        for e1 in range(1, g.m + 1):
            for e2 in range(e1 + 1, g.m + 1):
                assert not is_disconnected_pair(g, e1, e2)


class TestFamilyInequality:
    def test_p6(self):
        q = family_inequality(generate("path:6"), 1, 5)
        assert q.canonical() == ((1, 0, -1, 0, 1), 1)

    def test_c6(self):
        q = family_inequality(generate("cycle:6"), 1, 4)
        assert q.canonical() == ((1, 0, 0, 1, 0, 0), 1)

    def test_pre_violation(self):
        with pytest.raises(GraphError):
            family_inequality(generate("path:4"), 1, 2)

    def test_support_structure(self):
        for seed in range(10):
            g = random_connected_graph(seed)
            for q, cert in generate_family(g):
                ints, rhs = q.canonical()
                assert rhs == 1
                assert sorted(c for c in ints if c != 0) == \
                    [-1] * len(cert.lam) + [1, 1]


class TestValidityHypothesis:
    def test_p6(self):
        assert check_validity_hypothesis(generate("path:6"), 1, 5)

    def test_c6(self):
        assert check_validity_hypothesis(generate("cycle:6"), 1, 4)

    def test_cube3(self):
        g = generate("cube:3")
        assert check_validity_hypothesis(g, g.edge_id(1, 2), g.edge_id(7, 8))

    def test_pre_violation(self):
        with pytest.raises(GraphError):
            check_validity_hypothesis(generate("path:4"), 1, 2)


class TestPathPrecheck:
    def test_p6(self):
        assert path_precheck(generate("path:6"), 1, 5)

    def test_c6_sufficiency_not_necessity(self):
        g = generate("cycle:6")
        assert not path_precheck(g, 1, 4)
        assert check_validity_hypothesis(g, 1, 4)

    def test_separate_components(self):
        g = Graph(4, ((1, 2), (3, 4)))
        assert path_precheck(g, 1, 2)

    def test_implies_validity(self):
        for seed in range(10):
            g = random_connected_graph(seed)
            for e1 in range(1, g.m + 1):
                for e2 in range(e1 + 1, g.m + 1):
                    if not is_disconnected_pair(g, e1, e2):
                        continue
                    if path_precheck(g, e1, e2):
                        assert check_validity_hypothesis(g, e1, e2)


class TestFacetHypothesis:
    def test_p6_not_biconnected(self):
        g = generate("path:6")
        assert not check_facet_hypothesis(g, 1, 5, lambda_set(g, 1, 5))

    def test_cube3_clique_fails(self):
        g = generate("cube:3")
        e1, e2 = g.edge_id(1, 2), g.edge_id(7, 8)
        assert not check_facet_hypothesis(g, e1, e2, lambda_set(g, e1, e2))

    def test_empty_lambda_never_certified(self):
        g = generate("cycle:6")
        assert not check_facet_hypothesis(g, 1, 4, ())

    def test_wrong_lambda_rejected(self):
        g = generate("path:6")
        with pytest.raises(GraphError):
            check_facet_hypothesis(g, 1, 5, (2,))

    def test_positive_case(self):
        g = Graph(6, ((1, 2), (1, 3), (1, 4), (2, 5), (3, 4), (3, 6), (4, 5),
                      (4, 6)))
        fam = generate_family(g)
        certified = [c for _, c in fam if c.facet_certified]
        assert any(c.pair == (4, 6) and c.lam == (3,) for c in certified)


class TestGenerateFamily:
    def test_k4_empty(self):
        assert generate_family(generate("complete:4")) == []

    def test_c6(self):
        fam = generate_family(generate("cycle:6"))
        pairs = [cert.pair for _, cert in fam]
        assert pairs == [(1, 4), (2, 5), (3, 6)]
        assert all(not cert.facet_certified for _, cert in fam)
        assert all(cert.empty_lambda for _, cert in fam)

    def test_order_and_size_bound(self):
        for seed in range(10):
            g = random_connected_graph(seed)
            fam = generate_family(g)
            pairs = [cert.pair for _, cert in fam]
            assert pairs == sorted(pairs)
            assert len(fam) <= g.m * (g.m - 1) // 2

    def test_validity_on_vertices(self):
        for seed in range(20):
            g = random_connected_graph(seed)
            vecs = enumerate_connected_matchings(g)
            for q, _ in generate_family(g):
                assert all(q.evaluate(x) <= q.rhs for x in vecs)

    def test_fact1_corollary(self):
        # clique Lambda meets any connected matching in at most one edge
        for seed in range(10):
            g = random_connected_graph(seed)
            cms = enumerate_cm_sets(g)
            for _, cert in generate_family(g):
                lam = set(cert.lam)
                if not lam or not cert.facet_certified:
                    continue
                for M in cms:
                    assert len(lam & set(M)) <= 1

    def test_certificate_consistency(self):
        for seed in range(10):
            g = random_connected_graph(seed)
            for q, cert in generate_family(g):
                assert cert.valid and cert.disconnected_pair
                if cert.facet_certified:
                    assert cert.valid and not cert.empty_lambda
                assert cert.empty_lambda == (len(cert.lam) == 0)


class TestJ26Family:
    def test_five_family_rows_match_hull_count(self):
        # the five hull facets of family shape exist among generated rows
        g = generate("j26")
        fam = generate_family(g)
        sizes = sorted(len(c.lam) for _, c in fam if c.lam)
        # the lifting pattern of the worked example: |lambda| = 2 occurs
        assert 2 in sizes

    def test_eq2_shape_present(self):
        g = generate("j26")
        fam = generate_family(g)
        shapes = {tuple(sorted(q.canonical()[0])) for q, _ in fam}
        assert (-1, -1) + (0,) * 10 + (1, 1) in shapes
