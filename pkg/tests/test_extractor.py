from fractions import Fraction

import pytest

from conftest import complete_graph, cycle_graph

from cliquecover.cliques import CliqueList, enumerate_r_cliques
from cliquecover.exceptions import InputError
from cliquecover.extractor import (
    base_case_r2,
    build_bipartite_from_cliques,
    extract,
    extract_with_target,
    theorem_params,
)
from cliquecover.graph import gen_complete_multipartite, gen_gnp, overlay
from cliquecover.schemas import CoverCertificate, Infeasible, NotFound
from cliquecover.verify import verify_cover


def test_theorem_params_r2_example():
    params = theorem_params(70, 2, "69/140")
    assert params.s == 1
    assert params.t_min == 9
    assert params.feasible
    assert [level.r for level in params.levels] == [2]
    assert params.flags["hypothesis"]


def test_theorem_params_infeasible_at_desk_scale():
    params = theorem_params(1000, 3, "1/10")
    assert not params.feasible
    assert "hypothesis" in params.failed_flags
    assert [level.r for level in params.levels] == [3, 2]
    # c' = 3c/2 at the level below
    assert params.levels[1].c == Fraction(3, 20)
    assert params.levels[0].threshold == 100


def test_theorem_params_rejects_bad_input():
    with pytest.raises(InputError):
        theorem_params(1, 2, "1/4")
    with pytest.raises(InputError):
        theorem_params(70, 2, 0)


def test_build_bipartite_from_cliques(k4):
    triangles = enumerate_r_cliques(k4, 3)
    inst = build_bipartite_from_cliques(triangles, [(0, 1)], 4)
    assert inst.rows == (0b1100,)
    assert inst.left_items == ((0, 1),)
    with pytest.raises(InputError):
        build_bipartite_from_cliques(triangles, [(0, 1), (1, 2)], 4)


def test_base_case_on_cycle(c5):
    edges = enumerate_r_cliques(c5, 2)
    cert = base_case_r2(edges, 5, 2, 1)
    assert isinstance(cert, CoverCertificate)
    assert cert.parts == [[0, 2]]
    assert cert.last_part == [1]
    assert cert.disjoint_members == [[0, 1]]
    assert verify_cover(c5, edges, cert).all_ok
    assert isinstance(base_case_r2(edges, 5, 2, 2), NotFound)


def test_guaranteed_extraction_on_k70():
    g = complete_graph(70)
    edges = enumerate_r_cliques(g, 2)
    cert = extract(g, edges, 2, "69/140")
    assert isinstance(cert, CoverCertificate)
    assert cert.mode == "guaranteed"
    assert cert.s == 1
    assert cert.t >= 9
    assert cert.flags["clique_count"]
    assert verify_cover(g, edges, cert).all_ok


@pytest.mark.slow
def test_guaranteed_extraction_on_near_complete_graphs():
    for i in range(20):
        n = 70 + 6 * i
        g = gen_gnp(n, "199/200", i)
        edges = enumerate_r_cliques(g, 2)
        c = Fraction(len(edges), n * n)
        result = extract(g, edges, 2, c)
        assert isinstance(result, CoverCertificate), f"seed {i}: {result}"
        assert verify_cover(g, edges, result).all_ok
        assert result.t >= result.t_min


def test_extract_reports_infeasible(k5):
    edges = enumerate_r_cliques(k5, 2)
    result = extract(k5, edges, 2, "1/4")
    assert isinstance(result, Infeasible)
    assert "hypothesis" in result.failed_flags
    assert not result.params.feasible


def test_extract_rejects_foreign_cliques(c5):
    with pytest.raises(InputError):
        extract_with_target(c5, CliqueList.of(2, [(0, 2)], 5), 2, 1, 1)
    with pytest.raises(InputError):
        extract_with_target(c5, enumerate_r_cliques(c5, 2), 3, 1, 1)


def test_best_effort_on_complete_tripartite():
    g = gen_complete_multipartite([2, 2, 12])
    triangles = enumerate_r_cliques(g, 3)
    cert = extract_with_target(g, triangles, 3, 2, 12)
    assert isinstance(cert, CoverCertificate)
    assert sorted(cert.parts) == [[0, 1], [2, 3]]
    assert cert.last_part == list(range(4, 16))
    assert len(cert.disjoint_members) == 2
    assert verify_cover(g, triangles, cert).all_ok


def test_best_effort_not_found_names_a_level():
    g = cycle_graph(6)
    result = extract_with_target(g, enumerate_r_cliques(g, 2), 2, 2, 3)
    assert isinstance(result, NotFound)
    assert result.level == 2


def test_best_effort_with_threshold():
    g = gen_complete_multipartite([2, 2, 12])
    triangles = enumerate_r_cliques(g, 3)
    cert = extract_with_target(g, triangles, 3, 2, 12, threshold="1/2")
    assert isinstance(cert, CoverCertificate)
    assert cert.flags == {"threshold_applied": True}


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(10))
def test_planted_recovery_r3(seed):
    host = gen_gnp(60, "1/5", seed)
    planted = gen_complete_multipartite([2, 2, 20])
    g = overlay(host, planted, list(range(24)))
    triangles = enumerate_r_cliques(g, 3)
    cert = extract_with_target(g, triangles, 3, 2, 20)
    assert isinstance(cert, CoverCertificate)
    assert cert.t >= 20
    assert verify_cover(g, triangles, cert).all_ok


def test_base_case_on_complete_bipartite():
    g = gen_complete_multipartite([3, 3])
    edges = enumerate_r_cliques(g, 2)
    cert = base_case_r2(edges, 6, 3, 3)
    assert isinstance(cert, CoverCertificate)
    assert cert.parts == [[0, 1, 2]]
    assert cert.last_part == [3, 4, 5]
    assert cert.disjoint_members == [[0, 3], [1, 4], [2, 5]]


def test_base_case_on_matching_is_not_found():
    matching = CliqueList.of(2, [(2 * i, 2 * i + 1) for i in range(5)], 10)
    assert isinstance(base_case_r2(matching, 10, 2, 1), NotFound)


def test_build_bipartite_edge_cases():
    empty = build_bipartite_from_cliques(CliqueList(3, (), 4), [(0, 1)], 4)
    assert empty.edge_count == 0
    triangles = enumerate_r_cliques(gen_complete_multipartite([2, 2, 2]), 3)
    inst = build_bipartite_from_cliques(triangles, [(0, 2)], 6)
    assert inst.rows == (0b110000,)


def test_guaranteed_mode_is_infeasible_for_tripartite_and_empty_lists():
    g = gen_complete_multipartite([2, 2, 12])
    assert isinstance(extract(g, enumerate_r_cliques(g, 3), 3, "1/100"), Infeasible)
    result = extract(g, CliqueList(2, (), 16), 2, "1/4")
    assert isinstance(result, Infeasible)
    assert "clique_count" in result.failed_flags


def test_theorem_params_flags_c_one():
    assert "level2.c_below_half" in theorem_params(50, 2, 1).failed_flags


def test_certificate_parts_are_disjoint_vertex_sets():
    from cliquecover.graph import VertexSet

    g = gen_complete_multipartite([2, 2, 12])
    cert = extract_with_target(g, enumerate_r_cliques(g, 3), 3, 2, 12)
    masks = [VertexSet(tuple(part)).mask for part in cert.parts + [cert.last_part]]
    assert sum(mask.bit_count() for mask in masks) == (masks[0] | masks[1] | masks[2]).bit_count()
