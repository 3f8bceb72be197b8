from fractions import Fraction

import pytest

from conftest import complete_graph

from cliquecover.exceptions import InputError
from cliquecover.graph import build_graph, gen_complete_multipartite, gen_gnp
from cliquecover.tightness import (
    balanced_biclique_scan,
    double_cover,
    expected_balanced_bicliques,
    largest_balanced_biclique,
)


def test_double_cover(c5):
    cover = double_cover(c5)
    assert cover.m == 5 and cover.right_n == 5
    assert cover.rows[0] == 0b10010
    with pytest.raises(InputError):
        double_cover(build_graph(0, []))


def test_expected_count():
    assert expected_balanced_bicliques(4, "1/2", 1) == 4 * 3 * Fraction(1, 2)
    assert expected_balanced_bicliques(20, "1/2", 7) < Fraction(1, 10**5)


def test_scan_finds_planted_biclique():
    g = gen_complete_multipartite([3, 3])
    report = balanced_biclique_scan(g, 3, "1/2")
    assert report.found
    assert set(report.S).isdisjoint(report.T)
    assert len(report.S) == len(report.T) == 3
    assert report.expected_count == expected_balanced_bicliques(6, "1/2", 3)
    assert not balanced_biclique_scan(g, 4).found
    assert not balanced_biclique_scan(g, 7).found


def test_largest_balanced_biclique(c5):
    assert largest_balanced_biclique(c5) == 1
    # K_n's double cover holds K_2(s, s) exactly when 2s <= n
    assert largest_balanced_biclique(complete_graph(7)) == 3


@pytest.mark.slow
@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
def test_random_graphs_have_no_large_balanced_biclique(seed):
    g = gen_gnp(20, "1/2", seed)
    report = balanced_biclique_scan(g, 7, "1/2")
    assert not report.found
    assert report.expected_count < 1
