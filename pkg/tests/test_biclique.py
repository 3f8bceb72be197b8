from fractions import Fraction
from math import ceil

import numpy as np
import pytest

from cliquecover.biclique import (
    BipartiteInstance,
    averaging_bound,
    biclique_oracle,
    double_count_check,
    emit_bipartite,
    find_s_subset,
    gen_random_bipartite,
    generalized_binomial,
    iter_s_subsets,
    lemma1_params,
    parse_bipartite,
)
from cliquecover.exceptions import InputError, SearchLimitError
from cliquecover.schemas import BicliqueWitness, NotFound


def _random_instance(rng, max_m, max_n, min_m=1):
    m = int(rng.integers(min_m, max_m + 1))
    n = int(rng.integers(1, max_n + 1))
    density = Fraction(int(rng.integers(1, 10)), 10)
    return gen_random_bipartite(m, n, density, int(rng.integers(0, 2**32)))


def test_instance_basics():
    inst = BipartiteInstance.from_pairs(3, 4, [(0, 0), (0, 1), (1, 1), (2, 3)])
    assert inst.m == 3
    assert inst.edge_count == 4
    assert inst.left_degrees() == [2, 1, 1]
    assert inst.right_degrees().tolist() == [1, 2, 0, 1]
    assert inst.common([0, 1]) == 0b10
    assert inst.left_items == (0, 1, 2)
    with pytest.raises(InputError):
        BipartiteInstance((), 3)
    with pytest.raises(InputError):
        BipartiteInstance((0b1000,), 3)


def test_generalized_binomial():
    assert generalized_binomial(5, 2) == 10
    assert generalized_binomial(Fraction(5, 2), 2) == Fraction(15, 8)
    assert generalized_binomial(Fraction(1, 2), 2) == 0
    assert generalized_binomial(1, 2) == 0
    assert generalized_binomial(2.5, 2) == pytest.approx(1.875)


def test_lemma1_params_example():
    params = lemma1_params(100, 1000, "9/20", 2)
    assert params.s == 1
    assert params.t_min == 45
    assert params.min_edges == 45000
    assert params.flags.all_ok
    assert params.flags.density_ok is None
    dense = lemma1_params(100, 1000, "9/20", 2, edges=45000)
    assert dense.flags.density_ok
    sparse = lemma1_params(100, 1000, "9/20", 2, edges=44999)
    assert not sparse.flags.all_ok


def test_lemma1_params_flags_c_at_half():
    params = lemma1_params(100, 1000, "1/2", 2)
    assert not params.flags.c_upper_ok


def test_find_first_feasible_and_not_found():
    # rows: 0 -> {0, 1, 2}, 1 -> {1, 2, 3}, 2 -> {3}
    inst = BipartiteInstance((0b0111, 0b1110, 0b1000), 4)
    witness = find_s_subset(inst, 2, 2)
    assert witness == BicliqueWitness(S=(0, 1), T=(1, 2))
    assert isinstance(find_s_subset(inst, 2, 3), NotFound)
    assert isinstance(find_s_subset(inst, 4, 0), NotFound)
    with pytest.raises(InputError):
        find_s_subset(inst, 0, 1)


def test_iter_s_subsets_lists_every_feasible_subset():
    inst = BipartiteInstance((0b0111, 0b1110, 0b1100), 4)
    found = {w.S for w in iter_s_subsets(inst, 2, 1)}
    assert found == {(0, 1), (1, 2), (0, 2)}
    assert [w.S for w in iter_s_subsets(inst, 2, 2)] == [(0, 1), (1, 2)]


def test_oracle_scan_and_cap():
    inst = BipartiteInstance((0b0111, 0b1110, 0b1100), 4)
    result = biclique_oracle(inst, 2)
    assert (result.S, result.t, result.T) == ((0, 1), 2, (1, 2))
    with pytest.raises(SearchLimitError):
        biclique_oracle(inst, 2, cap=2)


def test_oracle_cap_comes_from_settings(monkeypatch):
    from cliquecover.config import get_settings

    monkeypatch.setenv("CLIQUECOVER_ORACLE_CAP", "2")
    get_settings.cache_clear()
    with pytest.raises(SearchLimitError):
        double_count_check(BipartiteInstance((1, 1, 1), 1), 2)


def test_double_counting_identity():
    rng = np.random.default_rng(1)
    for _ in range(200):
        inst = _random_instance(rng, 10, 12, min_m=3)
        s = int(rng.choice([2, 3]))
        report = double_count_check(inst, s)
        assert report.lhs_sum == report.rhs_sum
        assert report.equal
        assert report.convexity_ok


def test_maximize_matches_oracle():
    rng = np.random.default_rng(2)
    for _ in range(100):
        inst = _random_instance(rng, 14, 20)
        s = int(rng.integers(1, min(3, inst.m) + 1))
        best = find_s_subset(inst, s, 0, "maximize")
        assert isinstance(best, BicliqueWitness)
        oracle = biclique_oracle(inst, s)
        assert best.t == oracle.t
        assert inst.common(best.S).bit_count() == best.t
        assert best.t >= averaging_bound(inst, s)


def test_lemma1_guarantee_for_r2():
    rng = np.random.default_rng(3)
    c = Fraction(99, 200)
    for _ in range(50):
        n = int(rng.integers(60, 501))
        m = int(rng.integers(10, 61))
        degree = ceil(c * n)
        rows = []
        for _ in range(m):
            row = 0
            for v in rng.choice(n, size=degree, replace=False):
                row |= 1 << int(v)
            rows.append(row)
        inst = BipartiteInstance(tuple(rows), n)
        params = lemma1_params(m, n, c, 2, edges=inst.edge_count)
        assert params.flags.all_ok
        witness = find_s_subset(inst, params.s, params.t_min)
        assert isinstance(witness, BicliqueWitness)
        assert len(witness.S) == params.s
        assert witness.t >= params.t_min


def test_bipartite_text_format():
    inst = BipartiteInstance.from_pairs(2, 3, [(1, 2), (0, 0), (1, 0)])
    text = emit_bipartite(inst)
    assert text == "2 3 3\n0 0\n1 0\n1 2\n"
    assert parse_bipartite(text) == inst


@pytest.mark.parametrize("text, line", [("2 3\n", 1), ("2 3 1\n2 0\n", 2), ("2 3 2\n0 0\n0 0\n", 3)])
def test_parse_bipartite_errors(text, line):
    with pytest.raises(InputError) as info:
        parse_bipartite(text)
    assert info.value.line == line


def test_gen_random_bipartite_is_seeded():
    a = gen_random_bipartite(8, 9, "1/3", 5)
    assert a == gen_random_bipartite(8, 9, "1/3", 5)
    assert gen_random_bipartite(3, 4, 1, 0).edge_count == 12
    assert gen_random_bipartite(3, 4, 0, 0).edge_count == 0


def test_witness_common_neighbourhood_is_a_vertex_set():
    from cliquecover.graph import VertexSet

    rng = np.random.default_rng(6)
    for _ in range(20):
        inst = _random_instance(rng, 8, 10, min_m=2)
        for mode in ("first_feasible", "maximize"):
            witness = find_s_subset(inst, 2, 0, mode)
            assert VertexSet(witness.T).mask == inst.common(witness.S)


def test_maximize_is_non_increasing_in_s():
    rng = np.random.default_rng(8)
    for _ in range(50):
        inst = _random_instance(rng, 8, 12, min_m=4)
        best = [find_s_subset(inst, s, 0, "maximize").t for s in range(1, 5)]
        assert best == sorted(best, reverse=True)


def test_gen_random_bipartite_rejects_negative_seed():
    with pytest.raises(InputError, match="non-negative"):
        gen_random_bipartite(2, 2, "1/2", -1)
