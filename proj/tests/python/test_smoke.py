import pytest

import cycmod


def test_regular_module_and_square():
    A = cycmod.Algebra(2, 2)
    J = cycmod.Ideal.radical(A)
    assert cycmod.cdim(cycmod.free_module(A, 1), J) == 1
    assert cycmod.cdim(cycmod.free_module(A, 2), J) == 3


def test_two_generator_level():
    lvl = cycmod.tower_level(3, 2, [1])
    A = cycmod.Algebra(3, 2)
    J = cycmod.Ideal.radical(A)
    assert cycmod.goldie_dim(lvl.module) == 3
    assert cycmod.in_decomposition_domain(lvl.module, J)
    g = cycmod.gamma(lvl.module, cycmod.sigma_tilde(lvl), [], J)
    assert g.vertex_count == 3
    assert g.component_count() == 1
    assert all(g.adjacent(i, j) for i in range(3) for j in range(3))


def test_ks_length_bounded_by_cdim():
    A = cycmod.Algebra(2, 2)
    J = cycmod.Ideal.radical(A)
    M = cycmod.free_module(A, 2)
    length, certain = cycmod.ks_length(M)
    assert certain
    assert length == 2
    assert length <= cycmod.cdim(M, J)


def test_module_json_round_trip():
    A = cycmod.Algebra(3, 2)
    M = cycmod.free_module(A, 1)
    assert cycmod.module_from_json(M.to_json()) == M


def test_budget_error_is_typed():
    A = cycmod.Algebra(3, 3)
    M = cycmod.free_module(A, 4)  # 3^16 vectors is over the default budget
    J = cycmod.Ideal.radical(A)
    with pytest.raises(cycmod.BudgetExceeded):
        cycmod.gamma_full(M, J)


def test_search_is_deterministic():
    a = cycmod.search_csv(3, 3, 2, 8)
    b = cycmod.search_csv(3, 3, 2, 8)
    assert a == b
    assert a.startswith("seq,depth,d,gdim,")


def test_graph_exports():
    A = cycmod.Algebra(2, 2)
    g = cycmod.gamma_full(cycmod.free_module(A, 2), cycmod.Ideal.radical(A))
    dot = g.to_dot()
    assert dot.startswith("graph cycgraph {")
    assert g.to_json().startswith("{")
