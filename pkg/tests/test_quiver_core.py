import pytest

from modules.models import Quiver
from modules.quiver_core import (antisym_form, arrow_list, basis_vector, checked, describe,
                                 euler_form, euler_form_by_arrows, evaluate, gcd_form,
                                 is_indivisible, make_quiver, moduli_dimension, support_graph,
                                 topological_order)
from utils.exceptions import CycleError, QuiverError


def test_make_quiver_accumulates_parallel_entries():
    Q = make_quiver(2, [(0, 1, 1), (0, 1, 2)])
    assert Q.mult == ((0, 3), (0, 0))
    assert Q.num_arrows == 3


def test_make_quiver_rejects_out_of_range_vertex():
    with pytest.raises(IndexError):
        make_quiver(2, [(0, 2, 1)])


def test_make_quiver_rejects_negative_multiplicity():
    with pytest.raises(QuiverError):
        make_quiver(2, [(0, 1, -1)])


@pytest.mark.parametrize("arrows", [
    [(0, 1, 1), (1, 0, 1)],
    [(0, 0, 1)],
    [(0, 1, 1), (1, 2, 1), (2, 0, 2)],
])
def test_cycles_are_rejected(arrows):
    with pytest.raises(CycleError) as excinfo:
        make_quiver(3, arrows)
    assert "cycle" in str(excinfo.value)
    assert excinfo.value.cycle


def test_quiver_rejects_bad_matrix_shape():
    with pytest.raises(QuiverError):
        Quiver(2, ((0, 1),))
    with pytest.raises(QuiverError):
        make_quiver(0, [])


def test_arrow_list_inverts_make_quiver():
    Q = make_quiver(4, [(2, 0, 2), (1, 0, 1), (3, 1, 3)])
    assert arrow_list(Q) == [(1, 0, 1), (2, 0, 2), (3, 1, 3)]
    assert make_quiver(4, arrow_list(Q)) == Q


def test_support_graph_carries_multiplicities(k3):
    graph = support_graph(k3)
    assert list(graph.nodes) == [0, 1]
    assert graph.edges[0, 1]['mult'] == 3


def test_topological_order_prefers_smallest_vertex():
    Q = make_quiver(3, [(2, 0, 2), (1, 0, 2)])
    assert topological_order(Q) == [1, 2, 0]


def test_kronecker_forms(k3):
    d = (2, 3)
    assert euler_form(k3, d, d) == -5
    assert moduli_dimension(k3, d) == 6
    assert antisym_form(k3, d, (1, 0)) == 9
    assert antisym_form(k3, d, (0, 1)) == -6


def test_euler_form_agrees_with_arrow_by_arrow_sum():
    Q = make_quiver(3, [(0, 1, 2), (0, 2, 1), (1, 2, 3)])
    for d in [(1, 1, 1), (2, 0, 3), (1, 2, 1)]:
        for e in [(0, 1, 0), (3, 1, 2), (1, 1, 1)]:
            assert euler_form(Q, d, e) == euler_form_by_arrows(Q, d, e)


def test_subspace_quiver_dimension():
    S5 = make_quiver(6, [(i, 5, 1) for i in range(5)])
    assert moduli_dimension(S5, (1, 1, 1, 1, 1, 2)) == 2


def test_vector_length_must_match(k3):
    with pytest.raises(QuiverError):
        euler_form(k3, (1,), (1, 1))


def test_basis_vector():
    assert basis_vector(3, 1) == (0, 1, 0)
    with pytest.raises(IndexError):
        basis_vector(3, 3)


def test_evaluate_overflow_is_reported():
    assert evaluate((2, -1), (3, 6)) == 0
    with pytest.raises(OverflowError):
        evaluate((2 ** 62, 2 ** 62), (1, 1))
    with pytest.raises(OverflowError):
        checked(-2 ** 63 - 1)


def test_gcd_form_and_indivisibility():
    assert gcd_form((9, -6)) == 3
    assert gcd_form(()) == 0
    assert gcd_form((0, 0)) == 0
    assert is_indivisible((2, 3))
    assert not is_indivisible((2, 4))


def test_describe(k3):
    assert describe(k3) == "quiver(2 vertices: 0->1x3)"
    assert describe(make_quiver(1, [])) == "quiver(1 vertices: no arrows)"
