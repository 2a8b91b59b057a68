import pytest
import sympy as sp

from hessberg.errors import CentralLeviError, NoWitnessError
from hessberg.hessenberg import enumerate_all, from_hessenberg_function, full_space, springer_space, validate
from hessberg.rootsys import upper_set
from hessberg.semisimple import (
    betti_numbers,
    cell_dimension,
    disconnection_witness,
    is_connected_by_betti,
    is_connected_by_criterion,
    is_regular,
    poincare_string,
    witness_problems,
    zero_dimensional_cells,
)
from hessberg.weyl import all_levis, length_polynomial, levi_datum

RANK_3 = ['A1', 'A2', 'B2', 'G2', 'A3', 'B3', 'C3']


@pytest.fixture
def h233():
    return from_hessenberg_function([2, 3, 3], 3)


def test_cell_dimension_examples(W_a2, torus_a2, h233):
    assert cell_dimension(W_a2.identity, torus_a2, h233) == 0
    assert cell_dimension(W_a2.longest, torus_a2, h233) == 2
    central = levi_datum(W_a2, [0, 1])
    assert cell_dimension(W_a2.longest, central, springer_space(W_a2.rs)) == 3


def test_cells_for_h233(W_a2, torus_a2, h233):
    dims = {str(c.w): c.dim for c in betti_numbers(torus_a2, h233).cells}
    assert dims == {"e": 0, "s1": 1, "s2": 1, "s1 s2": 1, "s2 s1": 1, "s1 s2 s1": 2}


def test_named_betti_tables(a2, torus_a2, h233):
    assert betti_numbers(torus_a2, h233).counts == (1, 4, 1, 0)
    assert betti_numbers(torus_a2, full_space(a2)).counts == (1, 2, 2, 1)
    assert betti_numbers(torus_a2, springer_space(a2)).counts == (6, 0, 0, 0)


def test_levi_betti_table(W_a2, a2):
    # H = b: the cell of w = y v is the Schubert cell of y in M/B_M
    table = betti_numbers(levi_datum(W_a2, [0]), springer_space(a2))
    assert table.counts == (3, 3, 0, 0)
    assert table.components == 3


def test_betti_table_summaries(torus_a2, h233):
    table = betti_numbers(torus_a2, h233)
    assert table.poincare == "q**2 + 4*q + 1"
    assert table.euler == 6
    assert table.components == 1
    q = sp.Symbol('q')
    assert sp.sympify(table.poincare, locals={'q': q}) == q ** 2 + 4 * q + 1


def test_poincare_string():
    assert poincare_string((6, 0, 0, 0)) == "6"
    assert poincare_string((1, 2, 2, 1)) == "q**3 + 2*q**2 + 2*q + 1"


def test_connectedness_verdicts(a2, torus_a2, root):
    assert is_connected_by_betti(torus_a2, full_space(a2))
    assert not is_connected_by_betti(torus_a2, springer_space(a2))
    both = validate(a2, [root(-1, 0), root(0, -1)])
    only_a2 = validate(a2, [root(0, -1)])
    assert is_connected_by_criterion(torus_a2, both)
    assert not is_connected_by_criterion(torus_a2, only_a2)
    assert is_regular(torus_a2)


def test_central_levi_is_always_connected(W_a2):
    central = levi_datum(W_a2, [0, 1])
    H = springer_space(W_a2.rs)
    assert is_connected_by_criterion(central, H)
    assert is_connected_by_betti(central, H)
    with pytest.raises(CentralLeviError):
        disconnection_witness(central, H)


def test_witness_in_the_nilradical(W_a2, torus_a2, a2, root):
    alpha, v = disconnection_witness(torus_a2, validate(a2, [root(0, -1)]))
    assert alpha == root(1, 0)
    assert v == W_a2.generators[0]


def test_witness_in_the_levi(W_a2, a2, root):
    M = levi_datum(W_a2, [0])
    witness = disconnection_witness(M, springer_space(a2))
    assert witness.case == 'levi'
    assert witness.alpha == root(1, 0)
    assert str(witness.w) == "s1 s2"
    assert witness.y.is_identity
    assert str(witness.v) == "s2 s1"


def test_no_witness_when_connected(a2, torus_a2, h233):
    with pytest.raises(NoWitnessError):
        disconnection_witness(torus_a2, h233)


def test_zero_dimensional_cells(a2, torus_a2, h233):
    assert zero_dimensional_cells(torus_a2, h233) == []
    assert len(zero_dimensional_cells(torus_a2, springer_space(a2))) == 5


def test_point_cells(a2, torus_a2):
    table = betti_numbers(torus_a2, springer_space(a2))
    assert len(table.point_cells) == table.components - 1
    assert all(c.dim == 0 and not c.w.is_identity for c in table.point_cells)
    assert [c.w for c in table.point_cells] == zero_dimensional_cells(torus_a2, springer_space(a2))


@pytest.mark.parametrize('name', RANK_3)
def test_betti_agrees_with_criterion(system, group, name):
    rs = system(name)
    W = group(name)
    lengths = tuple(length_polynomial(W))
    for M in all_levis(W):
        for H in enumerate_all(rs):
            table = betti_numbers(M, H)
            assert sum(table.counts) == len(W)
            assert len(table.counts) == rs.n_positive + 1
            if M.is_central or H == full_space(rs):
                assert table.counts == lengths
            if M.is_central:
                continue
            assert (table.components == 1) == is_connected_by_criterion(M, H)
            if table.components > 1:
                witness = disconnection_witness(M, H)
                assert witness_problems(M, H, witness) == []
                assert cell_dimension(witness.v, M, H) == 0
                assert not witness.v.is_identity


@pytest.mark.parametrize('name', RANK_3)
def test_upper_set_avoids_the_space(system, name):
    rs = system(name)
    for H in enumerate_all(rs):
        for alpha in rs.simple_roots:
            if H.contains(-alpha):
                continue
            assert not any(H.contains(-g) for g in upper_set(rs, alpha))
