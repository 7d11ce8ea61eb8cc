import pytest

from equichar.errors import UsageError
from equichar.cells import CellSpace, chi, fixed_cells, quotient_cells
from equichar.groups import cyclic, symmetric, trivial_group
from equichar.gsets import biset_from_single_action, empty_biset, point_biset


def regular(G):
    perms = [tuple(G.mul(s, x) for x in range(G.order)) for s in G.generators]
    return biset_from_single_action(G.order, G, perms, side="O")


def circle_with_flip():
    """Two vertices + two edges, Z/2 swapping the halves."""
    Z2 = cyclic(2)
    verts = biset_from_single_action(2, Z2, [(1, 0)], side="O")
    edges = biset_from_single_action(2, Z2, [(1, 0)], side="O")
    return CellSpace(((0, verts), (1, edges)))


def test_chi_signed_count():
    X = circle_with_flip()
    assert chi(X) == 0


def test_chi_of_biset_is_cardinality():
    assert chi(regular(symmetric(3))) == 6


def test_cells_must_share_groups():
    Z2 = cyclic(2)
    a = biset_from_single_action(1, Z2, [(0,)], side="O")
    b = biset_from_single_action(1, cyclic(3), [(0,)], side="O")
    with pytest.raises(UsageError):
        CellSpace(((0, a), (1, b)))


def test_negative_dimension_rejected():
    Z2 = cyclic(2)
    a = biset_from_single_action(1, Z2, [(0,)], side="O")
    with pytest.raises(UsageError):
        CellSpace(((-1, a),))


def test_fixed_cells_of_flip():
    X = circle_with_flip()
    F = fixed_cells(X, (1,))
    assert [c.size for _, c in F.cells] == [0, 0]
    assert chi(F) == 0


def test_fixed_cells_share_one_group():
    X = circle_with_flip()
    F = fixed_cells(X, (0,))
    assert F.cells[0][1].gO is F.cells[1][1].gO
    assert chi(F) == 0


def test_quotient_cells_of_flip():
    X = circle_with_flip()
    Q = quotient_cells(X)
    assert [c.size for _, c in Q.cells] == [1, 1]
    assert chi(Q) == 0


def test_interval_with_swap():
    """Segment subdivided at the midpoint, flip swapping the halves:
    3 vertices (endpoints swapped, midpoint fixed), 2 swapped edges."""
    Z2 = cyclic(2)
    verts = biset_from_single_action(3, Z2, [(1, 0, 2)], side="O")
    edges = biset_from_single_action(2, Z2, [(1, 0)], side="O")
    X = CellSpace(((0, verts), (1, edges)))
    assert chi(X) == 1
    F = fixed_cells(X, (1,))
    assert chi(F) == 1  # just the midpoint
    Q = quotient_cells(X)
    assert chi(Q) == 1  # half interval: 2 vertices, 1 edge


def test_empty_space():
    Z2, T = cyclic(2), trivial_group()
    X = CellSpace(((0, empty_biset(Z2, T)),))
    assert chi(X) == 0
    assert chi(fixed_cells(X, (1,))) == 0


def test_point_space():
    Z2, T = cyclic(2), trivial_group()
    X = CellSpace(((0, point_biset(Z2, T)),))
    assert chi(X) == 1
    assert chi(quotient_cells(X)) == 1
