"""Exact integer linear algebra helpers."""

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from agstab.intlinalg import (
    adjugate_int,
    all_circuits,
    coordinates_in_lattice_basis,
    det_int,
    matroid_components,
    rational_rank,
    saturation_basis,
)


def fraction_gauss_det(rows):
    # independent determinant via fraction-valued elimination
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


square = st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=n, max_size=n),
        min_size=n, max_size=n,
    )
)


@settings(max_examples=80, deadline=None)
@given(square)
def test_det_int_matches_gaussian_elimination(rows):
    assert det_int(rows) == fraction_gauss_det(rows)


@settings(max_examples=50, deadline=None)
@given(square)
def test_adjugate_identity(rows):
    assume(fraction_gauss_det(rows) != 0)
    adj, det = adjugate_int(rows)
    n = len(rows)
    prod = [[sum(rows[i][k] * adj[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    assert prod == [[det if i == j else 0 for j in range(n)] for i in range(n)]


def test_rational_rank():
    assert rational_rank([(1, 0), (0, 1), (1, 1)]) == 2
    assert rational_rank([(2, 4), (1, 2)]) == 1
    assert rational_rank([(0, 0)]) == 0


def test_saturation_basis_recovers_full_lattice():
    # span of 2e1, 2e2 saturates to the whole plane lattice
    basis = saturation_basis([(2, 0), (0, 2)])
    assert abs(det_int([list(b) for b in basis])) == 1


def test_saturation_basis_of_sublattice():
    basis = saturation_basis([(1, 1, 0), (0, 2, 2)])
    assert len(basis) == 2
    # both generators must have integral coordinates in the basis
    for v in [(1, 1, 0), (0, 1, 1)]:
        coords = coordinates_in_lattice_basis(basis, v)
        assert all(isinstance(c, int) for c in coords)


def test_coordinates_round_trip():
    basis = saturation_basis([(1, 2, 3), (0, 1, 1)])
    v = tuple(2 * a - 5 * b for a, b in zip(basis[0], basis[1]))
    coords = coordinates_in_lattice_basis(basis, v)
    rebuilt = [sum(c * b[i] for c, b in zip(coords, basis)) for i in range(3)]
    assert tuple(rebuilt) == v


def test_matroid_components():
    # independent rows share no circuit, so they split into singletons
    rows = [(1, 0, 0), (1, 1, 0), (0, 0, 1)]
    assert matroid_components(rows) == [(0,), (1,), (2,)]
    # a circuit in the first block keeps it together
    rows = [(1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 0, 1)]
    assert matroid_components(rows) == [(0, 1, 2), (3,)]
    rows = [(1, 0), (0, 1), (1, 1)]
    assert matroid_components(rows) == [(0, 1, 2)]


def test_all_circuits_uniform():
    rows = [(1, 0), (0, 1), (1, 1)]
    assert all_circuits(rows) == [frozenset({0, 1, 2})]
    rows = [(1, 0), (2, 0)]
    assert all_circuits(rows) == [frozenset({0, 1})]
