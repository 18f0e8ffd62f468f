import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from conftest import rational_solve
from flagbundle.diagrams import all_diagrams, cartan_matrix, determinant, parse_diagram
from flagbundle.errors import LatticeError, RankMismatchError
from flagbundle.lattice import (
    Cocycle,
    IsogenyLattice,
    adjoint,
    admissible_index,
    is_admissible,
    lattice,
    membership,
    simply_connected,
    sl_index_note,
    smith_normal_form,
    solve_integer,
    tag_of,
)

CONNECTED8 = all_diagrams(8, connected_only=True)

int_matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def _mul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@given(int_matrices)
def test_smith_form_decomposition(a):
    diag, u, v = smith_normal_form(a)
    d = _mul(_mul(u, a), v)
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            assert x == (diag[i] if i == j else 0)
    assert abs(sympy.Matrix(u).det()) == 1
    assert abs(sympy.Matrix(v).det()) == 1
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    assert all(nonzero[i + 1] % nonzero[i] == 0 for i in range(len(nonzero) - 1))


@given(int_matrices)
def test_smith_invariants_match_sympy(a):
    diag, _, _ = smith_normal_form(a)
    ref = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    ref_diag = [abs(int(ref[i, i])) for i in range(min(ref.shape))]
    assert sorted(diag) == sorted(ref_diag)


@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n),
            st.lists(st.integers(-20, 20), min_size=n, max_size=n),
        )
    )
)
def test_integer_solve_against_rational_oracle(data):
    a, b = data
    assume(determinant(a) != 0)
    exact = rational_solve(a, b)
    x = solve_integer(a, b)
    if all(q.denominator == 1 for q in exact):
        assert x == [int(q) for q in exact]
    else:
        assert x is None


def test_tag_of_examples():
    a1 = parse_diagram("A1")
    assert tag_of(Cocycle((5,), adjoint(a1))) == (5,)
    a2 = parse_diagram("A2")
    sc = simply_connected(a2)
    col = tuple(cartan_matrix(a2)[i][0] for i in range(2))
    assert col == (2, -1)
    assert tag_of(Cocycle(col, sc)) == (2, -1)
    assert tag_of(Cocycle((0, 0), sc)) == (0, 0)


def test_is_admissible_examples():
    a1 = parse_diagram("A1")
    assert is_admissible((7,), adjoint(a1)) is not None
    assert is_admissible((1,), simply_connected(a1)) is None
    w = is_admissible((2,), simply_connected(a1))
    assert w is not None and w.basis_coords == (1,) and tag_of(w) == (2,)


@given(st.sampled_from(CONNECTED8[:20]), st.data())
def test_adjoint_admits_every_tag(d, data):
    t = tuple(data.draw(st.lists(st.integers(-50, 50), min_size=d.rank, max_size=d.rank)))
    w = is_admissible(t, adjoint(d))
    assert w is not None and tag_of(w) == t


@given(st.sampled_from(CONNECTED8), st.data())
def test_simply_connected_witness_round_trip(d, data):
    t = tuple(data.draw(st.lists(st.integers(-12, 12), min_size=d.rank, max_size=d.rank)))
    lat = simply_connected(d)
    exact = rational_solve(lat.basis, t)
    w = is_admissible(t, lat)
    assert (w is not None) == all(q.denominator == 1 for q in exact)
    if w is not None:
        assert tag_of(w) == t
        assert list(w.basis_coords) == [int(q) for q in exact]


def test_index_examples():
    assert admissible_index(adjoint(parse_diagram("E8"))) == 1
    assert admissible_index(simply_connected(parse_diagram("A1"))) == 2
    assert admissible_index(simply_connected(parse_diagram("A2"))) == 3


@pytest.mark.parametrize("d", all_diagrams(4) + CONNECTED8, ids=str)
def test_sc_index_equals_determinant(d):
    assert admissible_index(simply_connected(d)) == abs(determinant(cartan_matrix(d)))
    assert admissible_index(adjoint(d)) == 1


def test_membership_examples():
    a1 = parse_diagram("A1")
    sc = simply_connected(a1)
    assert membership((2,), sc)
    assert not membership((1,), sc)
    assert membership((12345,), adjoint(a1))
    with pytest.raises(RankMismatchError):
        membership((1, 2), sc)


def test_sl_discrepancy_is_reported():
    for n in range(1, 9):
        d = parse_diagram(f"A{n}")
        note = sl_index_note(d, simply_connected(d))
        assert note["computed_index"] == n + 1
        assert note["quoted_index"] == n
        assert note["agrees"] is False
    assert sl_index_note(parse_diagram("B3"), simply_connected(parse_diagram("B3"))) is None


def test_custom_half_spin_lattice():
    # D4: coroot lattice plus one (non-vector) minuscule coweight, index 2 in P^vee
    d = parse_diagram("D4")
    c = cartan_matrix(d)
    basis = [[c[i][0], c[i][1], c[i][3], 1 if i == 3 else 0] for i in range(4)]
    # fundamental coweight omega_4^vee has coweight coordinates e_4
    lat = lattice(d, basis)
    assert admissible_index(lat) == 2
    assert membership((0, 0, 0, 1), lat)
    assert not membership((1, 0, 0, 0), lat)


def test_custom_lattice_must_contain_coroots():
    d = parse_diagram("A1")
    with pytest.raises(LatticeError):
        IsogenyLattice(d, ((4,),))
    with pytest.raises(LatticeError):
        IsogenyLattice(parse_diagram("A2"), ((1, 0), (0, 0)))
    with pytest.raises(LatticeError):
        lattice(d, "bogus")


def test_cocycle_must_lie_in_lattice():
    with pytest.raises(LatticeError):
        Cocycle((1,), simply_connected(parse_diagram("A1")))
