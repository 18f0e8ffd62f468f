import pytest

from flagbundle.diagrams import (
    DynkinDiagram,
    all_diagrams,
    canonical_diagram,
    cartan_matrix,
    check_cartan,
    classify_cartan,
    determinant,
    parse_diagram,
)
from flagbundle.errors import InvalidDiagramError, NotACartanMatrixError
from flagbundle.rootsys import b_coefficients


def test_parse_single():
    d = parse_diagram("A3")
    assert d.components == (("A", 3),)
    assert d.rank == 3


def test_parse_product_and_case():
    d = parse_diagram("a1+G2")
    assert d.components == (("A", 1), ("G", 2))
    assert d.rank == 3
    assert d.blocks == ((1,), (2, 3))


@pytest.mark.parametrize("spec", ["E9", "E5", "F3", "G3", "D2", "A0", "A", "X2", "A2+", "A2 +B2", ""])
def test_parse_rejects(spec):
    with pytest.raises(InvalidDiagramError):
        parse_diagram(spec)


def test_cartan_small_cases():
    assert cartan_matrix(parse_diagram("A2")) == ((2, -1), (-1, 2))
    assert cartan_matrix(parse_diagram("A1+A1")) == ((2, 0), (0, 2))


def test_g2_orientation_matches_b_vector():
    assert cartan_matrix(parse_diagram("G2")) == ((2, -1), (-3, 2))
    assert b_coefficients(parse_diagram("G2")) == (10, 6)


def test_classify_identity():
    d, perm = classify_cartan([[2, -1], [-1, 2]])
    assert d == parse_diagram("A2")
    assert perm == (0, 1)


def test_classify_swapped_g2():
    d, perm = classify_cartan([[2, -3], [-1, 2]])
    assert d == parse_diagram("G2")
    assert perm == (1, 0)


@pytest.mark.parametrize(
    "m",
    [
        [[2, -2], [-2, 2]],  # singular (affine A1)
        [[2, 1], [1, 2]],
        [[2, -1], [0, 2]],
        [[3, -1], [-1, 2]],
        [[2, -4], [-1, 2]],
        [[2, -1, 0], [-1, 2, -1], [-1, -1, 2]],  # asymmetric zero pattern
        [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],  # cycle, singular
        [[2, -1], [-1]],
    ],
)
def test_classify_rejects(m):
    with pytest.raises(NotACartanMatrixError):
        classify_cartan(m)


def test_classify_rejects_indefinite_tree():
    # E8 with its long arm extended twice: T_{2,3,7}, determinant -1, not finite type
    c = [list(r) + [0, 0] for r in cartan_matrix(parse_diagram("E8"))] + [[0] * 10, [0] * 10]
    c[8][8] = c[9][9] = 2
    c[7][8] = c[8][7] = c[8][9] = c[9][8] = -1
    assert determinant(c) == -1
    with pytest.raises(NotACartanMatrixError):
        classify_cartan(c)


def test_cartan_invariants_exhaustive():
    diagrams = all_diagrams(8)
    for d in diagrams:
        c = check_cartan(cartan_matrix(d))
        assert len(c) == d.rank
        assert determinant(c) != 0


def test_classify_round_trip_products():
    for d in all_diagrams(5):
        found, perm = classify_cartan(cartan_matrix(d))
        assert found == canonical_diagram(d)
        m = cartan_matrix(d)
        c = cartan_matrix(found)
        assert all(m[perm[i]][perm[j]] == c[i][j] for i in range(d.rank) for j in range(d.rank))


@pytest.mark.parametrize("d", all_diagrams(8, connected_only=True), ids=str)
def test_classify_round_trip_connected_rank8(d):
    assert classify_cartan(cartan_matrix(d))[0] == canonical_diagram(d)


def test_classify_recovers_permuted_product():
    d = parse_diagram("G2+A2+B3")
    m = cartan_matrix(d)
    order = [5, 0, 3, 6, 1, 4, 2]
    shuffled = [[m[order[i]][order[j]] for j in range(7)] for i in range(7)]
    found, perm = classify_cartan(shuffled)
    assert found == parse_diagram("A2+B3+G2")
    c = cartan_matrix(found)
    assert all(shuffled[perm[i]][perm[j]] == c[i][j] for i in range(7) for j in range(7))


def test_low_rank_aliases():
    assert canonical_diagram(parse_diagram("C2")) == parse_diagram("B2")
    assert canonical_diagram(parse_diagram("D3")) == parse_diagram("A3")
    assert canonical_diagram(parse_diagram("B1+C1")) == DynkinDiagram((("A", 1), ("A", 1)))
