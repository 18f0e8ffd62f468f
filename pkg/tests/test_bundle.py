import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagbundle.bundle import (
    FlagBundleModel,
    degree_identity_holds,
    dim_GP,
    fundamental_section_degrees,
    fundamental_sections,
    homogeneity_inequality_1,
    homogeneity_inequality_2,
    is_minimal_section,
    isomorphic,
    minimal_sections,
    normalize_to_dominant,
    rel_canonical_decomposition,
    restricted_tag,
    restricted_trivial,
    tag,
    unsplit_tag_solutions,
)
from flagbundle.diagrams import all_diagrams, parse_diagram
from flagbundle.errors import ComponentMissesIError, DiagramMismatchError, LatticeError
from flagbundle.lattice import adjoint, simply_connected
from flagbundle.reference import weyl_order
from flagbundle.rootsys import b_coefficients, generate
from flagbundle.weyl import (
    act_on_coweight,
    act_on_root,
    enumerate_elements,
    identity,
    multiply,
    simple_reflection,
)

A1, A2, A3 = (parse_diagram(s) for s in ("A1", "A2", "A3"))


def model(spec, theta, lat="adjoint"):
    d = parse_diagram(spec)
    return FlagBundleModel(d, adjoint(d) if lat == "adjoint" else simply_connected(d), theta)


def test_normalize_examples():
    dom, w = normalize_to_dominant(A1, (-4,))
    assert dom == (4,) and w == simple_reflection(generate(A1), 1)
    dom, w = normalize_to_dominant(A2, (2, 5))
    assert dom == (2, 5) and w.length == 0


@pytest.mark.parametrize("spec,raw", [("A2", (-1, 3)), ("B3", (3, -2, -1)), ("G2", (-5, 1)), ("C3", (-1, -1, 4))])
def test_normalize_against_orbit_oracle(spec, raw):
    d = parse_diagram(spec)
    rs = generate(d)
    orbit = {act_on_coweight(w, raw) for w in enumerate_elements(rs)}
    dominant = [v for v in orbit if min(v) >= 0]
    assert len(dominant) == 1
    dom, w = normalize_to_dominant(d, raw)
    assert dom == dominant[0]
    assert act_on_coweight(w, raw) == dom


def test_tag_examples():
    assert tag(model("A1", (7,))) == (7,)
    assert tag(model("A2", (0, 0))) == (0, 0)
    assert tag(model("A2", (1, 2))) == (1, 2)


def test_model_validation():
    with pytest.raises(LatticeError):
        model("A1", (1,), lat="sc")
    with pytest.raises(LatticeError):
        model("A2", (-1, 2))
    with pytest.raises(DiagramMismatchError):
        FlagBundleModel(A2, adjoint(A3), (0, 0))


def test_section_degree_examples():
    rs = generate(A2)
    m = model("A2", (1, 2))
    assert fundamental_section_degrees(m, identity(rs)).degrees == (1, 2)
    assert fundamental_section_degrees(m, simple_reflection(rs, 1)).degrees == (-1, 3)
    m1 = model("A1", (4,))
    assert fundamental_section_degrees(m1, simple_reflection(generate(A1), 1)).degrees == (-4,)


def test_minimality_examples():
    rs1 = generate(A1)
    m = model("A1", (1,))
    assert is_minimal_section(fundamental_section_degrees(m, identity(rs1)))
    assert not is_minimal_section(fundamental_section_degrees(m, simple_reflection(rs1, 1)))
    assert len(minimal_sections(model("A2", (0, 0)))) == 6


@pytest.mark.parametrize("spec,theta", [("A2", (1, 0)), ("A3", (0, 2, 0)), ("B3", (1, 0, 0)), ("G2", (0, 3)),
                                        ("C3", (0, 0, 0))])
def test_degenerate_minimal_sections_form_stabilizer(spec, theta):
    m = model(spec, theta)
    rs = generate(m.diagram)
    stab = {w for w in enumerate_elements(rs) if act_on_coweight(w, theta) == theta}
    found = {sd.w for sd in minimal_sections(m)}
    assert found == stab


def test_isomorphic_examples():
    m = model("A2", (1, 2))
    assert isomorphic(m, m)
    assert not isomorphic(model("A1", (1,)), model("A1", (2,)))
    with pytest.raises(DiagramMismatchError):
        isomorphic(model("A1", (1,)), model("A2", (1, 1)))


@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.data())
def test_isomorphism_invariant_under_weyl_action(spec, data):
    d = parse_diagram(spec)
    rs = generate(d)
    raw = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=d.rank, max_size=d.rank)))
    w = data.draw(st.sampled_from(enumerate_elements(rs)))
    moved = act_on_coweight(w, raw)
    lat = adjoint(d)
    assert isomorphic(FlagBundleModel.from_raw(d, lat, raw), FlagBundleModel.from_raw(d, lat, moved))


@pytest.mark.parametrize("d", [d for d in all_diagrams(4) if weyl_order(d) <= 1152], ids=str)
def test_section_sweep(d):
    rs = generate(d)
    elements = enumerate_elements(rs)
    index = {w: n for n, w in enumerate(elements)}
    theta = tuple(range(1, d.rank + 1))
    m = FlagBundleModel(d, adjoint(d), theta)
    sections = fundamental_sections(m)
    assert len(sections) == len({sd.w for sd in sections}) == weyl_order(d)
    for sd in sections:
        for t in range(d.rank):
            partner = sections[index[multiply(rs, sd.w, simple_reflection(rs, t + 1))]]
            assert partner.degrees[t] == -sd.degrees[t]
            alpha = tuple(int(j == t) for j in range(d.rank))
            assert (sd.degrees[t] >= 0) == rs.is_positive_root(act_on_root(sd.w, alpha))
    minimal = [sd for sd in sections if is_minimal_section(sd)]
    assert len(minimal) == 1 and minimal[0].w.length == 0


def test_rel_canonical_examples():
    assert rel_canonical_decomposition(A3, {2}) == (2, 4, 2)
    assert rel_canonical_decomposition(A3, {1, 2, 3}) == b_coefficients(A3)
    assert rel_canonical_decomposition(A2, {1}) == (2, 1)


def test_dim_examples():
    assert dim_GP(A3, {2}) == 4
    assert dim_GP(A3, set()) == 0
    assert dim_GP(A3, {1, 2, 3}) == 6


def test_degree_identity_examples():
    assert degree_identity_holds(A2, {1}, (1, 0))
    assert degree_identity_holds(A2, {1}, (0, 2))
    assert not degree_identity_holds(A2, {1}, (1, 1))
    assert not degree_identity_holds(A3, {2}, (0, 0, 0))


def _brute_unsplit(d, I):
    k = d.rank
    top = dim_GP(d, I)
    out = []
    for t in itertools.product(range(top + 1), repeat=k):
        if all(t[i - 1] >= 1 for i in I) and degree_identity_holds(d, I, t):
            out.append(t)
    return sorted(out)


def test_unsplit_examples():
    assert unsplit_tag_solutions(A2, {1}) == [(1, 0)]
    assert unsplit_tag_solutions(A3, {2}) == [(0, 1, 0)]
    assert unsplit_tag_solutions(A2, {1, 2}) == []
    with pytest.raises(ComponentMissesIError):
        unsplit_tag_solutions(parse_diagram("A1+A1"), {1})


@pytest.mark.parametrize("spec", ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1+A2", "A1+A1", "B2+A1"])
def test_unsplit_matches_brute_force(spec):
    d = parse_diagram(spec)
    for size in range(1, d.rank + 1):
        for I in itertools.combinations(range(1, d.rank + 1), size):
            if any(not set(I) & set(b) for b in d.blocks):
                continue
            sols = unsplit_tag_solutions(d, I)
            assert sols == _brute_unsplit(d, I)
            assert all(restricted_trivial(t, I) for t in sols)


def test_homogeneity_examples():
    assert homogeneity_inequality_2(A3, {2})
    assert homogeneity_inequality_1(A2, {1})
    assert homogeneity_inequality_1(A3, {1, 2, 3})
    with pytest.raises(ComponentMissesIError):
        homogeneity_inequality_1(parse_diagram("A2+A1"), {1})


def test_restricted_trivial_examples():
    assert restricted_trivial((1, 0), {1})
    assert not restricted_trivial((1, 1), {1})
    assert restricted_trivial((0, 0, 0), {2})
    assert restricted_tag((3, 0, 5), {2}) == (3, 5)
