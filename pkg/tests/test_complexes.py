from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from etacalc.complexes import (
    ClosureError,
    GenPoly,
    InputError,
    SimplicialComplex,
    face_dim,
    make_face,
)


def test_make_face_sorts_and_rejects_junk():
    assert make_face([3, 1, 2]) == (1, 2, 3)
    assert face_dim((1, 2, 3)) == 2
    with pytest.raises(InputError):
        make_face([])
    with pytest.raises(InputError):
        make_face([1, 1, 2])


def test_closure_generates_all_subsets():
    k = SimplicialComplex.closure([[1, 2, 3]])
    assert set(k.faces) == {
        (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3),
    }
    assert k.f_vector() == (3, 3, 1)


def test_validate_rejects_open_set():
    with pytest.raises(ClosureError):
        SimplicialComplex.validate([[1], [2], [1, 2, 3]])


def test_canonical_face_order_is_dim_then_lex():
    k = SimplicialComplex.closure([[2, 3], [1, 2]])
    assert k.faces == ((1,), (2,), (3,), (1, 2), (2, 3))


def test_house_counts(house):
    assert house.f_vector() == (5, 6, 1)
    assert house.euler_characteristic() == 0
    assert house.fermi_characteristic() == 1
    assert house.facets() == ((1, 2), (1, 4), (3, 4), (2, 3, 5))


def test_empty_complex():
    k = SimplicialComplex.empty()
    assert len(k) == 0
    assert k.f_vector() == ()
    assert k.euler_characteristic() == 0
    assert k.fermi_characteristic() == 1


def test_fermi_is_product_of_dimension_signs(house, double_pyramid):
    for k in (house, double_pyramid):
        prod = 1
        for f in k.faces:
            prod *= (-1) ** face_dim(f)
        assert k.fermi_characteristic() == prod


def test_json_roundtrip(house):
    again = SimplicialComplex.from_json(house.to_json())
    assert again == house


def test_json_facets_key_takes_closure():
    k = SimplicialComplex.from_json('{"facets": [[1, 2, 3]]}')
    assert len(k) == 7
    with pytest.raises(InputError):
        SimplicialComplex.from_json("[1, 2]")
    with pytest.raises(ClosureError):
        SimplicialComplex.from_json('{"faces": [[1, 2]]}')


def test_generating_function_values(house):
    f = house.generating_function()
    # f(x) = 5x + 6x^2 + x^3, so f(1) counts all faces
    assert f(1) == 12
    assert f(-1) == -house.euler_characteristic()
    fr = house.generating_function(reduced=True)
    assert fr(0) == 1
    assert fr(-1) == 1 - house.euler_characteristic()


def test_genpoly_calculus():
    p = GenPoly([1, 5, 6, 1])
    assert p.derivative()(0) == 5
    assert p.derivative()(-1) == 5 - 12 + 3
    q = p.derivative().antiderivative()
    # antiderivative drops the constant term
    assert q(2) == p(2) - 1
    assert p(Fraction(1, 2)) == Fraction(1) + Fraction(5, 2) + Fraction(6, 4) + Fraction(1, 8)


def test_genpoly_product_matches_convolution():
    p = GenPoly([1, 2])
    q = GenPoly([3, 0, 1])
    r = p * q
    for x in (-2, -1, 0, 1, 3):
        assert r(x) == p(x) * q(x)


@st.composite
def facet_lists(draw):
    n_facets = draw(st.integers(1, 4))
    return [
        draw(st.lists(st.integers(1, 7), min_size=1, max_size=4, unique=True))
        for _ in range(n_facets)
    ]


@settings(max_examples=60, deadline=None)
@given(facet_lists())
def test_closure_is_idempotent_and_closed(facets):
    k = SimplicialComplex.closure(facets)
    assert SimplicialComplex.closure(k.faces) == k
    # every non-empty proper subset of a face is a face
    faces = set(k.faces)
    for f in faces:
        for drop in range(len(f)):
            sub = f[:drop] + f[drop + 1:]
            if sub:
                assert sub in faces


@settings(max_examples=60, deadline=None)
@given(facet_lists())
def test_euler_characteristic_equals_gen_fn_difference(facets):
    k = SimplicialComplex.closure(facets)
    f = k.generating_function()
    assert k.euler_characteristic() == f(0) - f(-1)
