import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cotorsion_lab.exception import ArgumentMismatchError, ExpressionError, PresentationError, ValidationError
from cotorsion_lab.repcore import PrimeField, QuiverPresentation, compose
from cotorsion_lab.serialcat import (Conflation, Interval, Obj, ObjMorphism, category_from_dict, generate,
                                     parse_interval, parse_obj)


CTX = generate(QuiverPresentation(6, [(1, 5), (2, 6)]))

small_objs = st.lists(st.sampled_from(CTX.indecomposables), min_size=1, max_size=2).map(Obj)


@st.composite
def morphisms(draw, source, target):
    mask = ObjMorphism.hom_mask(CTX, source, target)
    values = np.zeros(mask.shape, dtype=np.int64)
    for j, i in zip(*np.nonzero(mask)):
        values[j, i] = draw(st.integers(0, CTX.field.p - 1))

    return ObjMorphism(CTX, source, target, CTX.field.matrix(values.reshape(mask.shape)))


def test_census_of_the_six_vertex_algebra():
    assert CTX.census == {"indecomposables": 18, "projectives": 6, "injectives": 6, "projective_injectives": 3}
    assert Interval(1, 5) not in CTX.indecomposables
    assert Interval(2, 5) in CTX.projectives & CTX.injectives


def test_closed_forms_agree_with_brute_force():
    assert CTX.validate() is CTX


def test_closed_forms_agree_in_odd_characteristic():
    generate(QuiverPresentation(4, [(1, 3)]), PrimeField(3), validate=True)


def test_hom_closed_form():
    assert CTX.hom_dim(Interval(3, 4), Interval(3, 5)) == 1
    assert CTX.hom_dim(Interval(3, 5), Interval(3, 4)) == 0
    assert CTX.hom_dim(Interval(4, 4), Interval(3, 5)) == 0
    assert CTX.hom_dim(Interval(3, 4), Interval(4, 4)) == 1


def test_syzygies_and_cosyzygies():
    assert CTX.projective_cover(5) == Interval(2, 5)
    assert CTX.syzygy(Interval(5, 5)) == Interval(2, 4)
    assert CTX.syzygy(Interval(2, 5)) is None
    assert CTX.cosyzygy(Interval(3, 4)) == Interval(5, 6)


def test_composition_constants():
    assert CTX.compose_constant(Interval(3, 4), Interval(3, 5), Interval(4, 5)) == 1
    assert CTX.compose_constant(Interval(1, 2), Interval(1, 3), Interval(3, 4)) == 0
    assert not CTX.factors_through(Interval(1, 2), Interval(1, 3), Interval(3, 4))


def test_nonsplit_extensions_are_exact():
    for x in CTX.indecomposables:
        for y in CTX.indecomposables:
            if not CTX.ext_dim(x, y):
                continue

            conflation = Conflation(*CTX.nonsplit_extension(x, y)).validate()
            assert conflation.first == Obj([y])
            assert conflation.third == Obj([x])
            assert conflation.middle != Obj([x, y])


def test_extension_middles_list_the_split_one_first():
    middles = CTX.extensions(Interval(4, 4), Interval(3, 3))
    assert middles == [parse_obj("[3,3]+[4,4]"), parse_obj("[3,4]")]


def test_nonsplit_extension_refuses_vanishing_ext():
    with pytest.raises(ArgumentMismatchError):
        CTX.nonsplit_extension(Interval(3, 3), Interval(4, 4))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_composition_agrees_with_realisations(data):
    first, middle, last = (data.draw(small_objs) for _ in range(3))
    f = data.draw(morphisms(first, middle))
    g = data.draw(morphisms(middle, last))
    assert g.compose(f).realize() == compose(g.realize(), f.realize())


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_canonical_coordinates_are_read_back(data):
    source, target = data.draw(small_objs), data.draw(small_objs)
    f = data.draw(morphisms(source, target))
    assert ObjMorphism.from_morphism(CTX, source, target, f.realize()) == f


def test_realised_morphisms_are_natural():
    f = ObjMorphism.from_integers(CTX, parse_obj("[3,4]"), parse_obj("[3,5]+[4,4]"), [[1], [1]])
    f.realize().validate()


def test_coefficients_off_the_hom_support_are_rejected():
    with pytest.raises(ValidationError):
        ObjMorphism.from_integers(CTX, parse_obj("[3,5]"), parse_obj("[3,4]"), [[1]])


def test_interval_notation():
    assert parse_interval("5/4/3") == Interval(3, 5)
    assert parse_interval("[ 2 , 6 ]") == Interval(2, 6)
    assert Interval(3, 5).stacked() == "5/4/3"
    assert str(parse_obj("[4,4] ⊕ [3,5]")) == "[3,5]+[4,4]"
    assert parse_obj("0").is_zero

    for text in ("[4,3]", "5/3", "x"):
        with pytest.raises(ExpressionError):
            parse_interval(text)


def test_objects_sort_by_dimension_first():
    assert parse_obj("[4,4]+[5,5]") < parse_obj("[1,3]")
    assert sorted([parse_obj("[1,3]"), parse_obj("[6,6]")])[0] == parse_obj("[6,6]")


def test_category_files():
    assert category_from_dict(CTX.to_dict()).same_as(CTX)

    with pytest.raises(PresentationError):
        category_from_dict({"kind": "gentle", "n": 3})

    with pytest.raises(PresentationError):
        category_from_dict({"kind": "nakayama_linear"})


def test_canonical_composition():
    assert CTX.compose_canonical(Interval(3, 4), Interval(3, 5), Interval(4, 5)) == 1
    assert CTX.compose_canonical(Interval(3, 3), Interval(3, 4), Interval(4, 4)) == 0
    assert CTX.compose_canonical(Interval(3, 5), Interval(3, 5), Interval(4, 5)) == 1
    with pytest.raises(ArgumentMismatchError):
        CTX.compose_canonical(Interval(3, 5), Interval(3, 4), Interval(3, 4))


def test_canonical_composition_is_associative():
    ids = CTX.indecomposables
    for x in ids:
        for y in ids:
            if not CTX.hom_dim(x, y):
                continue

            for z in ids:
                if not CTX.hom_dim(y, z):
                    continue

                for w in ids:
                    if not CTX.hom_dim(z, w):
                        continue

                    left = CTX.compose_constant(x, y, z) * CTX.compose_constant(x, z, w)
                    right = CTX.compose_constant(y, z, w) * CTX.compose_constant(x, y, w)
                    assert left == right


def test_extension_groups():
    assert CTX.ext_dim(Interval(4, 5), Interval(3, 3)) == 1
    assert CTX.ext_dim(Interval(3, 4), Interval(3, 4)) == 0
    assert CTX.extensions(Interval(4, 5), Interval(3, 3)) == [parse_obj("[3,3]+[4,5]"), parse_obj("[3,5]")]

    for x in CTX.projectives & CTX.injectives:
        for y in CTX.indecomposables:
            assert CTX.ext_dim(x, y) == 0
            assert CTX.ext_dim(y, x) == 0


def test_identify_inverts_realize():
    middle = CTX.realize(parse_obj("[3,5]"))
    assert CTX.identify(middle) == parse_obj("[3,5]")
    assert CTX.realize(Obj()).is_zero
    assert CTX.identify(CTX.realize(parse_obj("[1,4]+[3,3]+[3,3]"))) == parse_obj("[1,4]+[3,3]+[3,3]")
