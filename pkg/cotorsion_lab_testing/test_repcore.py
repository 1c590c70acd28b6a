import os

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cotorsion_lab.contexts import decomposition_seed_as, fitting_attempts_as, idempotent_search_cap_as
from cotorsion_lab.exception import DecompositionInconclusive, EnumerationRefused, PresentationError, ValidationError
from cotorsion_lab.repcore import (PrimeField, QuiverPresentation, compose, decompose, direct_sum, ext_dimension,
                                   glued_extensions, hom_space, identity, image_factorisation, interval_module, inverse,
                                   kernel, submodules, zero_module)
from cotorsion_lab.serialcat import Interval, Obj, ObjMorphism, generate, parse_obj
from cotorsion_lab.subcat import enumerate_objs


CTX = generate(QuiverPresentation(6, [(1, 5), (2, 6)]))


objs = st.lists(st.sampled_from(CTX.indecomposables), min_size=1, max_size=3).map(Obj)


@st.composite
def invertible(draw, field, size):
    """Product of elementary row additions, hence invertible"""
    matrix = field.identity(size)
    if size < 2:
        return matrix

    pairs = st.tuples(st.integers(0, size - 1), st.integers(0, size - 1)).filter(lambda p: p[0] != p[1])
    for i, j in draw(st.lists(pairs, max_size=6)):
        matrix[i, :] = matrix[i, :] + matrix[j, :]

    return matrix


@st.composite
def disguised(draw):
    """An object together with its realisation in a randomly changed basis"""
    obj = draw(objs)
    module = CTX.realize(obj)
    isos = [draw(invertible(CTX.field, d)) for d in module.dims]
    transported, _ = module.transport(isos)
    return obj, transported


def test_field_rejects_non_primes():
    with pytest.raises(PresentationError):
        PrimeField(4)

    with pytest.raises(PresentationError):
        PrimeField(101)


def test_presentation_drops_implied_relations():
    presentation = QuiverPresentation(6, [(1, 5), (2, 6), (1, 6)])
    assert presentation.relations == ((1, 5), (2, 6))


def test_presentation_rejects_short_relations():
    with pytest.raises(PresentationError):
        QuiverPresentation(4, [(2, 3)])


def test_interval_module_respects_relations():
    with pytest.raises(ValidationError):
        interval_module(CTX.presentation, CTX.field, 1, 5)


@settings(max_examples=40, deadline=None)
@given(disguised())
def test_serial_decomposition_recovers_summands(case):
    obj, module = case
    decomposition = decompose(module)
    assert Obj(decomposition.intervals) == obj
    assert decomposition.isomorphism().is_iso


@settings(max_examples=40, deadline=None)
@given(disguised())
def test_rank_invariant_agrees_with_decomposition(case):
    obj, module = case
    assert CTX.classify(module) == obj


@settings(max_examples=15, deadline=None)
@given(st.lists(st.sampled_from(CTX.indecomposables), min_size=1, max_size=2).map(Obj))
def test_generic_decomposition_matches_serial(obj):
    module = CTX.realize(obj)
    assert decompose(module, method="generic").intervals == decompose(module).intervals


def random_invertible(field, size, rng):
    matrix = field.identity(size)
    for _ in range(2 * size if size > 1 else 0):
        i, j = rng.choice(size, 2, replace=False)
        matrix[i, :] = matrix[i, :] + matrix[j, :]

    return matrix


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("COTORSION_LAB_SLOW"), reason="exhaustive sweep; set COTORSION_LAB_SLOW=1")
def test_every_small_module_decomposes_the_same_both_ways():
    rng = np.random.default_rng(0)
    objs, _ = enumerate_objs(CTX.indecomposables, mult=8, terms=8, dim_cap=8)
    for obj in objs:
        module = CTX.realize(obj)
        disguised_module, _ = module.transport([random_invertible(CTX.field, d, rng) for d in module.dims])
        for method in ("serial", "generic"):
            decomposition = decompose(disguised_module, method=method)
            assert Obj(decomposition.intervals) == obj, (obj, method)
            assert decomposition.isomorphism().is_iso
            for piece in decomposition.pieces:
                assert decompose(piece.embedding.source, method=method).intervals == (piece.interval,)


def test_submodule_count_over_f2():
    module = CTX.realize(parse_obj("[1,2]+[1,1]"))
    assert len(list(submodules(module))) == 7


def test_submodules_of_an_interval_form_a_chain():
    module = CTX.realize(parse_obj("[3,6]"))
    found = sorted(CTX.classify(sub) for sub, _ in submodules(module))
    assert found == [Obj(), parse_obj("[3,3]"), parse_obj("[3,4]"), parse_obj("[3,5]"), parse_obj("[3,6]")]


def test_submodule_enumeration_is_refused_above_the_cap():
    module = CTX.realize(parse_obj("[1,4]+[2,5]"))
    with pytest.raises(EnumerationRefused):
        list(submodules(module, dim_cap=4))


def test_hom_and_ext_between_intervals():
    source = interval_module(CTX.presentation, CTX.field, 3, 4)
    target = interval_module(CTX.presentation, CTX.field, 3, 5)
    assert len(hom_space(source, target)) == 1
    assert len(hom_space(target, source)) == 0
    assert ext_dimension(CTX.realize_interval((4, 4)), CTX.realize_interval((3, 3))) == 1


def test_kernel_of_a_projection():
    total = direct_sum(CTX.presentation, CTX.field, [CTX.realize_interval((1, 2)), CTX.realize_interval((3, 3))])
    module, inclusion = kernel(total.projections[0])
    assert CTX.classify(module) == parse_obj("[3,3]")
    assert inclusion.is_injective


def test_inverse_of_a_base_change():
    module = CTX.realize(parse_obj("[2,4]+[3,4]"))
    field = CTX.field
    isos = [field.identity(d) for d in module.dims]
    isos[3] = field.matrix([[1, 1], [0, 1]])
    transported, iso = module.transport(isos)
    assert compose(inverse(iso), iso) == identity(module)
    assert compose(iso, inverse(iso)) == identity(transported)
    assert CTX.classify(transported) == parse_obj("[2,4]+[3,4]")


def test_glued_extensions_realise_every_middle_term():
    first, third = CTX.realize_interval((3, 3)), CTX.realize_interval((4, 4))
    middles = set()
    for ses in glued_extensions(first, third):
        ses.validate()
        middles.add(CTX.classify(ses.inflation.target))

    assert middles == set(CTX.extensions(Interval(4, 4), Interval(3, 3)))


def test_image_factorisation():
    f = ObjMorphism.canonical(CTX, Interval(3, 5), Interval(4, 6)).realize()
    image, epi, mono = image_factorisation(f)
    assert CTX.classify(image) == parse_obj("[4,5]")
    assert epi.is_surjective and mono.is_injective
    assert compose(mono, epi) == f


def test_zero_module():
    module = zero_module(CTX.presentation, CTX.field)
    assert module.is_zero
    assert CTX.classify(module) == Obj()


def test_generic_decomposition_respects_the_seed():
    module = CTX.realize(parse_obj("[2,4]+[3,4]+[4,4]"))
    with decomposition_seed_as(7):
        assert decompose(module, method="generic").intervals == decompose(module).intervals


def test_exhaustive_idempotent_search():
    module = CTX.realize(parse_obj("[3,4]+[4,4]"))
    with fitting_attempts_as(0):
        assert Obj(decompose(module, method="generic").intervals) == parse_obj("[3,4]+[4,4]")

        with idempotent_search_cap_as(1):
            with pytest.raises(DecompositionInconclusive) as info:
                decompose(module, method="generic")

    assert info.value.end_dim == 3
