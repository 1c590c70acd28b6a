from cotorsion_lab.heartcat import (EPI, BadSquare, NonIntegralCertificate, check_integral, containment_route,
                                    enum_epi_triangles, enum_mono_triangles, epi_triangle_for, mono_triangle_for,
                                    probe_integral_direct, probe_right_integral)
from cotorsion_lab.serialcat import Interval, Obj, parse_obj
from cotorsion_lab.subcat import SearchBounds, Verdict


def test_epi_conflation_onto_an_object_outside_h(not_integral):
    verdict = epi_triangle_for(not_integral, Interval(4, 5))
    assert verdict.is_holds
    triangle = verdict.witness.validate(not_integral)
    assert triangle.variant == EPI
    assert triangle.end_term == Obj([Interval(4, 5)])
    assert triangle.conflation.middle == parse_obj("[3,5]+[4,4]")
    assert triangle.conflation.first == parse_obj("[3,4]")


def test_no_conflations_outside_the_class(not_integral):
    verdict = mono_triangle_for(not_integral, Interval(4, 5))
    assert verdict.is_unknown
    assert verdict.exhaustive


def test_trivial_conflations_come_first(not_integral):
    first = next(enum_epi_triangles(not_integral))
    assert first.conflation.third.is_zero
    assert first.validate(not_integral).variant == EPI

    first = next(enum_mono_triangles(not_integral))
    assert first.conflation.first.is_zero
    first.validate(not_integral)


def test_zero_heart_is_integral(zero_heart):
    verdict = check_integral(zero_heart)
    assert verdict.is_holds
    assert verdict.route == "zero heart"


def test_semisimple_heart_is_integral(abelian):
    verdict = check_integral(abelian)
    assert verdict.is_holds
    assert verdict.route == "abelian: semisimple"
    assert verdict.details["U in S*T"].is_fails
    assert verdict.details["T in U*V"].is_fails


def test_non_integral_heart_is_certified(not_integral):
    verdict = check_integral(not_integral)
    assert verdict.is_fails
    assert verdict.route == "main certificate"

    certificate = verdict.certificate
    assert isinstance(certificate, NonIntegralCertificate)
    assert certificate.z == parse_obj("[3,5]")
    assert certificate.conflation.first == parse_obj("[3,3]")
    assert certificate.conflation.third == parse_obj("[4,5]")
    assert certificate.offending == Interval(3, 5)
    assert certificate.validate(not_integral) is certificate


def test_pullback_probe_finds_a_bad_square(not_integral):
    verdict = probe_integral_direct(not_integral, SearchBounds(mult=1))
    assert verdict.is_fails
    square = verdict.certificate
    assert isinstance(square, BadSquare)
    assert square.side == "left"
    assert verdict.details["squares"] >= 1


def test_probes_find_nothing_in_a_semisimple_heart(abelian):
    bounds = SearchBounds(mult=1)
    for probe in (probe_integral_direct, probe_right_integral):
        verdict = probe(abelian, bounds)
        assert verdict.is_unknown
        assert verdict.details["objects"] == 1


def test_containment_settles_integrality(not_abelian):
    verdict = containment_route(not_abelian)
    assert verdict.is_holds
    assert verdict.route == "epi.U inside S + W"


def test_containment_does_not_apply(not_integral, abelian):
    assert containment_route(not_integral) is None
    assert containment_route(abelian) is None


def test_containment_comes_before_the_certificate_search(not_abelian, monkeypatch):
    from cotorsion_lab.heartcat import integral

    monkeypatch.setattr(integral, "subcat_in_star", lambda a, x, y, bounds: Verdict.unknown(bounds=bounds))
    verdict = check_integral(not_abelian)
    assert verdict.is_holds
    assert verdict.route == "epi.U inside S + W"
