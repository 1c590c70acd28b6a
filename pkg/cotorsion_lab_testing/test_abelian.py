import pytest

from cotorsion_lab.fixtures import TWIN_FIXTURES, expected
from cotorsion_lab.heartcat import (NonAbelianCertificate, abelian_holds_route, check_abelian, check_integral,
                                    compare_hearts, epi_triangle_for)
from cotorsion_lab.serialcat import Interval
from cotorsion_lab.subcat import DEFAULT_BOUNDS


def test_zero_heart_is_abelian(zero_heart):
    verdict = check_abelian(zero_heart)
    assert verdict.is_holds
    assert verdict.route == "zero heart"


def test_semisimple_heart_is_abelian(abelian):
    verdict = check_abelian(abelian)
    assert verdict.is_holds
    assert verdict.route == "semisimple"
    assert verdict.witness == Interval(3, 5)
    assert verdict.details["condition_1"].holds


def test_heart_comparison_separates_the_hearts(not_abelian):
    comparison = compare_hearts(not_abelian)
    assert comparison.outside_st_heart == [Interval(4, 4), Interval(4, 5)]
    assert not comparison.holds
    assert comparison.to_dict()["outside_st_heart"] == ["[4,4]", "[4,5]"]
    assert abelian_holds_route(not_abelian, DEFAULT_BOUNDS) is None


def test_first_condition_refutes_abelianness(not_abelian):
    verdict = check_abelian(not_abelian)
    assert verdict.is_fails
    assert verdict.route == "condition 1"

    certificate = verdict.certificate
    assert isinstance(certificate, NonAbelianCertificate)
    assert certificate.witness == Interval(4, 4)
    assert certificate.side == "outside_st_heart"
    certificate.validate(not_abelian)

    for number in (2, 3):
        condition = verdict.details["condition_{}".format(number)]
        assert condition["checked"] == 0
        assert condition["counterexample"] is None


def test_epi_conflation_outside_s_plus_w(not_integral):
    verdict = check_abelian(not_integral)
    assert verdict.is_fails
    assert verdict.route in ("condition 1", "condition 2")
    assert verdict.details["condition_2"]["counterexample"] == "[4,5]"
    verdict.certificate.validate(not_integral)


def test_epi_conflation_certifies_the_second_condition(not_integral):
    triangle = epi_triangle_for(not_integral, Interval(4, 5)).witness
    certificate = NonAbelianCertificate(2, triangle, None)
    assert certificate.validate(not_integral) is certificate
    assert certificate.to_dict()["witness"]["variant"] == "epi"


@pytest.mark.parametrize("name", TWIN_FIXTURES)
def test_fixture_verdicts(hearts, name):
    heart = hearts(name)
    assert check_integral(heart).kind.value == expected(name)["integral"]
    assert check_abelian(heart).kind.value == expected(name)["abelian"]


def test_integral_but_not_abelian(not_abelian):
    integral = check_integral(not_abelian)
    assert integral.is_holds
    assert integral.route == "U in S*T"
    assert check_abelian(not_abelian).is_fails
