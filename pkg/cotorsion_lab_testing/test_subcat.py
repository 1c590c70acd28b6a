import pytest

from cotorsion_lab.exception import ArgumentMismatchError, ExpressionError
from cotorsion_lab.serialcat import Interval, Obj, parse_obj
from cotorsion_lab.subcat import (SearchBounds, StarNonMembership, Verdict, define_subcategories, enumerate_objs,
                                  everything, find_left_approx, find_right_approx, injectives, parse_expression,
                                  projectives, referenced_names, star_member, subcat_in_star, zero)


def test_expressions_resolve_references(nakayama_ctx):
    values = define_subcategories(nakayama_ctx, {
        "P": "proj()",
        "I": "inj()",
        "PI": "inter(P, I)",
        "R": "rperp(P)",
        "L": "lperp(inj())",
        "X": ["5/4/3", "[4,4]"],
        "Y": "add(X, zero(), [6,6])",
    })
    assert values["PI"].to_list() == ["[1,4]", "[2,5]", "[3,6]"]
    assert len(values["R"]) == 18
    assert len(values["L"]) == 18
    assert values["X"].to_list() == ["[3,5]", "[4,4]"]
    assert values["Y"].to_list() == ["[3,5]", "[4,4]", "[6,6]"]
    assert values["Y"].name == "Y"


def test_expression_errors(nakayama_ctx):
    for definitions in ({"A": "B", "B": "A"}, {"A": "frob(all())"}, {"A": "inter(all())"}, {"A": "C"},
                        {"A": "all("}, {"A": "[1,5]"}, {"A": "proj() proj()"}):
        with pytest.raises((ExpressionError, ArgumentMismatchError)):
            define_subcategories(nakayama_ctx, definitions)


def test_referenced_names():
    assert referenced_names("inter(T, rperp(S), T)") == ["S", "T"]
    assert parse_expression("[3,5]").interval == Interval(3, 5)


def test_subcategory_algebra(nakayama_ctx):
    proj, inj = projectives(nakayama_ctx), injectives(nakayama_ctx)
    assert proj.intersection(inj).issubset(proj)
    assert proj.difference(inj) == [Interval(1, 1), Interval(1, 2), Interval(1, 3)]
    assert zero(nakayama_ctx).contains_obj(Obj())
    assert everything(nakayama_ctx).contains_obj(parse_obj("[3,5]+[3,5]"))
    assert not proj.contains_obj(parse_obj("[1,1]+[4,4]"))


def test_enumeration_bounds():
    objs, truncated = enumerate_objs([Interval(1, 1), Interval(2, 2)], mult=2, terms=2)
    assert len(objs) == 5
    assert truncated
    assert objs[0].dim == 1

    objs, truncated = enumerate_objs([Interval(1, 1), Interval(2, 2)], mult=1)
    assert [str(obj) for obj in objs] == ["[1,1]", "[2,2]", "[1,1]+[2,2]"]
    assert not truncated


def test_search_bounds_must_be_positive():
    with pytest.raises(ArgumentMismatchError):
        SearchBounds(mult=0)


def test_verdicts_refuse_truthiness():
    with pytest.raises(TypeError):
        bool(Verdict.holds())


def test_projective_cover_is_a_left_approximation(nakayama_ctx):
    verdict = find_left_approx(Interval(5, 5), projectives(nakayama_ctx), everything(nakayama_ctx))
    assert verdict.is_holds
    assert verdict.witness.middle == parse_obj("[2,5]")
    assert verdict.witness.first == parse_obj("[2,4]")


def test_missing_approximation_is_exhaustive(nakayama_ctx):
    proj = projectives(nakayama_ctx)
    verdict = find_right_approx(Interval(2, 2), proj, proj)
    assert verdict.is_unknown
    assert verdict.exhaustive
    assert verdict.is_definitive


def test_star_membership(nakayama_ctx):
    ctx = nakayama_ctx
    x = define_subcategories(ctx, {"X": ["[3,3]"], "Y": ["[4,5]"]})
    holds = star_member(Obj([Interval(3, 5)]), x["X"], x["Y"])
    assert holds.is_holds
    assert holds.witness.first == parse_obj("[3,3]")
    assert holds.witness.third == parse_obj("[4,5]")

    fails = star_member(Obj([Interval(3, 5)]), x["Y"], x["X"])
    assert fails.is_fails
    assert isinstance(fails.certificate, StarNonMembership)
    assert fails.certificate.to_dict()["kind"] == "star_non_membership"


def test_star_inclusion_reports_the_first_counterexample(twins):
    tp = twins["twin_not_integral"]
    verdict = subcat_in_star(tp.u, tp.s, tp.t)
    assert verdict.is_fails
    assert verdict.details["counterexample"] == Interval(4, 5)
    assert subcat_in_star(tp.s, tp.s, tp.t).is_holds
