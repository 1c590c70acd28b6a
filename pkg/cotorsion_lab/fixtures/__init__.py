"""Shipped categories and twin cotorsion pairs

Each twin fixture names its category fixture and lists the heart it must produce, along with its
integral and abelian verdicts; ``validate_fixture`` refuses a fixture whose pair is not a twin cotorsion
pair or whose heart differs from that list.
"""
import os
from logging import getLogger

from ..cli.files import load_category, load_twin, read_json
from ..exception import FixtureValidationError, InputFileError
from ..pairs import compute_hearts, verify_twin
from ..subcat import DEFAULT_BOUNDS

logger = getLogger(__name__)


FIXTURE_DIRECTORY = os.path.dirname(os.path.abspath(__file__))

CATEGORY_FIXTURES = ("nakayama_six",)
TWIN_FIXTURES = ("twin_not_integral", "twin_abelian", "twin_not_abelian", "twin_zero_heart")


def fixture_names():
    return CATEGORY_FIXTURES + TWIN_FIXTURES


def fixture_path(name):
    if name not in fixture_names():
        raise InputFileError("Unknown fixture {!r}; choose from {}".format(name, ", ".join(fixture_names())))

    return os.path.join(FIXTURE_DIRECTORY, name + ".json")


def load_fixture(name):
    return read_json(fixture_path(name))


def fixture_category(name):
    """Category of a category fixture, or of the category a twin fixture refers to"""
    data = load_fixture(name)
    if name in TWIN_FIXTURES:
        data = load_fixture(data["category"])

    return load_category(data)


def fixture_twin(name, ctx=None):
    data = load_fixture(name)
    if name not in TWIN_FIXTURES:
        raise InputFileError("Fixture {!r} holds no twin cotorsion pair".format(name))

    ctx = ctx or fixture_category(name)
    return load_twin(ctx, data)


def expected(name):
    return load_fixture(name).get("expected", {})


def validate_fixture(name, bounds=DEFAULT_BOUNDS, ctx=None):
    """Verify the twin pair and compare its hearts with the lists the fixture carries"""
    tp = fixture_twin(name, ctx)
    verdict = verify_twin(tp, bounds)
    if not verdict.is_holds:
        raise FixtureValidationError("Fixture {} is not a twin cotorsion pair: {!r}".format(name, verdict))

    classes = compute_hearts(tp, bounds)
    found = {"heart": [str(x) for x in classes.heart_ids()],
             "heart_st": [str(x) for x in classes.heart_st_ids()],
             "heart_uv": [str(x) for x in classes.heart_uv_ids()]}
    for key, value in expected(name).items():
        if key in found and found[key] != value:
            raise FixtureValidationError("Fixture {} yields {} = {}, expected {}".format(name, key, found[key], value))

    logger.info("Fixture %s validated", name)
    return tp, classes
