"""JSON files read and written by the command line"""
import json
import os
import tempfile
from logging import getLogger

from ..exception import InputFileError
from ..pairs import TwinPair
from ..serialcat import category_from_dict
from ..subcat import define_subcategories

logger = getLogger(__name__)


CATEGORY_SCHEMA = "cotorsion-lab/category/1"
PAIRS_SCHEMA = "cotorsion-lab/pairs/1"
REPORT_SCHEMA = "cotorsion-lab/report/1"

PAIR_NAMES = ("S", "T", "U", "V")


def read_json(path):
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)

    except OSError as err:
        raise InputFileError("Cannot read {}: {}".format(path, err.strerror))

    except ValueError as err:
        raise InputFileError("{} is not valid JSON: {}".format(path, err))


def write_json_atomic(path, data):
    """Write through a temporary file in the target directory, then rename over the target"""
    directory = os.path.dirname(os.path.abspath(path))
    handle, temporary = tempfile.mkstemp(prefix=".tmp-", suffix=".json", dir=directory)
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, sort_keys=True, ensure_ascii=False)
            f.write("\n")

        os.replace(temporary, path)

    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)

        raise

    logger.info("Wrote %s", path)


def _check_schema(data, schema):
    found = data.get("schema", schema)
    if found != schema:
        raise InputFileError("Expected schema {}, found {}".format(schema, found))


def category_file(ctx):
    data = {"schema": CATEGORY_SCHEMA}
    data.update(ctx.to_dict())
    return data


def load_category(data, validate=False):
    if not isinstance(data, dict):
        raise InputFileError("A category file holds a JSON object")

    _check_schema(data, CATEGORY_SCHEMA)
    return category_from_dict(data, validate=validate)


def pair_definitions(data):
    """Named subcategory definitions of a pairs file"""
    if not isinstance(data, dict):
        raise InputFileError("A pairs file holds a JSON object")

    _check_schema(data, PAIRS_SCHEMA)
    definitions = data.get("definitions", data)
    missing = [name for name in PAIR_NAMES if name not in definitions]
    if missing:
        raise InputFileError("Pairs file does not define {}".format(", ".join(missing)))

    return {name: value for name, value in definitions.items() if name not in ("schema", "description")}


def load_twin(ctx, data):
    values = define_subcategories(ctx, pair_definitions(data))
    return TwinPair.from_classes(*(values[name] for name in PAIR_NAMES))


def pairs_file(definitions):
    return {"schema": PAIRS_SCHEMA, "definitions": dict(definitions)}
