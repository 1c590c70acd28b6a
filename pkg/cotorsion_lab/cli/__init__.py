from .files import CATEGORY_SCHEMA, PAIRS_SCHEMA, REPORT_SCHEMA, read_json, write_json_atomic
