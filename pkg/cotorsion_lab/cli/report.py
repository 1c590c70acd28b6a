"""Reports: one verdict with the inputs needed to replay it"""
import json

from .files import REPORT_SCHEMA, category_file, pairs_file


def build_report(command, verdict, bounds, ctx=None, definitions=None, elapsed=None):
    report = {
        "schema": REPORT_SCHEMA,
        "command": command,
        "bounds": bounds._asdict(),
        "result": verdict.to_dict(),
    }
    if ctx is not None:
        report["category"] = category_file(ctx)

    if definitions is not None:
        report["pairs"] = pairs_file(definitions)

    if elapsed is not None:
        report["seconds"] = round(elapsed, 3)

    return report


def _lines(value, indent):
    pad = "  " * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                yield "{}{}:".format(pad, key)
                yield from _lines(item, indent + 1)

            else:
                yield "{}{}: {}".format(pad, key, _scalar(item))

    elif isinstance(value, list):
        if all(not isinstance(item, (dict, list)) for item in value):
            yield "{}{}".format(pad, ", ".join(_scalar(item) for item in value))
            return

        for item in value:
            yield "{}-".format(pad)
            yield from _lines(item, indent + 1)

    else:
        yield "{}{}".format(pad, _scalar(value))


def _scalar(value):
    if isinstance(value, (dict, list)):
        return "none" if not value else json.dumps(value, ensure_ascii=False)

    if value is None:
        return "none"

    return str(value)


def render_text(report):
    """Indented text carrying the same result content as the JSON form"""
    result = report["result"]
    lines = ["{}: {}".format(report["command"], result["verdict"].upper())]
    lines.extend(_lines({key: value for key, value in result.items() if key != "verdict"}, 1))
    if "seconds" in report:
        lines.append("  seconds: {}".format(report["seconds"]))

    return "\n".join(lines)


def render_json(report):
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)


def render(report, output_format):
    if output_format == "json":
        return render_json(report)

    return render_text(report)
