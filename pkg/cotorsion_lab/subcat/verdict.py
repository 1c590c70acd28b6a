from enum import Enum

from ..serialcat import Interval, Obj


class VerdictKind(Enum):
    holds = "holds"
    fails = "fails"
    unknown = "unknown"


class Verdict:
    """Three valued result of a check

    ``witness`` backs a Holds (a conflation, a route record, ...), ``certificate`` backs a Fails.
    An Unknown is ``exhaustive`` when the search ran to completion without hitting a bound, so the
    searched object provably does not exist in normal form.
    """

    def __init__(self, kind, route=None, witness=None, certificate=None, bounds=None, exhaustive=False, notes=(),
                 details=None):
        self.kind = kind
        self.route = route
        self.witness = witness
        self.certificate = certificate
        self.bounds = bounds
        self.exhaustive = exhaustive
        self.notes = list(notes)
        self.details = dict(details or {})

    @classmethod
    def holds(cls, route=None, witness=None, **kwargs):
        return cls(VerdictKind.holds, route=route, witness=witness, exhaustive=True, **kwargs)

    @classmethod
    def fails(cls, certificate, route=None, **kwargs):
        return cls(VerdictKind.fails, route=route, certificate=certificate, exhaustive=True, **kwargs)

    @classmethod
    def unknown(cls, bounds=None, exhaustive=False, **kwargs):
        return cls(VerdictKind.unknown, bounds=bounds, exhaustive=exhaustive, **kwargs)

    @property
    def is_holds(self):
        return self.kind is VerdictKind.holds

    @property
    def is_fails(self):
        return self.kind is VerdictKind.fails

    @property
    def is_unknown(self):
        return self.kind is VerdictKind.unknown

    @property
    def is_definitive(self):
        """Holds, Fails, or an Unknown that settles non-existence"""
        return not self.is_unknown or self.exhaustive

    def __bool__(self):
        raise TypeError("Verdicts are three valued; test is_holds / is_fails / is_unknown instead")

    def __repr__(self):
        route = " via {}".format(self.route) if self.route else ""
        return "Verdict({}{})".format(self.kind.value, route)

    def to_dict(self):
        data = {"verdict": self.kind.value}
        if self.route is not None:
            data["route"] = self.route

        if self.witness is not None:
            data["witness"] = _serialize(self.witness)

        if self.certificate is not None:
            data["certificate"] = _serialize(self.certificate)

        if self.bounds is not None:
            data["bounds"] = self.bounds._asdict()

        if self.is_unknown:
            data["exhaustive"] = self.exhaustive

        if self.notes:
            data["notes"] = list(self.notes)

        if self.details:
            data["details"] = {key: _serialize(value) for key, value in self.details.items()}

        return data


def _serialize(value):
    if isinstance(value, (Interval, Obj)):
        return str(value)

    if hasattr(value, "to_dict"):
        return value.to_dict()

    if hasattr(value, "to_list"):
        return value.to_list()

    if isinstance(value, dict):
        return {str(key): _serialize(item) for key, item in value.items()}

    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_serialize(item) for item in items]

    if isinstance(value, (str, int, float, bool)) or value is None:
        return value

    return str(value)
