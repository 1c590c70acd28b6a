"""Interval ids and formal direct sums

An interval [a, b] is the uniserial module with top at vertex b and socle at vertex a. The stacked
notation lists the composition factors from the top: ``5/4/3`` is [3, 5].
"""
import re
from collections import Counter, namedtuple

from ..exception import ExpressionError


_bracket_pattern = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*\]$")
_stacked_pattern = re.compile(r"^\d+(\s*/\s*\d+)*$")


class Interval(namedtuple("Interval", "a b")):

    @property
    def top(self):
        return self.b

    @property
    def socle(self):
        return self.a

    @property
    def dim(self):
        return self.b - self.a + 1

    def contains(self, v):
        return self.a <= v <= self.b

    def stacked(self):
        return "/".join(str(v) for v in range(self.b, self.a - 1, -1))

    def __str__(self):
        return "[{},{}]".format(self.a, self.b)


def parse_interval(text):
    """Parse "[a,b]" or the stacked form "b/.../a" (consecutive, descending)"""
    text = text.strip()
    match = _bracket_pattern.match(text)
    if match:
        a, b = int(match.group(1)), int(match.group(2))
        if a > b:
            raise ExpressionError("Interval {!r} has its bottom above its top".format(text))

        return Interval(a, b)

    if _stacked_pattern.match(text):
        vertices = [int(v) for v in text.split("/")]
        if any(upper - lower != 1 for upper, lower in zip(vertices, vertices[1:])):
            raise ExpressionError("Stacked interval {!r} must descend one vertex at a time".format(text))

        return Interval(vertices[-1], vertices[0])

    raise ExpressionError("Cannot parse interval {!r}".format(text))


class Obj:
    """Finite multiset of intervals, an object of the module category up to isomorphism

    Summands are kept sorted; the empty multiset is the zero object.
    """

    def __init__(self, summands=()):
        self.summands = tuple(sorted(Interval(*s) for s in summands))

    @classmethod
    def from_counts(cls, counts):
        return cls([interval for interval, count in sorted(counts.items()) for _ in range(count)])

    def counts(self):
        return Counter(self.summands)

    def distinct(self):
        return sorted(set(self.summands))

    @property
    def dim(self):
        return sum(s.dim for s in self.summands)

    @property
    def is_zero(self):
        return not self.summands

    def multiplicity(self, interval):
        return self.summands.count(interval)

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __getitem__(self, index):
        return self.summands[index]

    def __add__(self, other):
        return Obj(self.summands + other.summands)

    def __eq__(self, other):
        return isinstance(other, Obj) and self.summands == other.summands

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.summands)

    def sort_key(self):
        """Total dimension first, then lexicographic"""
        return self.dim, self.summands

    def __str__(self):
        if not self.summands:
            return "0"

        return "+".join(str(s) for s in self.summands)

    def __repr__(self):
        return "Obj({})".format(self)


def parse_obj(text):
    """Parse "0", a single interval, or intervals joined by '+' or '⊕'"""
    text = text.strip()
    if text in ("0", ""):
        return Obj()

    parts = re.split(r"\s*[+⊕]\s*", text)
    return Obj(parse_interval(part) for part in parts)


def sum_positions(*objs):
    """Combined object of a direct sum and, for each part, the positions of its summands in it

    Summands are placed in sorted order; equal intervals keep the order of the parts.
    """
    tagged = sorted((interval, part, index) for part, obj in enumerate(objs) for index, interval in enumerate(obj))
    positions = [[None] * len(obj) for obj in objs]
    for position, (_, part, index) in enumerate(tagged):
        positions[part][index] = position

    return Obj(t[0] for t in tagged), positions
