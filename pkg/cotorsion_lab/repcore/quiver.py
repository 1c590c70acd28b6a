from collections import namedtuple

from ..exception import PresentationError


class QuiverPresentation(namedtuple("QuiverPresentation", "n relations")):
    """Linear quiver n -> n-1 -> ... -> 1 bound by zero relations

    A relation (a, b) kills the path from vertex b down to vertex a. Relations are normalised on
    construction: sorted, and any relation containing another one is dropped since it is implied.
    """

    def __new__(cls, n, relations=()):
        n = int(n)
        if n < 1:
            raise PresentationError("A linear quiver needs at least one vertex, got {}".format(n))

        checked = set()
        for relation in relations:
            try:
                a, b = (int(v) for v in relation)

            except (TypeError, ValueError):
                raise PresentationError("Malformed relation {!r}".format(relation))

            if not 1 <= a < b <= n:
                raise PresentationError("Relation [{},{}] is not inside the vertex range 1..{}".format(a, b, n))

            if b - a < 2:
                raise PresentationError("Relation [{},{}] has path length {}, expected at least 2".format(a, b, b - a))

            checked.add((a, b))

        minimal = tuple(sorted(r for r in checked
                               if not any(o != r and r[0] <= o[0] and o[1] <= r[1] for o in checked)))
        return super().__new__(cls, n, minimal)

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def is_admissible(self, a, b):
        """Whether the path from b down to a is nonzero"""
        if not 1 <= a <= b <= self.n:
            return False

        return not any(a <= r and s <= b for r, s in self.relations)

    def lowest_reach(self, b):
        """Smallest a such that the path from b to a is nonzero"""
        a = b
        while self.is_admissible(a - 1, b):
            a -= 1

        return a

    def highest_reach(self, a):
        """Largest b such that the path from b to a is nonzero"""
        b = a
        while self.is_admissible(a, b + 1):
            b += 1

        return b

    def intervals(self):
        """All admissible intervals, ordered by (a, b)"""
        return [(a, b) for a in self.vertices for b in range(a, self.n + 1) if self.is_admissible(a, b)]

    def to_dict(self):
        return {"n": self.n, "relations": [list(r) for r in self.relations]}

    @classmethod
    def from_dict(cls, data):
        return cls(data["n"], data.get("relations", ()))
