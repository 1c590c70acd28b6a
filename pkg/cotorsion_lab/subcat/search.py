"""Bounded searches for conflations

Hom spaces between indecomposables are at most one dimensional, so any morphism from a direct sum
onto an indecomposable b is, up to automorphisms of the source, a sum of canonical maps from distinct
summands, the remaining summands splitting off into the kernel. A summand whose map to b factors
through another chosen summand can be cleared the same way. Deflations onto b are therefore searched
among sums of canonical maps over hom-independent sets of distinct indecomposables; inflations dually.
"""
from collections import namedtuple
from logging import getLogger

from ..exception import ArgumentMismatchError
from ..repcore import cokernel, kernel, subquotients, SES
from ..serialcat import Conflation, Obj, ObjMorphism
from .verdict import Verdict

logger = getLogger(__name__)


class SearchBounds(namedtuple("SearchBounds", "mult dim_cap terms")):
    """Limits for enumerated candidates

    ``mult`` caps the multiplicity of an indecomposable, ``dim_cap`` the total dimension and
    ``terms`` the number of summands of the candidate objects of universal searches.
    """

    def __new__(cls, mult=2, dim_cap=24, terms=2):
        mult, dim_cap, terms = int(mult), int(dim_cap), int(terms)
        if mult < 1 or dim_cap < 1 or terms < 1:
            raise ArgumentMismatchError("Search bounds must be positive, got mult={}, dim_cap={}, terms={}"
                                        .format(mult, dim_cap, terms))

        return super().__new__(cls, mult, dim_cap, terms)


DEFAULT_BOUNDS = SearchBounds()


def enumerate_objs(ids, mult=1, terms=None, dim_cap=None, admissible=None):
    """Nonzero Objs over ids with bounded multiplicity, summand count and dimension

    ``admissible(chosen, x)`` may veto adding x to a partial choice. Returns the candidates ordered by
    total dimension then lexicographically, and whether a bound cut anything off.
    """
    ids = sorted(set(ids))
    found = []
    truncated = False

    def extend(index, chosen, dim):
        nonlocal truncated
        if index == len(ids):
            if chosen:
                found.append(Obj(chosen))

            return

        x = ids[index]
        extend(index + 1, chosen, dim)
        if admissible is not None and not admissible(chosen, x):
            return

        for count in range(1, mult + 1):
            if terms is not None and len(chosen) + count > terms:
                truncated = True
                break

            if dim_cap is not None and dim + count * x.dim > dim_cap:
                truncated = True
                break

            extend(index + 1, chosen + [x] * count, dim + count * x.dim)

    extend(0, [], 0)
    found.sort(key=Obj.sort_key)
    return found, truncated


def _hom_independent(ctx):
    def admissible(chosen, x):
        return not any(ctx.hom_dim(x, y) or ctx.hom_dim(y, x) for y in chosen)

    return admissible


def canonical_deflation(ctx, source, b):
    """Sum of the canonical maps from every summand of source onto b"""
    return ObjMorphism(ctx, source, Obj([b]), ctx.field.matrix([[1] * len(source)]))


def canonical_inflation(ctx, b, target):
    return ObjMorphism(ctx, Obj([b]), target, ctx.field.matrix([[1]] * len(target)))


def left_candidates(ctx, b, u, dim_cap):
    """Sources of the normal form deflations onto b with summands in u"""
    relevant = [x for x in u.ids if ctx.hom_dim(x, b)]
    candidates, truncated = enumerate_objs(relevant, dim_cap=dim_cap, admissible=_hom_independent(ctx))
    candidates = [c for c in candidates if any(x.b == b.b for x in c)]
    return candidates, truncated


def right_candidates(ctx, b, t, dim_cap):
    """Targets of the normal form inflations out of b with summands in t"""
    relevant = [y for y in t.ids if ctx.hom_dim(b, y)]
    candidates, truncated = enumerate_objs(relevant, dim_cap=dim_cap, admissible=_hom_independent(ctx))
    candidates = [c for c in candidates if any(y.a == b.a for y in c)]
    return candidates, truncated


def kernel_conflation(ctx, deflation):
    """Conflation ker -> source -> target of a surjection in canonical coordinates, kernel classified"""
    module, inclusion = kernel(deflation.realize())
    return Conflation.from_kernel(ctx, deflation, module, inclusion)


def cokernel_conflation(ctx, inflation):
    module, projection = cokernel(inflation.realize())
    return Conflation.from_cokernel(ctx, inflation, module, projection)


def _kernel_class(ctx, deflation):
    module, _ = kernel(deflation.realize())
    return ctx.classify(module)


def _cokernel_class(ctx, inflation):
    module, _ = cokernel(inflation.realize())
    return ctx.classify(module)


def find_left_approx(b, u, v, bounds=DEFAULT_BOUNDS):
    """Search a conflation V0 -> U0 -> b with U0 in add(u) and V0 in add(v)"""
    ctx = u.ctx
    b = ctx.check(b)
    if b in u:
        return Verdict.holds(route="trivial", witness=Conflation.trivial_left(ctx, Obj([b])), bounds=bounds)

    candidates, truncated = left_candidates(ctx, b, u, bounds.dim_cap)
    for source in candidates:
        deflation = canonical_deflation(ctx, source, b)
        if v.contains_obj(_kernel_class(ctx, deflation)):
            witness = kernel_conflation(ctx, deflation)
            logger.debug("Left approximation of %s: %s", b, witness)
            return Verdict.holds(route="search", witness=witness, bounds=bounds)

    logger.debug("No left approximation of %s among %d candidates", b, len(candidates))
    return Verdict.unknown(bounds=bounds, exhaustive=not truncated, details={"object": b})


def find_right_approx(b, t, s, bounds=DEFAULT_BOUNDS):
    """Search a conflation b -> T0 -> S0 with T0 in add(t) and S0 in add(s)"""
    ctx = t.ctx
    b = ctx.check(b)
    if b in t:
        return Verdict.holds(route="trivial", witness=Conflation.trivial_right(ctx, Obj([b])), bounds=bounds)

    candidates, truncated = right_candidates(ctx, b, t, bounds.dim_cap)
    for target in candidates:
        inflation = canonical_inflation(ctx, b, target)
        if s.contains_obj(_cokernel_class(ctx, inflation)):
            witness = cokernel_conflation(ctx, inflation)
            logger.debug("Right approximation of %s: %s", b, witness)
            return Verdict.holds(route="search", witness=witness, bounds=bounds)

    logger.debug("No right approximation of %s among %d candidates", b, len(candidates))
    return Verdict.unknown(bounds=bounds, exhaustive=not truncated, details={"object": b})


class StarNonMembership(namedtuple("StarNonMembership", "obj left right")):
    """Record that no conflation X -> obj -> Y exists with X in add(left), Y in add(right)

    Replayed by running the complete submodule enumeration again.
    """

    def to_dict(self):
        return {"kind": "star_non_membership", "object": str(self.obj), "left": self.left.to_list(),
                "right": self.right.to_list()}


def star_member(z, x, y, bounds=DEFAULT_BOUNDS):
    """Decide whether some conflation X -> z -> Y has X in add(x) and Y in add(y)

    Exact for the fixed object z, since every submodule of its realisation is visited.
    """
    ctx = x.ctx
    z = ctx.check_obj(z if isinstance(z, Obj) else Obj([z]))
    if x.contains_obj(z):
        return Verdict.holds(route="trivial", witness=Conflation.trivial_right(ctx, z), bounds=bounds)

    if y.contains_obj(z):
        return Verdict.holds(route="trivial", witness=Conflation.trivial_left(ctx, z), bounds=bounds)

    module = ctx.realize(z)
    for sub, inclusion, rest, projection in subquotients(module, bounds.dim_cap):
        if x.contains_obj(ctx.classify(sub)) and y.contains_obj(ctx.classify(rest)):
            witness = Conflation.from_ses(ctx, z, SES(inclusion, projection))
            logger.debug("%s lies in %s * %s via %s", z, x, y, witness)
            return Verdict.holds(route="submodule", witness=witness, bounds=bounds)

    return Verdict.fails(StarNonMembership(z, x, y), route="submodule", bounds=bounds)


def subcat_in_star(a, x, y, bounds=DEFAULT_BOUNDS):
    """Decide whether every indecomposable of a lies in x * y

    Direct sums of conflations are conflations, so the indecomposables settle the whole of add(a).
    """
    witnesses = {}
    for z in a:
        verdict = star_member(Obj([z]), x, y, bounds)
        if not verdict.is_holds:
            logger.info("%s is not contained in %s * %s: %s is a counterexample", a, x, y, z)
            return Verdict.fails(verdict.certificate, route="indecomposable", bounds=bounds,
                                 details={"counterexample": z})

        witnesses[z] = verdict.witness

    return Verdict.holds(route="indecomposable", witness=witnesses, bounds=bounds)

