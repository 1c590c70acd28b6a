from collections import namedtuple

from ..exception import ArgumentMismatchError, ValidationError
from ..repcore import SES, compose, inverse
from .morphisms import ObjMorphism


class Conflation(namedtuple("Conflation", "inflation deflation")):
    """Short exact sequence A -> B -> C between formal direct sums, in canonical coordinates"""

    @property
    def first(self):
        return self.inflation.source

    @property
    def middle(self):
        return self.inflation.target

    @property
    def third(self):
        return self.deflation.target

    @property
    def ctx(self):
        return self.inflation.ctx

    def realize(self):
        return SES(self.inflation.realize(), self.deflation.realize())

    def validate(self):
        if self.inflation.target != self.deflation.source:
            raise ValidationError("Conflation maps are not composable")

        self.inflation.validate()
        self.deflation.validate()
        self.realize().validate()
        return self

    def __str__(self):
        return "{} -> {} -> {}".format(self.first, self.middle, self.third)

    def to_dict(self):
        return {"inflation": self.inflation.to_dict(), "deflation": self.deflation.to_dict()}

    @classmethod
    def from_dict(cls, ctx, data):
        return cls(ObjMorphism.from_dict(ctx, data["inflation"]), ObjMorphism.from_dict(ctx, data["deflation"]))

    # Construction
    @classmethod
    def trivial_left(cls, ctx, obj):
        """0 -> obj -> obj"""
        from .intervals import Obj

        return cls(ObjMorphism.zero(ctx, Obj(), obj), ObjMorphism.identity(ctx, obj))

    @classmethod
    def trivial_right(cls, ctx, obj):
        """obj -> obj -> 0"""
        from .intervals import Obj

        return cls(ObjMorphism.identity(ctx, obj), ObjMorphism.zero(ctx, obj, Obj()))

    @classmethod
    def from_kernel(cls, ctx, deflation, kernel_module, kernel_inclusion):
        """Conflation ker -> B -> C of a surjection given in canonical coordinates"""
        decomposition = ctx.decompose(kernel_module)
        first = _obj(decomposition)
        inclusion = compose(kernel_inclusion, decomposition.isomorphism())
        return cls(ObjMorphism.from_morphism(ctx, first, deflation.source, inclusion), deflation)

    @classmethod
    def from_cokernel(cls, ctx, inflation, cokernel_module, cokernel_projection):
        """Conflation A -> B -> coker of an injection given in canonical coordinates"""
        decomposition = ctx.decompose(cokernel_module)
        third = _obj(decomposition)
        projection = compose(inverse(decomposition.isomorphism()), cokernel_projection)
        return cls(inflation, ObjMorphism.from_morphism(ctx, inflation.target, third, projection))

    @classmethod
    def from_ses(cls, ctx, middle, ses):
        """Canonical coordinates for a sequence whose middle term is realize(middle)"""
        if ses.middle != ctx.realize(middle):
            raise ArgumentMismatchError("Sequence middle is not the realisation of {}".format(middle))

        first = ctx.decompose(ses.first)
        third = ctx.decompose(ses.third)
        inflation = compose(ses.inflation, first.isomorphism())
        deflation = compose(inverse(third.isomorphism()), ses.deflation)
        return cls(ObjMorphism.from_morphism(ctx, _obj(first), middle, inflation),
                   ObjMorphism.from_morphism(ctx, middle, _obj(third), deflation))

    def direct_sum(self, other):
        """Sum of two conflations"""
        ctx = self.ctx
        inflation, _, _ = ObjMorphism.assemble(ctx, [[self.inflation, None], [None, other.inflation]],
                                               [self.first, other.first], [self.middle, other.middle])
        deflation, _, _ = ObjMorphism.assemble(ctx, [[self.deflation, None], [None, other.deflation]],
                                               [self.middle, other.middle], [self.third, other.third])
        return Conflation(inflation, deflation)


def _obj(decomposition):
    from .intervals import Interval, Obj

    return Obj(Interval(*i) for i in decomposition.intervals)
