"""Exception hierarchy shared by all quivmon modules."""


class QuivmonError(Exception):
    """Base class for domain errors."""


class MalformedSpec(QuivmonError):
    pass


class LoopArrow(MalformedSpec):
    pass


class OrientedCycle(MalformedSpec):
    pass


class DuplicateVertex(MalformedSpec):
    pass


class UnknownVertex(QuivmonError):
    pass


class ArithmeticOverflow(QuivmonError):
    pass


class CapExceeded(QuivmonError):
    """A configured enumeration or recursion cap was hit."""


class ZeroVector(QuivmonError):
    pass


class NonTermination(QuivmonError):
    pass


class PreconditionViolated(QuivmonError):
    pass


class DegreeMismatch(QuivmonError):
    pass


class NotSchur(QuivmonError):
    pass


class NonPrimeField(QuivmonError):
    pass


class Mismatch(QuivmonError):
    pass


class NotDynkin(QuivmonError):
    pass


class AmbiguousTop(QuivmonError):
    pass


class NonPolynomialDivision(QuivmonError):
    pass
