"""Exception hierarchy. Everything raised on bad input derives from DissectaError."""


class DissectaError(Exception):
    pass


# poset construction / queries

class UnknownElement(DissectaError, KeyError):
    pass


class CycleDetected(DissectaError):
    pass


class NotTransitive(DissectaError):
    """Relation-mode input is not transitively closed."""


class NotComparable(DissectaError):
    pass


class HostMismatch(DissectaError):
    """Operands live over different posets."""


# lattice structure

class NotALattice(DissectaError):
    def __init__(self, witness=None, message=None):
        self.witness = witness
        super().__init__(message or f"pair without unique bound: {witness!r}")


class NonUniqueCover(DissectaError):
    pass


class NotDistributive(DissectaError):
    pass


class NoSeparator(DissectaError):
    """No prime ideal separates the pair; unreachable for distributive hosts."""


# Mobius algebra / valuation module

class NoBottom(DissectaError):
    pass


class BottomNotInSubset(DissectaError):
    pass


class MissingJoinIrreducibles(DissectaError):
    """The subset must contain every join-irreducible element."""


class NotAValuation(DissectaError):
    pass


# exact integer linear algebra

class DimensionMismatch(DissectaError):
    pass


# arrangements and set models

class NoUniqueTop(DissectaError):
    pass


class MissingChi(DissectaError):
    pass


class DimNotMonotone(DissectaError):
    pass


class MissingDim(DissectaError):
    pass


class UnknownFlat(DissectaError, KeyError):
    pass


class ZeroChamberChi(DissectaError):
    pass


class ProfileMismatch(DissectaError):
    pass


class InvalidRefinement(DissectaError):
    pass


class ChambersNotPartition(DissectaError):
    pass


# file / CLI layer

class ParseError(DissectaError):
    pass


class IdentityFailed(DissectaError):
    pass
