"""Exception hierarchy.

Every error carries a short machine code and, when it refers to a filtration
position, the offending event index.  The CLI prints both as
``ERR <code> <event-index>``.
"""


class GraphPersError(Exception):
    code = "Error"

    def __init__(self, message="", index=None):
        super().__init__(message or self.code)
        self.index = index


# filtration well-formedness
class ValidationError(GraphPersError):
    code = "Invalid"


class EdgeBeforeVertex(ValidationError):
    code = "EdgeBeforeVertex"


class DeleteAbsent(ValidationError):
    code = "DeleteAbsent"


class DuplicateLive(ValidationError):
    code = "DuplicateLive"


class NonEmptyEnds(ValidationError):
    code = "NonEmptyEnds"


class DeletionInStandard(ValidationError):
    code = "DeletionInStandard"


class ParseError(ValidationError):
    code = "Parse"


class InconsistentPairing(GraphPersError):
    code = "InconsistentPairing"


class DimensionUnderflow(GraphPersError):
    code = "DimensionUnderflow"


# dynamic trees
class SameTree(GraphPersError):
    code = "SameTree"


class StaleHandle(GraphPersError):
    code = "StaleHandle"


class NotConnected(GraphPersError):
    code = "NotConnected"


class DifferentTrees(GraphPersError):
    code = "DifferentTrees"


class NoParent(GraphPersError):
    code = "NoParent"


# switches
class InvalidSwitch(GraphPersError):
    code = "InvalidSwitch"


class OutOfRange(GraphPersError):
    code = "OutOfRange"


class KindMismatch(GraphPersError):
    code = "KindMismatch"


# oracles
class TooLarge(GraphPersError):
    code = "TooLarge"


class InvalidRepresentative(GraphPersError):
    code = "InvalidRepresentative"
