"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures without a
lookup table: 2 for parse/semantic problems, 4 for resource caps.
"""


class IncgraphError(Exception):
    exit_code = 1


class SpecError(IncgraphError):
    exit_code = 2


class ParseError(SpecError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SemanticError(SpecError):
    pass


class NonPrimeParameter(SemanticError):
    pass


class DivisibilityConditionFails(SemanticError):
    pass


class NoSuchExponent(SemanticError):
    pass


class ResourceCapError(IncgraphError):
    exit_code = 4


class OrderCapExceeded(ResourceCapError):
    pass


class VertexLimitExceeded(ResourceCapError):
    pass


class NotASubgroup(IncgraphError):
    pass


class NotNormal(IncgraphError):
    pass


class PrimeDoesNotDivideOrder(IncgraphError):
    pass


class UnclassifiedSpec(IncgraphError):
    pass


class ChromaticMismatch(IncgraphError):
    """A certified coloring and the clique bound disagree where they must not."""
