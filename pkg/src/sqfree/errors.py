"""Exceptions shared across the package.

The CLI maps these onto its exit-code contract:
parse errors -> 2, invalid input -> 3, internal invariant failures -> 4.
"""


class SqfreeError(Exception):
    pass


class ParseError(SqfreeError):
    """Malformed input file (facet list, module/complex JSON)."""


class InvalidInputError(SqfreeError):
    """Structurally valid syntax but the object violates its invariants."""


class VoidComplexError(InvalidInputError):
    """An operation produced or received the void complex (no faces at all)."""


class InternalCheckError(SqfreeError):
    """A consistency condition that should hold by construction failed.

    Raised e.g. when a claimed chain map does not commute with the
    differentials; always indicates a bug, never bad user input.
    """
