"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed textual input: field specs, polynomial expressions, CLI values."""


class PreconditionError(ValueError):
    """An operation was invoked outside its stated domain."""


class InvariantViolation(RuntimeError):
    """An exact algebraic identity that must hold was observed to fail.

    These guard structural facts the library relies on; one firing means a
    genuine bug or a falsified assumption and is never silently repaired.
    """
