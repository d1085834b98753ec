"""Exception types shared across the library."""


class MealyError(Exception):
    """Base class for all mealysg-specific errors."""


class LetterOutOfRange(MealyError, ValueError):
    """A letter lies outside 1..k for the machine at hand."""


class AlphabetMismatch(MealyError, ValueError):
    """Transformations over different alphabets were combined."""


class InvalidStateIndex(MealyError, IndexError):
    """A state index does not exist in the machine."""


class ParseError(MealyError, ValueError):
    """Malformed automaton text. Carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class UnknownStateName(ParseError):
    """A requested state name is not declared in the source."""


class MissingDefinition(ParseError):
    """A referenced section name has no defining equation."""


class DuplicateDefinition(ParseError):
    """A state name is defined more than once."""


class SubsetBlowup(MealyError, RuntimeError):
    """Determinization exceeded the configured subset cap."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__("powerset construction exceeded %d subsets" % cap)


class BudgetExceeded(MealyError, RuntimeError):
    """A brute-force enumeration would exceed its word budget."""


class NoConvergence(MealyError, RuntimeError):
    """Power iteration hit its iteration cap. Carries the best bracket."""

    def __init__(self, bracket, iterations):
        self.bracket = bracket
        self.iterations = iterations
        super().__init__(
            "power iteration did not converge after %d iterations; "
            "eigenvalue in [%r, %r]" % (iterations, bracket[0], bracket[1])
        )


class StateBlowup(MealyError, RuntimeError):
    """A computed power exceeded the canonical state-count cap."""


class InfiniteCosts(MealyError, RuntimeError):
    """Walk costs are infinite because some cycle carries index or period cost."""
