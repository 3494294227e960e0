"""Exception hierarchy shared by all modules."""


class PolyZetaError(Exception):
    """Base class for domain errors raised by polyzeta."""


class ParseError(PolyZetaError, ValueError):
    """Malformed polynomial text; ``position`` is the 0-based offset of the fault."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class InadmissiblePrimeError(PolyZetaError, ValueError):
    """The prime divides a coefficient denominator, so reduction is undefined."""

    def __init__(self, p, poly=None):
        self.p = p
        self.poly = poly
        super().__init__(f"prime {p} divides a coefficient denominator of {poly}")


class DegreeCapError(PolyZetaError, ValueError):
    pass


class DegenerateInputError(PolyZetaError, ValueError):
    pass
