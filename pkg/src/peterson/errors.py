"""Exception types shared across the package."""


class PetersonError(Exception):
    pass


class DomainError(PetersonError, ValueError):
    """An argument lies outside the domain of an operation."""


class ParseError(PetersonError, ValueError):
    def __init__(self, message, text="", pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class InexactDivision(PetersonError, ArithmeticError):
    pass


class NotInSpan(PetersonError):
    """A localized class could not be expanded in the Peterson basis."""


class NotStable(PetersonError):
    pass


class ResourceCapExceeded(PetersonError):
    """A configured size limit was hit; carries any partial result."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
