"""Exception hierarchy shared by every polycert module."""


class PolycertError(Exception):
    """Base class for all polycert errors."""


class ZeroPolynomial(PolycertError):
    pass


class NonpositiveLeadingCoefficient(PolycertError):
    pass


class NegativeShift(PolycertError):
    pass


class NonpositiveShift(PolycertError):
    pass


class PreconditionNotNonnegative(PolycertError):
    """Some f_i(b), i <= k, is negative, so the monotone extension does not apply."""

    def __init__(self, index, value):
        super().__init__(f"f_{index}(b) = {value} is negative")
        self.index = index
        self.value = value


class ParseError(PolycertError):
    """Rejected expression.  ``position`` is a 0-based character offset."""

    def __init__(self, message, position, text=""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(self._render())

    def _render(self):
        if not self.text:
            return f"at position {self.position}: {self.message}"
        caret = " " * self.position + "^"
        return f"at position {self.position}: {self.message}\n  {self.text}\n  {caret}"


class ExpressionSyntaxError(ParseError):
    pass


class MultipleVariables(ParseError):
    pass


class NegativeExponent(ParseError):
    pass


class ExponentTooLarge(ParseError):
    pass
