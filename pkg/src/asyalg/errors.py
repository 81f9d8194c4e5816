"""Exception types shared across the package."""


class AsyalgError(Exception):
    """Base class for all errors raised by this library."""


class DimensionMismatch(AsyalgError):
    """Operands have incompatible vector or signal dimensions."""


class InvalidSignal(AsyalgError):
    """A signal description violates its construction rules."""


class InvalidSystem(AsyalgError):
    """A system description violates its construction rules."""


class IncompatibleSystems(AsyalgError):
    """Intersection (or a predicate filter) would produce an empty system."""


class NotAnInitialState(AsyalgError):
    """The requested vector is not an initial state of the system."""


class NotAbsolutelyStable(AsyalgError):
    """A state never settles, so final values are undefined."""


class EmptyDomain(AsyalgError):
    """The operation would produce a system with no admissible inputs."""


class StateOutsideDomain(AsyalgError):
    """Strict serial connection hit a state the outer system does not accept.

    The offending state is available as ``.state``.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class UniverseTooSmall(AsyalgError):
    """The supplied input universe does not cover the system's domain."""


class InputNotShared(AsyalgError):
    """The input is not admissible for both systems under comparison."""


class UnknownTheoremId(AsyalgError):
    """No identity with the given name is registered with the verifier."""


class ParseError(AsyalgError):
    """Text input does not conform to the file format.

    ``line`` is 1-based; ``column`` may be None when only the line is known.
    """

    def __init__(self, message, line=None, column=None):
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        super().__init__(location + message)
        self.line = line
        self.column = column
