from typing import Optional

class ProcessSyntaxError(ValueError):
    """Raised when a term or definition file cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{where}")

class ValueDomainError(ValueError):
    """A value literal is not in the configured value domain."""

class AsynchronyError(ValueError):
    """An output prefix violates the asynchronous calculus restriction."""

class OpenTermError(ValueError):
    """A closed term was required."""

class PreconditionError(ValueError):
    pass

class AbstractionError(ValueError):
    """An action or token has no image under the label abstraction."""

class ExplorationBoundExceeded(ValueError):
    def __init__(self, what: str, bound: int):
        self.bound = bound
        super().__init__(f"Exploration of {what} exceeded the bound of {bound} states")

class IndeterminateError(ValueError):
    """A verdict was requested on a graph that was not explored exactly."""

class UndefinedInterpretation(ValueError):
    pass

class SynthesisError(ValueError):
    """A synthesized test failed its own verification."""

class UnknownDefinitionError(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown definition: {name}")
