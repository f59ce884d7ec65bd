"""
Utility types and errors for the Calculus package.
"""

from .types import (
    TAU,
    Action,
    CalculusId,
    Label,
    Multiset,
    NonBlockingSet,
    Polarity,
    Transition,
)
from .errors import ExplorationBoundExceeded, ProcessSyntaxError

__all__ = [
    "TAU",
    "Action",
    "CalculusId",
    "Label",
    "Multiset",
    "NonBlockingSet",
    "Polarity",
    "Transition",
    "ExplorationBoundExceeded",
    "ProcessSyntaxError",
]
