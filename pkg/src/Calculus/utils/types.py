from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from pydantic import BaseModel

from src.config.settings import settings

UNIT = settings.UNIT_VALUE

class Polarity(str, Enum):
    INPUT = "?"
    OUTPUT = "!"

    @property
    def opposite(self) -> "Polarity":
        return Polarity.OUTPUT if self is Polarity.INPUT else Polarity.INPUT

class CalculusId(str, Enum):
    CCS = "ccs"
    ACCS = "accs"
    VCCS = "vccs"
    VACCS = "vaccs"

    @property
    def value_passing(self) -> bool:
        return self in (CalculusId.VCCS, CalculusId.VACCS)

    @property
    def asynchronous(self) -> bool:
        return self in (CalculusId.ACCS, CalculusId.VACCS)

@dataclass(frozen=True, order=True)
class Action:
    """A visible action: a channel, a polarity and a payload value."""

    channel: str
    polarity: Polarity
    payload: str = UNIT

    def __str__(self) -> str:
        return f"{self.channel}{self.polarity.value}{self.payload}"

    @property
    def is_input(self) -> bool:
        return self.polarity is Polarity.INPUT

    @property
    def is_output(self) -> bool:
        return self.polarity is Polarity.OUTPUT

@dataclass(frozen=True)
class Tau:
    def __str__(self) -> str:
        return "tau"

TAU = Tau()

Label = Union[Action, Tau]

def is_tau(label: Label) -> bool:
    return isinstance(label, Tau)

@dataclass(frozen=True)
class NonBlockingSet:
    """
    The non-blocking actions H, given as a polarity filter optionally
    restricted to some channels. Payloads never matter.
    """

    polarities: FrozenSet[Polarity] = frozenset()
    channels: Optional[FrozenSet[str]] = None

    def __contains__(self, action: object) -> bool:
        if not isinstance(action, Action):
            return False
        if action.polarity not in self.polarities:
            return False
        return self.channels is None or action.channel in self.channels

    @property
    def is_empty(self) -> bool:
        return not self.polarities or self.channels == frozenset()

    def describe(self) -> str:
        if self.is_empty:
            return "{}"
        kinds = ", ".join(
            "outputs" if p is Polarity.OUTPUT else "inputs" for p in sorted(self.polarities)
        )
        if self.channels is None:
            return kinds
        return f"{kinds} on {', '.join(sorted(self.channels))}"

@dataclass(frozen=True)
class Multiset:
    """Finite multiset of actions, stored as sorted (action, count) pairs."""

    counts: Tuple[Tuple[Action, int], ...] = ()

    @classmethod
    def of(cls, actions: Iterable[Action]) -> "Multiset":
        counter = Counter(actions)
        return cls(tuple(sorted((a, n) for a, n in counter.items() if n > 0)))

    def count(self, action: Action) -> int:
        for a, n in self.counts:
            if a == action:
                return n
        return 0

    def add(self, action: Action) -> "Multiset":
        return Multiset.of(list(self.elements()) + [action])

    def remove(self, action: Action) -> "Multiset":
        if self.count(action) == 0:
            raise KeyError(str(action))
        counter = Counter(dict(self.counts))
        counter[action] -= 1
        return Multiset.of(counter.elements())

    def union(self, other: "Multiset") -> "Multiset":
        return Multiset.of(list(self.elements()) + list(other.elements()))

    def distinct(self) -> List[Action]:
        return [a for a, _ in self.counts]

    def elements(self) -> Iterator[Action]:
        for a, n in self.counts:
            for _ in range(n):
                yield a

    @property
    def size(self) -> int:
        return sum(n for _, n in self.counts)

    def render(self) -> str:
        return "{" + ", ".join(str(a) for a in self.elements()) + "}"

    def __str__(self) -> str:
        return self.render()

@dataclass(frozen=True)
class FwState:
    """A process paired with its mailbox of pending non-blocking messages."""

    proc: Any
    mail: Multiset = Multiset()

@dataclass(frozen=True)
class ComposedState:
    server: Any
    client: Any

@dataclass(frozen=True)
class Transition:
    source: str
    label: Label
    target: str

    def as_tuple(self) -> Tuple[str, str, str]:
        return (self.source, str(self.label), self.target)

# Serialized graphs

class StateDoc(BaseModel):
    id: int
    state: str
    frontier: bool = False

class TransitionDoc(BaseModel):
    source: int
    label: str
    target: int

class GraphDocument(BaseModel):
    root: int
    complete: bool
    states: List[StateDoc]
    transitions: List[TransitionDoc]
