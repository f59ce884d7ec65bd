import re
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from src.Calculus.utils.errors import ProcessSyntaxError, ValueDomainError
from src.Calculus.utils.types import (
    TAU,
    UNIT,
    Action,
    CalculusId,
    Label,
    NonBlockingSet,
    Polarity,
)
from src.config.settings import settings

ACTION_PATTERN = re.compile(r"^([a-z][A-Za-z0-9_]*)([?!])(.*)$")

def dual(a: Action) -> Action:
    return Action(a.channel, a.polarity.opposite, a.payload)

def dual_trace(trace: Iterable[Action]) -> Tuple[Action, ...]:
    return tuple(dual(a) for a in trace)

def is_blocking(a: Action, nonblocking: NonBlockingSet) -> bool:
    return a not in nonblocking

def nonblocking_for(calculus: CalculusId) -> NonBlockingSet:
    """H for a calculus: empty for the synchronous ones, all outputs otherwise."""
    polarities = settings.CALCULUS_NONBLOCKING.get(calculus.value, [])
    return NonBlockingSet(frozenset(Polarity(p) for p in polarities))

def value_domain(calculus: CalculusId, val: Sequence[str]) -> Tuple[str, ...]:
    """
    The value domain a calculus runs over. Calculi without value passing
    always use the single unit value.
    """
    if not calculus.value_passing:
        return (UNIT,)
    values: List[str] = []
    for v in val:
        v = str(v).strip()
        if v and v not in values:
            values.append(v)
    if not values:
        raise ValueDomainError("The value domain must not be empty")
    return tuple(values)

def alphabet(channels: Iterable[str], val: Sequence[str]) -> FrozenSet[Action]:
    return frozenset(
        Action(c, pol, v) for c in channels for pol in Polarity for v in val
    )

def action_token(a: Action, with_payload: bool = True) -> str:
    """String token of an action; the unit payload never shows."""
    if not with_payload or a.payload == UNIT:
        return f"{a.channel}{a.polarity.value}"
    return str(a)

def parse_action(text: str) -> Action:
    match = ACTION_PATTERN.match(text.strip())
    if not match:
        raise ProcessSyntaxError(f"Not an action: {text!r}")
    channel, polarity, payload = match.groups()
    return Action(channel, Polarity(polarity), payload or UNIT)

def parse_label(text: str) -> Label:
    if text.strip() == "tau":
        return TAU
    return parse_action(text)

def parse_trace(text: str) -> Tuple[Action, ...]:
    """Parse a dot or space separated trace such as ``a?0.b!1``."""
    parts = [p for p in re.split(r"[\s.,]+", text.strip()) if p]
    return tuple(parse_action(p) for p in parts)

def render_trace(trace: Iterable[Action]) -> List[str]:
    return [str(a) for a in trace]

def ready_set(moves: Iterable[Tuple[Label, object]]) -> FrozenSet[Action]:
    return frozenset(label for label, _ in moves if isinstance(label, Action))

def co_ready(moves: Iterable[Tuple[Label, object]], nonblocking: NonBlockingSet) -> FrozenSet[Action]:
    """coR: the blocking actions b such that the state can perform co(b)."""
    return frozenset(
        dual(a) for a in ready_set(moves) if is_blocking(dual(a), nonblocking)
    )
