import logging
import os
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List

from src.Calculus.Labels.labels import (
    action_token,
    is_blocking,
    nonblocking_for,
    parse_action,
)
from src.Calculus.utils.errors import AbstractionError, PreconditionError, ProcessSyntaxError
from src.Calculus.utils.types import Action, CalculusId, NonBlockingSet, Polarity
from src.config.settings import settings

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

CONSTANT_TOKEN = "k"

@dataclass(frozen=True)
class LabelAbstraction:
    """
    A label abstraction: phi maps blocking actions to Y tokens and delta maps
    Y tokens to X tokens. Tokens are plain strings.
    """

    name: str
    calculus: CalculusId
    nonblocking: NonBlockingSet
    phi: Callable[[Action], str]
    delta: Callable[[str], str]

    def abstract(self, a: Action) -> str:
        return self.delta(self.phi(a))

def _strip_payload(token: str) -> str:
    for i, ch in enumerate(token):
        if ch in "?!":
            return token[: i + 1]
    return token

def _identity(token: str) -> str:
    return token

def _vccs_phi(a: Action) -> str:
    # outputs keep their value, inputs forget it
    return action_token(a) if a.is_output else action_token(a, with_payload=False)

def _vaccs_phi(a: Action) -> str:
    return action_token(a, with_payload=not a.is_input)

def preset_abstraction(calculus: CalculusId) -> LabelAbstraction:
    nonblocking = nonblocking_for(calculus)
    if calculus is CalculusId.VCCS:
        return LabelAbstraction("vccs", calculus, nonblocking, _vccs_phi, _strip_payload)
    if calculus is CalculusId.VACCS:
        return LabelAbstraction("vaccs", calculus, nonblocking, _vaccs_phi, _identity)
    return LabelAbstraction(calculus.value, calculus, nonblocking, action_token, _identity)

def identity_abstraction(calculus: CalculusId) -> LabelAbstraction:
    return LabelAbstraction(
        "identity", calculus, nonblocking_for(calculus), action_token, _identity
    )

def constant_abstraction(calculus: CalculusId, token: str = CONSTANT_TOKEN) -> LabelAbstraction:
    return LabelAbstraction(
        "constant", calculus, nonblocking_for(calculus), lambda a: token, _identity
    )

def abstraction_from_table(text: str, calculus: CalculusId, name: str = "table") -> LabelAbstraction:
    """
    Build an abstraction from lines of the form ``action -> y_token -> x_token``.
    Blank lines and ``#`` comments are ignored.
    """
    phi_table: Dict[str, str] = {}
    delta_table: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("->")]
        if len(parts) != 3 or not all(parts):
            raise ProcessSyntaxError("Expected 'action -> y_token -> x_token'", line=lineno)
        action = parse_action(parts[0])
        key = action_token(action)
        if phi_table.get(key, parts[1]) != parts[1]:
            raise AbstractionError(f"Action {key} mapped twice (line {lineno})")
        if delta_table.get(parts[1], parts[2]) != parts[2]:
            raise AbstractionError(f"Token {parts[1]} mapped twice (line {lineno})")
        phi_table[key] = parts[1]
        delta_table[parts[1]] = parts[2]

    def phi(a: Action) -> str:
        try:
            return phi_table[action_token(a)]
        except KeyError:
            raise AbstractionError(f"No phi image for {a} in abstraction {name}")

    def delta(token: str) -> str:
        try:
            return delta_table[token]
        except KeyError:
            raise AbstractionError(f"No delta image for token {token} in abstraction {name}")

    logger.info(f"Loaded abstraction {name} with {len(phi_table)} actions")
    return LabelAbstraction(name, calculus, nonblocking_for(calculus), phi, delta)

def load_abstraction_table(path: str, calculus: CalculusId) -> LabelAbstraction:
    with open(path) as f:
        return abstraction_from_table(f.read(), calculus, name=os.path.basename(path))

def resolve_abstraction(choice: str, calculus: CalculusId) -> LabelAbstraction:
    """Turn a preset name or a table file path into an abstraction."""
    choice = choice.strip()
    if choice in [c.value for c in CalculusId]:
        preset = CalculusId(choice)
        if preset is not calculus:
            logger.warning(f"Abstraction preset {choice} used with calculus {calculus.value}")
        return preset_abstraction(preset)
    if choice == "identity":
        return identity_abstraction(calculus)
    if choice == "constant":
        return constant_abstraction(calculus)
    if os.path.exists(choice):
        return load_abstraction_table(choice, calculus)
    known = ", ".join(settings.ABSTRACTION_PRESETS)
    raise AbstractionError(f"Unknown abstraction {choice!r}; use one of {known} or a table file")

def coR_abstract(ready_dual: Iterable[Action], abstraction: LabelAbstraction) -> FrozenSet[str]:
    tokens = set()
    for a in ready_dual:
        if not is_blocking(a, abstraction.nonblocking):
            raise PreconditionError(f"{a} is non-blocking and has no abstraction")
        tokens.add(abstraction.abstract(a))
    return frozenset(tokens)

def _blocking_alphabet(graph, abstraction: LabelAbstraction) -> List[Action]:
    return sorted(a for a in graph.alphabet if is_blocking(a, abstraction.nonblocking))

def abstraction_respects_tests(abstraction: LabelAbstraction, graphs: Iterable) -> List[str]:
    """
    Tests must not tell apart actions with the same phi image: whenever a
    test state enables b it enables every b' with phi(b') = phi(b).
    Returns the violations found.
    """
    violations = []
    for graph in graphs:
        candidates = _blocking_alphabet(graph, abstraction)
        for state in graph.states:
            ready = {a for a in graph.visible(state) if is_blocking(a, abstraction.nonblocking)}
            for b in sorted(ready):
                image = abstraction.phi(b)
                for other in candidates:
                    if other not in ready and abstraction.phi(other) == image:
                        violations.append(f"{state}: enables {b} but not {other}")
    return violations

def abstraction_respects_programs(abstraction: LabelAbstraction, graphs: Iterable) -> List[str]:
    """
    Programs must not tell apart Y tokens that delta merges: if b is in the
    co-ready set and delta(phi(b')) = delta(phi(b)) then phi(b') is among the
    phi images of the co-ready set. Returns the violations found.
    """
    violations = []
    for graph in graphs:
        candidates = _blocking_alphabet(graph, abstraction)
        for state in graph.states:
            ready = graph.co_ready(state)
            images = {abstraction.phi(b) for b in ready}
            for b in sorted(ready):
                merged = abstraction.abstract(b)
                for other in candidates:
                    if abstraction.abstract(other) == merged and abstraction.phi(other) not in images:
                        violations.append(f"{state}: {b} is co-ready but {abstraction.phi(other)} is not")
    return violations

def polarity_of_token(token: str) -> Polarity:
    stripped = _strip_payload(token)
    if not stripped or stripped[-1] not in "?!":
        raise AbstractionError(f"Token {token!r} does not name an action")
    return Polarity(stripped[-1])
