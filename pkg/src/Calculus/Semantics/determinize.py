from collections import deque
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.Calculus.Semantics.exploration import explore
from src.Calculus.Semantics.graph import Graph
from src.Calculus.utils.errors import IndeterminateError, UndefinedInterpretation
from src.Calculus.utils.types import Action, Label

DetState = FrozenSet[str]

def tau_closure(graph: Graph, states: Iterable[str]) -> DetState:
    seen = set(states)
    queue = deque(seen)
    while queue:
        s = queue.popleft()
        for t in graph.tau_successors(s):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return frozenset(seen)

def has_frontier_gap(graph: Graph, states: DetState, action: Label) -> bool:
    """True when some member may be missing ``action`` because its mailbox is full."""
    return graph.is_mailbox_input(action) and bool(states & graph.frontier)

def det_step(graph: Graph, states: DetState, action: Action, exact: bool = True) -> DetState:
    """
    The weak, tau-closed successor of a set of states. With ``exact`` set,
    stepping through a mailbox input from a frontier member is refused.
    """
    if exact and has_frontier_gap(graph, states, action):
        raise IndeterminateError(
            f"{action} is not explored from every member of the set (mailbox capacity)"
        )
    targets = set()
    for s in states:
        targets |= graph.successors(s, action)
    return tau_closure(graph, targets)

def weak_successors(graph: Graph, states: Iterable[str], trace: Sequence[Action]) -> DetState:
    current = tau_closure(graph, states)
    for a in trace:
        current = det_step(graph, current, a)
    return current

def diverges(graph: Graph, state: str) -> bool:
    graph.require_complete("divergence")
    return state in graph.divergent

def divergence_point(graph: Graph, root: str, trace: Sequence[Action]) -> Optional[int]:
    """
    Length of the shortest prefix of ``trace`` after which a divergent state
    is reachable, or None when the root converges along the whole trace.
    """
    graph.require_complete("convergence")
    current = tau_closure(graph, [root])
    for i, a in enumerate(trace):
        if current & graph.divergent:
            return i
        current = det_step(graph, current, a)
    if current & graph.divergent:
        return len(trace)
    return None

def waiting_states(graph: Graph, root: str, trace: Sequence[Action]) -> DetState:
    """The stable states reachable from ``root`` by the weak trace."""
    if divergence_point(graph, root, trace) is not None:
        raise UndefinedInterpretation(
            f"{root} diverges along {'.'.join(str(a) for a in trace) or 'the empty trace'}"
        )
    return frozenset(s for s in weak_successors(graph, [root], trace) if graph.is_stable(s))

# Strong powerset construction

def set_key(states: Iterable[str]) -> str:
    return "{" + ", ".join(sorted(states)) + "}"

def to_set_step(graph: Graph, states: DetState, label: Label) -> DetState:
    targets = set()
    for s in states:
        targets |= graph.successors(s, label)
    return frozenset(targets)

class ToSetLTS:
    """Sets of states of a base graph, moving by strong transitions."""

    def __init__(self, base: Graph):
        self.base = base

    def key(self, states: DetState) -> str:
        return set_key(states)

    def is_frontier(self, states: DetState) -> bool:
        return bool(states & self.base.frontier)

    def step(self, states: DetState) -> List[Tuple[Label, DetState]]:
        labels = {l for s in states for l, _ in self.base.moves(s)}
        moves = []
        for label in sorted(labels, key=str):
            target = to_set_step(self.base, states, label)
            if target:
                moves.append((label, target))
        return moves

def to_set_graph(graph: Graph, bound: Optional[int] = None, roots: Optional[Iterable[str]] = None) -> Graph:
    graph.require_complete("the powerset construction")
    root = frozenset(roots) if roots is not None else frozenset([graph.root])
    return explore(root, ToSetLTS(graph), bound, graph.nonblocking, graph.alphabet)
