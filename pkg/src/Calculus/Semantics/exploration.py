import logging
from collections import deque
from typing import Any, Iterable, List, Optional, Sequence, Set

from src.Calculus.Labels.labels import alphabet as action_alphabet
from src.Calculus.Semantics.forwarder import ForwarderLTS
from src.Calculus.Semantics.graph import Graph
from src.Calculus.Semantics.mailbox import MultisetLTS, nonblocking_universe
from src.Calculus.Semantics.term_lts import TermLTS
from src.Calculus.Syntax.terms import Process, free_names
from src.Calculus.utils.errors import ExplorationBoundExceeded, PreconditionError
from src.Calculus.utils.types import Action, Multiset, NonBlockingSet, Transition
from src.config.settings import settings

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

def explore(
    root: Any,
    engine: Any,
    bound: Optional[int] = None,
    nonblocking: NonBlockingSet = NonBlockingSet(),
    alphabet: Iterable[Action] = frozenset(),
) -> Graph:
    """
    Breadth-first exploration of the states reachable from ``root``.

    At most ``bound`` distinct states are kept; when more are reachable the
    graph is returned with ``complete`` set to False.
    """
    bound = bound or settings.EXPLORATION_BOUND
    if bound < 1:
        raise PreconditionError("The exploration bound must be at least 1")
    root_key = engine.key(root)
    states = {root_key: root}
    queue = deque([(root_key, root)])
    transitions: List[Transition] = []
    frontier: Set[str] = set()
    complete = True

    while queue:
        key, state = queue.popleft()
        if engine.is_frontier(state):
            frontier.add(key)
        for label, target in engine.step(state):
            target_key = engine.key(target)
            if target_key not in states:
                if len(states) >= bound:
                    complete = False
                    continue
                states[target_key] = target
                queue.append((target_key, target))
            transitions.append(Transition(key, label, target_key))

    if not complete:
        logger.warning(f"Exploration from {root_key} truncated at {bound} states")
    return Graph(
        root=root_key,
        states=states,
        transitions=transitions,
        complete=complete,
        nonblocking=nonblocking,
        alphabet=frozenset(alphabet),
        frontier=frozenset(frontier),
    )

def require_complete(graph: Graph, what: str, bound: int) -> Graph:
    if not graph.complete:
        raise ExplorationBoundExceeded(what, bound)
    return graph

def term_graph(
    p: Process,
    val: Sequence[str],
    nonblocking: NonBlockingSet = NonBlockingSet(),
    bound: Optional[int] = None,
    channels: Optional[Iterable[str]] = None,
) -> Graph:
    engine = TermLTS(val)
    names = free_names(p) if channels is None else channels
    return explore(engine.root(p), engine, bound, nonblocking, action_alphabet(names, val))

def fw_graph(
    p: Process,
    val: Sequence[str],
    nonblocking: NonBlockingSet,
    bound: Optional[int] = None,
    channels: Optional[Iterable[str]] = None,
    capacity: Optional[int] = None,
) -> Graph:
    """The forwarder lifting of a term, with a bounded mailbox."""
    names = sorted(free_names(p) if channels is None else channels)
    alphabet = action_alphabet(names, val)
    capacity = settings.MAIL_CAPACITY if capacity is None else capacity
    engine = ForwarderLTS(val, nonblocking, alphabet, capacity)
    return explore(engine.root(p), engine, bound, nonblocking, alphabet)

def multiset_graph(
    channels: Iterable[str],
    val: Sequence[str],
    nonblocking: NonBlockingSet,
    capacity: Optional[int] = None,
    bound: Optional[int] = None,
) -> Graph:
    alphabet = action_alphabet(sorted(channels), val)
    capacity = settings.MAIL_CAPACITY if capacity is None else capacity
    engine = MultisetLTS(nonblocking_universe(alphabet, nonblocking), capacity)
    return explore(Multiset(), engine, bound, nonblocking, alphabet)

def process_graph(
    p: Process,
    val: Sequence[str],
    nonblocking: NonBlockingSet,
    lift: bool,
    bound: Optional[int] = None,
    channels: Optional[Iterable[str]] = None,
    capacity: Optional[int] = None,
) -> Graph:
    if lift:
        return fw_graph(p, val, nonblocking, bound, channels, capacity)
    return term_graph(p, val, nonblocking, bound, channels)
