import logging
from typing import Iterable, List, Optional, Sequence, Set

import networkx as nx

from src.Calculus.Semantics.composition import ComposedLTS
from src.Calculus.Semantics.exploration import explore, require_complete
from src.Calculus.Semantics.forwarder import ForwarderLTS
from src.Calculus.Semantics.graph import Graph
from src.Calculus.Semantics.term_lts import TermLTS
from src.Calculus.Labels.labels import alphabet as action_alphabet
from src.Calculus.Syntax.terms import Process, free_names, good, render
from src.Calculus.utils.types import ComposedState, NonBlockingSet
from src.Testing.utils.types import MustResult, Verdict
from src.config.settings import settings

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

def composed_graph(
    server: Process,
    client: Process,
    val: Sequence[str],
    nonblocking: NonBlockingSet,
    lift: Optional[bool] = None,
    bound: Optional[int] = None,
) -> Graph:
    """
    The tau graph of a server against a client. A lifted server runs with an
    unbounded mailbox, which only the client's outputs can fill.
    """
    lift = not nonblocking.is_empty if lift is None else lift
    client_engine = TermLTS(val)
    if lift:
        names = sorted(free_names(server) | free_names(client))
        server_engine = ForwarderLTS(val, nonblocking, action_alphabet(names, val), None)
    else:
        server_engine = TermLTS(val)
    engine = ComposedLTS(server_engine, client_engine)
    root = ComposedState(server_engine.root(server), client_engine.root(client))
    bound = bound or settings.EXPLORATION_BOUND
    graph = explore(root, engine, bound, nonblocking)
    return require_complete(graph, f"the composition of {render(server)} with {render(client)}", bound)

def _failing_path(graph: Graph, good_states: Set[str]) -> List[str]:
    bad = nx.DiGraph()
    bad.add_nodes_from(s for s in graph.states if s not in good_states)
    bad.add_edges_from(
        (u, v) for u, v in graph.tau_graph.edges if u not in good_states and v not in good_states
    )
    reachable = nx.descendants(bad, graph.root) | {graph.root}
    paths = nx.single_source_shortest_path(bad, graph.root)

    stuck = [s for s in reachable if graph.is_stable(s)]
    if stuck:
        target = min(stuck, key=lambda s: (len(paths[s]), s))
        return paths[target]

    region = bad.subgraph(reachable)
    try:
        cycle = nx.find_cycle(region, source=graph.root)
    except nx.NetworkXNoCycle:
        return []
    entry = cycle[0][0]
    return paths[entry] + [v for _, v in cycle]

def must(
    server: Process,
    client: Process,
    val: Sequence[str],
    nonblocking: NonBlockingSet = NonBlockingSet(),
    lift: Optional[bool] = None,
    bound: Optional[int] = None,
) -> MustResult:
    """
    Whether every maximal computation of the server against the client
    reaches a state where the client is good. When it does not, the result
    carries a good-avoiding path ending in a stuck state or closing a cycle.
    """
    graph = composed_graph(server, client, val, nonblocking, lift, bound)
    good_states = {k for k, s in graph.states.items() if good(s.client)}
    if graph.root in good_states:
        return MustResult(holds=True, states=len(graph))
    path = _failing_path(graph, good_states)
    holds = not path
    logger.info(f"must({render(server)}, {render(client)}) = {holds} over {len(graph)} states")
    return MustResult(holds=holds, failing_path=path, states=len(graph))

def must_leq_sample(
    p: Process,
    q: Process,
    tests: Iterable[Process],
    val: Sequence[str],
    nonblocking: NonBlockingSet = NonBlockingSet(),
    lift: Optional[bool] = None,
    bound: Optional[int] = None,
) -> Verdict:
    """
    Checks that every given test passed by p is passed by q. A failure is a
    certified non-refinement; success over a finite sample is only evidence.
    """
    checked = 0
    for t in tests:
        checked += 1
        if must(p, t, val, nonblocking, lift, bound).holds and not must(q, t, val, nonblocking, lift, bound).holds:
            logger.info(f"Test {render(t)} separates {render(p)} from {render(q)}")
            return Verdict(holds=False, witness_test=render(t), tests_checked=checked)
    return Verdict(holds=True, tests_checked=checked)
