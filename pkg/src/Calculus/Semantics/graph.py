from collections import defaultdict
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from src.Calculus.Labels.labels import co_ready, dual
from src.Calculus.utils.errors import IndeterminateError
from src.Calculus.utils.types import (
    Action,
    GraphDocument,
    Label,
    NonBlockingSet,
    StateDoc,
    Transition,
    TransitionDoc,
    is_tau,
)

class Graph:
    """
    An explored fragment of a transition system.

    States are identified by the canonical text of their payload. The graph
    is immutable once built; derived views (the tau subgraph, the divergent
    states) are computed lazily and cached.
    """

    def __init__(
        self,
        root: str,
        states: Dict[str, Any],
        transitions: Iterable[Transition],
        complete: bool,
        nonblocking: NonBlockingSet,
        alphabet: FrozenSet[Action] = frozenset(),
        frontier: FrozenSet[str] = frozenset(),
    ):
        self.root = root
        self.states = states
        self.transitions: List[Transition] = sorted(
            set(transitions), key=lambda t: (t.source, str(t.label), t.target)
        )
        self.complete = complete
        self.nonblocking = nonblocking
        self.alphabet = alphabet
        self.frontier = frontier
        self._out: Dict[str, List[Tuple[Label, str]]] = defaultdict(list)
        for t in self.transitions:
            self._out[t.source].append((t.label, t.target))

    def __len__(self) -> int:
        return len(self.states)

    def __contains__(self, state: str) -> bool:
        return state in self.states

    def moves(self, state: str) -> List[Tuple[Label, str]]:
        return self._out.get(state, [])

    def successors(self, state: str, label: Label) -> FrozenSet[str]:
        return frozenset(t for l, t in self.moves(state) if l == label)

    def tau_successors(self, state: str) -> FrozenSet[str]:
        return frozenset(t for l, t in self.moves(state) if is_tau(l))

    def is_stable(self, state: str) -> bool:
        return not self.tau_successors(state)

    def visible(self, state: str) -> FrozenSet[Action]:
        return frozenset(l for l, _ in self.moves(state) if isinstance(l, Action))

    def co_ready(self, state: str) -> FrozenSet[Action]:
        return co_ready(self.moves(state), self.nonblocking)

    def labels(self) -> List[Label]:
        return sorted({t.label for t in self.transitions}, key=str)

    def is_mailbox_input(self, label: Label) -> bool:
        """Inputs that feed the mailbox: those missing from frontier states."""
        return isinstance(label, Action) and dual(label) in self.nonblocking

    def has_transition(self, source: str, label: Label, target: str) -> bool:
        return (label, target) in self.moves(source)

    def require_complete(self, what: str = "this query") -> None:
        if not self.complete:
            raise IndeterminateError(
                f"The graph rooted at {self.root} was truncated; refusing to answer {what}"
            )

    @cached_property
    def tau_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.states)
        graph.add_edges_from(
            (t.source, t.target) for t in self.transitions if is_tau(t.label)
        )
        return graph

    @cached_property
    def divergent(self) -> FrozenSet[str]:
        """States from which an infinite sequence of tau steps is possible."""
        tau_graph = self.tau_graph
        cyclic: Set[str] = set()
        for component in nx.strongly_connected_components(tau_graph):
            if len(component) > 1:
                cyclic |= component
            else:
                node = next(iter(component))
                if tau_graph.has_edge(node, node):
                    cyclic.add(node)
        reaching = set(cyclic)
        reverse = tau_graph.reverse(copy=False)
        for node in cyclic:
            reaching |= nx.descendants(reverse, node) - reaching
        return frozenset(reaching)

    @cached_property
    def message_bound(self) -> Optional[int]:
        """
        The most mailbox messages a run of a term graph can consume or emit,
        or None when some cycle does either.
        """
        self.require_complete("the message bound")
        weighted = nx.DiGraph()
        weighted.add_nodes_from(self.states)
        for t in self.transitions:
            weight = 1 if self.is_mailbox_input(t.label) or t.label in self.nonblocking else 0
            if weighted.has_edge(t.source, t.target):
                weight = max(weight, weighted[t.source][t.target]["weight"])
            weighted.add_edge(t.source, t.target, weight=weight)
        condensed = nx.condensation(weighted)
        component = condensed.graph["mapping"]
        dag = nx.DiGraph()
        dag.add_nodes_from(condensed.nodes)
        for u, v, weight in weighted.edges(data="weight"):
            cu, cv = component[u], component[v]
            if cu == cv:
                if weight:
                    return None
                continue
            if dag.has_edge(cu, cv):
                weight = max(weight, dag[cu][cv]["weight"])
            dag.add_edge(cu, cv, weight=weight)
        return nx.dag_longest_path_length(dag, weight="weight")

    def to_document(self) -> GraphDocument:
        numbering = {state: i for i, state in enumerate(self.states)}
        return GraphDocument(
            root=numbering[self.root],
            complete=self.complete,
            states=[
                StateDoc(id=i, state=state, frontier=state in self.frontier)
                for state, i in numbering.items()
            ],
            transitions=[
                TransitionDoc(
                    source=numbering[t.source], label=str(t.label), target=numbering[t.target]
                )
                for t in self.transitions
            ],
        )
