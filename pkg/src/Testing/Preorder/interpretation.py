from typing import FrozenSet, Iterable, List, Optional, Sequence

from src.Calculus.Labels.abstractions import LabelAbstraction, coR_abstract
from src.Calculus.Semantics.determinize import divergence_point, waiting_states
from src.Calculus.Semantics.graph import Graph
from src.Calculus.utils.types import Action

AcceptanceSet = FrozenSet[FrozenSet[str]]

def converges_along(g: Graph, root: str, s: Sequence[Action]) -> bool:
    return divergence_point(g, root, s) is None

def abstract_co_ready(g: Graph, state: str, abstraction: LabelAbstraction) -> FrozenSet[str]:
    return coR_abstract(g.co_ready(state), abstraction)

def interp(
    g: Graph, root: str, s: Sequence[Action], abstraction: LabelAbstraction
) -> Optional[AcceptanceSet]:
    """
    The abstracted co-ready sets of the waiting states reached by ``s``.
    None stands for the undefined interpretation of a divergent root.
    """
    if not converges_along(g, root, s):
        return None
    return frozenset(abstract_co_ready(g, q, abstraction) for q in waiting_states(g, root, s))

def interp_set(
    g: Graph, roots: Iterable[str], s: Sequence[Action], abstraction: LabelAbstraction
) -> Optional[AcceptanceSet]:
    result: set = set()
    for root in roots:
        member = interp(g, root, s, abstraction)
        if member is None:
            return None
        result |= member
    return frozenset(result)

def acc_leq(left: AcceptanceSet, right: AcceptanceSet) -> bool:
    """Every set on the right contains some set on the left."""
    return all(any(y <= x for y in left) for x in right)

def acceptance_at(
    g: Graph, root: str, s: Sequence[Action], abstraction: LabelAbstraction
) -> Optional[List[List[str]]]:
    """The interpretation as sorted lists, for documents and certificates."""
    sets = interp(g, root, s, abstraction)
    if sets is None:
        return None
    return render_acceptance(sets)

def render_acceptance(sets: Iterable[FrozenSet[str]]) -> List[List[str]]:
    return sorted(sorted(x) for x in sets)
