from typing import Iterable, List, Optional, Sequence, Tuple

from src.Calculus.Labels.labels import dual
from src.Calculus.utils.types import Action, Label, Multiset, NonBlockingSet

def nonblocking_universe(alphabet: Iterable[Action], nonblocking: NonBlockingSet) -> List[Action]:
    return sorted(a for a in alphabet if a in nonblocking)

class MultisetLTS:
    """
    Multisets of pending non-blocking messages. A multiset accepts co(eta),
    adding eta, and emits any eta it holds. There are no tau steps.

    With a capacity, full multisets accept nothing more and are reported as
    frontier states.
    """

    def __init__(self, universe: Sequence[Action], capacity: Optional[int] = None):
        self.universe = list(universe)
        self.capacity = capacity

    def key(self, m: Multiset) -> str:
        return m.render()

    def is_frontier(self, m: Multiset) -> bool:
        return self.capacity is not None and m.size >= self.capacity

    def step(self, m: Multiset) -> List[Tuple[Label, Multiset]]:
        moves: List[Tuple[Label, Multiset]] = []
        if not self.is_frontier(m):
            moves += [(dual(eta), m.add(eta)) for eta in self.universe]
        moves += [(eta, m.remove(eta)) for eta in m.distinct()]
        return sorted(moves, key=lambda mv: (str(mv[0]), mv[1].render()))

def multiset_step(
    m: Multiset,
    nonblocking: NonBlockingSet,
    alphabet: Iterable[Action],
    capacity: Optional[int] = None,
) -> List[Tuple[Label, Multiset]]:
    return MultisetLTS(nonblocking_universe(alphabet, nonblocking), capacity).step(m)
