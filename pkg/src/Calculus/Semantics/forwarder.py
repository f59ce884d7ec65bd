from typing import Iterable, List, Optional, Sequence, Tuple

from src.Calculus.Labels.labels import dual
from src.Calculus.Semantics.mailbox import MultisetLTS, nonblocking_universe
from src.Calculus.Semantics.term_lts import TermLTS
from src.Calculus.Syntax.congruence import canonical
from src.Calculus.Syntax.terms import Lit, Nil, Output, Process, components, par_of, render
from src.Calculus.utils.types import (
    TAU,
    Action,
    FwState,
    Label,
    Multiset,
    NonBlockingSet,
    Polarity,
)

FW_SEPARATOR = " |> "

class ForwarderLTS:
    """
    A process running next to a mailbox of non-blocking messages.

    Moves are those of the process (left), those of the mailbox (right) and
    the process consuming a message from the mailbox (a tau). Output atoms
    of non-blocking actions sitting at the top of the process are moved
    into the mailbox, which is the identification used for states.
    """

    def __init__(
        self,
        val: Sequence[str],
        nonblocking: NonBlockingSet,
        alphabet: Iterable[Action],
        capacity: Optional[int] = None,
    ):
        self.term = TermLTS(val)
        self.nonblocking = nonblocking
        self.mailbox = MultisetLTS(nonblocking_universe(alphabet, nonblocking), capacity)

    def _atom(self, p: Process) -> Optional[Action]:
        if isinstance(p, Output) and isinstance(p.body, Nil) and isinstance(p.payload, Lit):
            action = Action(p.channel, Polarity.OUTPUT, p.payload.value)
            if action in self.nonblocking:
                return action
        return None

    def normalize(self, proc: Process, mail: Multiset) -> FwState:
        if self.nonblocking.is_empty:
            return FwState(proc, mail)
        rest, atoms = [], []
        for c in components(proc):
            atom = self._atom(c)
            if atom is None:
                rest.append(c)
            else:
                atoms.append(atom)
        if not atoms:
            return FwState(proc, mail)
        return FwState(canonical(par_of(rest)), mail.union(Multiset.of(atoms)))

    def root(self, p: Process, mail: Multiset = Multiset()) -> FwState:
        return self.normalize(self.term.root(p), mail)

    def key(self, s: FwState) -> str:
        return f"{render(s.proc)}{FW_SEPARATOR}{s.mail.render()}"

    def is_frontier(self, s: FwState) -> bool:
        return self.mailbox.is_frontier(s.mail)

    def step(self, s: FwState) -> List[Tuple[Label, FwState]]:
        term_moves = self.term.step(s.proc)
        moves = [(l, self.normalize(p, s.mail)) for l, p in term_moves]
        moves += [(l, FwState(s.proc, m)) for l, m in self.mailbox.step(s.mail)]
        for l, p in term_moves:
            if isinstance(l, Action) and dual(l) in self.nonblocking and s.mail.count(dual(l)):
                moves.append((TAU, self.normalize(p, s.mail.remove(dual(l)))))
        unique = {(l, t) for l, t in moves}
        return sorted(unique, key=lambda mv: (str(mv[0]), self.key(mv[1])))

def fw_step(
    s: FwState,
    val: Sequence[str],
    nonblocking: NonBlockingSet,
    alphabet: Iterable[Action],
    capacity: Optional[int] = None,
) -> List[Tuple[Label, FwState]]:
    engine = ForwarderLTS(val, nonblocking, alphabet, capacity)
    return engine.step(engine.normalize(canonical(s.proc), s.mail))
