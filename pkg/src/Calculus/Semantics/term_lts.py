from functools import lru_cache
from typing import List, Sequence, Tuple

from src.Calculus.Labels.labels import dual
from src.Calculus.Syntax.congruence import canonical
from src.Calculus.Syntax.terms import (
    IfThenElse,
    Input,
    Lit,
    Nil,
    One,
    Output,
    Par,
    Process,
    ProcVar,
    Rec,
    Restrict,
    Sum,
    TauPrefix,
    evaluate,
    render,
    require_closed,
    substitute_proc,
    substitute_value,
)
from src.Calculus.utils.errors import OpenTermError, ValueDomainError
from src.Calculus.utils.types import TAU, Action, Label, Polarity, is_tau

Move = Tuple[Label, Process]

def _raw_moves(p: Process, val: Tuple[str, ...]) -> List[Move]:
    """Successors by the early-style rules, before canonicalisation."""
    if isinstance(p, (Nil, One)):
        return []
    if isinstance(p, ProcVar):
        raise OpenTermError(f"Free process variable {p.name}")
    if isinstance(p, Input):
        return [
            (Action(p.channel, Polarity.INPUT, v), substitute_value(p.body, p.var, v))
            for v in val
        ]
    if isinstance(p, Output):
        if not isinstance(p.payload, Lit):
            raise OpenTermError(f"Output payload {p.payload.name} is unbound")
        if p.payload.value not in val:
            raise ValueDomainError(f"Value {p.payload.value} is not in the domain")
        return [(Action(p.channel, Polarity.OUTPUT, p.payload.value), p.body)]
    if isinstance(p, TauPrefix):
        return [(TAU, p.body)]
    if isinstance(p, Sum):
        return _raw_moves(p.left, val) + _raw_moves(p.right, val)
    if isinstance(p, Par):
        left = _raw_moves(p.left, val)
        right = _raw_moves(p.right, val)
        moves = [(l, Par(t, p.right)) for l, t in left]
        moves += [(l, Par(p.left, t)) for l, t in right]
        for l, t in left:
            if is_tau(l):
                continue
            co = dual(l)
            moves += [(TAU, Par(t, u)) for m, u in right if m == co]
        return moves
    if isinstance(p, Restrict):
        return [
            (l, Restrict(p.channel, t))
            for l, t in _raw_moves(p.body, val)
            if is_tau(l) or l.channel != p.channel
        ]
    if isinstance(p, IfThenElse):
        value = evaluate(p.cond)
        if value is None:
            raise OpenTermError(f"Open condition in {render(p)}")
        return _raw_moves(p.then if value else p.orelse, val)
    if isinstance(p, Rec):
        return [(TAU, substitute_proc(p.body, p.var, p))]
    raise TypeError(f"Not a process: {p!r}")

@lru_cache(maxsize=65536)
def _moves(p: Process, val: Tuple[str, ...]) -> Tuple[Move, ...]:
    moves = {(label, canonical(target)) for label, target in _raw_moves(p, val)}
    return tuple(sorted(moves, key=lambda m: (str(m[0]), render(m[1]))))

def term_step(p: Process, val: Sequence[str]) -> List[Move]:
    """All transitions of a closed term, with canonical targets."""
    require_closed(p)
    return list(_moves(canonical(p), tuple(val)))

class TermLTS:
    """The transition system of closed terms, states being canonical terms."""

    def __init__(self, val: Sequence[str]):
        self.val = tuple(val)

    def root(self, p: Process) -> Process:
        require_closed(p)
        return canonical(p)

    def key(self, p: Process) -> str:
        return render(p)

    def is_frontier(self, p: Process) -> bool:
        return False

    def step(self, p: Process) -> List[Move]:
        return list(_moves(p, self.val))
