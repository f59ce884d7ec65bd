"""
Process terms of value-passing CCS and the operations on them that do not
involve transitions: free names and variables, substitution, the good
predicate, the asynchrony restriction and pretty printing.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Union

from src.Calculus.utils.errors import OpenTermError
from src.Calculus.utils.types import Multiset

# Value expressions

@dataclass(frozen=True)
class Lit:
    value: str

@dataclass(frozen=True)
class ValueVar:
    name: str

Expr = Union[Lit, ValueVar]

@dataclass(frozen=True)
class Eq:
    left: Expr
    right: Expr

# Processes

@dataclass(frozen=True)
class Nil:
    pass

@dataclass(frozen=True)
class One:
    pass

@dataclass(frozen=True)
class Input:
    channel: str
    var: str
    body: "Process"

@dataclass(frozen=True)
class Output:
    channel: str
    payload: Expr
    body: "Process"

@dataclass(frozen=True)
class TauPrefix:
    body: "Process"

@dataclass(frozen=True)
class Sum:
    left: "Process"
    right: "Process"

@dataclass(frozen=True)
class Par:
    left: "Process"
    right: "Process"

@dataclass(frozen=True)
class Restrict:
    channel: str
    body: "Process"

@dataclass(frozen=True)
class IfThenElse:
    cond: Eq
    then: "Process"
    orelse: "Process"

@dataclass(frozen=True)
class Rec:
    var: str
    body: "Process"

@dataclass(frozen=True)
class ProcVar:
    name: str

Process = Union[
    Nil, One, Input, Output, TauPrefix, Sum, Par, Restrict, IfThenElse, Rec, ProcVar
]

NIL = Nil()
ONE = One()

GUARDS = (Nil, One, Input, Output, TauPrefix, Sum)

def is_guard(p: Process) -> bool:
    return isinstance(p, GUARDS)

def sum_of(terms: Iterable[Process]) -> Process:
    """Right-nested sum; the empty sum is 0."""
    terms = list(terms)
    if not terms:
        return NIL
    result = terms[-1]
    for t in reversed(terms[:-1]):
        result = Sum(t, result)
    return result

def par_of(terms: Iterable[Process]) -> Process:
    terms = list(terms)
    if not terms:
        return NIL
    result = terms[-1]
    for t in reversed(terms[:-1]):
        result = Par(t, result)
    return result

def restrict_all(channels: Iterable[str], body: Process) -> Process:
    for c in reversed(list(channels)):
        body = Restrict(c, body)
    return body

def summands(p: Process) -> List[Process]:
    if isinstance(p, Sum):
        return summands(p.left) + summands(p.right)
    return [p]

def components(p: Process) -> List[Process]:
    if isinstance(p, Par):
        return components(p.left) + components(p.right)
    return [p]

def mailbox_term(mail: Multiset) -> Process:
    """The parallel composition of one output atom per message."""
    return par_of(Output(a.channel, Lit(a.payload), NIL) for a in mail.elements())

# Free names and variables

@lru_cache(maxsize=None)
def free_names(p: Process) -> FrozenSet[str]:
    if isinstance(p, (Input, Output)):
        return free_names(p.body) | {p.channel}
    if isinstance(p, (TauPrefix, Rec)):
        return free_names(p.body)
    if isinstance(p, (Sum, Par)):
        return free_names(p.left) | free_names(p.right)
    if isinstance(p, Restrict):
        return free_names(p.body) - {p.channel}
    if isinstance(p, IfThenElse):
        return free_names(p.then) | free_names(p.orelse)
    return frozenset()

def _expr_vars(e: Expr) -> FrozenSet[str]:
    return frozenset([e.name]) if isinstance(e, ValueVar) else frozenset()

@lru_cache(maxsize=None)
def free_value_vars(p: Process) -> FrozenSet[str]:
    if isinstance(p, Input):
        return free_value_vars(p.body) - {p.var}
    if isinstance(p, Output):
        return free_value_vars(p.body) | _expr_vars(p.payload)
    if isinstance(p, (TauPrefix, Rec, Restrict)):
        return free_value_vars(p.body)
    if isinstance(p, (Sum, Par)):
        return free_value_vars(p.left) | free_value_vars(p.right)
    if isinstance(p, IfThenElse):
        return (
            _expr_vars(p.cond.left)
            | _expr_vars(p.cond.right)
            | free_value_vars(p.then)
            | free_value_vars(p.orelse)
        )
    return frozenset()

@lru_cache(maxsize=None)
def free_proc_vars(p: Process) -> FrozenSet[str]:
    if isinstance(p, ProcVar):
        return frozenset([p.name])
    if isinstance(p, Rec):
        return free_proc_vars(p.body) - {p.var}
    if isinstance(p, (Input, Output, TauPrefix, Restrict)):
        return free_proc_vars(p.body)
    if isinstance(p, (Sum, Par)):
        return free_proc_vars(p.left) | free_proc_vars(p.right)
    if isinstance(p, IfThenElse):
        return free_proc_vars(p.then) | free_proc_vars(p.orelse)
    return frozenset()

def is_closed(p: Process) -> bool:
    return not free_value_vars(p) and not free_proc_vars(p)

def require_closed(p: Process) -> None:
    if not is_closed(p):
        names = sorted(free_value_vars(p) | free_proc_vars(p))
        raise OpenTermError(f"Term {render(p)} has free variables: {', '.join(names)}")

# Substitution

def _subst_expr(e: Expr, var: str, value: str) -> Expr:
    if isinstance(e, ValueVar) and e.name == var:
        return Lit(value)
    return e

def substitute_value(p: Process, var: str, value: str) -> Process:
    """Replace the free occurrences of a value variable by a literal."""
    if isinstance(p, Input):
        if p.var == var:
            return p
        return Input(p.channel, p.var, substitute_value(p.body, var, value))
    if isinstance(p, Output):
        return Output(p.channel, _subst_expr(p.payload, var, value), substitute_value(p.body, var, value))
    if isinstance(p, TauPrefix):
        return TauPrefix(substitute_value(p.body, var, value))
    if isinstance(p, Sum):
        return Sum(substitute_value(p.left, var, value), substitute_value(p.right, var, value))
    if isinstance(p, Par):
        return Par(substitute_value(p.left, var, value), substitute_value(p.right, var, value))
    if isinstance(p, Restrict):
        return Restrict(p.channel, substitute_value(p.body, var, value))
    if isinstance(p, IfThenElse):
        cond = Eq(_subst_expr(p.cond.left, var, value), _subst_expr(p.cond.right, var, value))
        return IfThenElse(cond, substitute_value(p.then, var, value), substitute_value(p.orelse, var, value))
    if isinstance(p, Rec):
        return Rec(p.var, substitute_value(p.body, var, value))
    return p

def substitute_proc(p: Process, var: str, replacement: Process) -> Process:
    """
    Replace the free occurrences of a process variable. The replacement is
    expected to be closed, so no renaming is needed.
    """
    if isinstance(p, ProcVar):
        return replacement if p.name == var else p
    if isinstance(p, Rec):
        if p.var == var:
            return p
        return Rec(p.var, substitute_proc(p.body, var, replacement))
    if isinstance(p, Input):
        return Input(p.channel, p.var, substitute_proc(p.body, var, replacement))
    if isinstance(p, Output):
        return Output(p.channel, p.payload, substitute_proc(p.body, var, replacement))
    if isinstance(p, TauPrefix):
        return TauPrefix(substitute_proc(p.body, var, replacement))
    if isinstance(p, Sum):
        return Sum(substitute_proc(p.left, var, replacement), substitute_proc(p.right, var, replacement))
    if isinstance(p, Par):
        return Par(substitute_proc(p.left, var, replacement), substitute_proc(p.right, var, replacement))
    if isinstance(p, Restrict):
        return Restrict(p.channel, substitute_proc(p.body, var, replacement))
    if isinstance(p, IfThenElse):
        return IfThenElse(
            p.cond,
            substitute_proc(p.then, var, replacement),
            substitute_proc(p.orelse, var, replacement),
        )
    return p

# Conditions and good

def evaluate(cond: Eq) -> Optional[bool]:
    """The truth value of a closed condition, None while it mentions variables."""
    if isinstance(cond.left, Lit) and isinstance(cond.right, Lit):
        return cond.left.value == cond.right.value
    if isinstance(cond.left, ValueVar) and isinstance(cond.right, ValueVar):
        if cond.left.name == cond.right.name:
            return True
    return None

def good(p: Process) -> bool:
    if isinstance(p, One):
        return True
    if isinstance(p, Restrict):
        return good(p.body)
    if isinstance(p, (Par, Sum)):
        return good(p.left) or good(p.right)
    if isinstance(p, IfThenElse):
        value = evaluate(p.cond)
        if value is None:
            raise OpenTermError(f"Cannot decide good on open condition in {render(p)}")
        return good(p.then) if value else good(p.orelse)
    return False

# Asynchrony restriction

def asynchrony_violations(p: Process) -> List[str]:
    """
    Output prefixes of the asynchronous calculi must have continuation 0 and
    must not appear as summands.
    """
    found: List[str] = []

    def visit(q: Process) -> None:
        if isinstance(q, Output):
            if not isinstance(q.body, Nil):
                found.append(f"output {q.channel}!{render_expr(q.payload)} has a continuation")
            return
        if isinstance(q, Sum):
            for s in summands(q):
                if isinstance(s, Output):
                    found.append(f"output {s.channel}!{render_expr(s.payload)} used as a summand")
                visit(s)
            return
        if isinstance(q, (Input, TauPrefix, Restrict, Rec)):
            visit(q.body)
        elif isinstance(q, Par):
            visit(q.left)
            visit(q.right)
        elif isinstance(q, IfThenElse):
            visit(q.then)
            visit(q.orelse)

    visit(p)
    return found

def is_async(p: Process) -> bool:
    return not asynchrony_violations(p)

# Rendering

def render_expr(e: Expr) -> str:
    return e.value if isinstance(e, Lit) else e.name

def _prefix_body(p: Process) -> str:
    text = render(p)
    return f"({text})" if isinstance(p, (Sum, Par)) else text

def _sum_operand(p: Process) -> str:
    text = render(p)
    return f"({text})" if isinstance(p, Par) else text

@lru_cache(maxsize=None)
def render(p: Process) -> str:
    """
    Print a term in the input grammar. Prefixes bind tighter than sums,
    which bind tighter than parallel composition.
    """
    if isinstance(p, Nil):
        return "0"
    if isinstance(p, One):
        return "1"
    if isinstance(p, ProcVar):
        return p.name
    if isinstance(p, Input):
        return f"{p.channel}?({p.var}).{_prefix_body(p.body)}"
    if isinstance(p, Output):
        return f"{p.channel}!{render_expr(p.payload)}.{_prefix_body(p.body)}"
    if isinstance(p, TauPrefix):
        return f"tau.{_prefix_body(p.body)}"
    if isinstance(p, Restrict):
        return f"new {p.channel}.{_prefix_body(p.body)}"
    if isinstance(p, Rec):
        return f"rec {p.var}.{_prefix_body(p.body)}"
    if isinstance(p, IfThenElse):
        cond = f"{render_expr(p.cond.left)} = {render_expr(p.cond.right)}"
        return f"if {cond} then {_prefix_body(p.then)} else {_prefix_body(p.orelse)}"
    if isinstance(p, Sum):
        return " + ".join(_sum_operand(s) for s in summands(p))
    if isinstance(p, Par):
        return " | ".join(render(c) for c in components(p))
    raise TypeError(f"Not a process: {p!r}")
