"""
Normal forms for structural congruence.

Sums and parallel compositions are flattened, stripped of 0 and sorted by
their printed form. Closed conditionals are resolved. Restrictions are
pushed as far inward as their names allow: a restricted name ends up over
the smallest group of parallel components that share it, with nested
restrictions sorted by name. Recursion is never unfolded.
"""

from functools import lru_cache
from typing import List

import networkx as nx

from src.Calculus.Syntax.terms import (
    IfThenElse,
    Input,
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
    components,
    evaluate,
    free_names,
    par_of,
    render,
    restrict_all,
    sum_of,
    summands,
)

def _sorted(terms: List[Process]) -> List[Process]:
    return sorted(terms, key=render)

@lru_cache(maxsize=None)
def canonical(p: Process) -> Process:
    if isinstance(p, (Nil, One, ProcVar)):
        return p
    if isinstance(p, Input):
        return Input(p.channel, p.var, canonical(p.body))
    if isinstance(p, Output):
        return Output(p.channel, p.payload, canonical(p.body))
    if isinstance(p, TauPrefix):
        return TauPrefix(canonical(p.body))
    if isinstance(p, Rec):
        return Rec(p.var, canonical(p.body))
    if isinstance(p, IfThenElse):
        value = evaluate(p.cond)
        if value is True:
            return canonical(p.then)
        if value is False:
            return canonical(p.orelse)
        return IfThenElse(p.cond, canonical(p.then), canonical(p.orelse))
    if isinstance(p, Sum):
        operands = []
        for s in summands(p):
            operands.extend(x for x in summands(canonical(s)) if not isinstance(x, Nil))
        return sum_of(_sorted(operands))
    if isinstance(p, Par):
        parts = []
        for c in components(p):
            parts.extend(x for x in components(canonical(c)) if not isinstance(x, Nil))
        return par_of(_sorted(parts))
    if isinstance(p, Restrict):
        names = []
        while isinstance(p, Restrict):
            names.append(p.channel)
            p = p.body
        return _scope(names, canonical(p))
    raise TypeError(f"Not a process: {p!r}")

def _scope(names: List[str], body: Process) -> Process:
    """Restrict ``names`` (outermost first) over an already canonical body."""
    chain = list(names)
    core = body
    while isinstance(core, Restrict):
        chain.append(core.channel)
        core = core.body
    # an inner binder shadows an outer one with the same name
    bound: List[str] = []
    for name in reversed(chain):
        if name not in bound:
            bound.append(name)
    parts = [c for c in components(core) if not isinstance(c, Nil)]
    return _distribute(bound, parts)

def _users(name: str, parts: List[Process]) -> List[int]:
    return [i for i, c in enumerate(parts) if name in free_names(c)]

def _distribute(names: List[str], parts: List[Process]) -> Process:
    names = [n for n in names if _users(n, parts)]
    if not names:
        return par_of(_sorted(parts))
    if len(parts) == 1:
        return restrict_all(sorted(names), parts[0])

    pushed = True
    while pushed:
        pushed = False
        for name in sorted(names):
            users = _users(name, parts)
            if len(users) == 1:
                i = users[0]
                parts = parts[:i] + components(_scope([name], parts[i])) + parts[i + 1 :]
                names.remove(name)
                pushed = True
                break

    # group the remaining components by the names they share
    sharing = nx.Graph()
    sharing.add_nodes_from(range(len(parts)))
    for name in names:
        users = _users(name, parts)
        sharing.add_edges_from((users[0], other) for other in users[1:])

    result: List[Process] = []
    for members in nx.connected_components(sharing):
        group_parts = [parts[i] for i in sorted(members)]
        group_names = sorted(n for n in names if _users(n, group_parts))
        if group_names:
            result.append(restrict_all(group_names, par_of(_sorted(group_parts))))
        else:
            result.extend(group_parts)
    return par_of(_sorted(result))

def state_key(p: Process) -> str:
    return render(canonical(p))

def congruent(p: Process, q: Process) -> bool:
    return canonical(p) == canonical(q)
