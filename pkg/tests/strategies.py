"""Hypothesis strategies for closed finite-state processes of each calculus."""

from hypothesis import strategies as st

from src.Calculus.Labels.labels import alphabet
from src.Calculus.Syntax.terms import (
    NIL,
    ONE,
    Eq,
    IfThenElse,
    Input,
    Lit,
    Output,
    Par,
    ProcVar,
    Rec,
    Restrict,
    Sum,
    TauPrefix,
    ValueVar,
    is_guard,
)
from src.Calculus.utils.types import UNIT, CalculusId

OMEGA = Rec("X", TauPrefix(ProcVar("X")))

def guard(p):
    return p if is_guard(p) else TauPrefix(p)

def processes(
    calculus: CalculusId,
    channels=("a", "b"),
    val=("0", "1"),
    max_leaves=4,
    divergence=True,
    recursion=False,
):
    """
    Closed terms over ``channels``. With ``recursion`` set, loops that input
    before unfolding again are generated too; those consume without end.
    """
    values = list(val) if calculus.value_passing else [UNIT]
    channel = st.sampled_from(list(channels))
    value = st.sampled_from(values)
    leaves = [st.just(NIL), st.just(ONE)]
    if divergence:
        leaves.append(st.just(OMEGA))
    base = st.one_of(*leaves)

    def output(c, v, body):
        if calculus.asynchronous:
            return Par(Output(c, Lit(v), NIL), body)
        return Output(c, Lit(v), body)

    def extend(children):
        options = [
            st.builds(lambda c, p: Input(c, "x", p), channel, children),
            st.builds(output, channel, value, children),
            st.builds(TauPrefix, children),
            st.builds(lambda l, r: Sum(guard(l), guard(r)), children, children),
            st.builds(Par, children, children),
            st.builds(Restrict, channel, children),
        ]
        if recursion:
            # rec Y.c?(x).(tau.Y + P)
            options.append(
                st.builds(
                    lambda c, p: Rec("Y", Input(c, "x", Sum(TauPrefix(ProcVar("Y")), guard(p)))),
                    channel,
                    children,
                )
            )
        if calculus.value_passing:
            options.append(
                st.builds(
                    lambda c, v, t, e: Input(c, "x", IfThenElse(Eq(ValueVar("x"), Lit(v)), t, e)),
                    channel,
                    value,
                    children,
                    children,
                )
            )
            # forwards the received value
            options.append(
                st.builds(
                    lambda c, d, p: Input(c, "x", output_var(d, p)),
                    channel,
                    channel,
                    children,
                )
            )
        return st.one_of(*options)

    def output_var(d, body):
        if calculus.asynchronous:
            return Par(Output(d, ValueVar("x"), NIL), body)
        return Output(d, ValueVar("x"), body)

    return st.recursive(base, extend, max_leaves=max_leaves)

def traces(channels=("a", "b"), val=("0", "1"), calculus=CalculusId.VACCS, max_size=2):
    actions = sorted(alphabet(channels, val if calculus.value_passing else [UNIT]), key=str)
    return st.lists(st.sampled_from(actions), max_size=max_size).map(tuple)
