import logging
from typing import Iterable, Optional, Sequence, Tuple

from src.Calculus.Labels.abstractions import LabelAbstraction
from src.Calculus.Labels.labels import dual_trace, parse_action
from src.Calculus.Syntax.terms import Process, render
from src.Calculus.utils.errors import SynthesisError
from src.Testing.Preorder.alt_preorder import alt_leq
from src.Testing.Preorder.must import must
from src.Testing.Synthesis.build_tests import acc_spec, conv_spec, test_acc, test_conv
from src.Testing.utils.types import FailureReason, TestSpec, Verdict

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

def test_from_verdict(
    verdict: Verdict, abstraction: LabelAbstraction, val: Sequence[str]
) -> Tuple[TestSpec, Process]:
    """
    The test a failed preorder verdict points at. The program-side witness
    trace is dualized; an acceptance failure offers every token p accepts
    after the trace that the offending set of q lacks.
    """
    witness = verdict.witness
    if witness is None:
        raise SynthesisError("The verdict carries no trace witness")
    calculus = abstraction.calculus
    trace = dual_trace(parse_action(a) for a in witness.trace)
    if witness.reason is FailureReason.CONVERGENCE:
        return conv_spec(trace, calculus), test_conv(trace, calculus)
    accepted = set().union(*(set(x) for x in witness.acceptance_p or []))
    eset = accepted - set(witness.offending)
    return acc_spec(trace, eset, calculus), test_acc(trace, eset, calculus, val)

def distinguish(
    p: Process,
    q: Process,
    abstraction: LabelAbstraction,
    val: Sequence[str],
    bound: Optional[int] = None,
    capacity: Optional[int] = None,
    channels: Optional[Iterable[str]] = None,
) -> Optional[Tuple[TestSpec, Process]]:
    """
    A test passed by p and failed by q, or None when p is below q.
    The test is checked before it is returned.
    """
    verdict = alt_leq(p, q, abstraction, val, bound, capacity, channels)
    if verdict.holds:
        return None
    spec, t = test_from_verdict(verdict, abstraction, val)
    nonblocking = abstraction.nonblocking
    passes_p = must(p, t, val, nonblocking, bound=bound).holds
    passes_q = must(q, t, val, nonblocking, bound=bound).holds
    if not passes_p or passes_q:
        raise SynthesisError(
            f"Synthesized test {render(t)} does not separate {render(p)} from {render(q)} "
            f"(must p = {passes_p}, must q = {passes_q}) under abstraction {abstraction.name}"
        )
    logger.info(f"Distinguishing test for {render(p)} and {render(q)}: {render(t)}")
    return spec, t

test_from_verdict.__test__ = False
