import logging
import re
from typing import Dict, Iterable, List, Optional, Sequence

from tabulate import tabulate

from src.Calculus.Semantics.determinize import to_set_graph
from src.Calculus.Semantics.exploration import (
    fw_graph,
    multiset_graph,
    require_complete,
    term_graph,
)
from src.Calculus.Semantics.graph import Graph
from src.Calculus.Syntax.parser import parse, parse_definitions
from src.Calculus.Syntax.terms import Process, free_names, render
from src.Calculus.utils.errors import PreconditionError, UnknownDefinitionError
from src.Testing.Axioms.check_axioms import CLASS_AXIOMS, axiom_checker
from src.Testing.Preorder.alt_preorder import alt_leq
from src.Testing.Preorder.must import must, must_leq_sample
from src.Testing.Synthesis.build_tests import test_battery
from src.Testing.Synthesis.distinguish import distinguish
from src.Testing.utils.types import (
    AxiomClass,
    AxiomId,
    AxiomsDocument,
    AxiomTarget,
    DefinitionDoc,
    Document,
    DistinguishDocument,
    LeqDocument,
    LeqMethod,
    LtsDocument,
    MustDocument,
    ParseDocument,
    RunConfig,
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

class Commands:
    """
    The operations behind the command line and the HTTP API. Each takes the
    text of a definition file and returns one structured document.
    """

    def __init__(self, battery_depth: int = 1):
        self.battery_depth = battery_depth

    def _header(self, config: RunConfig) -> Dict:
        return {"calculus": config.calculus, "val": list(config.val)}

    def definitions(self, text: str, config: RunConfig) -> Dict[str, Process]:
        return parse_definitions(text or "", config.calculus, config.values)

    def resolve(self, defs: Dict[str, Process], name: str, config: RunConfig) -> Process:
        """A definition by name, or an inline term when the argument is not a name."""
        if name in defs:
            return defs[name]
        if IDENTIFIER.match(name):
            raise UnknownDefinitionError(name)
        return parse(name, config.calculus, config.values)

    def _graph(self, p: Optional[Process], target: AxiomTarget, config: RunConfig, channels: Optional[Sequence[str]]) -> Graph:
        nonblocking = config.nonblocking
        if target is AxiomTarget.MULTISET:
            if not channels:
                raise PreconditionError("The multiset target needs a channel list")
            graph = multiset_graph(channels, config.values, nonblocking, config.mail_capacity, config.bound)
        elif p is None:
            raise PreconditionError(f"The {target.value} target needs a definition")
        elif target is AxiomTarget.FW:
            graph = fw_graph(p, config.values, nonblocking, config.bound, channels, config.mail_capacity)
        else:
            graph = term_graph(p, config.values, nonblocking, config.bound, channels)
            if target is AxiomTarget.TOSET:
                graph = to_set_graph(graph, config.bound)
        return require_complete(graph, f"the {target.value} graph", config.bound)

    # commands

    def cmd_parse(self, text: str, config: RunConfig) -> ParseDocument:
        defs = self.definitions(text, config)
        return ParseDocument(
            **self._header(config),
            definitions=[DefinitionDoc(name=n, canonical=render(p)) for n, p in defs.items()],
        )

    def cmd_lts(
        self,
        text: str,
        name: Optional[str],
        target: AxiomTarget,
        config: RunConfig,
        channels: Optional[Sequence[str]] = None,
    ) -> LtsDocument:
        defs = self.definitions(text, config)
        p = self.resolve(defs, name, config) if name else None
        graph = self._graph(p, target, config, channels)
        logger.info(f"Explored {len(graph)} states for {name or 'the multiset'} ({target.value})")
        return LtsDocument(
            **self._header(config),
            name=name or "",
            target=target,
            graph=graph.to_document(),
        )

    def cmd_must(self, text: str, server: str, client: str, config: RunConfig) -> MustDocument:
        defs = self.definitions(text, config)
        p, t = self.resolve(defs, server, config), self.resolve(defs, client, config)
        result = must(p, t, config.values, config.nonblocking, config.lift, config.bound)
        return MustDocument(
            **self._header(config),
            server=server,
            client=client,
            holds=result.holds,
            failing_path=result.failing_path,
        )

    def cmd_leq(
        self,
        text: str,
        left: str,
        right: str,
        method: LeqMethod,
        config: RunConfig,
        tests: Iterable[str] = (),
    ) -> LeqDocument:
        defs = self.definitions(text, config)
        p, q = self.resolve(defs, left, config), self.resolve(defs, right, config)
        abstraction = config.label_abstraction()
        doc = LeqDocument(
            **self._header(config),
            p=left,
            q=right,
            method=method,
            abstraction=abstraction.name,
            holds=True,
        )
        if method is LeqMethod.ALT:
            verdict = alt_leq(p, q, abstraction, config.values, config.bound, config.mail_capacity)
            doc.holds = verdict.holds
            doc.mail_capacity = verdict.mail_capacity
            if verdict.witness is not None:
                w = verdict.witness
                doc.witness_trace = w.trace
                doc.reason = w.reason
                doc.offending = w.offending
                if w.acceptance_p is not None:
                    doc.acceptance_sets = {"p": w.acceptance_p, "q": w.acceptance_q or []}
            return doc

        channels = sorted(free_names(p) | free_names(q))
        sample = [t for _, t in test_battery(config.calculus, channels, config.values, self.battery_depth, abstraction)]
        sample += [self.resolve(defs, name, config) for name in tests]
        verdict = must_leq_sample(p, q, sample, config.values, config.nonblocking, config.lift, config.bound)
        doc.holds = verdict.holds
        doc.witness_test = verdict.witness_test
        doc.tests_checked = verdict.tests_checked
        return doc

    def cmd_distinguish(self, text: str, left: str, right: str, config: RunConfig) -> DistinguishDocument:
        defs = self.definitions(text, config)
        p, q = self.resolve(defs, left, config), self.resolve(defs, right, config)
        found = distinguish(p, q, config.label_abstraction(), config.values, config.bound, config.mail_capacity)
        doc = DistinguishDocument(**self._header(config), p=left, q=right)
        if found is not None:
            spec, t = found
            doc.test, doc.spec = render(t), spec
            doc.must_p, doc.must_q = True, False
        return doc

    def cmd_axioms(
        self,
        text: str,
        name: Optional[str],
        target: AxiomTarget,
        config: RunConfig,
        axiom_class: Optional[AxiomClass] = None,
        axioms: Sequence[AxiomId] = (),
        channels: Optional[Sequence[str]] = None,
    ) -> AxiomsDocument:
        defs = self.definitions(text, config)
        p = self.resolve(defs, name, config) if name else None
        graph = self._graph(p, target, config, channels)
        if axioms:
            selected: List[AxiomId] = list(axioms)
        else:
            if axiom_class is None:
                axiom_class = AxiomClass.LTSMULTISET if target in (AxiomTarget.FW, AxiomTarget.MULTISET) else AxiomClass.AGENTS
            selected = CLASS_AXIOMS[axiom_class]
        reports = axiom_checker.check_class(graph, config.nonblocking, selected)
        return AxiomsDocument(
            **self._header(config),
            target=target,
            axioms=[a.value for a in selected],
            states=len(graph),
            frontier=len(graph.frontier),
            holds=all(r.holds for r in reports),
            reports=reports,
        )

    # human output

    def render_human(self, doc: Document) -> str:
        if isinstance(doc, ParseDocument):
            if not doc.definitions:
                return "No definitions"
            return tabulate([[d.name, d.canonical] for d in doc.definitions], headers=["name", "canonical"], tablefmt="grid")
        if isinstance(doc, LtsDocument):
            states = {s.id: s.state for s in doc.graph.states}
            rows = [[states[t.source], t.label, states[t.target]] for t in doc.graph.transitions]
            summary = f"{len(states)} states, {len(rows)} transitions, root {states[doc.graph.root]}"
            return summary + "\n" + tabulate(rows, headers=["source", "label", "target"], tablefmt="grid")
        if isinstance(doc, MustDocument):
            lines = [f"must({doc.server}, {doc.client}) = {str(doc.holds).lower()}"]
            if doc.failing_path:
                lines.append(tabulate([[i, s] for i, s in enumerate(doc.failing_path)], headers=["step", "state"], tablefmt="grid"))
            return "\n".join(lines)
        if isinstance(doc, LeqDocument):
            rows = [["holds", doc.holds], ["method", doc.method.value], ["abstraction", doc.abstraction]]
            if doc.witness_trace is not None:
                rows.append(["trace", ".".join(doc.witness_trace) or "(empty)"])
                rows.append(["reason", doc.reason.value if doc.reason else ""])
            if doc.offending:
                rows.append(["offending", "{" + ", ".join(doc.offending) + "}"])
            for side, sets in (doc.acceptance_sets or {}).items():
                rows.append([f"acceptance {side}", _render_sets(sets)])
            if doc.witness_test is not None:
                rows.append(["test", doc.witness_test])
            if doc.method is LeqMethod.TEST:
                rows.append(["tests checked", doc.tests_checked])
            return f"{doc.p} <= {doc.q}\n" + tabulate(rows, tablefmt="grid")
        if isinstance(doc, DistinguishDocument):
            if doc.test is None:
                return f"No distinguishing test: {doc.p} <= {doc.q}"
            rows = [["test", doc.test], [f"must {doc.p}", doc.must_p], [f"must {doc.q}", doc.must_q]]
            return tabulate(rows, tablefmt="grid")
        if isinstance(doc, AxiomsDocument):
            rows = [[r.axiom, r.holds, r.checked, r.waived, r.violations] for r in doc.reports]
            table = tabulate(rows, headers=["axiom", "holds", "checked", "waived", "violations"], tablefmt="grid")
            out = [f"{doc.target.value} graph: {doc.states} states ({doc.frontier} frontier)", table]
            for r in doc.reports:
                for w in r.witnesses[:3]:
                    steps = "; ".join(f"{s} --{l}--> {t}" for s, l, t in w.transitions)
                    out.append(f"{r.axiom}: {steps or w.state}" + (f" [{w.action}]" if w.action else ""))
            return "\n".join(out)
        return doc.model_dump_json(indent=2)

def _render_sets(sets: List[List[str]]) -> str:
    return "{" + ", ".join("{" + ", ".join(x) + "}" for x in sets) + "}"

commands = Commands()
