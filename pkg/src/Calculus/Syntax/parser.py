import logging
import re
from typing import Dict, List, Optional, Sequence

import pyparsing
from pyparsing import (
    Forward,
    Keyword,
    Literal,
    MatchFirst,
    ParseException,
    Regex,
    Suppress,
    ZeroOrMore,
)

from src.Calculus.Labels.labels import value_domain
from src.Calculus.Syntax.terms import (
    NIL,
    ONE,
    Eq,
    IfThenElse,
    Input,
    Lit,
    Output,
    Par,
    Process,
    ProcVar,
    Rec,
    Restrict,
    Sum,
    TauPrefix,
    ValueVar,
    asynchrony_violations,
    free_proc_vars,
    is_guard,
    par_of,
    render,
    require_closed,
    substitute_proc,
    sum_of,
)
from src.Calculus.utils.errors import (
    AsynchronyError,
    OpenTermError,
    ProcessSyntaxError,
    ValueDomainError,
)
from src.Calculus.utils.types import UNIT, CalculusId

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

pyparsing.ParserElement.enable_packrat()

KEYWORDS = ["tau", "new", "rec", "if", "then", "else"]
SUGAR_VAR = "_"
DEFINITION = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=(?!=)(.*)$")

def _sum_action(text: str, loc: int, toks) -> Process:
    operands = list(toks)
    if len(operands) == 1:
        return operands[0]
    for operand in operands:
        if not is_guard(operand):
            raise ProcessSyntaxError(
                f"Summand {render(operand)} is not a guard",
                line=pyparsing.lineno(loc, text),
                column=pyparsing.col(loc, text),
            )
    return sum_of(operands)

def _build_grammar() -> Forward:
    LPAR, RPAR, DOT, BANG, QUERY, PLUS, BAR, EQUALS, QUOTE = map(Suppress, "().!?+|='")
    keyword = MatchFirst([Keyword(k) for k in KEYWORDS])

    channel = ~keyword + Regex(r"[a-z][A-Za-z0-9_]*")
    variable = ~keyword + Regex(r"[a-z_][A-Za-z0-9_]*")
    proc_var = Regex(r"[A-Z][A-Za-z0-9_]*")

    value = (Regex(r"-?\d+") | Literal(UNIT)).set_parse_action(lambda t: Lit(t[0]))
    expr = value | variable.copy().set_parse_action(lambda t: ValueVar(t[0]))

    process = Forward()
    prefixed = Forward()

    input_prefix = (channel + QUERY + LPAR + variable + RPAR + DOT + prefixed).set_parse_action(
        lambda t: Input(t[0], t[1], t[2])
    )
    output_prefix = (channel + BANG + expr + DOT + prefixed).set_parse_action(
        lambda t: Output(t[0], t[1], t[2])
    )
    sugar_input = (channel + DOT + prefixed).set_parse_action(
        lambda t: Input(t[0], SUGAR_VAR, t[1])
    )
    sugar_output = (QUOTE + channel + DOT + prefixed).set_parse_action(
        lambda t: Output(t[0], Lit(UNIT), t[1])
    )
    tau_prefix = (Suppress(Keyword("tau")) + DOT + prefixed).set_parse_action(
        lambda t: TauPrefix(t[0])
    )
    restriction = (Suppress(Keyword("new")) + channel + DOT + prefixed).set_parse_action(
        lambda t: Restrict(t[0], t[1])
    )
    recursion = (Suppress(Keyword("rec")) + proc_var + DOT + prefixed).set_parse_action(
        lambda t: Rec(t[0], t[1])
    )
    conditional = (
        Suppress(Keyword("if"))
        + expr
        + EQUALS
        + expr
        + Suppress(Keyword("then"))
        + prefixed
        + Suppress(Keyword("else"))
        + prefixed
    ).set_parse_action(lambda t: IfThenElse(Eq(t[0], t[1]), t[2], t[3]))
    nil = Regex(r"0(?![0-9])").set_parse_action(lambda t: NIL)
    one = Regex(r"1(?![0-9])").set_parse_action(lambda t: ONE)
    variable_ref = proc_var.copy().set_parse_action(lambda t: ProcVar(t[0]))
    group = LPAR + process + RPAR

    prefixed <<= (
        input_prefix
        | output_prefix
        | sugar_input
        | sugar_output
        | tau_prefix
        | restriction
        | recursion
        | conditional
        | nil
        | one
        | group
        | variable_ref
    )
    sum_level = (prefixed + ZeroOrMore(PLUS + prefixed)).set_parse_action(_sum_action)
    par_level = (sum_level + ZeroOrMore(BAR + sum_level)).set_parse_action(
        lambda t: par_of(list(t))
    )
    process <<= par_level
    return process

GRAMMAR = _build_grammar()

def _literals(p: Process) -> List[str]:
    found = []
    if isinstance(p, Output) and isinstance(p.payload, Lit):
        found.append(p.payload.value)
    if isinstance(p, IfThenElse):
        found.extend(e.value for e in (p.cond.left, p.cond.right) if isinstance(e, Lit))
    for child in ("body", "left", "right", "then", "orelse"):
        sub = getattr(p, child, None)
        if sub is not None:
            found.extend(_literals(sub))
    return found

def check_term(p: Process, calculus: CalculusId, val: Sequence[str], line: Optional[int] = None) -> Process:
    domain = value_domain(calculus, val)
    for literal in _literals(p):
        if literal not in domain:
            where = f" (line {line})" if line is not None else ""
            raise ValueDomainError(
                f"Value {literal} is not in the domain {{{', '.join(domain)}}}{where}"
            )
    if calculus.asynchronous:
        violations = asynchrony_violations(p)
        if violations:
            where = f" (line {line})" if line is not None else ""
            raise AsynchronyError(
                f"Not a {calculus.value} term: {'; '.join(violations)}{where}"
            )
    return p

def parse(text: str, calculus: CalculusId, val: Sequence[str] = (), line: Optional[int] = None, column_offset: int = 0) -> Process:
    """Parse a single term and check it against the calculus and value domain."""
    try:
        p = GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseException as e:
        raise ProcessSyntaxError(
            f"Syntax error: {e.msg}",
            line=line if line is not None else e.lineno,
            column=e.col + column_offset,
        )
    except ProcessSyntaxError as e:
        if line is None:
            raise
        raise ProcessSyntaxError(e.message, line=line, column=(e.column or 0) + column_offset)
    return check_term(p, calculus, val, line)

def parse_definitions(text: str, calculus: CalculusId, val: Sequence[str] = ()) -> Dict[str, Process]:
    """
    Parse a definition file: one ``name = term`` per line, ``#`` starts a
    comment. Capitalised names may be referred to from other definitions;
    every resulting term is closed.
    """
    raw: Dict[str, Process] = {}
    lines: Dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0]
        if not content.strip():
            continue
        match = DEFINITION.match(content)
        if not match:
            raise ProcessSyntaxError("Expected 'name = term'", line=lineno, column=1)
        name, body = match.group(1), match.group(2)
        if name in raw:
            raise ProcessSyntaxError(f"Duplicate definition of {name}", line=lineno, column=1)
        raw[name] = parse(body, calculus, val, line=lineno, column_offset=match.start(2))
        lines[name] = lineno

    resolved: Dict[str, Process] = {}

    def resolve(name: str, stack: List[str]) -> Process:
        if name in resolved:
            return resolved[name]
        if name in stack:
            raise OpenTermError(
                f"Definitions refer to each other cyclically: {' -> '.join(stack + [name])}; use rec"
            )
        term = raw[name]
        for free in sorted(free_proc_vars(term)):
            if free not in raw:
                raise OpenTermError(f"Free process variable {free} in {name} (line {lines[name]})")
            term = substitute_proc(term, free, resolve(free, stack + [name]))
        require_closed(term)
        resolved[name] = term
        return term

    for name in raw:
        resolve(name, [])
    logger.info(f"Parsed {len(resolved)} definitions for {calculus.value}")
    return resolved
