from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from src.Calculus.Labels.abstractions import LabelAbstraction, resolve_abstraction
from src.Calculus.Labels.labels import nonblocking_for, value_domain
from src.Calculus.utils.types import CalculusId, GraphDocument, NonBlockingSet
from src.config.settings import settings

class AxiomId(str, Enum):
    NB_DELAY = "nb-delay"
    NB_CONFLUENCE = "nb-confluence"
    NB_DETERMINACY = "nb-determinacy"
    BACKWARDS_NB_DETERMINACY = "backwards-nb-determinacy"
    FWD_FEEDBACK = "fwd-feedback"
    BOOMERANG = "boomerang"
    NB_TAU = "nb-tau"
    FEEDBACK = "feedback"
    CN_ENABLED = "cn-enabled"
    FINITE_NB_CHAINS = "finite-nb-chains"

class AxiomClass(str, Enum):
    LTSMULTISET = "ltsmultiset"
    AGENTS = "agents"

class AxiomTarget(str, Enum):
    TERM = "term"
    FW = "fw"
    MULTISET = "multiset"
    TOSET = "toset"

class FailureReason(str, Enum):
    CONVERGENCE = "convergence-failure"
    ACCEPTANCE = "acceptance-failure"

class SpecKind(str, Enum):
    CONV = "conv"
    ACC = "acc"

class LeqMethod(str, Enum):
    ALT = "alt"
    TEST = "test"

class OutputFormat(str, Enum):
    HUMAN = "human"
    STRUCTURED = "structured"

# Axioms

class AxiomWitness(BaseModel):
    transitions: List[Tuple[str, str, str]] = []
    state: Optional[str] = None
    action: Optional[str] = None

class AxiomReport(BaseModel):
    axiom: str
    holds: bool
    checked: int = 0
    waived: int = 0
    violations: int = 0
    witnesses: List[AxiomWitness] = []

    @model_validator(mode="after")
    def holds_iff_no_witness(self):
        if self.holds == bool(self.witnesses):
            raise ValueError("A report holds exactly when it has no witnesses")
        return self

# Preorders

class Witness(BaseModel):
    trace: List[str]
    reason: FailureReason
    offending: List[str] = []
    acceptance_p: Optional[List[List[str]]] = None
    acceptance_q: Optional[List[List[str]]] = None

class Verdict(BaseModel):
    holds: bool
    witness: Optional[Witness] = None
    witness_test: Optional[str] = None
    pairs_explored: int = 0
    tests_checked: int = 0
    inputs_pruned: int = 0
    mail_capacity: Optional[int] = None

    @model_validator(mode="after")
    def failure_has_witness(self):
        if not self.holds and self.witness is None and self.witness_test is None:
            raise ValueError("A failed verdict needs a witness")
        return self

class MustResult(BaseModel):
    holds: bool
    failing_path: List[str] = []
    states: int = 0

class TestSpec(BaseModel):
    __test__ = False

    kind: SpecKind
    trace: List[str]
    eset: List[str] = []
    calculus: CalculusId

# Run configuration

class RunConfig(BaseModel):
    calculus: CalculusId = CalculusId(settings.DEFAULT_CALCULUS)
    val: List[str] = Field(default_factory=lambda: list(settings.DEFAULT_VAL))
    bound: int = Field(settings.EXPLORATION_BOUND, ge=1)
    mail_capacity: int = Field(settings.MAIL_CAPACITY, ge=0)
    abstraction: Optional[str] = None
    output_format: OutputFormat = OutputFormat(settings.OUTPUT_FORMAT)

    @field_validator("val", mode="before")
    @classmethod
    def split_values(cls, v):
        if isinstance(v, str):
            v = v.split(",")
        return [str(x).strip() for x in v if str(x).strip()]

    @model_validator(mode="after")
    def fix_value_domain(self):
        self.val = list(value_domain(self.calculus, self.val))
        return self

    @property
    def values(self) -> Tuple[str, ...]:
        return tuple(self.val)

    @property
    def nonblocking(self) -> NonBlockingSet:
        return nonblocking_for(self.calculus)

    @property
    def lift(self) -> bool:
        """Servers are lifted to forwarders whenever some action is non-blocking."""
        return not self.nonblocking.is_empty

    def label_abstraction(self) -> LabelAbstraction:
        return resolve_abstraction(self.abstraction or self.calculus.value, self.calculus)

# Documents

class Document(BaseModel):
    schema_version: str = settings.SCHEMA_VERSION
    command: str
    calculus: CalculusId
    val: List[str]

class DefinitionDoc(BaseModel):
    name: str
    canonical: str

class ParseDocument(Document):
    command: str = "parse"
    definitions: List[DefinitionDoc] = []

class LtsDocument(Document):
    command: str = "lts"
    name: str
    target: AxiomTarget
    graph: GraphDocument

class MustDocument(Document):
    command: str = "must"
    server: str
    client: str
    holds: bool
    failing_path: List[str] = []

class LeqDocument(Document):
    command: str = "leq"
    p: str
    q: str
    method: LeqMethod
    abstraction: str
    holds: bool
    witness_trace: Optional[List[str]] = None
    reason: Optional[FailureReason] = None
    offending: Optional[List[str]] = None
    acceptance_sets: Optional[Dict[str, List[List[str]]]] = None
    witness_test: Optional[str] = None
    tests_checked: int = 0
    mail_capacity: Optional[int] = None

class DistinguishDocument(Document):
    command: str = "distinguish"
    p: str
    q: str
    test: Optional[str] = None
    spec: Optional[TestSpec] = None
    must_p: Optional[bool] = None
    must_q: Optional[bool] = None

class AxiomsDocument(Document):
    command: str = "axioms"
    target: AxiomTarget
    axioms: List[str]
    states: int
    frontier: int = 0
    holds: bool
    reports: List[AxiomReport]
