"""Pydantic schemas for reports, parameter bundles and the certificate file"""

from fractions import Fraction
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, computed_field, field_validator

from .numerics import format_rational, parse_rational

Rational = Annotated[
    Fraction,
    PlainValidator(lambda value: parse_rational(value)),
    PlainSerializer(format_rational, return_type=str),
]

Mode = Literal["guaranteed", "best_effort"]


class ReportModel(BaseModel):
    """Base for every emitted report"""

    model_config = ConfigDict(frozen=True)

    def as_lines(self) -> str:
        """key=value lines in field order, the --format text emission."""
        lines = []
        for key, value in self.model_dump(mode="json").items():
            if isinstance(value, bool):
                value = str(value).lower()
            elif value is None:
                value = "-"
            elif isinstance(value, (list, dict)):
                value = _compact(value)
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"


def _compact(value) -> str:
    if isinstance(value, dict):
        return ",".join(f"{k}:{_compact(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "[" + " ".join(_compact(v) for v in value) + "]"
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


class ChainReport(ReportModel):
    """Clique-count chain inequality at level s"""

    n: int
    s: int
    k_prev: int
    k_s: int
    k_next: int
    lhs: Rational
    rhs: Rational
    holds: bool


class SupersaturationReport(ReportModel):
    """Edge surplus above the Turan density and the clique count it forces"""

    n: int
    r: int
    edges: int
    c: Rational
    applicable: bool
    claimed_bound: Optional[Rational] = None
    k_next: Optional[int] = None
    margin: Optional[Rational] = None
    strict_holds: Optional[bool] = None
    implied_s: Optional[int] = None
    implied_t_min: Optional[int] = None


class PruneRound(ReportModel):
    trigger: tuple[int, ...]
    removed: int


class PruneGuaranteeReport(ReportModel):
    """Exact checks of the cleaning procedure's three guarantees"""

    size_ok: bool
    codegree_ok: bool
    removal_bound_ok: bool
    size_bound_proved: bool = Field(description="The size bound is a consequence of the procedure only for r >= 3")
    all_ok: bool


class Lemma1Flags(ReportModel):
    c_lower_ok: bool
    c_upper_ok: bool
    s_vs_m_ok: bool
    density_ok: Optional[bool] = None

    @property
    def all_ok(self) -> bool:
        return self.c_lower_ok and self.c_upper_ok and self.s_vs_m_ok and self.density_ok is not False


class Lemma1Params(ReportModel):
    """s, t_min and the side conditions of the bipartite subset search"""

    m: int
    n: int
    r: int
    c: Rational
    s: int
    t_min: int
    min_edges: Rational
    flags: Lemma1Flags


class DoubleCountReport(ReportModel):
    s: int
    lhs_sum: int
    rhs_sum: int
    equal: bool
    convexity_lhs: Rational
    convexity_rhs: Rational
    convexity_ok: bool


class BicliqueWitness(ReportModel):
    """S as left-item indices and T as right vertices, both ascending"""

    S: tuple[int, ...]
    T: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.T)


class OracleResult(ReportModel):
    s: int
    S: tuple[int, ...]
    t: int
    T: tuple[int, ...]


class NotFound(ReportModel):
    """No witness; `level` and `stage` say where the pipeline stopped"""

    found: Literal[False] = False
    level: Optional[int] = None
    stage: str
    reason: str


class LevelParams(ReportModel):
    """Parameters of one recursion level r' (r' = r at the top)"""

    r: int
    c: Optional[Rational] = None
    s: int
    t_min: int
    m: Optional[int] = None
    threshold: Rational
    flags: dict[str, bool] = Field(default_factory=dict)


class ExtractionParams(ReportModel):
    n: int
    r: int
    c: Optional[Rational] = None
    s: int
    t_min: int
    mode: Mode
    flags: dict[str, bool] = Field(default_factory=dict)
    levels: list[LevelParams] = Field(default_factory=list)

    @computed_field
    @property
    def feasible(self) -> bool:
        return all(self.flags.values())

    @property
    def failed_flags(self) -> list[str]:
        return [name for name, ok in self.flags.items() if not ok]


class Infeasible(ReportModel):
    found: Literal[False] = False
    failed_flags: list[str]
    params: ExtractionParams


class CoverCertificate(ReportModel):
    """Checkable witness that M covers a K_r(s, ..., s, t)"""

    r: int = Field(..., ge=2)
    c: Optional[Rational] = None
    s: int = Field(..., ge=1)
    t: int = Field(..., ge=0)
    t_min: int = Field(..., ge=0)
    parts: list[list[int]]
    last_part: list[int]
    disjoint_members: list[list[int]]
    mode: Mode
    flags: dict[str, bool] = Field(default_factory=dict)

    @field_validator("parts", "disjoint_members")
    @classmethod
    def sort_inner(cls, v: list[list[int]]) -> list[list[int]]:
        """Each part and each member is stored ascending"""
        return [sorted(x) for x in v]

    @field_validator("last_part")
    @classmethod
    def sort_last(cls, v: list[int]) -> list[int]:
        return sorted(v)

    def to_file(self) -> str:
        return self.model_dump_json(indent=2) + "\n"

    @classmethod
    def from_file(cls, text: str) -> "CoverCertificate":
        return cls.model_validate_json(text)


class VerifyReport(ReportModel):
    parts_ok: bool
    completeness_ok: bool
    edges_in_K2M_ok: bool
    members_ok: bool
    sizes_ok: bool
    all_ok: bool
    problems: list[str] = Field(default_factory=list)


class TightnessReport(ReportModel):
    """Exhaustive K_2(s, s) scan of a graph's double cover"""

    n: int
    s: int
    found: bool
    S: tuple[int, ...] = ()
    T: tuple[int, ...] = ()
    expected_count: Optional[Rational] = None
