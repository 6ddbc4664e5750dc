from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from gysin.core.config import settings
from gysin.core.exceptions import JobSpecError
from gysin.core.geometry import BaseMode, Family, FlagGeometry, Twist


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


# Job input

class GeometrySpec(BaseModel):
    family: Family
    n: Optional[int] = Field(None, ge=1)
    rank: Optional[int] = Field(None, ge=1)  # BD only
    dims: Optional[List[int]] = None
    mu: Optional[List[int]] = None
    twist: Optional[Twist] = None  # formal for C, BD and KL_C unless given
    base: BaseMode = BaseMode.FORMAL

    model_config = ConfigDict(extra="forbid")

    def resolved_twist(self) -> Twist:
        if self.twist is not None:
            return self.twist
        if self.family in (Family.A_FLAG, Family.KL_A):
            return Twist.ZERO
        return Twist.FORMAL

    def to_geometry(self) -> FlagGeometry:
        family = self.family
        twist = self.resolved_twist()
        if family.is_kempf_laksov:
            if self.mu is None or self.n is None:
                raise JobSpecError(f"family {family.value} needs 'n' and 'mu'")
            if self.dims is not None:
                raise JobSpecError(f"family {family.value} takes 'mu', not 'dims'")
            if family == Family.KL_A:
                if twist != Twist.ZERO:
                    raise JobSpecError("family KL_A has no line bundle L; twist must be 'zero'")
                return FlagGeometry.kl_a(self.n, self.mu, self.base)
            return FlagGeometry.kl_c(self.n, self.mu, twist, self.base)

        if self.dims is None:
            raise JobSpecError(f"family {family.value} needs 'dims'")
        if self.mu is not None:
            raise JobSpecError(f"family {family.value} takes 'dims', not 'mu'")
        if family == Family.BD_FLAG:
            if self.rank is None:
                raise JobSpecError("family BD needs 'rank'")
            if self.n is not None and self.n != self.rank // 2:
                raise JobSpecError(f"'n'={self.n} does not match rank {self.rank}")
            return FlagGeometry.type_bd(self.rank, self.dims, twist, self.base)
        if self.rank is not None:
            raise JobSpecError("'rank' is only used by family BD")
        if self.n is None:
            raise JobSpecError(f"family {family.value} needs 'n'")
        if family == Family.A_FLAG:
            if twist != Twist.ZERO:
                raise JobSpecError("family A has no line bundle L; twist must be 'zero'")
            return FlagGeometry.type_a(self.n, self.dims, self.base)
        return FlagGeometry.type_c(self.n, self.dims, twist, self.base)


class JobSpec(BaseModel):
    geometry: GeometrySpec
    f: str = Field(..., min_length=1)
    halve: bool = False
    cutoff: Optional[int] = Field(None, ge=0)
    format: OutputFormat = Field(default_factory=lambda: OutputFormat(settings.default_format))

    model_config = ConfigDict(extra="forbid")


# Structured output

class SymbolModel(BaseModel):
    bundle: str
    kind: str
    index: int


class TermModel(BaseModel):
    coeff: str
    monomial: List[SymbolModel]


class ValueModel(BaseModel):
    value: List[TermModel]


class ResultModel(BaseModel):
    value: List[TermModel]
    fiber_dim: int
    degree: Union[int, str]
    halved: bool


class CheckModel(BaseModel):
    closed_form: ResultModel
    stepwise: List[TermModel]
    diffs: List[TermModel]
    matches: bool


class DegreeModel(BaseModel):
    kind: str
    degree: int
    parameters: dict
