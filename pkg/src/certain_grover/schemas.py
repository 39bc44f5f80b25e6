"""Request and response models for the HTTP service."""

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

from .fullsim import MAX_FULL_N


class ParamsResponse(BaseModel):
    n: int
    beta: float
    j_op: int
    refined_j: int
    p_max: float
    j_min: int
    phi: float
    phi_over_pi: float


class TableOneRowModel(BaseModel):
    label: str
    n: int
    j_op: int
    ratio: float


class TableTwoRowModel(BaseModel):
    label: str
    n: int
    steps: int
    phi: float
    phi_over_pi: float


class TableResponse(BaseModel):
    which: int
    rows: List[Union[TableOneRowModel, TableTwoRowModel]]


class TracePoint(BaseModel):
    step: int
    p: float


class TraceRequest(BaseModel):
    n: int = Field(ge=2)
    tau: int = 0
    j: Optional[int] = Field(default=None, ge=0)
    phi: Optional[float] = Field(default=None, gt=0.0)
    formalism: Literal["reduced", "so3", "spectral", "full"] = "reduced"
    steps: Optional[int] = Field(default=None, ge=0)
    force: bool = False

    @model_validator(mode="after")
    def _consistent(self) -> "TraceRequest":
        if not 0 <= self.tau < self.n:
            raise ValueError(f"tau must lie in [0, {self.n})")
        if self.j is not None and self.phi is not None and not self.force:
            raise ValueError(
                "j and phi are mutually exclusive; pass force=true to combine them"
            )
        if self.phi is not None and self.j is None and self.steps is None:
            raise ValueError("steps is required when only phi is given")
        if self.formalism == "full" and self.n > MAX_FULL_N:
            raise ValueError(
                f"formalism 'full' is capped at n = {MAX_FULL_N}"
            )
        return self


class TraceResponse(BaseModel):
    n: int
    tau: int
    j: Optional[int]
    phi: float
    formalism: str
    trace: List[TracePoint]
    terminal: bool


class VerifyRequest(BaseModel):
    max_n: int = Field(default=10**4, ge=2)
    phi_perturb: float = 0.0
    cases: int = Field(default=200, ge=1)
    seed: Optional[int] = None


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    checks: List[CheckModel]
    all_passed: bool
