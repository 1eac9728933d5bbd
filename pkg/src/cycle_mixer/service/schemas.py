"""Request/response models for the HTTP service."""

from pydantic import BaseModel, Field


class Term(BaseModel):
    partition: list[int]
    coeff: str


class DecomposeRequest(BaseModel):
    n: int
    j: int
    r: int = 1


class DecompositionResponse(BaseModel):
    n: int
    terms: list[Term]


class MultiplicityRequest(BaseModel):
    j: int
    r: int
    partition: list[int]
    n: int | None = None
    ambient_n: int | None = None


class MultiplicityResponse(BaseModel):
    n: int
    j: int
    r: int
    partition: list[int]
    closed_form: int
    path_count: int
    agree: bool


class AbacusRequest(BaseModel):
    partition: list[int]
    j: int


class AbacusResponse(BaseModel):
    partition: list[int]
    j: int
    core: list[int]
    quotient: list[list[int]]
    R: int
    sign: int
    sigma: list[int]


class MomentsRequest(BaseModel):
    walk: str
    n: int
    k: int
    j: int
    r: int = 1
    i: int | None = None
    c: float | None = None
    schedule: str | None = None


class MomentsResponse(BaseModel):
    walk: str
    n: int
    k: int
    i: int | None
    j: int
    r: int
    exact_moment: str
    limit_moment: float | None
    poisson_reference: float | None


class LimitsRequest(BaseModel):
    j: int
    r: int
    c: float


class LimitsResponse(BaseModel):
    j: int
    r: int
    c: float
    limit_moment: float
    poisson_rate: float
    poisson_moment: float


class SimulateRequest(BaseModel):
    walk: str
    n: int
    trials: int = Field(ge=1)
    seed: int = Field(ge=0)
    js: list[int]
    i: int | None = None
    c: float = 1.0
    schedule: str = "cn"
    k: int | None = None
    threads: int | None = None


class JStatsOut(BaseModel):
    histogram: dict[str, int]
    moments: dict[str, float]
    reference_rate: float | None
    z_scores: dict[str, float | None]
    tv_distance: float | None


class SimulateResponse(BaseModel):
    walk: str
    n: int
    k: int
    i: int | None
    trials: int
    seed: int
    c: float | None
    schedule: str | None
    stats: dict[str, JStatsOut]


class CheckOut(BaseModel):
    name: str
    ok: bool
    detail: str


class VerifyResponse(BaseModel):
    ok: bool
    checks: list[CheckOut]


class DiagramRequest(BaseModel):
    n: int
    j: int
    levels: int
