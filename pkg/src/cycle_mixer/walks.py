"""Exact spectral traces and moments for the star-transposition and random
i-cycle walks, Poisson reference moments, limiting-moment formulas, and
numerical convergence checks for the asymptotic estimates.

Exact moments live entirely in rational arithmetic; the limiting formulas
are double precision. The two regimes never mix.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .abacus import inner_multiplicity
from .bratteli import ajr_decomposition, cluster_coeff, stirling2
from .characters import ClassFunctionDecomposition, character_value
from .partitions import Partition, dimension, inner_corner_removals, partitions_of

STAR = "star"
ICYCLE = "icycle"


@dataclass(frozen=True)
class WalkSpec:
    """A shuffle: kind ``star`` or ``icycle`` (with cycle length i), deck
    size n, and step count k."""

    kind: str
    n: int
    k: int
    i: int | None = None

    def __post_init__(self):
        if self.kind not in (STAR, ICYCLE):
            raise ValueError(f"unknown walk kind {self.kind!r}")
        if self.k < 0:
            raise ValueError("step count must be nonnegative")
        if self.kind == STAR:
            if self.n < 2:
                raise ValueError("star walk requires n >= 2")
            if self.i is not None:
                raise ValueError("star walk takes no cycle length")
        else:
            if self.i is None or not (2 <= self.i <= self.n):
                raise ValueError(f"icycle walk requires 2 <= i <= n, got i={self.i}")


def star_trace(lam: Partition, k: int) -> Fraction:
    """Exact trace of the k-th power of the star-walk transform on the
    irreducible indexed by ``lam``: sum over corner removals of
    dim(lam^i) * ((lam_i - i)/(n-1))^k."""
    n = sum(lam)
    if n < 2:
        raise ValueError("star trace requires n >= 2")
    total = Fraction(0)
    for row, sub in inner_corner_removals(lam):
        total += dimension(sub) * Fraction(lam[row - 1] - row, n - 1) ** k
    return total


def icycle_trace(lam: Partition, i: int, k: int) -> Fraction:
    """Exact trace for the i-cycle walk: d * (chi(i, 1^(n-i))/d)^k."""
    n = sum(lam)
    if not 2 <= i <= n:
        raise ValueError(f"need 2 <= i <= n, got i={i}, n={n}")
    d = dimension(lam)
    chi = character_value(lam, (i,) + (1,) * (n - i))
    return d * Fraction(chi, d) ** k


def walk_trace(lam: Partition, spec: WalkSpec) -> Fraction:
    if spec.kind == STAR:
        return star_trace(lam, spec.k)
    return icycle_trace(lam, spec.i, spec.k)


def exact_moment(decomp: ClassFunctionDecomposition, spec: WalkSpec) -> Fraction:
    """Expectation of the class function after ``spec.k`` steps, exactly:
    sum of coefficients times traces."""
    if decomp.n != spec.n:
        raise ValueError(f"decomposition is over S_{decomp.n} but walk has n={spec.n}")
    total = Fraction(0)
    for lam, c in decomp.coefficients.items():
        total += c * walk_trace(lam, spec)
    return total


def poisson_moment(rate: float, r: int) -> float:
    """r-th moment of a Poisson variable: sum_a S(r,a) rate^a."""
    if rate < 0:
        raise ValueError("rate must be nonnegative")
    return float(sum(stirling2(r, a) * rate**a for a in range(r + 1)))


def limiting_jcycle_moment(j: int, r: int, c: float) -> float:
    """Limiting r-th moment of the j-cycle count along the cn-step star
    schedule: (1/j^r) sum_t (-1)^t e^(-tjc) * cluster constant."""
    if j < 2:
        raise ValueError("j must be >= 2")
    if c <= 0:
        raise ValueError("c must be positive")
    total = sum(
        (-1) ** t * math.exp(-t * j * c) * cluster_coeff(t, r, j) for t in range(r + 1)
    )
    return total / j**r


def limiting_fixedpoint_moment(r: int, c: float) -> float:
    """Limiting r-th moment of the fixed-point count after n ln n + cn star
    steps: sum_a S(r,a) (1 + e^(-c))^a."""
    base = 1.0 + math.exp(-c)
    return float(sum(stirling2(r, a) * base**a for a in range(r + 1)))


# Step-count schedules. "cn" and "cn_over_i" are the linear schedules for
# j-cycle statistics; "nlogn" is the fixed-point schedule; "uniform" takes
# enough steps that the deck is fully mixed.
SCHEDULES = ("cn", "cn_over_i", "nlogn", "uniform")


def schedule_steps(kind: str, schedule: str, n: int, c: float, i: int | None = None) -> int:
    if schedule == "cn":
        return math.floor(c * n)
    if schedule == "cn_over_i":
        if kind != ICYCLE:
            raise ValueError("cn_over_i schedule applies to the icycle walk")
        return math.floor(c * n / i)
    if schedule == "nlogn":
        if kind == STAR:
            return math.floor(n * math.log(n) + c * n)
        return math.floor(n * math.log(n) / i + c * n)
    if schedule == "uniform":
        return math.ceil(3 * n * math.log(n))
    raise ValueError(f"unknown schedule {schedule!r}")


def reference_rate(kind: str, schedule: str, j: int, c: float, i: int | None = None) -> float | None:
    """Poisson rate the statistic should approach under the given schedule,
    or None when no limit is asserted for the combination."""
    if schedule == "uniform":
        return 1.0 / j
    if j == 1:
        if schedule == "nlogn":
            return 1.0 + math.exp(-c) if kind == STAR else 1.0 + math.exp(-i * c)
        return None
    if kind == STAR and schedule == "cn":
        return (1.0 - math.exp(-j * c)) / j
    if kind == ICYCLE and schedule == "cn_over_i":
        return (1.0 - math.exp(-j * c)) / j
    if kind == ICYCLE and schedule == "cn":
        return (1.0 - math.exp(-i * j * c)) / j
    return None


@dataclass(frozen=True)
class MomentReport:
    spec: WalkSpec
    j: int
    r: int
    exact_moment: Fraction
    limit_moment: float | None
    poisson_reference: float | None


def moment_report(
    spec: WalkSpec,
    j: int,
    r: int,
    c: float | None = None,
    schedule: str | None = None,
) -> MomentReport:
    """Exact r-th moment of the j-cycle count after the walk, with the
    limiting value and Poisson reference when a schedule and c identify one."""
    decomp = ajr_decomposition(spec.n, j, r)
    exact = exact_moment(decomp, spec)
    limit = reference = None
    if c is not None and schedule is not None:
        rate = reference_rate(spec.kind, schedule, j, c, spec.i)
        if rate is not None:
            reference = poisson_moment(rate, r)
            if schedule == "uniform":
                limit = poisson_moment(rate, r)
            elif j >= 2:
                eff_c = c if not (spec.kind == ICYCLE and schedule == "cn") else spec.i * c
                limit = limiting_jcycle_moment(j, r, eff_c)
            else:
                eff_c = c if spec.kind == STAR else spec.i * c
                limit = limiting_fixedpoint_moment(r, eff_c)
    return MomentReport(spec, j, r, exact, limit, reference)


@dataclass(frozen=True)
class AsymptoticRow:
    check: str
    label: str
    n: int
    finite: float
    limit: float

    @property
    def abs_error(self) -> float:
        return abs(self.finite - self.limit)


def asymptotic_checks(t: int, j: int, i: int, c: float, n_grid) -> list[AsymptoticRow]:
    """Finite-n value vs claimed limit for the convergence estimates behind
    the limiting Poisson behavior, on an increasing grid of deck sizes.

    Checks, per partition ``rest`` of t (lam = (n-t, rest)):
      corner_dimension_ratio   dim(lam^1)/n^t            -> dim(rest)/t!
      star_trace_nlogn         star trace at nlogn+cn    -> e^(-tc) dim(rest)/t!
      star_trace_cn            star trace at cn, /dim    -> e^(-tc)
      icycle_char_ratio        n(1 - chi/d)              -> i*t
      icycle_trace_cn          (chi/d)^(cn/i)            -> e^(-tc)
    plus the star cluster expectation over partitions of t*j:
      star_cluster             signed trace sum at cn    -> (-1)^t e^(-tjc)
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    rows = []
    for n in n_grid:
        for rest in partitions_of(t):
            lam = (n - t,) + rest
            label = str(rest)
            d_corner = dimension((n - t - 1,) + rest)
            rows.append(
                AsymptoticRow(
                    "corner_dimension_ratio",
                    label,
                    n,
                    float(Fraction(d_corner, n**t)),
                    dimension(rest) / math.factorial(t),
                )
            )
            k_nlogn = math.floor(n * math.log(n) + c * n)
            rows.append(
                AsymptoticRow(
                    "star_trace_nlogn",
                    label,
                    n,
                    float(star_trace(lam, k_nlogn)),
                    math.exp(-t * c) * dimension(rest) / math.factorial(t),
                )
            )
            k_cn = math.floor(c * n)
            rows.append(
                AsymptoticRow(
                    "star_trace_cn",
                    label,
                    n,
                    float(star_trace(lam, k_cn) / d_corner),
                    math.exp(-t * c),
                )
            )
            d = dimension(lam)
            ratio = Fraction(character_value(lam, (i,) + (1,) * (n - i)), d)
            rows.append(
                AsymptoticRow("icycle_char_ratio", label, n, float(n * (1 - ratio)), float(i * t))
            )
            rows.append(
                AsymptoticRow(
                    "icycle_trace_cn",
                    label,
                    n,
                    float(ratio ** math.floor(c * n / i)),
                    math.exp(-t * c),
                )
            )
        cluster = Fraction(0)
        for rest in partitions_of(t * j):
            m = inner_multiplicity(rest, j)
            if m:
                cluster += m * star_trace((n - t * j,) + rest, math.floor(c * n))
        rows.append(
            AsymptoticRow(
                "star_cluster",
                f"t={t},j={j}",
                n,
                float(cluster),
                (-1) ** t * math.exp(-t * j * c),
            )
        )
    return rows
