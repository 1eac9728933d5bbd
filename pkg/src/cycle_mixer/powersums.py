"""Power-sum fragment of symmetric functions: the Kronecker product, which
is diagonal on the power-sum basis with eigenvalue z, multiplication by a
single power sum, and its adjoint under the Hall inner product.

Vectors are finite rational combinations of power-sum basis elements of a
single degree.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import z_of
from .partitions import Partition, as_partition


@dataclass(frozen=True)
class PowerSumVector:
    degree: int
    coefficients: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for key, c in self.coefficients.items():
            if sum(key) != self.degree:
                raise ValueError(f"key {key} does not have degree {self.degree}")
            if c == 0:
                raise ValueError(f"zero coefficient stored for {key}")

    @property
    def is_zero(self) -> bool:
        return not self.coefficients


def p_basis(mu) -> PowerSumVector:
    """The basis vector p_mu."""
    mu = as_partition(mu)
    return PowerSumVector(sum(mu), {mu: Fraction(1)})


def _build(degree: int, coeffs: dict[Partition, Fraction]) -> PowerSumVector:
    return PowerSumVector(degree, {k: v for k, v in coeffs.items() if v})


def add(f: PowerSumVector, g: PowerSumVector) -> PowerSumVector:
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    out = dict(f.coefficients)
    for k, v in g.coefficients.items():
        out[k] = out.get(k, Fraction(0)) + v
    return _build(f.degree, out)


def scale(f: PowerSumVector, c) -> PowerSumVector:
    c = Fraction(c)
    return _build(f.degree, {k: v * c for k, v in f.coefficients.items()})


def subtract(f: PowerSumVector, g: PowerSumVector) -> PowerSumVector:
    return add(f, scale(g, -1))


def kronecker(f: PowerSumVector, g: PowerSumVector) -> PowerSumVector:
    """Bilinear extension of p_mu * p_nu = delta_{mu,nu} z_mu p_mu."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    out: dict[Partition, Fraction] = {}
    for mu, a in f.coefficients.items():
        b = g.coefficients.get(mu)
        if b is not None:
            out[mu] = a * b * z_of(mu)
    return _build(f.degree, out)


def mul_pj(f: PowerSumVector, j: int) -> PowerSumVector:
    """Multiply by p_j: each basis key gains a part j."""
    if j < 1:
        raise ValueError("j must be >= 1")
    out: dict[Partition, Fraction] = {}
    for mu, a in f.coefficients.items():
        key = tuple(sorted(mu + (j,), reverse=True))
        out[key] = out.get(key, Fraction(0)) + a
    return _build(f.degree + j, out)


def perp_pj(f: PowerSumVector, j: int) -> PowerSumVector:
    """Adjoint of mul_pj under the Hall inner product.

    Keys without a part j vanish; a key alpha = j-union-gamma maps to
    (z_alpha / z_gamma) p_gamma, and z_alpha / z_gamma = j * m_j(alpha).
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    out: dict[Partition, Fraction] = {}
    for mu, a in f.coefficients.items():
        if j not in mu:
            continue
        gamma = list(mu)
        gamma.remove(j)
        key = tuple(gamma)
        ratio = Fraction(z_of(mu), z_of(key))
        out[key] = out.get(key, Fraction(0)) + a * ratio
    return _build(f.degree - j, out)


def hall_inner(f: PowerSumVector, g: PowerSumVector) -> Fraction:
    """Hall inner product, diagonal on power sums with <p_mu, p_mu> = z_mu."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    total = Fraction(0)
    for mu, a in f.coefficients.items():
        b = g.coefficients.get(mu)
        if b is not None:
            total += a * b * z_of(mu)
    return total


def tensor_identity_residual(f: PowerSumVector, g: PowerSumVector, j: int) -> PowerSumVector:
    """p_j(p_j^perp f * g) - f * (p_j g); contract: the zero vector whenever
    deg f = deg g + j."""
    if f.degree != g.degree + j:
        raise ValueError(f"need deg f = deg g + j ({f.degree} != {g.degree} + {j})")
    left = mul_pj(kronecker(perp_pj(f, j), g), j)
    right = kronecker(f, mul_pj(g, j))
    return subtract(left, right)
