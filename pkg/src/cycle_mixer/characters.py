"""Exact irreducible characters of the symmetric group and the j-cycle
class-function decomposition.

Characters are evaluated by the Murnaghan-Nakayama recursion: strip a rim
hook whose length is the largest remaining part of the cycle type, signed
by leg-length parity. Values are exact integers; decomposition
coefficients are exact rationals.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import (
    Partition,
    as_partition,
    dimension,
    partition_from_json,
    partition_to_json,
    removable_rim_hooks,
)


def cycle_multiplicities(mu: Partition) -> dict[int, int]:
    """Map part value -> multiplicity m_i(mu)."""
    out: dict[int, int] = {}
    for part in mu:
        out[part] = out.get(part, 0) + 1
    return out


def z_of(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``mu``."""
    z = 1
    for i, m in cycle_multiplicities(mu).items():
        z *= i**m * factorial(m)
    return z


def class_size(mu: Partition) -> int:
    """Number of permutations in S_n with cycle type ``mu``."""
    return factorial(sum(mu)) // z_of(mu)


def character_value(lam: Partition, mu: Partition) -> int:
    """Exact value of the irreducible character indexed by ``lam`` on the
    conjugacy class of cycle type ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |lam|={sum(lam)} but |mu|={sum(mu)}")
    return _mn(lam, tuple(sorted(mu, reverse=True)))


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    if mu[0] == 1:
        # Only fixed points left; the character at the identity is the dimension.
        return dimension(lam)
    part, rest = mu[0], mu[1:]
    total = 0
    for hook in removable_rim_hooks(lam, part):
        total += (-1) ** hook.leg_length * _mn(hook.inner, rest)
    return total


@dataclass(frozen=True)
class ClassFunctionDecomposition:
    """A class function written in the irreducible-character basis."""

    n: int
    coefficients: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for key in self.coefficients:
            if sum(key) != self.n:
                raise ValueError(f"key {key} is not a partition of {self.n}")


def aj_decomposition(n: int, j: int) -> ClassFunctionDecomposition:
    """Character decomposition of the j-cycle-count class function.

    Coefficient 1/j on (n) and (-1)^i / j on (n-j, j-i, 1^i) for
    0 <= i <= j-1. Requires 1 <= j <= n/2.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if 2 * j > n:
        raise ValueError(f"formula requires n >= 2j (n={n}, j={j})")
    coeffs = {(n,): Fraction(1, j)}
    for i in range(j):
        lam = as_partition((n - j, j - i) + (1,) * i)
        coeffs[lam] = Fraction((-1) ** i, j)
    return ClassFunctionDecomposition(n, coeffs)


def evaluate(decomp: ClassFunctionDecomposition, mu: Partition) -> Fraction:
    """Value of the class function at the conjugacy class ``mu``."""
    if sum(mu) != decomp.n:
        raise ValueError(f"cycle type {mu} is not a partition of {decomp.n}")
    total = Fraction(0)
    for lam, c in decomp.coefficients.items():
        total += c * character_value(lam, mu)
    return total


def _coeff_str(c: Fraction) -> str:
    return str(c)


def _coeff_parse(s: str) -> Fraction:
    return Fraction(s)


def decomposition_to_dict(decomp: ClassFunctionDecomposition) -> dict:
    terms = [
        {"partition": partition_to_json(lam), "coeff": _coeff_str(c)}
        for lam, c in sorted(decomp.coefficients.items(), reverse=True)
    ]
    return {"n": decomp.n, "terms": terms}


def decomposition_from_dict(data: dict) -> ClassFunctionDecomposition:
    coeffs = {
        partition_from_json(t["partition"]): _coeff_parse(t["coeff"])
        for t in data["terms"]
    }
    return ClassFunctionDecomposition(int(data["n"]), coeffs)
