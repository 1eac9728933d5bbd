"""Desk-scale exact ground truth: full enumeration of the symmetric group,
exact convolution of walk measures, brute-force moments, and brute-force
character inner products.

Distributions are dense arrays of exact rationals indexed by Lehmer rank.
Deliberately independent of the diagram machinery it cross-checks.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as iter_permutations
from math import factorial

from .characters import character_value, class_size
from .partitions import Partition, partitions_of
from .perms import (
    Permutation,
    compose,
    count_j_cycles,
    identity,
    lehmer_rank,
    lehmer_unrank,
)
from .walks import STAR, WalkSpec

# Full dense convolution is O((n!)^2) in the worst case; 8! is usable but
# slow enough that callers must opt in.
MAX_FREE_N = 7


@dataclass(frozen=True)
class GroupDistribution:
    n: int
    probs: tuple[Fraction, ...]  # indexed by Lehmer rank

    def __post_init__(self):
        if len(self.probs) != factorial(self.n):
            raise ValueError("dense distribution must cover all of S_n")
        if sum(self.probs) != 1:
            raise ValueError("probabilities must sum to exactly 1")

    def prob(self, p: Permutation) -> Fraction:
        return self.probs[lehmer_rank(p)]


def _check_scale(n: int, allow_large: bool):
    if n > 8 or (n > MAX_FREE_N and not allow_large):
        raise ValueError(f"oracle is desk-scale only (n={n}; pass allow_large for n=8)")


def point_mass(n: int, p: Permutation | None = None) -> GroupDistribution:
    probs = [Fraction(0)] * factorial(n)
    probs[lehmer_rank(p if p is not None else identity(n))] = Fraction(1)
    return GroupDistribution(n, tuple(probs))


def uniform_distribution(n: int) -> GroupDistribution:
    size = factorial(n)
    return GroupDistribution(n, tuple([Fraction(1, size)] * size))


def star_measure(n: int) -> GroupDistribution:
    """Uniform on the n-1 transpositions moving symbol 0."""
    if n < 2:
        raise ValueError("star measure requires n >= 2")
    probs = [Fraction(0)] * factorial(n)
    for u in range(1, n):
        p = list(range(n))
        p[0], p[u] = u, 0
        probs[lehmer_rank(tuple(p))] = Fraction(1, n - 1)
    return GroupDistribution(n, tuple(probs))


def icycle_measure(n: int, i: int) -> GroupDistribution:
    """Uniform on all i-cycles."""
    if not 2 <= i <= n:
        raise ValueError(f"need 2 <= i <= n, got i={i}")
    mass = Fraction(factorial(n - i) * i, factorial(n))
    probs = [Fraction(0)] * factorial(n)
    seen = 0
    for support in iter_permutations(range(n), i):
        # Each i-cycle arises from the i rotations of its symbol tuple; keep
        # the rotation starting at the smallest symbol.
        if support[0] != min(support):
            continue
        p = list(range(n))
        for m, s in enumerate(support):
            p[s] = support[(m + 1) % i]
        probs[lehmer_rank(tuple(p))] = mass
        seen += 1
    assert seen == factorial(n) // (factorial(n - i) * i)
    return GroupDistribution(n, tuple(probs))


def convolve(d1: GroupDistribution, d2: GroupDistribution, allow_large: bool = False) -> GroupDistribution:
    """(d1 * d2)(g) = sum_h d1(h) d2(h^-1 g): the law of a product X Y with
    X ~ d1 applied after Y ~ d2 (left multiplication)."""
    if d1.n != d2.n:
        raise ValueError(f"size mismatch: {d1.n} vs {d2.n}")
    _check_scale(d1.n, allow_large)
    n = d1.n
    support1 = [(lehmer_unrank(n, r), pr) for r, pr in enumerate(d1.probs) if pr]
    acc: dict[Permutation, Fraction] = {}
    for r2, pr2 in enumerate(d2.probs):
        if not pr2:
            continue
        x = lehmer_unrank(n, r2)
        for h, pr1 in support1:
            g = compose(h, x)
            acc[g] = acc.get(g, Fraction(0)) + pr1 * pr2
    out = [Fraction(0)] * factorial(n)
    for g, pr in acc.items():
        out[lehmer_rank(g)] = pr
    return GroupDistribution(n, tuple(out))


def walk_distribution(spec: WalkSpec, allow_large: bool = False) -> GroupDistribution:
    """Exact distribution after spec.k steps of the walk, starting at the
    identity."""
    _check_scale(spec.n, allow_large)
    step = star_measure(spec.n) if spec.kind == STAR else icycle_measure(spec.n, spec.i)
    dist = point_mass(spec.n)
    for _ in range(spec.k):
        dist = convolve(step, dist, allow_large)
    return dist


def brute_moment(d: GroupDistribution, j: int, r: int) -> Fraction:
    """E[(number of j-cycles)^r] by direct summation over the group."""
    total = Fraction(0)
    for rank, pr in enumerate(d.probs):
        if pr:
            total += pr * count_j_cycles(lehmer_unrank(d.n, rank), j) ** r
    return total


def brute_multiplicity(n: int, j: int, r: int, lam: Partition) -> Fraction:
    """Coefficient of the irreducible indexed by ``lam`` in the r-th power
    of j times the j-cycle count, as a character inner product over
    conjugacy classes. Always an integer for valid inputs."""
    if n > 8:
        raise ValueError("oracle is desk-scale only (n <= 8)")
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    total = Fraction(0)
    for mu in partitions_of(n):
        a_j = sum(1 for part in mu if part == j)
        if a_j == 0 and r > 0:
            continue
        total += class_size(mu) * (j * a_j) ** r * character_value(lam, mu)
    return total / factorial(n)
