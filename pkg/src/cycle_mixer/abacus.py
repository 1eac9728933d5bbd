"""The j-abacus: cores, quotients, rim-hook tableau counts, and the
compression-permutation sign.

Bead position p sits on runner p mod j at row p div j. A partition with
parts p_1 >= ... >= p_m and b beads occupies positions p_i + (b - i).
Pushing beads up a runner removes rim-j hooks; a fully compressed
configuration encodes the j-core.
"""

from dataclasses import dataclass
from math import factorial, prod

from .partitions import (
    Partition,
    beta_numbers,
    dimension,
    partition_from_beta,
)


def default_bead_count(p: Partition, j: int) -> int:
    """Smallest multiple of j strictly greater than the number of parts.

    A multiple of j keeps runner assignment canonical; the strict inequality
    reproduces the conventional numbering with at least one empty-row bead
    per runner.
    """
    return ((len(p) // j) + 1) * j


@dataclass(frozen=True)
class AbacusConfiguration:
    j: int
    positions: tuple[int, ...]  # ascending, distinct

    @property
    def bead_count(self) -> int:
        return len(self.positions)

    def runner(self, i: int) -> tuple[int, ...]:
        """Rows occupied on runner ``i``, ascending."""
        return tuple(p // self.j for p in self.positions if p % self.j == i)


def to_abacus(p: Partition, j: int, bead_count: int | None = None) -> AbacusConfiguration:
    if j < 1:
        raise ValueError("j must be >= 1")
    if bead_count is None:
        bead_count = default_bead_count(p, j)
    return AbacusConfiguration(j, tuple(sorted(beta_numbers(p, bead_count))))


def from_abacus(cfg: AbacusConfiguration) -> Partition:
    return partition_from_beta(cfg.positions)


@dataclass(frozen=True)
class QuotientCore:
    core: Partition
    quotient: tuple[Partition, ...]


def core_and_quotient(p: Partition, j: int) -> QuotientCore:
    """The j-core and the j-tuple of quotient components of ``p``.

    Component i collects the beads on runner i of the canonical
    configuration. The size identity sum |quotient_i| = (|p| - |core|)/j
    holds by construction.
    """
    cfg = to_abacus(p, j)
    quotient = []
    core_positions = []
    for i in range(j):
        rows = cfg.runner(i)
        quotient.append(partition_from_beta(rows))
        core_positions.extend(r * j + i for r in range(len(rows)))
    core = partition_from_beta(core_positions)
    return QuotientCore(core, tuple(quotient))


def from_core_and_quotient(core: Partition, quotient: tuple[Partition, ...], j: int) -> Partition:
    """Inverse of :func:`core_and_quotient`."""
    if len(quotient) != j:
        raise ValueError(f"quotient must have {j} components")
    beads = default_bead_count(core, j)
    while True:
        cfg = to_abacus(core, j, beads)
        if all(len(cfg.runner(i)) >= len(quotient[i]) for i in range(j)):
            break
        beads += j
    positions = []
    for i in range(j):
        m = len(cfg.runner(i))
        positions.extend(r * j + i for r in beta_numbers(quotient[i], m))
    return partition_from_beta(positions)


def rim_tableau_count(p: Partition, j: int) -> int:
    """Number of standard rim-j-hook tableaux of shape ``p``.

    Zero when the j-core is nonempty; otherwise the multinomial of the
    quotient component sizes times the product of their tableau counts.
    """
    qc = core_and_quotient(p, j)
    if qc.core:
        return 0
    sizes = [sum(q) for q in qc.quotient]
    count = factorial(sum(sizes))
    for m in sizes:
        count //= factorial(m)
    return count * prod(dimension(q) for q in qc.quotient)


def compression_permutation(p: Partition, j: int, bead_count: int | None = None) -> tuple[int, ...]:
    """One-line permutation comparing naturally numbered beads before and
    after compressing each runner.

    Beads are numbered 1..b row-major (ascending position). Compression
    pushes each runner's beads to rows 0..m-1, preserving within-runner
    order. Entry k of the result is the carried label of the bead occupying
    the k-th compressed position in row-major order.
    """
    cfg = to_abacus(p, j, bead_count)
    labels = {pos: k + 1 for k, pos in enumerate(cfg.positions)}
    compressed: dict[int, int] = {}
    for i in range(j):
        runner_positions = [pos for pos in cfg.positions if pos % j == i]
        for row, pos in enumerate(sorted(runner_positions)):
            compressed[row * j + i] = labels[pos]
    return tuple(compressed[pos] for pos in sorted(compressed))


def permutation_sign(sigma: tuple[int, ...]) -> int:
    """Sign via cycle decomposition parity; ``sigma`` is one-line, 1-based."""
    seen = [False] * len(sigma)
    sign = 1
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = sigma[x] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def abacus_sign(p: Partition, j: int, bead_count: int | None = None) -> int:
    """Sign of the compression permutation of ``p`` on the j-abacus.

    Well defined up to adding full initial rows of beads (bead_count shifts
    by multiples of j leave the sign unchanged). Computable for any p; only
    consumed when the j-core is empty.
    """
    return permutation_sign(compression_permutation(p, j, bead_count))


def inner_multiplicity(p: Partition, j: int) -> int:
    """Signed rim-hook tableau count: rim_tableau_count * abacus_sign."""
    count = rim_tableau_count(p, j)
    if count == 0:
        return 0
    return count * abacus_sign(p, j)


def abacus_report(p: Partition, j: int) -> dict:
    """JSON-ready summary: core, quotient, tableau count, sign, and sigma."""
    qc = core_and_quotient(p, j)
    sigma = compression_permutation(p, j)
    return {
        "partition": list(p),
        "j": j,
        "core": list(qc.core),
        "quotient": [list(q) for q in qc.quotient],
        "R": rim_tableau_count(p, j),
        "sign": permutation_sign(sigma),
        "sigma": list(sigma),
    }
