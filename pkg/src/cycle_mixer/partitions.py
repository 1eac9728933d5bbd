"""Integer partitions, Young-diagram geometry, hook lengths, and rim hooks.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0. Every function here is pure and
every returned value immutable, so the whole module is safe to use from
any number of threads.
"""

from functools import cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts`` into a partition tuple.

    Trailing zeros are stripped; negative entries or sequences that are not
    weakly decreasing raise ValueError.
    """
    p = tuple(parts)
    if any(not isinstance(x, int) for x in p):
        raise ValueError(f"partition parts must be integers, got {p!r}")
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive, got {p!r}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"partition parts must be weakly decreasing, got {p!r}")
    return p


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for row in p if row > col) for col in range(p[0]))


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    return tuple(gen(n, n))


@cache
def dimension(p: Partition) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook-length formula)."""
    n = sum(p)
    conj = conjugate(p)
    hook_product = 1
    for i, row in enumerate(p):
        for col in range(row):
            hook_product *= row - col + conj[col] - i - 1
    return factorial(n) // hook_product


def beta_numbers(p: Partition, bead_count: int) -> tuple[int, ...]:
    """First-column hook lengths of ``p`` padded to ``bead_count`` beads.

    Returns the strictly decreasing tuple p_i + (bead_count - i), 1-based i,
    with p_i = 0 beyond the last part.
    """
    if bead_count < len(p):
        raise ValueError(f"bead_count {bead_count} < number of parts {len(p)}")
    return tuple(
        (p[i] if i < len(p) else 0) + bead_count - 1 - i for i in range(bead_count)
    )


def partition_from_beta(beta: Iterable[int]) -> Partition:
    """Inverse of :func:`beta_numbers`: decode bead positions to a partition."""
    positions = sorted(beta, reverse=True)
    b = len(positions)
    if len(set(positions)) != b or (positions and positions[-1] < 0):
        raise ValueError(f"bead positions must be distinct and nonnegative: {positions}")
    return as_partition(q - (b - 1 - i) for i, q in enumerate(positions))


def inner_corner_removals(p: Partition) -> list[tuple[int, Partition]]:
    """All single-box removals, as (1-based row index, smaller partition).

    Ordered by row index ascending.
    """
    if not p:
        raise ValueError("no removable cells in the empty partition")
    out = []
    for i, row in enumerate(p):
        below = p[i + 1] if i + 1 < len(p) else 0
        if row > below:
            out.append((i + 1, as_partition(p[:i] + (row - 1,) + p[i + 1 :])))
    return out


class RimHook(NamedTuple):
    """A removable/addable border strip: ``outer``/``inner`` is the strip."""

    outer: Partition
    inner: Partition
    length: int
    leg_length: int


def removable_rim_hooks(p: Partition, j: int) -> list[RimHook]:
    """All rim hooks of length ``j`` removable from ``p``.

    The bead model: with len(p) beads, a removable j-hook is a bead at
    position b with b - j >= 0 unoccupied; its leg length is the number of
    beads strictly between b - j and b. Results are ordered by the remaining
    partition, descending lexicographically.
    """
    if j < 1:
        raise ValueError("hook length must be >= 1")
    beads = set(beta_numbers(p, len(p)))
    hooks = []
    for b in beads:
        target = b - j
        if target < 0 or target in beads:
            continue
        leg = sum(1 for q in beads if target < q < b)
        inner = partition_from_beta((beads - {b}) | {target})
        hooks.append(RimHook(p, inner, j, leg))
    hooks.sort(key=lambda h: h.inner, reverse=True)
    return hooks


def addable_rim_hooks(p: Partition, j: int, target_size: int | None = None) -> list[RimHook]:
    """All rim hooks of length ``j`` addable to ``p``.

    ``target_size``, when given, must equal |p| + j. Ordered by the enlarged
    partition, descending lexicographically.
    """
    if j < 1:
        raise ValueError("hook length must be >= 1")
    if target_size is not None and target_size != sum(p) + j:
        raise ValueError(f"target_size must be |p| + j = {sum(p) + j}, got {target_size}")
    # j extra beads cover every possible new row of the enlarged partition.
    beads = set(beta_numbers(p, len(p) + j))
    hooks = []
    for b in beads:
        target = b + j
        if target in beads:
            continue
        leg = sum(1 for q in beads if b < q < target)
        outer = partition_from_beta((beads - {b}) | {target})
        hooks.append(RimHook(outer, p, j, leg))
    hooks.sort(key=lambda h: h.outer, reverse=True)
    return hooks


def partition_to_json(p: Partition) -> list[int]:
    return list(p)


def partition_from_json(data: Iterable[int]) -> Partition:
    return as_partition(data)
