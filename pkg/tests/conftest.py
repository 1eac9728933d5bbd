"""Shared strategies and independent combinatorial oracles.

The oracles here deliberately avoid the library's own algorithms: tableau
counts come from backtracking enumeration, rim hooks from cell-level skew
checks, and signs from exhaustive build sequences.
"""

from collections import Counter

from hypothesis import strategies as st

from cycle_mixer.partitions import Partition, as_partition


@st.composite
def partition_strategy(draw, max_n=12, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bins)
    return as_partition(sorted(counts.values(), reverse=True))


def enumerate_syt_count(shape: Partition) -> int:
    """Standard Young tableaux by backtracking over corner removals."""
    if not shape:
        return 1
    total = 0
    for i, row in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if row > below:
            smaller = as_partition(shape[:i] + (row - 1,) + shape[i + 1 :])
            total += enumerate_syt_count(smaller)
    return total


def cells(p: Partition) -> set[tuple[int, int]]:
    return {(i, c) for i, row in enumerate(p) for c in range(row)}


def is_rim_hook_skew(outer: Partition, inner: Partition) -> bool:
    """Cell-level check: outer/inner is edgewise connected with no 2x2 block."""
    outer_cells = cells(outer)
    inner_cells = cells(inner)
    if not inner_cells <= outer_cells:
        return False
    skew = outer_cells - inner_cells
    if not skew:
        return False
    for (i, c) in skew:
        if {(i + 1, c), (i, c + 1), (i + 1, c + 1)} <= skew:
            return False
    # connectivity by edge adjacency
    todo = [next(iter(skew))]
    seen = {todo[0]}
    while todo:
        i, c = todo.pop()
        for nb in ((i + 1, c), (i - 1, c), (i, c + 1), (i, c - 1)):
            if nb in skew and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen == skew


def naive_removable_hooks(p: Partition, j: int) -> set[tuple[Partition, int]]:
    """All (smaller partition, leg length) pairs by direct skew inspection."""
    from cycle_mixer.partitions import partitions_of

    out = set()
    n = sum(p)
    if n < j:
        return out
    for q in partitions_of(n - j):
        if is_rim_hook_skew(p, q):
            rows = {i for (i, _) in cells(p) - cells(q)}
            out.add((q, len(rows) - 1))
    return out


def signed_build_sequences(p: Partition, j: int) -> list[int]:
    """Signs (-1)^(total leg length) of every removal sequence down to the
    empty partition; empty list when no complete sequence exists."""
    from cycle_mixer.partitions import removable_rim_hooks

    if not p:
        return [1]
    signs = []
    for hook in removable_rim_hooks(p, j):
        for s in signed_build_sequences(hook.inner, j):
            signs.append(s * (-1) ** hook.leg_length)
    return signs
