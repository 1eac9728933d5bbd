"""Low-level permutation utilities shared by the exact oracle and the
simulator. Permutations are tuples in one-line form on symbols 0..n-1."""

from math import factorial

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: (p o q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(p)))


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths in weakly decreasing order."""
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def count_j_cycles(p: Permutation, j: int) -> int:
    """Number of cycles of length exactly j."""
    seen = [False] * len(p)
    count = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        if length == j:
            count += 1
    return count


def lehmer_rank(p: Permutation) -> int:
    """Rank in lexicographic order of one-line forms, 0-based."""
    n = len(p)
    rank = 0
    for i in range(n):
        smaller = sum(1 for x in p[i + 1 :] if x < p[i])
        rank += smaller * factorial(n - 1 - i)
    return rank


def lehmer_unrank(n: int, rank: int) -> Permutation:
    symbols = list(range(n))
    out = []
    for i in range(n):
        f = factorial(n - 1 - i)
        idx, rank = divmod(rank, f)
        out.append(symbols.pop(idx))
    return tuple(out)
