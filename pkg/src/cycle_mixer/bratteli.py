"""Signed rim-hook restriction-induction on virtual decompositions, level
computation for tensor powers of the signed j-cycle module, Stirling
numbers, cluster constants, and the closed-form multiplicity.

A virtual decomposition maps partitions of a fixed size to signed integer
coefficients; zero coefficients are dropped eagerly so that cancellation
keeps levels sparse.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import comb

from .abacus import inner_multiplicity
from .characters import ClassFunctionDecomposition
from .partitions import (
    Partition,
    addable_rim_hooks,
    dimension,
    partitions_of,
    removable_rim_hooks,
)


@dataclass(frozen=True)
class VirtualDecomposition:
    level_size: int
    coefficients: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        for key, c in self.coefficients.items():
            if sum(key) != self.level_size:
                raise ValueError(f"key {key} is not a partition of {self.level_size}")
            if c == 0:
                raise ValueError(f"zero coefficient stored for {key}")

    def coefficient(self, lam: Partition) -> int:
        return self.coefficients.get(lam, 0)


@dataclass(frozen=True)
class BratteliLevel:
    index: Fraction  # half-integer level
    decomposition: VirtualDecomposition


@cache
def stirling2(r: int, a: int) -> int:
    """Stirling numbers of the second kind; 0 outside 0 <= a <= r."""
    if r < 0 or a < 0 or a > r:
        return 0
    if r == 0:
        return 1  # a == 0 here
    return a * stirling2(r - 1, a) + stirling2(r - 1, a - 1)


def mn_restrict(d: VirtualDecomposition, j: int) -> VirtualDecomposition:
    """Signed restriction: each rim-j-hook removal contributes with sign
    (-1)^leg. Level size drops by j."""
    if d.level_size < j:
        raise ValueError(f"cannot restrict level of size {d.level_size} by {j}")
    out: dict[Partition, int] = {}
    for lam, c in d.coefficients.items():
        for hook in removable_rim_hooks(lam, j):
            out[hook.inner] = out.get(hook.inner, 0) + c * (-1) ** hook.leg_length
    return VirtualDecomposition(d.level_size - j, {k: v for k, v in out.items() if v})


def mn_induce(d: VirtualDecomposition, j: int) -> VirtualDecomposition:
    """Signed induction: each rim-j-hook addition contributes with sign
    (-1)^leg. Level size grows by j."""
    out: dict[Partition, int] = {}
    for mu, c in d.coefficients.items():
        for hook in addable_rim_hooks(mu, j):
            out[hook.outer] = out.get(hook.outer, 0) + c * (-1) ** hook.leg_length
    return VirtualDecomposition(d.level_size + j, {k: v for k, v in out.items() if v})


def bratteli_levels(n: int, j: int, r: int) -> list[BratteliLevel]:
    """Levels 0, 1/2, 1, ..., r of the signed restriction-induction diagram
    rooted at the single-row partition of n."""
    if n <= j:
        raise ValueError(f"need n > j (n={n}, j={j})")
    if r < 0:
        raise ValueError("r must be nonnegative")
    current = VirtualDecomposition(n, {(n,): 1})
    levels = [BratteliLevel(Fraction(0), current)]
    for step in range(r):
        half = mn_restrict(current, j)
        levels.append(BratteliLevel(Fraction(2 * step + 1, 2), half))
        current = mn_induce(half, j)
        levels.append(BratteliLevel(Fraction(step + 1), current))
    return levels


def tensor_power(n: int, j: int, r: int) -> VirtualDecomposition:
    """Decomposition of the r-th tensor power of the signed j-cycle module:
    r rounds of restrict-then-induce applied to the trivial module."""
    return bratteli_levels(n, j, r)[-1].decomposition


@cache
def cluster_coeff(t: int, r: int, j: int) -> int:
    """Closed-form cluster constant sum_{a=t}^{r} S(r,a) C(a,t) j^(r-a);
    0 outside 0 <= t <= r."""
    if t < 0 or r < 0 or t > r:
        return 0
    return sum(stirling2(r, a) * comb(a, t) * j ** (r - a) for a in range(t, r + 1))


def closed_form_multiplicity(lam: Partition, r: int, j: int, n: int) -> int:
    """Multiplicity of the irreducible indexed by ``lam`` in the r-th tensor
    power, via the signed tableau count times the cluster constant.

    Only asserted for n >= 2rj. Zero unless lam = (n - tj, rest) for an
    integer 0 <= t <= r.
    """
    if n < 2 * r * j:
        raise ValueError(f"closed form only asserted for n >= 2rj (n={n}, r={r}, j={j})")
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    first = lam[0] if lam else 0
    q, rem = divmod(n - first, j)
    if rem != 0 or q > r:
        return 0
    rest = lam[1:]
    return inner_multiplicity(rest, j) * cluster_coeff(q, r, j)


def ajr_decomposition(n: int, j: int, r: int) -> ClassFunctionDecomposition:
    """Character decomposition of the r-th power of the j-cycle count:
    tensor-power coefficients divided by j^r."""
    if n < 2 * r * j:
        raise ValueError(f"decomposition requires n >= 2rj (n={n}, r={r}, j={j})")
    power = tensor_power(n, j, r)
    scale = Fraction(1, j**r)
    return ClassFunctionDecomposition(
        n, {lam: c * scale for lam, c in power.coefficients.items()}
    )


def cluster_identity_check(j: int, r: int, n: int) -> int:
    """Signed dimension sum over the r-th cluster; contract: equals (-1)^r."""
    if j < 2:
        raise ValueError("j must be >= 2")
    if n < 2 * r * j:
        raise ValueError(f"requires n >= 2rj (n={n}, r={r}, j={j})")
    total = 0
    for rest in partitions_of(r * j):
        m = inner_multiplicity(rest, j)
        if m == 0:
            continue
        total += m * dimension((n - r * j,) + rest if n > r * j else rest)
    return total


def _node_id(level_twice: int, lam: Partition) -> str:
    tail = "_".join(str(x) for x in lam) if lam else "empty"
    return f"l{level_twice}_{tail}"


def dot_export(n: int, j: int, levels: int) -> str:
    """Graphviz rendering of levels 0..levels; edges with odd leg length are
    drawn red, matching the signed-edge convention."""
    level_list = bratteli_levels(n, j, levels)
    lines = ["graph bratteli {", "  rankdir=TB;"]
    for t, level in enumerate(level_list):
        names = []
        for lam, c in sorted(level.decomposition.coefficients.items(), reverse=True):
            node = _node_id(t, lam)
            label = f"({','.join(str(x) for x in lam)})" if lam else "()"
            lines.append(f'  {node} [label="{label} : {c}"];')
            names.append(node)
        lines.append("  { rank=same; " + "; ".join(names) + "; }")
    for t in range(len(level_list) - 1):
        upper = level_list[t].decomposition
        lower = level_list[t + 1].decomposition
        restricting = upper.level_size > lower.level_size
        for lam in sorted(upper.coefficients, reverse=True):
            hooks = removable_rim_hooks(lam, j) if restricting else addable_rim_hooks(lam, j)
            for hook in hooks:
                other = hook.inner if restricting else hook.outer
                if other not in lower.coefficients:
                    continue
                color = "red" if hook.leg_length % 2 else "black"
                lines.append(
                    f"  {_node_id(t, lam)} -- {_node_id(t + 1, other)} [color={color}];"
                )
    lines.append("}")
    return "\n".join(lines)
