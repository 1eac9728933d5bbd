"""Cross-check suite: every exact pipeline is compared against an
independent small-scale computation. Exposed through the CLI ``verify``
subcommand and the service; the test suite runs wider versions of the same
comparisons."""

from dataclasses import dataclass

from . import abacus, bratteli, characters, oracle, powersums, walks
from .partitions import partitions_of, removable_rim_hooks


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check_aj_counts(fast: bool):
    top = 6 if fast else 8
    for n in range(2, top + 1):
        for j in range(1, n // 2 + 1):
            decomp = characters.aj_decomposition(n, j)
            for mu in partitions_of(n):
                want = sum(1 for part in mu if part == j)
                got = characters.evaluate(decomp, mu)
                if got != want:
                    return CheckResult(
                        "aj_counts", False, f"n={n} j={j} mu={mu}: {got} != {want}"
                    )
    return CheckResult("aj_counts", True)


def _check_multiplicities(fast: bool):
    grid = [(6, 2, 1), (6, 3, 1), (7, 1, 1), (7, 1, 2)]
    if not fast:
        grid += [(7, 1, 3), (7, 2, 1), (7, 3, 1), (8, 2, 1), (8, 2, 2), (8, 3, 1)]
    for n, j, r in grid:
        power = bratteli.tensor_power(n, j, r)
        for lam in partitions_of(n):
            want = oracle.brute_multiplicity(n, j, r, lam)
            got = power.coefficient(lam)
            if want != got:
                return CheckResult(
                    "tensor_multiplicities",
                    False,
                    f"n={n} j={j} r={r} lam={lam}: path count {got} != oracle {want}",
                )
    return CheckResult("tensor_multiplicities", True)


def _check_closed_form(fast: bool):
    combos = [(1, 1), (1, 2), (2, 1), (2, 2)] if fast else [
        (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2)
    ]
    for j, r in combos:
        for n in range(max(j + 1, 2 * r * j), 2 * r * j + 3):
            power = bratteli.tensor_power(n, j, r)
            for lam in partitions_of(n):
                want = power.coefficient(lam)
                got = bratteli.closed_form_multiplicity(lam, r, j, n)
                if want != got:
                    return CheckResult(
                        "closed_form",
                        False,
                        f"n={n} j={j} r={r} lam={lam}: closed form {got} != paths {want}",
                    )
    return CheckResult("closed_form", True)


def _check_moments(fast: bool):
    ns = (5,) if fast else (5, 6)
    ks = range(0, 4 if fast else 5)
    for n in ns:
        walks_to_try = [
            walks.WalkSpec(walks.STAR, n, 0),
            walks.WalkSpec(walks.ICYCLE, n, 0, i=2),
            walks.WalkSpec(walks.ICYCLE, n, 0, i=3),
        ]
        for base in walks_to_try:
            step = (
                oracle.star_measure(n)
                if base.kind == walks.STAR
                else oracle.icycle_measure(n, base.i)
            )
            dist = oracle.point_mass(n)
            for k in ks:
                if k > 0:
                    dist = oracle.convolve(step, dist)
                for j, r in ((1, 1), (1, 2), (2, 1)):
                    if n < 2 * r * j:
                        continue
                    spec = walks.WalkSpec(base.kind, n, k, i=base.i)
                    exact = walks.exact_moment(bratteli.ajr_decomposition(n, j, r), spec)
                    brute = oracle.brute_moment(dist, j, r)
                    if exact != brute:
                        return CheckResult(
                            "spectral_vs_convolution",
                            False,
                            f"{base.kind} n={n} k={k} j={j} r={r}: {exact} != {brute}",
                        )
    return CheckResult("spectral_vs_convolution", True)


def _check_cluster_identity(fast: bool):
    rs = range(0, 3 if fast else 4)
    for j in (2, 3):
        for r in rs:
            for n in (2 * r * j, 2 * r * j + 3):
                got = bratteli.cluster_identity_check(j, r, n)
                if got != (-1) ** r:
                    return CheckResult(
                        "cluster_identity", False, f"j={j} r={r} n={n}: {got}"
                    )
    return CheckResult("cluster_identity", True)


def _check_tensor_identity(fast: bool):
    top = 6 if fast else 8
    for j in (1, 2, 3):
        for n in range(j + 1, top + 1):
            for alpha in partitions_of(n):
                for beta in partitions_of(n - j):
                    residual = powersums.tensor_identity_residual(
                        powersums.p_basis(alpha), powersums.p_basis(beta), j
                    )
                    if not residual.is_zero:
                        return CheckResult(
                            "tensor_identity", False, f"alpha={alpha} beta={beta} j={j}"
                        )
    return CheckResult("tensor_identity", True)


def _check_abacus_example(fast: bool):
    sigma = abacus.compression_permutation((8, 6, 5, 4, 2, 2), 3)
    sign = abacus.permutation_sign(sigma)
    ok = sigma == (1, 2, 3, 5, 8, 4, 6, 9, 7) and sign == -1
    return CheckResult("abacus_example", ok, f"sigma={sigma} sign={sign}")


def _check_rim_counts(fast: bool):
    top = 8 if fast else 10
    for j in (2, 3):
        for n in range(0, top + 1, j):
            for lam in partitions_of(n):
                want = _count_build_sequences(lam, j)
                got = abacus.rim_tableau_count(lam, j)
                if want != got:
                    return CheckResult(
                        "rim_tableau_counts", False, f"lam={lam} j={j}: {got} != {want}"
                    )
    return CheckResult("rim_tableau_counts", True)


def _count_build_sequences(lam, j) -> int:
    if not lam:
        return 1
    return sum(_count_build_sequences(hook.inner, j) for hook in removable_rim_hooks(lam, j))


ALL_CHECKS = (
    _check_aj_counts,
    _check_multiplicities,
    _check_closed_form,
    _check_moments,
    _check_cluster_identity,
    _check_tensor_identity,
    _check_abacus_example,
    _check_rim_counts,
)


def run_all(fast: bool = False) -> list[CheckResult]:
    return [check(fast) for check in ALL_CHECKS]
