"""Acceptance gate: each test prints one pass/fail line per criterion.

The Monte Carlo criteria (10a-10d) are statistical assertions at fixed
deck size, trial count, and seed; the target rates are the limiting Poisson
rates of the two walks and the tolerance is three standard errors plus a
total-variation cap.
"""

import math
import re
import time
from fractions import Fraction

import pytest

from cycle_mixer import abacus, bratteli, oracle, powersums, simulate, walks
from cycle_mixer.partitions import partitions_of

SEED = 20260808

LEVELS_N7_J1 = [
    (Fraction(0), {(7,): 1}),
    (Fraction(1, 2), {(6,): 1}),
    (Fraction(1), {(7,): 1, (6, 1): 1}),
    (Fraction(3, 2), {(6,): 2, (5, 1): 1}),
    (Fraction(2), {(7,): 2, (6, 1): 3, (5, 2): 1, (5, 1, 1): 1}),
]

POWER_N8_J2_R2 = {
    (8,): 3,
    (6, 2): 4,
    (6, 1, 1): -4,
    (4, 4): 1,
    (4, 3, 1): -1,
    (4, 2, 2): 2,
    (4, 2, 1, 1): -1,
    (4, 1, 1, 1, 1): 1,
}

# Red (odd-leg) edges of the depth-2 two-hook diagram, as (upper, lower)
# node-id pairs between consecutive half levels.
RED_EDGES_N8_J2_R2 = {
    ("l1_6", "l2_6_1_1"),
    ("l2_6_1_1", "l3_6"),
    ("l3_6", "l4_6_1_1"),
    ("l3_4_2", "l4_4_2_1_1"),
    ("l3_4_1_1", "l4_4_2_2"),
    ("l3_4_1_1", "l4_4_1_1_1_1"),
}


def report(criterion: str, ok: bool, detail: str = ""):
    print(f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else ""))
    assert ok, f"criterion {criterion}: {detail}"


def test_criterion_1_single_box_levels():
    start = time.time()
    levels = bratteli.bratteli_levels(7, 1, 2)
    got = [(lev.index, lev.decomposition.coefficients) for lev in levels]
    elapsed = time.time() - start
    report("1", got == LEVELS_N7_J1 and elapsed < 1.0, f"{elapsed:.3f}s")


def test_criterion_2_two_hook_power_and_red_edges():
    start = time.time()
    power = bratteli.tensor_power(8, 2, 2)
    coefficients_ok = power.coefficients == POWER_N8_J2_R2
    dot = bratteli.dot_export(8, 2, 2)
    red = set()
    for line in dot.splitlines():
        m = re.match(r"\s*(\S+) -- (\S+) \[color=red\];", line)
        if m:
            red.add((m.group(1), m.group(2)))
    elapsed = time.time() - start
    report(
        "2",
        coefficients_ok and red == RED_EDGES_N8_J2_R2 and elapsed < 1.0,
        f"red edges {len(red)}, {elapsed:.3f}s",
    )


def test_criterion_3_closed_form_equals_path_count():
    start = time.time()
    checked = 0
    for j in (1, 2, 3):
        for r in range(4):
            for n in range(max(j + 1, 2 * r * j), 2 * r * j + 5):
                power = bratteli.tensor_power(n, j, r)
                for lam in partitions_of(n):
                    assert bratteli.closed_form_multiplicity(lam, r, j, n) == power.coefficient(
                        lam
                    ), (j, r, n, lam)
                    checked += 1
    elapsed = time.time() - start
    report("3", elapsed < 120, f"{checked} multiplicities, {elapsed:.1f}s")


def test_criterion_4_oracle_multiplicities():
    start = time.time()
    for n, j, r in ((8, 2, 2), (8, 2, 1), (7, 1, 1), (7, 1, 2), (7, 1, 3)):
        power = bratteli.tensor_power(n, j, r)
        for lam in partitions_of(n):
            assert oracle.brute_multiplicity(n, j, r, lam) == power.coefficient(lam), (
                n, j, r, lam,
            )
    elapsed = time.time() - start
    report("4", elapsed < 300, f"{elapsed:.1f}s")


def test_criterion_5_cluster_identity():
    ok = True
    for j in (2, 3):
        for r in range(4):
            for n in (2 * r * j, 2 * r * j + 3):
                ok = ok and bratteli.cluster_identity_check(j, r, n) == (-1) ** r
    report("5", ok)


def test_criterion_6_tensor_identity():
    for j in (1, 2, 3):
        for n in range(j + 1, 10):
            for alpha in partitions_of(n):
                for beta in partitions_of(n - j):
                    residual = powersums.tensor_identity_residual(
                        powersums.p_basis(alpha), powersums.p_basis(beta), j
                    )
                    assert residual.is_zero, (alpha, beta, j)
    report("6", True)


def test_criterion_7_spectral_equals_convolution():
    start = time.time()
    for n in (5, 6):
        for kind, i in ((walks.STAR, None), (walks.ICYCLE, 2), (walks.ICYCLE, 3)):
            step = oracle.star_measure(n) if kind == walks.STAR else oracle.icycle_measure(n, i)
            dist = oracle.point_mass(n)
            for k in range(7):
                if k:
                    dist = oracle.convolve(step, dist)
                for j, r in ((1, 1), (1, 2), (2, 1)):
                    spec = walks.WalkSpec(kind, n, k, i=i)
                    exact = walks.exact_moment(bratteli.ajr_decomposition(n, j, r), spec)
                    brute = oracle.brute_moment(dist, j, r)
                    assert exact == brute, (kind, n, k, j, r, exact, brute)
    elapsed = time.time() - start
    report("7", elapsed < 600, f"{elapsed:.1f}s")


def test_criterion_8_worked_abacus_example():
    sigma = abacus.compression_permutation((8, 6, 5, 4, 2, 2), 3)
    sign = abacus.abacus_sign((8, 6, 5, 4, 2, 2), 3)
    report("8", sigma == (1, 2, 3, 5, 8, 4, 6, 9, 7) and sign == -1, f"sigma={sigma}")


def test_criterion_9_limit_algebra():
    worst = 0.0
    for j in (2, 3, 4):
        for r in range(6):
            for c in (0.25, 0.5, 1.0, 2.0):
                rate = (1 - math.exp(-j * c)) / j
                lhs = walks.limiting_jcycle_moment(j, r, c)
                rhs = walks.poisson_moment(rate, r)
                rel = abs(lhs - rhs) / max(abs(rhs), 1e-300)
                worst = max(worst, rel)
    report("9", worst <= 1e-12, f"worst relative error {worst:.2e}")


# ---------------------------------------------------------------------------
# Monte Carlo criteria: n = 200, 10^5 trials, fixed seed.

N_SIM = 200
TRIALS = 100_000

SIM_CONFIGS = {
    "star_cn": simulate.SimConfig(
        spec=walks.WalkSpec(walks.STAR, N_SIM, walks.schedule_steps(walks.STAR, "cn", N_SIM, 1.0)),
        trials=TRIALS,
        seed=SEED,
        tracked_js=(2,),
        c=1.0,
        schedule="cn",
    ),
    "icycle_cn_over_i": simulate.SimConfig(
        spec=walks.WalkSpec(
            walks.ICYCLE, N_SIM, walks.schedule_steps(walks.ICYCLE, "cn_over_i", N_SIM, 1.0, 3), i=3
        ),
        trials=TRIALS,
        seed=SEED,
        tracked_js=(2,),
        c=1.0,
        schedule="cn_over_i",
    ),
    "star_nlogn": simulate.SimConfig(
        spec=walks.WalkSpec(
            walks.STAR, N_SIM, walks.schedule_steps(walks.STAR, "nlogn", N_SIM, 1.0)
        ),
        trials=TRIALS,
        seed=SEED,
        tracked_js=(1,),
        c=1.0,
        schedule="nlogn",
    ),
    "icycle_cn": simulate.SimConfig(
        spec=walks.WalkSpec(walks.ICYCLE, N_SIM, walks.schedule_steps(walks.ICYCLE, "cn", N_SIM, 1.0, 3), i=3),
        trials=TRIALS,
        seed=SEED,
        tracked_js=(2,),
        c=1.0,
        schedule="cn",
    ),
}


@pytest.fixture(scope="module")
def sim_results():
    results = {}
    for name, config in SIM_CONFIGS.items():
        start = time.time()
        results[name] = simulate.run(config, threads=1)
        print(f"[sim {name}] k={config.spec.k} {time.time() - start:.1f}s")
    return results


def _mean_check(summary, j, rate):
    st = summary.stats[j]
    mean = st.moments[1]
    variance = st.moments[2] - mean**2
    se = math.sqrt(variance / summary.config.trials)
    return mean, se, abs(mean - rate) <= 3 * se


def test_criterion_10a_star_two_cycles(sim_results):
    summary = sim_results["star_cn"]
    rate = (1 - math.exp(-2)) / 2
    mean, se, mean_ok = _mean_check(summary, 2, rate)
    tv = summary.stats[2].tv_distance
    report(
        "10a",
        mean_ok and tv <= 0.05,
        f"mean {mean:.4f} vs {rate:.4f} (3se {3 * se:.4f}), tv {tv:.4f}",
    )


def test_criterion_10b_icycle_two_cycles(sim_results):
    summary = sim_results["icycle_cn_over_i"]
    rate = (1 - math.exp(-2)) / 2
    mean, se, mean_ok = _mean_check(summary, 2, rate)
    tv = summary.stats[2].tv_distance
    report(
        "10b",
        mean_ok and tv <= 0.05,
        f"mean {mean:.4f} vs {rate:.4f} (3se {3 * se:.4f}), tv {tv:.4f}",
    )


def test_criterion_10c_star_fixed_points(sim_results):
    summary = sim_results["star_nlogn"]
    rate = 1 + math.exp(-1)
    mean, se, mean_ok = _mean_check(summary, 1, rate)
    tv = summary.stats[1].tv_distance
    report(
        "10c",
        mean_ok and tv <= 0.05,
        f"mean {mean:.4f} vs {rate:.4f} (3se {3 * se:.4f}), tv {tv:.4f}",
    )


def test_criterion_10d_icycle_cn_two_cycles(sim_results):
    summary = sim_results["icycle_cn"]
    rate = (1 - math.exp(-6)) / 2
    mean, se, mean_ok = _mean_check(summary, 2, rate)
    report("10d", mean_ok, f"mean {mean:.4f} vs {rate:.4f} (3se {3 * se:.4f})")


def test_criterion_11_thread_determinism(sim_results):
    ok = True
    for name, config in SIM_CONFIGS.items():
        base = sim_results[name]
        for threads in (4, 8):
            rerun = simulate.run(config, threads=threads)
            if rerun != base:
                ok = False
    report("11", ok)
