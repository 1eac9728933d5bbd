from fractions import Fraction

import pytest

from cycle_mixer.bratteli import (
    VirtualDecomposition,
    ajr_decomposition,
    bratteli_levels,
    closed_form_multiplicity,
    cluster_coeff,
    cluster_identity_check,
    dot_export,
    mn_induce,
    mn_restrict,
    stirling2,
    tensor_power,
)
from cycle_mixer.characters import aj_decomposition, character_value, evaluate
from cycle_mixer.partitions import partitions_of

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


def test_stirling_numbers():
    assert stirling2(0, 0) == 1
    for r in range(8):
        assert stirling2(r, r) == 1
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(3, 5) == 0
    assert stirling2(3, -1) == 0


def test_mn_restrict_examples():
    d = VirtualDecomposition(8, {(8,): 1})
    assert mn_restrict(d, 2).coefficients == {(6,): 1}
    level1 = VirtualDecomposition(8, {(8,): 1, (6, 2): 1, (6, 1, 1): -1})
    assert mn_restrict(level1, 2).coefficients == {(6,): 3, (4, 2): 1, (4, 1, 1): -1}
    with pytest.raises(ValueError):
        mn_restrict(VirtualDecomposition(1, {(1,): 1}), 2)


def test_mn_induce_examples():
    half = VirtualDecomposition(6, {(6,): 1})
    assert mn_induce(half, 2).coefficients == {(8,): 1, (6, 2): 1, (6, 1, 1): -1}
    empty = VirtualDecomposition(0, {(): 1})
    assert mn_induce(empty, 3).coefficients == {(3,): 1, (2, 1): -1, (1, 1, 1): 1}


def test_j1_restriction_is_ordinary():
    d = VirtualDecomposition(5, {(3, 2): 1})
    assert mn_restrict(d, 1).coefficients == {(2, 2): 1, (3, 1): 1}


def test_tensor_power_frozen_levels():
    levels = bratteli_levels(7, 1, 2)
    assert [(lev.index, lev.decomposition.coefficients) for lev in levels] == LEVELS_N7_J1
    assert tensor_power(8, 2, 2).coefficients == POWER_N8_J2_R2
    assert tensor_power(9, 2, 0).coefficients == {(9,): 1}
    with pytest.raises(ValueError):
        tensor_power(2, 2, 1)


def test_cluster_coeff_values():
    for r in range(6):
        for j in range(1, 5):
            assert cluster_coeff(r, r, j) == 1
    assert cluster_coeff(0, 2, 2) == 3
    assert cluster_coeff(1, 2, 2) == 4
    for j in range(1, 6):
        assert cluster_coeff(0, 2, j) == j + 1
        assert cluster_coeff(1, 2, j) == j + 2
    assert cluster_coeff(3, 2, 2) == 0
    assert cluster_coeff(-1, 2, 2) == 0


def test_cluster_coeff_recurrence():
    for j in range(1, 6):
        for r in range(1, 13):
            for t in range(r + 1):
                assert cluster_coeff(t, r, j) == (
                    cluster_coeff(t - 1, r - 1, j)
                    + (j * t + 1) * cluster_coeff(t, r - 1, j)
                    + j * (t + 1) * cluster_coeff(t + 1, r - 1, j)
                )


def test_closed_form_examples():
    for n, r, j in ((8, 2, 2), (10, 2, 2), (12, 3, 2)):
        want = sum(stirling2(r, a) * j ** (r - a) for a in range(r + 1))
        assert closed_form_multiplicity((n,), r, j, n) == want
    assert closed_form_multiplicity((6, 1, 1), 2, 2, 8) == -4
    assert closed_form_multiplicity((8, 1, 1), 2, 2, 10) == -4
    assert closed_form_multiplicity((4, 2, 2), 2, 2, 8) == 2
    assert closed_form_multiplicity((6, 2, 2), 2, 2, 10) == 2
    # first row not congruent to n mod j
    assert closed_form_multiplicity((7, 1), 2, 2, 8) == 0
    with pytest.raises(ValueError):
        closed_form_multiplicity((6, 1, 1), 3, 2, 8)


def test_closed_form_matches_path_count():
    for j in (1, 2, 3):
        for r in range(4):
            for n in range(max(j + 1, 2 * r * j), 2 * r * j + 3):
                power = tensor_power(n, j, r)
                for lam in partitions_of(n):
                    assert closed_form_multiplicity(lam, r, j, n) == power.coefficient(lam)


def test_coefficient_stabilization():
    for j, r in ((1, 3), (2, 2), (3, 2)):
        reference = None
        for n in range(2 * r * j, 2 * r * j + 5):
            power = tensor_power(n, j, r)
            shifted = {}
            for lam, c in power.coefficients.items():
                t = (n - lam[0]) // j
                shifted[(t, lam[1:])] = c
            if reference is None:
                reference = shifted
            else:
                assert shifted == reference


def test_tensor_power_character_identity():
    # the level-1 class function equals j * (j-cycle count) pointwise
    for n in range(3, 9):
        for j in range(1, n // 2 + 1):
            power = tensor_power(n, j, 1)
            for mu in partitions_of(n):
                value = sum(c * character_value(lam, mu) for lam, c in power.coefficients.items())
                assert value == j * sum(1 for part in mu if part == j)


def test_tensor_power_squared_class_function():
    power = tensor_power(8, 2, 2)
    for mu in partitions_of(8):
        value = sum(c * character_value(lam, mu) for lam, c in power.coefficients.items())
        a2 = sum(1 for part in mu if part == 2)
        assert value == (2 * a2) ** 2


def test_ajr_decomposition():
    assert ajr_decomposition(8, 2, 2).coefficients == {
        lam: Fraction(c, 4) for lam, c in POWER_N8_J2_R2.items()
    }
    assert ajr_decomposition(9, 1, 1).coefficients == {(9,): 1, (8, 1): 1}
    assert ajr_decomposition(12, 3, 1) == aj_decomposition(12, 3)
    for mu in partitions_of(8):
        a2 = sum(1 for part in mu if part == 2)
        assert evaluate(ajr_decomposition(8, 2, 2), mu) == a2**2
    with pytest.raises(ValueError):
        ajr_decomposition(7, 2, 2)


def test_cluster_identity():
    assert cluster_identity_check(2, 0, 0) == 1
    assert cluster_identity_check(2, 1, 8) == -1
    assert cluster_identity_check(3, 2, 12) == 1
    for j in (2, 3):
        for r in range(4):
            for n in (2 * r * j, 2 * r * j + 3):
                assert cluster_identity_check(j, r, n) == (-1) ** r


def test_virtual_decomposition_validation():
    with pytest.raises(ValueError):
        VirtualDecomposition(5, {(3, 1): 1})
    with pytest.raises(ValueError):
        VirtualDecomposition(4, {(3, 1): 0})


def test_dot_export_smoke():
    dot = dot_export(8, 2, 2)
    assert dot.startswith("graph bratteli {")
    assert 'l4_6_1_1 [label="(6,1,1) : -4"];' in dot
    assert "l1_6 -- l2_6_1_1 [color=red];" in dot
    # black edge from the root
    assert "l0_8 -- l1_6 [color=black];" in dot
