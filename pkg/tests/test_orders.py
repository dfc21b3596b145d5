from fractions import Fraction

import pytest

from quatdesign.budget import ResourceBudgetError, get_budget
from quatdesign.exactnum import golden_elem, iota, rat
from quatdesign.groups import build_group, omega
from quatdesign.orders import (
    OrderElement,
    coords_of,
    embed_coords,
    enumerate_shell,
    kappa4,
    kappa4_gram,
    orbit_decompose,
    order_basis,
    quadratic_form,
    right_multiplication_matrices,
    shell_count_formula,
    sigma,
)
from quatdesign.quat import Quaternion, norm, qmul
from quatdesign.strength import pair_sum_tests_bulk


def test_sigma_values():
    assert sigma(1, 6) == 12
    assert sigma(3, 2) == 9
    assert sigma(3, 20) == 9198
    with pytest.raises(ValueError):
        sigma(1, 0)


def test_count_formulas_match_printed_expansions():
    assert [shell_count_formula("2T", m) for m in range(1, 5)] == [24, 24, 96, 24]
    assert [shell_count_formula("2O", m) for m in range(1, 5)] == [48, 624, 1344, 5232]
    assert [shell_count_formula("2I", m) for m in range(1, 5)] == [240, 2160, 6720, 17520]


@pytest.mark.parametrize("label", ["2T", "2O", "2I"])
def test_quadratic_form_definite_and_published(label):
    form = quadratic_form(label)  # construction asserts the published match
    assert form.is_positive_definite()
    assert form.dimension == (4 if label == "2T" else 8)


def test_q2t_values():
    form = quadratic_form("2T")
    assert form.evaluate((0, 0, 0, 1)) == 1  # the element omega
    assert form.evaluate((1, 0, 0, 0)) == 1
    x = embed_coords("2T", (1, 1, 1, 2))
    assert form.evaluate((1, 1, 1, 2)) == iota(norm(x))
    # same value through plain quaternion arithmetic
    w = omega()
    direct = Quaternion(1, 1, 1, 0) + w + w
    assert norm(direct).a == form.evaluate((1, 1, 1, 2))


def test_embedding_round_trip():
    for label in ("2T", "2O", "2I"):
        for coords in [(1, 0, 0, 0), (0, 1, 0, 0), (2, -1, 3, 1)]:
            full = coords + (0,) * (len(order_basis(label)) - 4)
            q = embed_coords(label, full)
            assert coords_of(label, q) == full


def test_shell_counts_small():
    for label, m_max in (("2T", 10), ("2O", 6), ("2I", 4)):
        for m in range(1, m_max + 1):
            assert len(enumerate_shell(label, m)) == shell_count_formula(label, m)


def test_shell_values_and_sortedness():
    sh = enumerate_shell("2O", 2)
    form = quadratic_form("2O")
    assert list(sh.points) == sorted(sh.points)
    for coords in sh.points[:50]:
        assert form.evaluate(coords) == 2
        assert iota(norm(embed_coords("2O", coords))) == 2


def test_unit_shell_identities():
    assert set(enumerate_shell("2T", 1).embedded()) == build_group("2T").as_set()
    assert set(enumerate_shell("2O", 1).embedded()) == build_group("2O").as_set()
    g = build_group("2I")
    tau = golden_elem(0, 1)
    expected = set(g.elements) | {e * tau for e in g.elements}
    assert set(enumerate_shell("2I", 1).embedded()) == expected


def test_orbit_decomposition():
    sh = enumerate_shell("2T", 1)
    assert len(orbit_decompose(sh)) == 1
    sh = enumerate_shell("2I", 1)
    reps = orbit_decompose(sh)
    assert len(reps) == 2
    norms = {norm(embed_coords("2I", r)) for r in reps}
    tau = golden_elem(0, 1)
    assert norms == {rat(1), tau * tau}
    for m in range(1, 11):
        sh = enumerate_shell("2T", m)
        assert len(orbit_decompose(sh)) * 24 == len(sh)


def test_right_action_matrices_are_integral_and_complete():
    mats = right_multiplication_matrices("2O")
    assert len(mats) == 48
    basis = order_basis("2O")
    group = build_group("2O")
    eps = group.elements[7]
    mat = mats[7]
    for i, g in enumerate(basis):
        assert coords_of("2O", qmul(g, eps)) == mat[i]


def test_strength_inheritance_normalized_shell():
    # O_(2T,4) has constant norm 4, so x/2 lives on the unit sphere
    sh = enumerate_shell("2T", 4)
    half = Fraction(1, 2)
    pts = [
        Quaternion(*(c * rat(half) for c in embed_coords("2T", coords).coords))
        for coords in sh.points
    ]
    results = pair_sum_tests_bulk(pts, (2, 4, 10))
    assert all(results.values())
    assert not pair_sum_tests_bulk(pts, (6,))[6]


def test_kappa4_basics():
    assert kappa4(OrderElement("2I", (1, 0, 0, 0, 0, 0, 0, 0))) == (
        Fraction(1), 0, 0, 0, 0, 0, 0, 0,
    )
    assert kappa4(OrderElement("2I", (0, 0, 0, 0, 1, 0, 0, 0))) == (
        0, Fraction(1), 0, 0, 0, 0, 0, 0,
    )
    with pytest.raises(ValueError):
        kappa4(OrderElement("2T", (1, 0, 0, 0)))


def test_kappa4_identity_on_shells():
    for m in (1, 2, 3, 4, 5):
        sh = enumerate_shell("2I", m)
        for coords in sh.points[::41]:
            vec = kappa4(OrderElement("2I", coords))  # asserts the identity
            assert sum(v * v for v in vec) == m
        assert len(sh) == 240 * sigma(3, m)  # the 2m-shell count of E8


def test_shells_decompose_into_orthogonal_group_copies():
    # each orbit xG carries the inner-product structure of sqrt(N(x)) G
    group = build_group("2I")
    sample = group.elements[::13]
    for m in (1, 2):
        sh = enumerate_shell("2I", m)
        for rep in orbit_decompose(sh):
            x = embed_coords("2I", rep)
            nx = norm(x)
            for g in sample:
                for h in sample[:3]:
                    lhs = _inner(qmul(x, g), qmul(x, h))
                    assert lhs == nx * _inner(g, h)


def _inner(a, b):
    from quatdesign.quat import inner

    return inner(a, b)


def test_kappa4_image_is_scaled_e8():
    gram = kappa4_gram()
    n = 8
    doubled = [[2 * gram[i][j] for j in range(n)] for i in range(n)]
    assert all(v.denominator == 1 for row in doubled for v in row)
    assert all(int(doubled[i][i]) % 2 == 0 for i in range(n))
    det = _det(doubled)
    assert det == 1  # even unimodular of rank 8 with 240 roots: E8
    assert shell_count_formula("2I", 1) == 240


def _det(mat):
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def test_budget_guard():
    small = get_budget("small")
    with pytest.raises(ResourceBudgetError):
        enumerate_shell("2I", 8, small)


def test_shell_m_validation():
    with pytest.raises(ValueError):
        enumerate_shell("2T", 0)
    with pytest.raises(ValueError):
        shell_count_formula("Q8", 1)
