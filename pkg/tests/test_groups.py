from fractions import Fraction

import pytest

from quatdesign.exactnum import golden_elem, rat, sqrt2_elem
from quatdesign.groups import (
    NotAntipodal,
    UnsupportedAngle,
    alpha,
    build_group,
    distance_distribution,
    half_set,
    inner_product_set,
    is_distance_invariant,
    orbit,
    pair_distance_distribution,
    zeta,
)
from quatdesign.quat import Quaternion, norm

HALF = Fraction(1, 2)


def test_orders():
    for label, size in (("Q8", 8), ("2T", 24), ("2O", 48), ("2I", 120)):
        assert len(build_group(label)) == size


def test_closure_and_antipodality():
    for label in ("Q8", "2T", "2O", "2I"):
        g = build_group(label)
        assert g.is_closed()
        assert g.is_antipodal()
        assert g.contains_inverse_of_all()
        assert Quaternion(1, 0, 0, 0) in g


def test_coset_union_structure():
    t = build_group("2T")
    o = build_group("2O")
    i = build_group("2I")
    assert all(e in o for e in t)
    assert all(e in i for e in t)
    assert zeta() in i
    assert zeta() ** 5 == -Quaternion(1, 0, 0, 0)


def test_d2n2_is_q8():
    assert build_group("D2n2").as_set() == build_group("Q8").as_set()


def test_cyclic_sizes_and_closure():
    for n in (1, 2, 3, 4, 5, 6, 8, 10):
        g = build_group(f"C{n}")
        assert len(g) == n
        assert g.is_closed()


def test_dihedral_sizes():
    for n in (1, 2, 3, 4, 5):
        g = build_group(f"D2n{n}")
        assert len(g) == 4 * n
        assert g.is_closed()
        assert g.is_antipodal()


def test_unsupported_angles():
    for label in ("C7", "C12", "C9", "D2n6", "D2n8"):
        with pytest.raises(UnsupportedAngle):
            build_group(label)


def test_inner_product_sets():
    t = inner_product_set(build_group("2T"))
    assert t == {rat(-1), rat(-HALF), rat(0), rat(HALF)}

    o = inner_product_set(build_group("2O"))
    r = sqrt2_elem(0, HALF)
    assert o == {rat(-1), -r, rat(-HALF), rat(0), rat(HALF), r}

    i = inner_product_set(build_group("2I"))
    tau_half = golden_elem(0, HALF)
    tau_inv_half = golden_elem(-HALF, HALF)
    assert i == {
        rat(-1), -tau_half, rat(-HALF), -tau_inv_half, rat(0),
        tau_inv_half, rat(HALF), tau_half,
    }


def test_distance_distribution_2O():
    g = build_group("2O")
    r = sqrt2_elem(0, HALF)
    expected = {
        rat(1): 1, r: 6, rat(HALF): 8, rat(0): 18,
        rat(-HALF): 8, -r: 6, rat(-1): 1,
    }
    assert distance_distribution(g.elements, g.elements[0]) == expected
    assert is_distance_invariant(g.elements)


def test_distance_distribution_q8():
    g = build_group("Q8")
    one = Quaternion(1, 0, 0, 0)
    assert distance_distribution(g.elements, one) == {rat(1): 1, rat(0): 6, rat(-1): 1}


def test_distance_distribution_2T_basepoint_free():
    g = build_group("2T")
    dists = {frozenset(distance_distribution(g.elements, x).items()) for x in g}
    assert len(dists) == 1


def test_pair_distribution_total():
    g = build_group("2T")
    dist = pair_distance_distribution(g.elements)
    assert sum(dist.values()) == len(g) ** 2
    assert dist[rat(1)] == len(g)


def test_distance_distribution_requires_member_basepoint():
    g = build_group("Q8")
    with pytest.raises(ValueError):
        distance_distribution(g.elements, Quaternion(HALF, HALF, HALF, HALF))


def test_half_sets():
    q8 = build_group("Q8")
    h = half_set(q8.elements)
    assert len(h) == 4
    for label in ("2T", "2O", "2I"):
        g = build_group(label)
        h = half_set(g.elements)
        assert len(h) * 2 == len(g)
        assert set(h) | {-x for x in h} == g.as_set()
    assert len(half_set(build_group("2I").elements)) == 60


def test_half_set_rejects_non_antipodal():
    with pytest.raises(NotAntipodal):
        half_set(build_group("C3").elements)


def test_orbits():
    t = build_group("2T")
    assert set(orbit(Quaternion(1, 0, 0, 0), t)) == t.as_set()
    o = build_group("2O")
    coset = orbit(alpha(), t)
    assert set(coset) | t.as_set() == o.as_set()
    assert len(coset) == 24

    i = build_group("2I")
    tau = golden_elem(0, 1)
    scaled = orbit(Quaternion(tau, rat(0), rat(0), rat(0)), i)
    assert all(norm(x) == tau * tau for x in scaled)

    with pytest.raises(ValueError):
        orbit(Quaternion(0, 0, 0, 0), t)


def test_group_json():
    blob = build_group("Q8").to_json()
    assert blob["order"] == 8
    assert len(blob["elements"]) == 8
