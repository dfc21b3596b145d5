"""Harmonic strength, two independent ways.

Route 1 (direct): the pair-sum zero test through the distance distribution,
    sum_s A_s(X) C_l^1(s) = 0  iff  l in T(X)   (points on S^3).

Route 2 (invariant theory, groups only): l in T(G) iff the coefficient of
u^l vanishes in the Molien series

    Psi_G(u) = (1/|G|) sum_{eps in G} 1/(1 - 2 eps_1 u + u^2),

whose per-element reciprocals are Chebyshev U_k(eps_1) generating functions.
Both routes are exact; their agreement is part of the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactnum import QuadElem, rat
from .gegenbauer import chebyshev_u_value
from .groups import UnitGroup, build_group, pair_distance_distribution
from .series import PowerSeries, geometric_like

DEFAULT_TRUNCATION = 64  # covers the largest strength member 58 with margin


@dataclass(frozen=True)
class StrengthReport:
    group_label: str
    max_degree: int
    even_members: tuple[int, ...]
    all_odd_in: bool
    odd_members: tuple[int, ...] | None = None  # set only when not antipodal

    def to_json(self):
        return {
            "label": self.group_label,
            "max_degree": self.max_degree,
            "even_members": list(self.even_members),
            "all_odd_in": self.all_odd_in,
            "odd_members": None if self.odd_members is None else list(self.odd_members),
        }


def first_coordinate_distribution(points) -> dict[QuadElem, int]:
    counts: dict[QuadElem, int] = {}
    for x in points:
        counts[x.x1] = counts.get(x.x1, 0) + 1
    return counts


def molien_series(group: UnitGroup, n: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """Psi_G(u) truncated at n, with the rationality tripwire asserted."""
    dist = first_coordinate_distribution(group)
    coeffs = [rat(0)] * (n + 1)
    for x1, count in dist.items():
        # 1/(1 - 2 x1 u + u^2) = sum_k U_k(x1) u^k
        prev2, prev1 = rat(1), x1 + x1
        coeffs[0] = coeffs[0] + rat(count)
        if n >= 1:
            coeffs[1] = coeffs[1] + prev1 * count
        for k in range(2, n + 1):
            prev2, prev1 = prev1, (x1 + x1) * prev1 - prev2
            coeffs[k] = coeffs[k] + prev1 * count
    order = len(group)
    out = []
    for k, c in enumerate(coeffs):
        if not c.is_rational():
            raise AssertionError(f"Molien coefficient at u^{k} is irrational: {c}")
        q = c.a / order
        if q.denominator != 1 or q < 0:
            raise AssertionError(f"Molien coefficient at u^{k} not a dimension: {q}")
        out.append(q)
    return PowerSeries(out, n)


_CLOSED_FORM = {
    "2T": ((12,), (6, 8)),
    "2O": ((18,), (8, 12)),
    "2I": ((30,), (12, 20)),
}


def molien_closed_form(label: str, n: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """The known rational-function form of Psi_G, expanded exactly.

    C_n: (1+u^n)/((1-u^2)(1-u^n));  D_2n: (1+u^{2n+2})/((1-u^4)(1-u^{2n})).
    """
    if label in _CLOSED_FORM:
        num, den = _CLOSED_FORM[label]
        return geometric_like(num, den, n)
    if label.startswith("D2n"):
        m = int(label[3:])
        return geometric_like((2 * m + 2,), (4, 2 * m), n)
    if label.startswith("C"):
        m = int(label[1:])
        return geometric_like((m,), (2, m), n)
    raise ValueError(f"no closed-form Molien series for {label!r}")


@lru_cache(maxsize=None)
def _group_pair_distribution(label: str):
    return tuple(pair_distance_distribution(build_group(label).elements).items())


def _distribution_of(points) -> list:
    if isinstance(points, UnitGroup):
        return list(_group_pair_distribution(points.label))
    return list(pair_distance_distribution(points).items())


def pair_sum_value(points, ell: int) -> QuadElem:
    """sum_{x,y in X} C_l^1(<x,y>), via the distance distribution."""
    total = rat(0)
    for s, count in _distribution_of(points):
        total = total + chebyshev_u_value(ell, s) * count
    return total


def pair_sum_test(points, ell: int) -> bool:
    """True iff l lies in the harmonic strength of X (Gegenbauer pair test)."""
    if not isinstance(points, UnitGroup):
        for p in points:
            if not p.is_unit():
                raise ValueError("pair_sum_test requires unit-norm points")
    return pair_sum_value(points, ell).is_zero()


def pair_sum_tests_bulk(points, ells) -> dict[int, bool]:
    """pair_sum_test for several degrees with one distance-distribution scan."""
    dist = _distribution_of(points)
    out = {}
    for ell in ells:
        total = rat(0)
        for s, count in dist:
            total = total + chebyshev_u_value(ell, s) * count
        out[ell] = total.is_zero()
    return out


def _even_zero_set(series: PowerSeries, n: int) -> tuple[int, ...]:
    return tuple(k for k in series.zero_coefficient_degrees(parity=0) if k <= n)


def harmonic_strength(source, n: int = DEFAULT_TRUNCATION) -> StrengthReport:
    """StrengthReport for a UnitGroup (Molien route) or point list (pair sums).

    Even members come from exact zero coefficients; odd degrees are certified
    by the antipodality argument, with direct pair-sum tests for l <= 15 run
    as defense in depth.  For non-antipodal inputs the odd members found by
    direct testing are reported explicitly.
    """
    if isinstance(source, UnitGroup):
        label = source.label
        points = source.elements
        series = molien_series(source, n)
        zero_evens = _even_zero_set(series, n)
        odd_nonzero = [
            k for k in range(1, n + 1, 2) if not series.coeff(k).is_zero()
        ]
    else:
        label = "points"
        points = list(source)
        dist = pair_distance_distribution(points)
        values = []
        for k in range(n + 1):
            total = rat(0)
            for s, count in dist.items():
                total = total + chebyshev_u_value(k, s) * count
            values.append(total)
        zero_evens = tuple(k for k in range(2, n + 1, 2) if values[k].is_zero())
        odd_nonzero = [k for k in range(1, n + 1, 2) if not values[k].is_zero()]

    pset = set(points)
    antipodal = all(-x in pset for x in points)
    if antipodal:
        if odd_nonzero:
            raise AssertionError(
                f"antipodal set with nonzero odd pair sum at l={odd_nonzero[0]}"
            )
        probe = source if isinstance(source, UnitGroup) else points
        for ell in range(1, 16, 2):  # spot checks, defense in depth
            if not pair_sum_test(probe, ell):
                raise AssertionError(f"antipodal set fails direct odd test l={ell}")
        return StrengthReport(label, n, zero_evens, True)

    odd_members = tuple(
        k for k in range(1, n + 1, 2) if k not in set(odd_nonzero)
    )
    return StrengthReport(label, n, zero_evens, False, odd_members)


def tetra_gap_check(weights, n: int) -> set[int]:
    """Gaps of the numerical semigroup generated by `weights`, up to n."""
    reachable = [False] * (n + 1)
    reachable[0] = True
    for w in weights:
        for k in range(w, n + 1):
            if reachable[k - w]:
                reachable[k] = True
    return {k for k in range(1, n + 1) if not reachable[k]}


def dihedral_even_part(n: int, limit: int) -> set[int]:
    """{2l : 0 < l < n, l odd}, capped at `limit` (cyclic groups give {})."""
    return {2 * ell for ell in range(1, n, 2) if 2 * ell <= limit}


def cyclic_odd_part(n: int, limit: int) -> set[int]:
    """Odd members of T(C_n): all odds for even n, odds below n otherwise."""
    if n % 2 == 0:
        return {k for k in range(1, limit + 1, 2)}
    return {k for k in range(1, min(n - 1, limit) + 1, 2)}


@lru_cache(maxsize=None)
def group_strength(label: str, n: int = DEFAULT_TRUNCATION) -> StrengthReport:
    return harmonic_strength(build_group(label), n)
