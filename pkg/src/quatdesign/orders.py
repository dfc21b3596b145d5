"""Maximal orders of the three quaternion groups and their shells.

Coordinates follow the order bases

    O_2T:  {1, i, j, w}           over Z          (4 integer coordinates)
    O_2O:  {1, a, b, ab}          over Z[sqrt2]   (8: y_1..y_4, z_1..z_4)
    O_2I:  {1, i, z, iz}          over Z[tau]     (8: y_1..y_4, z_1..z_4)

with x = sum (y_c + z_c * rho) b_c.  The integral quadratic form is

    Q_G(coords) = iota_G(N(x)) = sum_ij coords_i coords_j iota(<g_i, g_j>),

derived symbolically from the basis; the derivation is checked against the
published polynomial (for the 4-variable form this requires the unimodular
substitution r_2 -> -r_2, r_3 -> -r_3: the published cross terms carry the
signs of the conjugated basis vector -conj(w) rather than w itself).

Shell enumeration is exact Fincke-Pohst: rational LDL^T completion of the
Gram matrix, integer bounds from floor/ceil of quadratic irrationalities via
integer square roots, no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .budget import Budget, get_budget
from .exactnum import QuadElem, RAT, SQRT2, GOLDEN, iota, rat
from .groups import build_group, omega, alpha, beta, zeta
from .quat import Quaternion, inner, norm, qmul

ORDER_LABELS = ("2T", "2O", "2I")


class IntegrityError(AssertionError):
    """Symbolically derived data disagrees with recorded reference data."""


def sigma(k: int, m: int) -> int:
    """Divisor power sum sigma_k(m) = sum_{d | m} d^k."""
    if m < 1:
        raise ValueError("sigma requires m >= 1")
    total = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            total += d**k
            e = m // d
            if e != d:
                total += e**k
        d += 1
    return total


def _sigma_half(k: int, m: int) -> int:
    """sigma_k(m/2), zero when m is odd."""
    return sigma(k, m // 2) if m % 2 == 0 else 0


def shell_count_formula(label: str, m: int) -> int:
    """|O_{G,m}| by divisor sums.

    The 2T and 2I formulas are the published ones.  For 2O the published
    expression 240(5 sigma_3(m) - 4 sigma_3(m/2)) contradicts both the
    printed q-expansion 1 + 48q + 624q^2 + ... and O_{2O,1} = 2O; the
    combination consistent with those (and with the enumeration here) is
    48(sigma_3(m) + 4 sigma_3(m/2)), i.e. theta_{2O,1} = (E4(z)+4E4(2z))/5.
    """
    if m < 1:
        raise ValueError("shells are indexed by m >= 1")
    if label == "2T":
        return 24 * (sigma(1, m) - 2 * _sigma_half(1, m))
    if label == "2O":
        return 48 * (sigma(3, m) + 4 * _sigma_half(3, m))
    if label == "2I":
        return 240 * sigma(3, m)
    raise ValueError(f"no maximal order attached to {label!r}")


# -- order bases -------------------------------------------------------------

@lru_cache(maxsize=None)
def order_basis(label: str) -> tuple[Quaternion, ...]:
    """Z-module generators of O_G (length 4 for 2T, 8 for 2O/2I)."""
    if label == "2T":
        return (
            Quaternion(1, 0, 0, 0),
            Quaternion(0, 1, 0, 0),
            Quaternion(0, 0, 1, 0),
            omega(),
        )
    if label == "2O":
        a, b = alpha(), beta()
        base = (Quaternion(1, 0, 0, 0, SQRT2), a, b, qmul(a, b))
        rho = QuadElem(SQRT2, 0, 1)
        return base + tuple(g * rho for g in base)
    if label == "2I":
        z = zeta()
        i = Quaternion(0, 1, 0, 0, GOLDEN)
        base = (Quaternion(1, 0, 0, 0, GOLDEN), i, z, qmul(i, z))
        rho = QuadElem(GOLDEN, 0, 1)
        return base + tuple(g * rho for g in base)
    raise ValueError(f"no maximal order attached to {label!r}")


@dataclass(frozen=True)
class OrderElement:
    group_label: str
    coords: tuple[int, ...]

    def embed(self) -> Quaternion:
        return embed_coords(self.group_label, self.coords)


def embed_coords(label: str, coords) -> Quaternion:
    basis = order_basis(label)
    if len(coords) != len(basis):
        raise ValueError(f"{label} expects {len(basis)} coordinates")
    acc = None
    for c, g in zip(coords, basis):
        if c == 0:
            continue
        term = g * rat(c)
        acc = term if acc is None else acc + term
    if acc is None:
        tag = {"2T": RAT, "2O": SQRT2, "2I": GOLDEN}[label]
        return Quaternion(0, 0, 0, 0, tag)
    return acc


@lru_cache(maxsize=None)
def _coordinate_solver(label: str):
    """Inverse of the embedding as an exact rational matrix."""
    basis = order_basis(label)
    n = len(basis)
    # flatten a quaternion into 2*4 rational components (a and b parts)
    cols = [_flatten_quat(g) for g in basis]
    dim = len(cols[0])
    mat = [[cols[j][i] for j in range(n)] for i in range(dim)]
    if dim != n:
        # 2T: rational quaternions give 4 meaningful components
        mat = [row for row in mat if any(row)]
        if len(mat) != n:
            raise AssertionError("embedding matrix is not square after pruning")
    return _invert_fraction_matrix(mat)


def _flatten_quat(q: Quaternion) -> list[Fraction]:
    out = []
    for c in q.coords:
        out.append(c.a)
        out.append(c.b)
    return out


def coords_of(label: str, q: Quaternion) -> tuple[int, ...]:
    """Integer coordinates of q in the order basis; raises if not integral."""
    inv = _coordinate_solver(label)
    flat = _flatten_quat(q)
    if label == "2T":
        flat = [flat[0], flat[2], flat[4], flat[6]]
    vec = []
    for row in inv:
        acc = Fraction(0)
        for r, f in zip(row, flat):
            acc += r * f
        vec.append(acc)
    if any(v.denominator != 1 for v in vec):
        raise ValueError(f"{q!r} is not in the order O_{label}")
    return tuple(int(v) for v in vec)


def _invert_fraction_matrix(mat) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# -- quadratic forms ---------------------------------------------------------

@dataclass(frozen=True)
class QuadraticForm:
    group_label: str
    dimension: int
    gram: tuple[tuple[Fraction, ...], ...]  # symmetric, half-integer entries

    def evaluate(self, coords) -> int:
        n = self.dimension
        total = Fraction(0)
        for i in range(n):
            ci = coords[i]
            if ci == 0:
                continue
            row = self.gram[i]
            total += row[i] * ci * ci
            for j in range(i + 1, n):
                if coords[j]:
                    total += 2 * row[j] * ci * coords[j]
        if total.denominator != 1:
            raise AssertionError("integral form produced a non-integer value")
        return int(total)

    def polynomial_coefficients(self) -> dict[tuple[int, int], Fraction]:
        out = {}
        n = self.dimension
        for i in range(n):
            for j in range(i, n):
                c = self.gram[i][j] if i == j else 2 * self.gram[i][j]
                if c:
                    out[(i, j)] = c
        return out

    def is_positive_definite(self) -> bool:
        n = self.dimension
        minor = [[self.gram[i][j] for j in range(n)] for i in range(n)]
        return all(_leading_minor_det(minor, k) > 0 for k in range(1, n + 1))


def _leading_minor_det(mat, k: int) -> Fraction:
    sub = [row[:k] for row in mat[:k]]
    det = Fraction(1)
    for col in range(k):
        piv = next((r for r in range(col, k) if sub[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            sub[col], sub[piv] = sub[piv], sub[col]
            det = -det
        det *= sub[col][col]
        inv = 1 / sub[col][col]
        for r in range(col + 1, k):
            if sub[r][col] != 0:
                f = sub[r][col] * inv
                sub[r] = [x - f * y for x, y in zip(sub[r], sub[col])]
    return det


# published polynomial coefficients, for the integrity cross-check
_PUBLISHED_FORMS = {
    "2T": {
        (0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1,
        (0, 3): -1, (1, 3): -1, (2, 3): -1,
    },
    "2O": {
        (0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1,
        (4, 4): 2, (5, 5): 2, (6, 6): 2, (7, 7): 2,
        (0, 3): 1, (0, 5): 2, (0, 6): 2,
        (1, 2): 1, (1, 4): 2, (1, 7): 2,
        (2, 4): 2, (2, 7): 2,
        (3, 5): 2, (3, 6): 2,
        (4, 7): 2, (5, 6): 2,
    },
    "2I": {
        (0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1,
        (4, 4): 1, (5, 5): 1, (6, 6): 1, (7, 7): 1,
        (0, 3): 1, (0, 6): 1, (0, 7): -1,
        (1, 2): -1, (1, 6): 1, (1, 7): 1,
        (2, 4): 1, (2, 5): 1,
        (3, 4): -1, (3, 5): 1,
        (4, 6): 1, (5, 7): 1,
    },
}

# sign substitution mapping the derived form onto the published one
_PUBLISHED_SUBSTITUTION = {
    "2T": (1, -1, -1, 1),
    "2O": (1,) * 8,
    "2I": (1,) * 8,
}


@lru_cache(maxsize=None)
def quadratic_form(label: str) -> QuadraticForm:
    """Q_G derived from the basis, checked against the published polynomial."""
    basis = order_basis(label)
    n = len(basis)
    gram = [[iota(inner(basis[i], basis[j])) for j in range(n)] for i in range(n)]
    form = QuadraticForm(label, n, tuple(tuple(row) for row in gram))

    signs = _PUBLISHED_SUBSTITUTION[label]
    derived = {}
    for (i, j), c in form.polynomial_coefficients().items():
        derived[(i, j)] = c * signs[i] * signs[j]
    published = {k: Fraction(v) for k, v in _PUBLISHED_FORMS[label].items()}
    if derived != published:
        raise IntegrityError(
            f"Q_{label}: derived form does not match the published polynomial"
        )
    if not form.is_positive_definite():
        raise IntegrityError(f"Q_{label} is not positive definite")
    return form


# -- exact Fincke-Pohst enumeration ------------------------------------------

def _ldl_completion(gram):
    """Rational coefficients for Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                a[r][c] -= d[i] * u[i][r] * u[i][c]
                a[c][r] = a[r][c]
    return d, u


def _floor_affine_sqrt(a: int, c: int, den: int) -> int:
    """floor((a + sqrt(c)) / den) exactly, for c >= 0, den > 0."""
    s = isqrt(c)
    # sqrt(c) lies in [s, s+1), and t -> floor((a+t)/den) is constant there
    return (a + s) // den


def _enum_levels(label: str):
    """Precomputed integer data for the scaled Fincke-Pohst recursion."""
    form = quadratic_form(label)
    d, u = _ldl_completion([list(r) for r in form.gram])
    n = form.dimension
    rho = [1] * n
    unum = [[0] * n for _ in range(n)]
    for i in range(n):
        den = 1
        for j in range(i + 1, n):
            den = den * u[i][j].denominator // _gcd(den, u[i][j].denominator)
        rho[i] = den
        for j in range(i + 1, n):
            unum[i][j] = int(u[i][j] * den)
    delta = [1] * (n + 1)  # delta[i] clears denominators of the level-i budget
    for i in range(n - 1, -1, -1):
        need = d[i].denominator * rho[i] * rho[i]
        delta[i] = _lcm(delta[i + 1], need)
    mu = [delta[i] // delta[i + 1] for i in range(n)]
    nu = [
        d[i].numerator * delta[i] // (d[i].denominator * rho[i] * rho[i])
        for i in range(n)
    ]
    rfac = [rho[i] * rho[i] * d[i].denominator for i in range(n)]
    rden = [delta[i + 1] * d[i].numerator for i in range(n)]
    return n, rho, unum, delta, mu, nu, rfac, rden


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _lcm(a, b):
    return a * b // _gcd(a, b)


def _enumerate_ball(label: str, bound: int) -> dict[int, list[tuple[int, ...]]]:
    """All nonzero integer vectors with Q_G <= bound, bucketed by value."""
    n, rho, unum, delta, mu, nu, rfac, rden = _enum_levels(label)
    buckets: dict[int, list[tuple[int, ...]]] = {m: [] for m in range(1, bound + 1)}
    x = [0] * n

    def descend(level: int, t: int, leading_zero: bool):
        # t = (remaining budget at this level) * delta[level+1]
        if level < 0:
            q_val = bound - t // delta[0]
            if q_val >= 1:
                pt = tuple(x)
                buckets[q_val].append(pt)
                if not leading_zero or any(pt):
                    buckets[q_val].append(tuple(-c for c in pt))
            return
        r = rho[level]
        ncenter = 0
        row = unum[level]
        for j in range(level + 1, n):
            if x[j]:
                ncenter += row[j] * x[j]
        rn = t * rfac[level]
        rd = rden[level]
        c_big = rn * rd
        hi = _floor_affine_sqrt(-ncenter * rd, c_big, r * rd)
        lo = 0 if leading_zero else -_floor_affine_sqrt(ncenter * rd, c_big, r * rd)
        m_lvl, n_lvl = mu[level], nu[level]
        for xi in range(lo, hi + 1):
            k = xi * r + ncenter
            t_next = m_lvl * t - n_lvl * k * k
            if t_next < 0:
                continue
            x[level] = xi
            descend(level - 1, t_next, leading_zero and xi == 0)
        x[level] = 0

    descend(n - 1, bound * delta[n], True)
    for m in buckets:
        buckets[m].sort()
    return buckets


_BALL_CACHE: dict[str, tuple[int, dict[int, list[tuple[int, ...]]]]] = {}


def enumerated_shell_coords(
    label: str, m: int, budget: Budget | None = None
) -> list[tuple[int, ...]]:
    """Sorted coordinate vectors of O_{G,m}; cached by enumeration ball."""
    if m < 1:
        raise ValueError("shells are indexed by m >= 1")
    budget = budget or get_budget()
    budget.check_shell(label, m)
    cached = _BALL_CACHE.get(label)
    if cached is None or cached[0] < m:
        predicted = sum(shell_count_formula(label, k) for k in range(1, m + 1))
        budget.check_enum_points(label, predicted)
        _BALL_CACHE[label] = (m, _enumerate_ball(label, m))
    return _BALL_CACHE[label][1][m]


@dataclass(frozen=True)
class Shell:
    group_label: str
    m: int
    points: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.points)

    def elements(self):
        return [OrderElement(self.group_label, p) for p in self.points]

    def embedded(self):
        return [embed_coords(self.group_label, p) for p in self.points]


def enumerate_shell(label: str, m: int, budget: Budget | None = None) -> Shell:
    return Shell(label, m, tuple(enumerated_shell_coords(label, m, budget)))


# -- group action on shells ---------------------------------------------------

@lru_cache(maxsize=None)
def right_multiplication_matrices(label: str) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Integer matrices R_eps with coords(x * eps) = coords(x) . R_eps."""
    basis = order_basis(label)
    group = build_group(label)
    mats = []
    for eps in group:
        rows = tuple(coords_of(label, qmul(g, eps)) for g in basis)
        mats.append(rows)
    return tuple(mats)


def _apply_row_matrix(coords, mat):
    n = len(coords)
    return tuple(
        sum(coords[i] * mat[i][j] for i in range(n) if coords[i]) for j in range(n)
    )


def orbit_decompose(shell: Shell) -> list[tuple[int, ...]]:
    """Representatives S_m with shell = disjoint union of x G (exact check)."""
    mats = right_multiplication_matrices(shell.group_label)
    order = len(mats)
    point_set = set(shell.points)
    seen: set[tuple[int, ...]] = set()
    reps = []
    for p in shell.points:
        if p in seen:
            continue
        orbit = {_apply_row_matrix(p, mat) for mat in mats}
        if len(orbit) != order:
            raise IntegrityError("group action on the shell is not free")
        if not orbit <= point_set:
            raise IntegrityError("shell is not stable under the group action")
        seen |= orbit
        reps.append(p)
    if len(reps) * order != len(shell.points):
        raise IntegrityError("orbit decomposition does not partition the shell")
    return reps


# -- the E8 comparison map for the icosian order ------------------------------

def kappa4(elem: OrderElement) -> tuple[Fraction, ...]:
    """Coefficient interleaving (a_1, b_1, ..., a_4, b_4) on {1,i,j,k} coords.

    The {1,i,j,k} coordinates of O_2I are half-integral (zeta already has
    coordinate tau/2), so the image lives in (1/2)Z^8; the defining identity
    iota(N(x)) = sum (a_c^2 + b_c^2) holds verbatim and is asserted.
    """
    if elem.group_label != "2I":
        raise ValueError("kappa4 is defined on the icosian order only")
    q = elem.embed()
    out = []
    for c in q.coords:
        out.append(c.a)
        out.append(c.b)
    value = sum(v * v for v in out)
    expected = iota(norm(q))
    if value != expected:
        raise IntegrityError("kappa4 norm identity failed")
    return tuple(out)


def kappa4_gram() -> list[list[Fraction]]:
    """Gram matrix of kappa4(order basis) under the standard dot product."""
    vecs = [kappa4(OrderElement("2I", tuple(int(i == j) for i in range(8))))
            for j in range(8)]
    return [[sum(a * b for a, b in zip(u, v)) for v in vecs] for u in vecs]
