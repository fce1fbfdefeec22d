"""Root-system data for the simple Lie types, in Bourbaki indexing.

Weights are integer tuples in the fundamental-weight basis (Dynkin
labels); roots are integer tuples in the simple-root basis.  The
invariant form is normalized so long roots have squared length 2, and
every form value is an exact Fraction; the wall computations downstream
rely on that exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "RANK_BOUNDS",
    "LieType",
    "RootSystem",
    "parse_lie_type",
    "build_root_system",
    "inner_product",
    "theta_pairing",
    "is_dominant",
]

# Allowed rank range per family: (min, max), max None meaning unbounded.
# The low ends avoid the classical coincidences (B2=C2, D3=A3, ...), so
# every constructible type names a distinct algebra.
RANK_BOUNDS = {
    "A": (1, None),
    "B": (3, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class LieType:
    """A simple Lie type: family letter A..G plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in RANK_BOUNDS:
            raise ValueError(
                f"unknown family {self.family!r}; expected one of {''.join(RANK_BOUNDS)}"
            )
        lo, hi = RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f">= {lo}" if hi is None else f"between {lo} and {hi}"
            raise ValueError(
                f"family {self.family} requires rank {bound}, got {self.rank}"
            )

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_lie_type(text):
    """Parse a string like "B3" or "E8" into a LieType."""
    text = text.strip()
    if len(text) < 2 or not text[0].isalpha() or not text[1:].isdigit():
        raise ValueError(f"cannot parse Lie type {text!r}; expected e.g. 'B3'")
    return LieType(text[0].upper(), int(text[1:]))


def _cartan_matrix(lie_type):
    """Cartan matrix with entries a[i][j] = <alpha_j, alpha_i^vee>."""
    fam, r = lie_type.family, lie_type.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if fam in "ABC":
        for i in range(r - 2):
            bond(i, i + 1)
        if fam == "A":
            if r >= 2:
                bond(r - 2, r - 1)
        elif fam == "B":
            # alpha_r is the short root.
            bond(r - 2, r - 1, -1, -2)
        else:
            # alpha_r is the long root.
            bond(r - 2, r - 1, -2, -1)
    elif fam == "D":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 3, r - 1)
    elif fam == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: r - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    else:  # G2, alpha_1 short
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def _half_norms(cartan):
    """d_i = (alpha_i|alpha_i)/2, solved from d_i a_ij = d_j a_ji, long = 1."""
    r = len(cartan)
    d = [None] * r
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(r):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def _positive_roots(cartan):
    """All positive roots in simple-root coordinates, by root-string closure."""
    r = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for c in frontier:
            pairing = [sum(cartan[i][j] * c[j] for j in range(r)) for i in range(r)]
            for i in range(r):
                # p = depth of the alpha_i string below c, within positives.
                p = 0
                t = list(c)
                t[i] -= 1
                while tuple(t) in found:
                    p += 1
                    t[i] -= 1
                if p - pairing[i] > 0:
                    up = list(c)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        new.append(up)
        frontier = new
    return tuple(sorted(found))


def _invert_fraction_matrix(m):
    """Exact inverse of a small square matrix by Gauss-Jordan."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)]
           + [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(row for row in range(col, n) if aug[row][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for row in range(n):
            if row != col and aug[row][col] != 0:
                f = aug[row][col]
                aug[row] = [x - f * y for x, y in zip(aug[row], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _integer_row_hnf(rows):
    """Row-style Hermite reduction; returns the nonzero reduced rows."""
    rows = [list(r) for r in rows]
    n = len(rows[0])
    basis = []
    col = 0
    while rows and col < n:
        pivots = [r for r in rows if r[col] != 0]
        if not pivots:
            col += 1
            continue
        piv = min(pivots, key=lambda r: abs(r[col]))
        rows.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        done = True
        for r in rows:
            if r[col] != 0:
                q = r[col] // piv[col]
                for k in range(n):
                    r[k] -= q * piv[k]
                if r[col] != 0:
                    done = False
        if done:
            basis.append(tuple(piv))
            rows = [r for r in rows if any(r)]
            col += 1
        else:
            rows.append(piv)
    return tuple(basis)


class RootSystem:
    """Immutable root-system data bundle for one simple Lie type.

    Attributes of note:
      cartan          Cartan matrix, a[i][j] = <alpha_j, alpha_i^vee>
      form            (omega_i|omega_j) as exact Fractions
      positive_roots  simple-root coordinate tuples, lex sorted
      theta           highest root (simple-root coordinates)
      theta_weight    highest root (fundamental-weight coordinates)
      dual_marks      coefficients of theta^vee on the simple coroots
      dual_coxeter    1 + sum of dual_marks
    """

    def __init__(self, lie_type):
        self.lie_type = lie_type
        r = lie_type.rank
        self.rank = r
        self.cartan = _cartan_matrix(lie_type)
        self.half_norms = _half_norms(self.cartan)
        self.positive_roots = _positive_roots(self.cartan)
        self.num_positive = len(self.positive_roots)
        self.dim_g = r + 2 * self.num_positive
        self.rho = (1,) * r

        inv = _invert_fraction_matrix(self.cartan)
        self.inv_cartan = inv
        form = tuple(
            tuple(inv[i][j] * self.half_norms[i] for j in range(r)) for i in range(r)
        )
        for i in range(r):
            for j in range(i):
                assert form[i][j] == form[j][i], "form must be symmetric"
        self.form = form

        # theta = unique positive root of maximal height.
        by_height = sorted(self.positive_roots, key=lambda c: (sum(c), c))
        top = by_height[-1]
        assert len(by_height) == 1 or sum(by_height[-2]) < sum(top), \
            "highest root must be unique"
        self.theta = top
        self.theta_weight = self.root_to_weight(top)
        assert self.root_norm2(top) == 2, "normalization fixes (theta|theta) = 2"

        marks = [self.theta[i] * self.half_norms[i] for i in range(r)]
        assert all(m.denominator == 1 for m in marks)
        self.dual_marks = tuple(int(m) for m in marks)
        self.dual_coxeter = 1 + sum(self.dual_marks)

        # Sparse Cartan columns: s_i acts by x_j -= x_i * a[j][i].
        self.cartan_cols = tuple(
            tuple((j, self.cartan[j][i]) for j in range(r) if self.cartan[j][i] != 0)
            for i in range(r)
        )

        # Integer pairing data: (x|alpha) = dot(pair_num[alpha], x) / pair_den
        # for x in weight coordinates.
        self.pair_den = lcm(*(d.denominator for d in self.half_norms))
        self.pair_num = tuple(
            tuple(int(c[j] * self.half_norms[j] * self.pair_den) for j in range(r))
            for c in self.positive_roots
        )
        self.root_weights = tuple(self.root_to_weight(c) for c in self.positive_roots)

        long_rows = [c for c in self.positive_roots if self.root_norm2(c) == 2]
        self.long_root_basis = _integer_row_hnf(long_rows)
        assert len(self.long_root_basis) == r

    def __repr__(self):
        return f"RootSystem({self.lie_type})"

    def root_to_weight(self, root):
        """Simple-root coordinates -> fundamental-weight coordinates."""
        a = self.cartan
        r = self.rank
        return tuple(sum(a[i][j] * root[j] for j in range(r)) for i in range(r))

    def weight_to_root(self, weight):
        """Fundamental-weight coordinates -> simple-root coordinates (Fractions)."""
        inv = self.inv_cartan
        r = self.rank
        return tuple(sum(inv[i][j] * weight[j] for j in range(r)) for i in range(r))

    def inner(self, x, y):
        """Exact form value for two weight-coordinate vectors."""
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError(f"expected rank-{self.rank} coordinate vectors")
        form = self.form
        return sum(form[i][j] * x[i] * y[j] for i in range(self.rank) for j in range(self.rank))

    def inner_weight_root(self, weight, root):
        """(x|alpha) for x in weight coordinates and alpha in root coordinates."""
        return sum(
            Fraction(root[j]) * self.half_norms[j] * weight[j] for j in range(self.rank)
        )

    def root_norm2(self, root):
        """(alpha|alpha) for alpha in simple-root coordinates."""
        w = self.root_to_weight(root)
        return self.inner_weight_root(w, root)


@lru_cache(maxsize=None)
def build_root_system(lie_type):
    """Construct (and cache) the RootSystem for a LieType."""
    return RootSystem(lie_type)


def inner_product(rs, x, y):
    """(x|y) for weight-coordinate vectors, exact."""
    return rs.inner(x, y)


def theta_pairing(rs, weight):
    """lambda(theta^vee), the level of a weight."""
    if len(weight) != rs.rank:
        raise ValueError(f"expected rank-{rs.rank} weight")
    return sum(m * w for m, w in zip(rs.dual_marks, weight))


def is_dominant(weight):
    return all(c >= 0 for c in weight)
