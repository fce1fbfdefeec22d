"""Fusion rings at a positive integer level, by two independent routes.

Route one tensor-decomposes in the representation ring and folds each
component through the affine Weyl group (Kac-Walton).  Route two builds
the unitary S-matrix from signed Weyl sums and applies the Verlinde
formula.  The two never share intermediate results, so agreement of the
tables is a real cross-check.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .rootdata import theta_pairing
from .weyl import weyl_orbit_signed
from .repring import eval_char_numeric, tensor_decompose, weyl_dim
from .affine import affine_fold

__all__ = [
    "LevelContext",
    "SMatrix",
    "FusionPoint",
    "FusionTable",
    "NonIntegralCoefficientError",
    "enumerate_plevel",
    "fusion_kacwalton",
    "s_matrix",
    "fusion_verlinde",
    "fusion_table",
    "fusion_points",
    "sl2_fusion",
]


class NonIntegralCoefficientError(ArithmeticError):
    """A Verlinde sum failed to round to an integer; something is wrong
    upstream, not in the input."""


class LevelContext:
    """The level-ell alphabet: all dominant weights with lam(theta^vee) <= ell.

    weights are lex sorted; index maps weight -> position.  Holds the
    cached S-matrix once built.
    """

    def __init__(self, rs, level, weights):
        self.rs = rs
        self.level = level
        self.weights = weights
        self.index = {w: i for i, w in enumerate(weights)}
        self._smatrix = None

    def __repr__(self):
        return f"LevelContext({self.rs.lie_type}, level={self.level}, size={len(self.weights)})"

    def __len__(self):
        return len(self.weights)

    def check_member(self, weight):
        weight = tuple(weight)
        if weight not in self.index:
            raise ValueError(
                f"{weight} is not a level-{self.level} weight of {self.rs.lie_type}"
            )
        return weight


def enumerate_plevel(rs, level):
    """LevelContext for the given root system and positive level."""
    if level < 1:
        raise ValueError(f"level must be a positive integer, got {level}")
    marks = rs.dual_marks
    out = []

    def rec(i, budget, prefix):
        if i == rs.rank:
            out.append(tuple(prefix))
            return
        for a in range(budget // marks[i] + 1):
            rec(i + 1, budget - a * marks[i], prefix + [a])

    rec(0, level, [])
    return LevelContext(rs, level, tuple(sorted(out)))


def fusion_kacwalton(ctx, lam, mu):
    """Fusion product of two level weights by tensor-then-fold."""
    lam = ctx.check_member(lam)
    mu = ctx.check_member(mu)
    acc = {}
    for nu, m in tensor_decompose(ctx.rs, lam, mu).items():
        sign, w = affine_fold(ctx.rs, nu, ctx.level)
        if sign:
            acc[w] = acc.get(w, 0) + sign * m
    out = {nu: m for nu, m in sorted(acc.items()) if m != 0}
    assert all(m > 0 for m in out.values()), "fusion coefficients must be nonnegative"
    return out


@dataclass
class SMatrix:
    context: LevelContext
    matrix: np.ndarray  # complex, square, indexed like context.weights


def s_matrix(ctx):
    """The Kac-Peterson S-matrix on the level alphabet, unitary and
    symmetric.  Full Weyl sums, so rank is capped at 4."""
    if ctx._smatrix is not None:
        return ctx._smatrix
    rs = ctx.rs
    if rs.rank > 4:
        raise ValueError("S-matrix construction is limited to rank <= 4")
    kappa = ctx.level + rs.dual_coxeter
    n = len(ctx.weights)
    form = np.array([[float(f) for f in row] for row in rs.form])
    shifted = np.array([[c + 1 for c in w] for w in ctx.weights], dtype=float)
    q = shifted @ form.T  # row sigma: form-paired sigma+rho

    raw = np.zeros((n, n), dtype=complex)
    for a, lam in enumerate(ctx.weights):
        orbit = weyl_orbit_signed(rs, tuple(c + 1 for c in lam))
        pts = np.array([x for x, _ in orbit], dtype=float)
        signs = np.array([s for _, s in orbit], dtype=float)
        phases = np.exp(-2j * np.pi / kappa * (pts @ q.T))
        raw[a] = signs @ phases

    s = raw / (-2j) ** rs.num_positive
    row0 = s[0]
    assert np.all(np.abs(row0.imag) < 1e-9) and np.all(row0.real > 0), \
        "vacuum row of S must be positive"
    s = s / np.linalg.norm(row0)
    assert np.max(np.abs(s @ s.conj().T - np.eye(n))) < 1e-9, "S must be unitary"
    assert np.max(np.abs(s - s.T)) < 1e-9, "S must be symmetric"
    ctx._smatrix = SMatrix(ctx, s)
    return ctx._smatrix


def _round_integral(values, what):
    rounded = np.rint(values.real)
    err = np.max(np.abs(values - rounded)) if values.size else 0.0
    if err > 1e-6:
        raise NonIntegralCoefficientError(
            f"{what} deviates from integrality by {err:.3e}"
        )
    return rounded.astype(np.int64)


def fusion_verlinde(ctx, lam, mu):
    """Fusion product via the Verlinde formula, rounded and checked."""
    lam = ctx.check_member(lam)
    mu = ctx.check_member(mu)
    s = s_matrix(ctx).matrix
    i, j = ctx.index[lam], ctx.index[mu]
    vec = (s[i] * s[j] / s[0]) @ s.conj().T
    coeffs = _round_integral(vec, f"Verlinde N for ({lam}, {mu})")
    return {ctx.weights[k]: int(c) for k, c in enumerate(coeffs) if c}


@dataclass
class FusionTable:
    """Dense fusion coefficients N[lam, mu, nu] on a LevelContext."""

    context: LevelContext
    method: str
    array: np.ndarray  # int64, shape (n, n, n)

    def get(self, lam, mu, nu):
        idx = self.context.index
        return int(self.array[idx[tuple(lam)], idx[tuple(mu)], idx[tuple(nu)]])

    def records(self):
        """Nonzero entries as (lam, mu, nu, N), deterministic order."""
        ws = self.context.weights
        out = []
        for i, j, k in zip(*np.nonzero(self.array)):
            out.append((ws[i], ws[j], ws[k], int(self.array[i, j, k])))
        return out


def _table_kacwalton(ctx):
    n = len(ctx.weights)
    arr = np.zeros((n, n, n), dtype=np.int64)
    for i, lam in enumerate(ctx.weights):
        for j in range(i, n):
            mu = ctx.weights[j]
            for nu, m in fusion_kacwalton(ctx, lam, mu).items():
                k = ctx.index[nu]
                arr[i, j, k] = m
                arr[j, i, k] = m
    return arr


def _table_verlinde(ctx):
    s = s_matrix(ctx).matrix
    t = np.einsum("ls,ms,ns->lmn", s, s / s[0], s.conj())
    return _round_integral(t, "Verlinde fusion table")


def fusion_table(ctx, method="kacwalton"):
    """Full fusion table; method "both" computes the two routes and
    insists they agree entry for entry."""
    if method == "kacwalton":
        arr = _table_kacwalton(ctx)
    elif method == "verlinde":
        arr = _table_verlinde(ctx)
    elif method == "both":
        kw = _table_kacwalton(ctx)
        vl = _table_verlinde(ctx)
        if not np.array_equal(kw, vl):
            bad = np.argwhere(kw != vl)[0]
            raise NonIntegralCoefficientError(
                f"methods disagree at indices {tuple(int(b) for b in bad)}: "
                f"kacwalton={kw[tuple(bad)]}, verlinde={vl[tuple(bad)]}"
            )
        arr = kw
    else:
        raise ValueError(f"unknown method {method!r}")
    if np.any(arr < 0):
        raise NonIntegralCoefficientError("fusion table has a negative entry")
    return FusionTable(ctx, method, arr)


@dataclass
class FusionPoint:
    """A regular torus point indexed by a level weight sigma, carrying
    the fundamental-character values there."""

    label: tuple
    coords: tuple  # complex, one per fundamental character


def fusion_points(ctx):
    """The finite point set cut out by the level: for each sigma in the
    alphabet, the fundamental characters at exp(-2*pi*i*(sigma+rho)/kappa).

    Characters are Weyl-invariant, so these are exactly the points where
    every fusion-ideal element vanishes.
    """
    rs = ctx.rs
    kappa = ctx.level + rs.dual_coxeter
    points = []
    for sigma in ctx.weights:
        phi = tuple(-(c + 1) / kappa for c in sigma)
        coords = tuple(
            eval_char_numeric(rs, tuple(1 if j == i else 0 for j in range(rs.rank)), phi)
            for i in range(rs.rank)
        )
        points.append(FusionPoint(sigma, coords))
    return points


def sl2_fusion(a, b, level):
    """Level-ell sl2 fusion in closed form: the truncated Clebsch-Gordan
    range.  Returns the set of c with N_{ab}^c = 1 (all others are 0)."""
    if not (0 <= a <= level and 0 <= b <= level):
        raise ValueError(f"weights {a}, {b} must lie in 0..{level}")
    top = min(a + b, 2 * level - a - b)
    return set(range(abs(a - b), top + 1, 2))
