"""The representation ring: dimensions, weight systems, tensor products,
Dynkin indices, and characters as polynomials in the fundamental
characters.

Everything exact: multiplicities come from Freudenthal's recursion,
tensor products from Klimyk's rule, and char_poly from the triangular
expansion of monomials in the fundamental characters.  Caches are
module-level dicts keyed by (family, rank, weight); inserts are
idempotent, so concurrent use only risks duplicated work.
"""

from __future__ import annotations

import cmath
from collections import defaultdict
from fractions import Fraction

from .rootdata import is_dominant
from .weyl import to_dominant, weyl_orbit, weyl_orbit_signed

__all__ = [
    "DEFAULT_DIM_CAP",
    "DimensionCapError",
    "SingularPointError",
    "weyl_dim",
    "dominant_weight_multiplicities",
    "weight_system",
    "tensor_decompose",
    "dynkin_index",
    "char_poly",
    "poly_eval",
    "eval_char_numeric",
]

DEFAULT_DIM_CAP = 10**6

_DIM_CACHE = {}
_DOM_MULT_CACHE = {}
_WEIGHT_SYSTEM_CACHE = {}
_TENSOR_CACHE = {}
_CHAR_POLY_CACHE = {}


class DimensionCapError(ValueError):
    """A character-polynomial request walked past the dimension cap."""


class SingularPointError(ValueError):
    """Weyl-character evaluation hit a vanishing denominator."""


def _key(rs, *rest):
    return (rs.lie_type.family, rs.rank) + rest


def _check_weight(rs, weight):
    if len(weight) != rs.rank:
        raise ValueError(f"expected a rank-{rs.rank} weight, got {weight}")
    if not is_dominant(weight):
        raise ValueError(f"expected a dominant weight, got {weight}")
    return tuple(weight)


def weyl_dim(rs, weight):
    """dim V(lambda) by the Weyl dimension formula, exact."""
    weight = _check_weight(rs, weight)
    key = _key(rs, weight)
    hit = _DIM_CACHE.get(key)
    if hit is not None:
        return hit
    x = [c + 1 for c in weight]
    num = 1
    den = 1
    for pn in rs.pair_num:
        num *= sum(n * v for n, v in zip(pn, x))
        den *= sum(pn)
    d, r = divmod(num, den)
    assert r == 0, "Weyl dimension must be an integer"
    _DIM_CACHE[key] = d
    return d


def _dominant_weights_below(rs, weight):
    """Dominant weights of V(weight) with their root-lattice offsets.

    Saturation: covers in the dominance order on dominant weights differ
    by a positive root, so closing under single positive-root steps that
    stay dominant is exhaustive.
    """
    offsets = {weight: (0,) * rs.rank}
    frontier = [weight]
    while frontier:
        new = []
        for mu in frontier:
            off = offsets[mu]
            for g, c in zip(rs.root_weights, rs.positive_roots):
                nu = tuple(m - v for m, v in zip(mu, g))
                if nu not in offsets and is_dominant(nu):
                    offsets[nu] = tuple(o + v for o, v in zip(off, c))
                    new.append(nu)
        frontier = new
    return offsets


def dominant_weight_multiplicities(rs, weight):
    """Weight multiplicities of V(weight) on its dominant weights.

    Freudenthal's recursion, processed by increasing depth below the
    highest weight; exact Fractions throughout, and every multiplicity
    lands integral.
    """
    weight = _check_weight(rs, weight)
    key = _key(rs, weight)
    hit = _DOM_MULT_CACHE.get(key)
    if hit is not None:
        return hit

    offsets = _dominant_weights_below(rs, weight)
    order = sorted(offsets, key=lambda mu: (sum(offsets[mu]), offsets[mu]))
    rho = rs.rho
    top = tuple(c + 1 for c in weight)
    c_top = rs.inner(top, top)
    den_scale = rs.pair_den

    mult = {weight: 1}
    for mu in order:
        if mu == weight:
            continue
        off = offsets[mu]
        total = 0  # accumulates den_scale * sum m(nu) * (nu|alpha)
        for g, c, pn in zip(rs.root_weights, rs.positive_roots, rs.pair_num):
            k = 1
            while all(o - k * v >= 0 for o, v in zip(off, c)):
                nu = tuple(m + k * v for m, v in zip(mu, g))
                m_nu = mult.get(to_dominant(rs, nu).weight, 0)
                if m_nu:
                    total += m_nu * sum(n * v for n, v in zip(pn, nu))
                k += 1
        shifted = tuple(c + 1 for c in mu)
        denom = c_top - rs.inner(shifted, shifted)
        value = Fraction(2 * total, den_scale) / denom
        assert value.denominator == 1 and value > 0
        mult[mu] = int(value)

    _DOM_MULT_CACHE[key] = mult
    return mult


def weight_system(rs, weight):
    """All weights of V(weight) with multiplicities, as a tuple of pairs."""
    weight = _check_weight(rs, weight)
    key = _key(rs, weight)
    hit = _WEIGHT_SYSTEM_CACHE.get(key)
    if hit is not None:
        return hit
    out = []
    for mu, m in sorted(dominant_weight_multiplicities(rs, weight).items()):
        for nu in weyl_orbit(rs, mu):
            out.append((nu, m))
    out = tuple(out)
    assert sum(m for _, m in out) == weyl_dim(rs, weight)
    _WEIGHT_SYSTEM_CACHE[key] = out
    return out


def tensor_decompose(rs, lam, mu):
    """Multiplicities of V(nu) in V(lam) (x) V(mu), by Klimyk's rule.

    Folds lam + nu + rho over the weight system of the smaller factor;
    weights landing on a chamber wall cancel and are skipped.
    """
    lam = _check_weight(rs, lam)
    mu = _check_weight(rs, mu)
    if weyl_dim(rs, lam) < weyl_dim(rs, mu):
        lam, mu = mu, lam
    key = _key(rs, lam, mu)
    hit = _TENSOR_CACHE.get(key)
    if hit is not None:
        return dict(hit)

    base = [c + 1 for c in lam]
    acc = defaultdict(int)
    for nu, m in weight_system(rs, mu):
        x = tuple(b + v for b, v in zip(base, nu))
        sign, folded, regular = to_dominant(rs, x)
        if regular:
            acc[tuple(v - 1 for v in folded)] += sign * m
    out = {nu: m for nu, m in sorted(acc.items()) if m != 0}
    assert all(m > 0 for m in out.values()), "Klimyk fold must yield nonnegatives"
    _TENSOR_CACHE[key] = out
    return dict(out)


def dynkin_index(rs, weight):
    """Dynkin index of V(weight): dim V * (lam|lam+2rho) / dim g, exact."""
    weight = _check_weight(rs, weight)
    two_rho = tuple(2 * c for c in rs.rho)
    casimir = rs.inner(weight, tuple(w + t for w, t in zip(weight, two_rho)))
    return Fraction(weyl_dim(rs, weight)) * casimir / rs.dim_g


def _poly_sub_scaled(poly, other, coeff):
    for e, c in other.items():
        v = poly.get(e, 0) - coeff * c
        if v:
            poly[e] = v
        else:
            poly.pop(e, None)


def char_poly(rs, weight, dim_cap=DEFAULT_DIM_CAP):
    """chi_weight as a polynomial in the fundamental characters x_1..x_r.

    Monomials are exponent tuples; chi recursively equals the monomial
    x^weight minus the lower terms of the product representation.  Any
    representation above dim_cap aborts with DimensionCapError, since
    the expansion would be infeasible.
    """
    weight = _check_weight(rs, weight)
    key = _key(rs, weight)
    hit = _CHAR_POLY_CACHE.get(key)
    if hit is not None:
        return dict(hit)

    prod_dim = 1
    for i, e in enumerate(weight):
        fw = tuple(1 if j == i else 0 for j in range(rs.rank))
        prod_dim *= weyl_dim(rs, fw) ** e
    if prod_dim > dim_cap:
        raise DimensionCapError(
            f"monomial for {weight} has dimension {prod_dim}, over the cap {dim_cap}"
        )

    # Expand the product of fundamentals matching the monomial x^weight.
    product = {(0,) * rs.rank: 1}
    for i, e in enumerate(weight):
        fw = tuple(1 if j == i else 0 for j in range(rs.rank))
        for _ in range(e):
            nxt = defaultdict(int)
            for nu, m in product.items():
                for tau, k in tensor_decompose(rs, nu, fw).items():
                    nxt[tau] += m * k
            product = dict(nxt)

    poly = {tuple(weight): 1}
    for nu, m in sorted(product.items()):
        if nu == weight:
            assert m == 1, "highest component of the monomial is simple"
            continue
        _poly_sub_scaled(poly, char_poly(rs, nu, dim_cap), m)
    _CHAR_POLY_CACHE[key] = poly
    return dict(poly)


def poly_eval(poly, point):
    """Evaluate an exponent-dict polynomial at a complex point."""
    total = 0j
    for exps, c in poly.items():
        term = complex(c)
        for e, z in zip(exps, point):
            if e:
                term *= z**e
        total += term
    return total


def eval_char_numeric(rs, weight, point):
    """chi_weight at the torus point exp(2*pi*i*phi), phi given in
    weight coordinates, by the Weyl character formula.

    Full signed orbit sums over W, so the rank is capped at 4.  A
    vanishing denominator means the point is singular; perturb it.
    """
    weight = _check_weight(rs, weight)
    if rs.rank > 4:
        raise ValueError("numeric character evaluation is limited to rank <= 4")
    if len(point) != rs.rank:
        raise ValueError(f"expected a rank-{rs.rank} point")
    form = [[float(f) for f in row] for row in rs.form]
    fphi = [sum(form[i][j] * complex(point[j]) for j in range(rs.rank))
            for i in range(rs.rank)]

    def signed_sum(shifted):
        total = 0j
        for x, s in weyl_orbit_signed(rs, shifted):
            z = sum(v * f for v, f in zip(x, fphi))
            total += s * cmath.exp(2j * cmath.pi * z)
        return total

    den = signed_sum(rs.rho)
    if abs(den) < 1e-10:
        raise SingularPointError(
            "Weyl denominator vanishes at this point; perturb it off the walls"
        )
    num = signed_sum(tuple(c + 1 for c in weight))
    return num / den
