"""Finite Weyl-group operations, all driven by simple reflections.

The reflection s_i sends x to x - x_i * alpha_i; on weight coordinates
that is x_j -= x_i * a[j][i], using the sparse Cartan columns stored on
the RootSystem.
"""

from __future__ import annotations

from typing import NamedTuple

__all__ = [
    "FoldedWeight",
    "to_dominant",
    "dual_weight",
    "weyl_orbit",
    "weyl_orbit_signed",
    "weyl_order",
]


class FoldedWeight(NamedTuple):
    sign: int
    weight: tuple
    regular: bool


def reflect(rs, x, i):
    """Apply s_i to a weight-coordinate tuple."""
    c = x[i]
    if c == 0:
        return x
    y = list(x)
    for j, a in rs.cartan_cols[i]:
        y[j] -= c * a
    return tuple(y)


def to_dominant(rs, x):
    """Fold x into the dominant chamber.

    Returns (sign, weight, regular): sign is the determinant of the
    folding element (meaningful when x is regular), regular says no
    coordinate of the result is zero.  Descent: reflect at the lowest
    negative coordinate until none remain; each step strictly raises
    the pairing with rho^vee, so it terminates.
    """
    y = list(x)
    sign = 1
    cols = rs.cartan_cols
    while True:
        i = next((k for k, v in enumerate(y) if v < 0), -1)
        if i < 0:
            break
        c = y[i]
        for j, a in cols[i]:
            y[j] -= c * a
        sign = -sign
    return FoldedWeight(sign, tuple(y), all(v != 0 for v in y))


def dual_weight(rs, weight):
    """The highest weight of the dual representation, -w0(weight)."""
    if any(c < 0 for c in weight):
        raise ValueError(f"dual_weight expects a dominant weight, got {weight}")
    return to_dominant(rs, tuple(-c for c in weight)).weight


def weyl_orbit(rs, weight):
    """The full Weyl orbit of a dominant weight, lex sorted."""
    if any(c < 0 for c in weight):
        raise ValueError(f"weyl_orbit expects a dominant weight, got {weight}")
    seen = {tuple(weight)}
    frontier = [tuple(weight)]
    while frontier:
        new = []
        for x in frontier:
            for i in range(rs.rank):
                y = reflect(rs, x, i)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return sorted(seen)


def weyl_orbit_signed(rs, weight):
    """Orbit of a regular dominant weight with the sign of the moving element.

    Regularity makes the stabilizers trivial, so each orbit element
    carries a well-defined sign.
    """
    if any(c <= 0 for c in weight):
        raise ValueError(f"signed orbit needs a regular dominant weight, got {weight}")
    signs = {tuple(weight): 1}
    frontier = [tuple(weight)]
    while frontier:
        new = []
        for x in frontier:
            s = signs[x]
            for i in range(rs.rank):
                y = reflect(rs, x, i)
                if y != x and y not in signs:
                    signs[y] = -s
                    new.append(y)
        frontier = new
    return sorted(signs.items())


def weyl_order(rs):
    """|W|, as the orbit size of the regular weight rho."""
    return len(weyl_orbit(rs, rs.rho))
