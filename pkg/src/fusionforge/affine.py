"""Folding by the level-kappa affine Weyl group action on lambda + rho.

With kappa = level + dual Coxeter number, the shifted action is
generated by the simple reflections and the affine reflection in the
wall (x|theta) = kappa.  A weight folds either to Zero (x lands on a
wall) or to a signed weight of the level, and the two outcomes are
decided independently by affine_fold and wall_witness.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .rootdata import theta_pairing

__all__ = [
    "FoldOutcome",
    "WallWitness",
    "BETA_ZERO",
    "in_fundamental_alcove",
    "affine_fold",
    "wall_witness",
]

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


class FoldOutcome(NamedTuple):
    """Result of affine folding: sign 0 means the class is zero."""

    sign: int
    weight: Optional[tuple]

    @property
    def is_zero(self):
        return self.sign == 0


BETA_ZERO = FoldOutcome(0, None)


def in_fundamental_alcove(rs, x, level):
    """Classify x against the closed alcove 0 <= x_i, x(theta^vee) <= kappa."""
    kappa = level + rs.dual_coxeter
    tp = theta_pairing(rs, x)
    if any(c < 0 for c in x) or tp > kappa:
        return OUTSIDE
    if any(c == 0 for c in x) or tp == kappa:
        return BOUNDARY
    return INTERIOR


def affine_fold(rs, weight, level):
    """Signed alcove representative of a dominant weight at the given level.

    Walks lambda + rho into the fundamental alcove: reflect at the
    lowest negative coordinate, else reflect in the affine theta wall,
    tracking the sign.  Landing on any wall kills the class.
    """
    if level < 1:
        raise ValueError(f"level must be a positive integer, got {level}")
    if any(c < 0 for c in weight):
        raise ValueError(f"affine_fold expects a dominant weight, got {weight}")
    kappa = level + rs.dual_coxeter
    x = [c + 1 for c in weight]
    sign = 1
    cols = rs.cartan_cols
    theta_w = rs.theta_weight
    marks = rs.dual_marks
    # Generous bound; each alcove crossing is one step.
    max_steps = 4 * (theta_pairing(rs, x) + 2) * rs.num_positive + 64
    steps = 0
    while True:
        i = next((k for k, v in enumerate(x) if v < 0), -1)
        if i >= 0:
            c = x[i]
            for j, a in cols[i]:
                x[j] -= c * a
            sign = -sign
        else:
            tp = sum(m * v for m, v in zip(marks, x))
            if tp <= kappa:
                break
            over = tp - kappa
            for j in range(rs.rank):
                x[j] -= over * theta_w[j]
            sign = -sign
        steps += 1
        if steps > max_steps:
            raise RuntimeError(
                f"affine folding exceeded {max_steps} steps for {weight} at level {level}"
            )
    if any(v == 0 for v in x) or sum(m * v for m, v in zip(marks, x)) == kappa:
        return BETA_ZERO
    return FoldOutcome(sign, tuple(v - 1 for v in x))


class WallWitness(NamedTuple):
    root: tuple
    level_multiple: int


def wall_witness(rs, weight, level):
    """A positive root alpha with (lambda+rho|alpha) = n*kappa, if one exists.

    Scans every positive root exactly; among witnesses returns the one
    with minimal (n, lex position).  Existence of a witness is the wall
    condition, so this is an independent check on affine_fold returning
    Zero.
    """
    if level < 1:
        raise ValueError(f"level must be a positive integer, got {level}")
    kappa = level + rs.dual_coxeter
    x = [c + 1 for c in weight]
    den = rs.pair_den
    best = None
    for root, num in zip(rs.positive_roots, rs.pair_num):
        dot = sum(n * v for n, v in zip(num, x))
        q, r = divmod(dot, kappa * den)
        if r == 0 and q >= 1:
            if best is None or q < best.level_multiple:
                best = WallWitness(root, q)
    return best
