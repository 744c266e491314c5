"""Counting functions, Riesz means, and bound verification.

The counting function is built on the shifted eigenvalues nu of the
separated family and is complete only up to the table cutoff; every
query past that raises instead of silently undercounting.
"""

import math
from dataclasses import dataclass

import numpy as np

from .constants import (
    EXCESS,
    constant_ratio,
    counting_constant,
    lt_classical,
    product_counting_constant,
)
from .errors import IncompleteTableError


@dataclass(frozen=True)
class CountingFunction:
    """Eigenvalue staircase N(lam) = #{nu < lam} with a completeness cutoff."""

    sorted_nus: np.ndarray
    domain_volume: float
    dim: int = 2
    cutoff: float = math.inf

    def __post_init__(self):
        vals = np.sort(np.asarray(self.sorted_nus, dtype=float))
        if vals.size and not np.all(np.isfinite(vals)):
            raise ValueError("eigenvalues must be finite")
        object.__setattr__(self, "sorted_nus", vals)
        if not (np.isfinite(self.domain_volume) and self.domain_volume > 0.0):
            raise ValueError(f"volume must be positive, got {self.domain_volume!r}")

    @classmethod
    def from_table(cls, table, volume, dim=2):
        return cls(
            sorted_nus=table.nus(), domain_volume=volume, dim=dim, cutoff=table.cutoff
        )

    def _check_range(self, lam):
        lam = float(lam)
        if not math.isfinite(lam):
            raise ValueError(f"lam must be finite, got {lam!r}")
        if lam > self.cutoff:
            raise IncompleteTableError(
                f"counting data complete only through {self.cutoff}, asked {lam}"
            )
        return lam

    def count(self, lam):
        """Strict count #{nu < lam} (the left-continuous staircase)."""
        lam = self._check_range(lam)
        return int(np.searchsorted(self.sorted_nus, lam, side="left"))

    def count_through(self, lam):
        """Inclusive count #{nu <= lam} (the staircase just after a jump)."""
        lam = self._check_range(lam)
        return int(np.searchsorted(self.sorted_nus, lam, side="right"))

    def jumps(self, lam_max):
        """Distinct eigenvalues <= lam_max, ascending."""
        lam_max = self._check_range(lam_max)
        idx = np.searchsorted(self.sorted_nus, lam_max, side="right")
        return np.unique(self.sorted_nus[:idx])

    def riesz_mean(self, lam, gamma):
        """sum (lam - nu)_+^gamma; gamma = 0 reduces to the strict count."""
        lam = self._check_range(lam)
        gamma = float(gamma)
        if not math.isfinite(gamma) or gamma < 0.0:
            raise ValueError(f"gamma must be finite and >= 0, got {gamma!r}")
        if gamma == 0.0:
            return float(self.count(lam))
        idx = np.searchsorted(self.sorted_nus, lam, side="left")
        return float(np.sum((lam - self.sorted_nus[:idx]) ** gamma))


def polya_rhs(lam, dim, volume):
    """Semiclassical counting line L^cl_{0,d} lam^(d/2) vol."""
    lam = float(lam)
    if not math.isfinite(lam) or lam < 0.0:
        raise ValueError(f"lam must be finite and >= 0, got {lam!r}")
    return lt_classical(0.0, dim) * lam ** (dim / 2.0) * volume


def counting_rhs(lam, dim, volume, excess=EXCESS):
    """Direct counting bound coefficient times lam^(d/2) vol."""
    lam = float(lam)
    if not math.isfinite(lam) or lam < 0.0:
        raise ValueError(f"lam must be finite and >= 0, got {lam!r}")
    return counting_constant(dim, excess) * lam ** (dim / 2.0) * volume


def product_counting_rhs(lam, dim, volume):
    """Product-structure counting bound times lam^(d/2) vol."""
    lam = float(lam)
    if not math.isfinite(lam) or lam < 0.0:
        raise ValueError(f"lam must be finite and >= 0, got {lam!r}")
    return product_counting_constant(dim) * lam ** (dim / 2.0) * volume


def product_riesz_rhs(lam, gamma, dim, volume):
    """Riesz-mean bound 2 L^cl_{g,d} lam^(g + d/2) vol, valid for gamma >= 1/2."""
    lam = float(lam)
    gamma = float(gamma)
    if not math.isfinite(lam) or lam < 0.0:
        raise ValueError(f"lam must be finite and >= 0, got {lam!r}")
    if gamma < 0.5:
        raise ValueError(f"riesz bound needs gamma >= 1/2, got {gamma!r}")
    return 2.0 * lt_classical(gamma, dim) * lam ** (gamma + dim / 2.0) * volume


_BOUND_KINDS = ("polya", "counting", "product", "riesz")


@dataclass(frozen=True)
class BoundReport:
    """Result of sweeping one bound over a lambda grid."""

    bound_kind: str
    lam_max: float
    lambda_grid: np.ndarray
    n_values: np.ndarray
    bound_values: np.ndarray
    min_margin: float
    argmin_lambda: float
    violated: bool

    def to_json_dict(self):
        return {
            "bound_kind": self.bound_kind,
            "lam_max": self.lam_max,
            "min_margin": self.min_margin,
            "violated": self.violated,
            "argmin_lambda": self.argmin_lambda,
        }


def verify_bound(cf, kind, lam_max, grid=1000, gamma=None, scale=1.0):
    """Check one bound against the counting data on (0, lam_max].

    The evaluation set is a uniform grid joined with every jump of the
    staircase; counts are taken inclusively at each point, which is the
    worst case for an upper bound.  ``scale`` multiplies the bound (scale
    < 1 manufactures violations for exercising the reporting path).
    """
    lam_max = float(lam_max)
    if not (math.isfinite(lam_max) and lam_max > 0.0):
        raise ValueError(f"lam_max must be positive and finite, got {lam_max!r}")
    if lam_max > cf.cutoff:
        raise IncompleteTableError(
            f"counting data complete only through {cf.cutoff}, asked {lam_max}"
        )
    if grid < 1:
        raise ValueError(f"grid must have at least one point, got {grid}")
    if not (math.isfinite(scale) and scale > 0.0):
        raise ValueError(f"scale must be positive, got {scale!r}")
    if kind not in _BOUND_KINDS:
        raise ValueError(f"unknown bound kind {kind!r}, expected one of {_BOUND_KINDS}")
    if kind == "riesz":
        if gamma is None:
            raise ValueError("riesz bound needs an explicit gamma")
        gamma = float(gamma)
    elif gamma is not None:
        raise ValueError(f"bound kind {kind!r} does not take a gamma")

    pts = lam_max * np.arange(1, grid + 1) / grid
    lambdas = np.union1d(pts, cf.jumps(lam_max))

    if kind == "riesz":
        values = np.array([cf.riesz_mean(lam, gamma) for lam in lambdas])
        bounds = np.array(
            [product_riesz_rhs(lam, gamma, cf.dim, cf.domain_volume) for lam in lambdas]
        )
        label = f"riesz-{gamma:g}"
    else:
        values = np.array([float(cf.count_through(lam)) for lam in lambdas])
        rhs = {
            "polya": polya_rhs,
            "counting": counting_rhs,
            "product": product_counting_rhs,
        }[kind]
        bounds = np.array([rhs(lam, cf.dim, cf.domain_volume) for lam in lambdas])
        label = kind

    margins = scale * bounds - values
    i = int(np.argmin(margins))
    return BoundReport(
        bound_kind=label,
        lam_max=lam_max,
        lambda_grid=lambdas,
        n_values=values,
        bound_values=scale * bounds,
        min_margin=float(margins[i]),
        argmin_lambda=float(lambdas[i]),
        violated=bool(margins[i] < 0.0),
    )


def ratio_rows(d_min=2, d_max=20, excess=EXCESS):
    """(d, product/direct constant ratio) rows for the dimension figure."""
    if d_min < 2 or d_max < d_min:
        raise ValueError(f"need 2 <= d_min <= d_max, got ({d_min}, {d_max})")
    return [(d, constant_ratio(d, excess)) for d in range(d_min, d_max + 1)]


def polya_rows(cf, lam_max):
    """(lambda, count, bound) rows tracing the staircase against the line.

    Each jump contributes two rows (value before, value after) so the
    staircase renders correctly; endpoints at 0 and lam_max close it off.
    """
    lam_max = float(lam_max)
    if lam_max > cf.cutoff:
        raise IncompleteTableError(
            f"counting data complete only through {cf.cutoff}, asked {lam_max}"
        )
    rows = [(0.0, 0, 0.0)]
    for nu in cf.jumps(lam_max):
        rhs = polya_rhs(nu, cf.dim, cf.domain_volume)
        rows.append((float(nu), cf.count(nu), rhs))
        rows.append((float(nu), cf.count_through(nu), rhs))
    last_jump = rows[-1][0]
    if lam_max > last_jump:
        rows.append(
            (lam_max, cf.count_through(lam_max), polya_rhs(lam_max, cf.dim, cf.domain_volume))
        )
    return rows
