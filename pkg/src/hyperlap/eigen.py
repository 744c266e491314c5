"""Eigenvalue backends.

The dense route wraps LAPACK dgeev (balancing, Hessenberg reduction,
shifted QR) for the nonsymmetric collocation matrices.  The tridiagonal
route is a self-contained Sturm-sequence bisection, kept free of LAPACK
on purpose so the two never share a failure mode.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import lapack

from .errors import ConvergenceError, RealityError


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted ascending, plus backend diagnostics.

    ``max_imag`` is the largest imaginary magnitude seen before projection
    to the real axis (0 for intrinsically real backends).  ``iterations``
    is the bisection sweep count; 0 when the backend does not report one.
    """

    values: np.ndarray
    max_imag: float = 0.0
    iterations: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))

    def __len__(self):
        return self.values.size


def dense_eigenvalues(matrix, reality_tol=1e-8):
    """All eigenvalues of a real square matrix, certified real.

    Raises ConvergenceError when the QR iteration leaves an unconverged
    block (its size is attached) and RealityError when any eigenvalue has
    |imag| > reality_tol * (1 + |real|).  Pair artifacts below the
    tolerance are projected to their real parts.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square 2d matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix must have order >= 1")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    wr, wi, _vl, _vr, info = lapack.dgeev(
        a, compute_vl=0, compute_vr=0, overwrite_a=0
    )
    if info < 0:
        raise ValueError(f"illegal value in argument {-info} of dgeev")
    if info > 0:
        raise ConvergenceError(
            f"QR iteration failed to converge; {info} eigenvalue(s) unresolved",
            block_size=int(info),
        )
    max_imag = float(np.max(np.abs(wi))) if wi.size else 0.0
    bad = np.abs(wi) > reality_tol * (1.0 + np.abs(wr))
    if np.any(bad):
        j = int(np.argmax(np.abs(wi)))
        raise RealityError(
            f"eigenvalue {wr[j]!r} has imaginary part {wi[j]!r} "
            f"beyond reality tolerance {reality_tol!r}"
        )
    return Spectrum(values=np.sort(wr), max_imag=max_imag, iterations=0)


def _sturm_counts(diag, off2, lams):
    """Number of eigenvalues strictly below each value in ``lams``.

    Vectorized over ``lams``; the recurrence d_i = (a_i - lam) - b_{i-1}^2/d_{i-1}
    counts sign changes of the leading-principal-minor ratios.  A vanishing
    pivot is nudged to a tiny positive value so an exact tie is not counted
    as below (the count stays strict); overflow to +-inf in the next step is
    benign (the pivot after that recovers).
    """
    lams = np.atleast_1d(np.asarray(lams, dtype=float))
    count = np.zeros(lams.shape, dtype=np.int64)
    d = np.ones_like(lams)
    tiny = 1e-300
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        for i in range(diag.size):
            if i == 0:
                d = diag[0] - lams
            else:
                d = (diag[i] - lams) - off2[i - 1] / d
            d = np.where(d == 0.0, tiny, d)
            count += d < 0.0
    return count


def sturm_count(op, lam):
    """Number of eigenvalues of a TridiagOperator strictly below lam."""
    lam = float(lam)
    if not np.isfinite(lam):
        raise ValueError(f"lam must be finite, got {lam!r}")
    off2 = op.offdiag ** 2
    return int(_sturm_counts(op.diag, off2, np.array([lam]))[0])


def tridiag_eigenvalues(op, lo, hi, tol_scale=1e-12, max_sweeps=200):
    """Eigenvalues of a TridiagOperator in (lo, hi], by Sturm bisection.

    Each eigenvalue is bracketed to width tol_scale * max(1, |value|).
    Deliberately independent of the dense route.
    """
    lo = float(lo)
    hi = float(hi)
    if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
        raise ValueError(f"need finite lo < hi, got ({lo!r}, {hi!r})")
    off2 = op.offdiag ** 2
    radius = np.zeros(op.m)
    radius[:-1] += np.abs(op.offdiag)
    radius[1:] += np.abs(op.offdiag)
    gmin = float(np.min(op.diag - radius))
    gmax = float(np.max(op.diag + radius))

    n_lo = int(_sturm_counts(op.diag, off2, np.array([np.nextafter(lo, np.inf)]))[0])
    n_hi = int(_sturm_counts(op.diag, off2, np.array([np.nextafter(hi, np.inf)]))[0])
    k = n_hi - n_lo
    if k == 0:
        return Spectrum(values=np.empty(0), max_imag=0.0, iterations=0)

    lows = np.full(k, max(lo, gmin - 1.0))
    highs = np.full(k, min(hi, gmax + 1.0))
    # global 1-based indices of the wanted eigenvalues
    targets = np.arange(n_lo + 1, n_hi + 1)
    sweeps = 0
    while sweeps < max_sweeps:
        mids = 0.5 * (lows + highs)
        tol = tol_scale * np.maximum(1.0, np.abs(mids))
        if np.all(highs - lows <= tol):
            break
        counts = _sturm_counts(op.diag, off2, mids)
        go_right = counts < targets
        lows = np.where(go_right, mids, lows)
        highs = np.where(go_right, highs, mids)
        sweeps += 1
    else:
        raise ConvergenceError(
            f"bisection failed to localize after {max_sweeps} sweeps",
            block_size=k,
        )
    return Spectrum(values=0.5 * (lows + highs), max_imag=0.0, iterations=sweeps)
