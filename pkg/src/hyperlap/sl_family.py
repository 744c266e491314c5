"""The separated eigenvalue family and its certified sweep.

Separating variables on a strip of width pi (x direction) times an
interval in t = log y turns the hyperbolic Dirichlet problem into the
family -psi'' + ell^2 exp(2t) psi = nu psi with Dirichlet ends, one
problem per transverse mode ell >= 1.  The sweep solves every family
whose ground state clears the cutoff, certifies each retained eigenvalue
against a doubled resolution, and cross-checks the count against the
finite-difference Sturm oracle.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .discretize import Interval, PotentialSpec, assemble_cheb, assemble_fd
from .eigen import Spectrum, dense_eigenvalues, sturm_count
from .errors import CertificationError, IncompleteTableError


@dataclass(frozen=True)
class SLProblem:
    """One member of the family: -psi'' + q psi = nu psi on an interval."""

    interval: Interval
    pot: PotentialSpec


def lambda_from_nu(nu, dim=2):
    """Full eigenvalue from the shifted one: lambda = (d-1)^2/4 + nu."""
    return (dim - 1) ** 2 / 4.0 + nu


def nu_from_lambda(lam, dim=2):
    return lam - (dim - 1) ** 2 / 4.0


def solve_problem(problem, n=400, cutoff=None):
    """Plain dense solve at resolution n; optionally truncated at ``cutoff``.

    No certification: use solve_certified when the values feed a bound.
    """
    spec = dense_eigenvalues(assemble_cheb(problem.interval, problem.pot, n).matrix)
    if cutoff is None:
        return spec
    keep = np.searchsorted(spec.values, float(cutoff), side="right")
    return Spectrum(
        values=spec.values[:keep], max_imag=spec.max_imag, iterations=spec.iterations
    )


def _gap_point(w, k_star):
    """A probe value inside the spectral gap around position k_star.

    Far (relative to discretization error) from both neighbours, so
    integer counts computed by independent methods agree at it.
    """
    if k_star > 0:
        lower = w[k_star - 1]
    else:
        lower = w[0] - max(1.0, abs(w[0]))
    if k_star < w.size:
        upper = w[k_star]
    else:
        upper = w[-1] + max(1.0, abs(w[-1]))
    return 0.5 * (lower + upper)


def _certified(problem, cutoff, tol, n, oracle_m):
    """Certified eigenvalues <= cutoff: (values, first_above, max_imag).

    Certification: resolutions n and 2n agree entrywise to ``tol``
    (relative), agree on the count below a gap midpoint, and the
    finite-difference Sturm count at that midpoint matches too.
    """
    cutoff = float(cutoff)
    if not math.isfinite(cutoff):
        raise ValueError(f"cutoff must be finite, got {cutoff!r}")
    if tol < 1e-13:
        raise ValueError(f"tol below certifiable floor 1e-13: {tol!r}")
    s1 = dense_eigenvalues(assemble_cheb(problem.interval, problem.pot, n).matrix)
    s2 = dense_eigenvalues(assemble_cheb(problem.interval, problem.pot, 2 * n).matrix)
    w, w2 = s1.values, s2.values
    k_star = int(np.searchsorted(w, cutoff, side="right"))
    if k_star == w.size:
        raise CertificationError(
            f"cutoff {cutoff} lies beyond the largest resolved eigenvalue "
            f"{w[-1]}; raise n",
            index=k_star,
        )
    lam_star = _gap_point(w, k_star)
    k2 = int(np.searchsorted(w2, lam_star, side="left"))
    if k2 != k_star:
        raise CertificationError(
            f"resolutions {n} and {2 * n} disagree on the count below "
            f"{lam_star}: {k_star} vs {k2}",
            index=min(k_star, k2),
        )
    if k_star:
        err = np.abs(w[:k_star] - w2[:k_star])
        bad = err > tol * np.maximum(1.0, np.abs(w[:k_star]))
        if np.any(bad):
            i = int(np.nonzero(bad)[0][0])
            raise CertificationError(
                f"eigenvalue {i} differs between resolutions {n} and {2 * n}: "
                f"{w[i]!r} vs {w2[i]!r} (tol {tol})",
                index=i,
            )
    fd_op = assemble_fd(problem.interval, problem.pot, oracle_m)
    fd_count = sturm_count(fd_op, lam_star)
    if fd_count != k_star:
        raise CertificationError(
            f"finite-difference count below {lam_star} is {fd_count}, "
            f"collocation says {k_star}",
            index=-1,
        )
    return w[:k_star].copy(), float(w[k_star]), s1.max_imag


def solve_certified(problem, cutoff, tol=1e-10, n=400, oracle_m=4000):
    """Eigenvalues <= cutoff with two-resolution and count certification."""
    values, _first_above, max_imag = _certified(problem, cutoff, tol, n, oracle_m)
    return Spectrum(values=values, max_imag=max_imag, iterations=0)


def _pot_for(ell, kappa_fn):
    if kappa_fn is None:
        return PotentialSpec(ell=ell)
    kappa = float(kappa_fn(ell))
    if not math.isfinite(kappa) or kappa < 0.0:
        raise ValueError(f"kappa_fn({ell}) = {kappa!r} is not a valid coupling")
    return PotentialSpec(ell=0, extra=lambda t, k=kappa: k * math.exp(2.0 * t))


def _ground_state(interval, ell, n, kappa_fn):
    prob = SLProblem(interval=interval, pot=_pot_for(ell, kappa_fn))
    return float(solve_problem(prob, n=n).values[0])


def find_ell_max(interval, cutoff, n=400, kappa_fn=None):
    """First mode ell whose ground state exceeds ``cutoff``.

    Doubling until the ground state clears the cutoff, then bisection.
    The ground state is increasing in ell because the potential is.
    """
    cutoff = float(cutoff)
    if not (math.isfinite(cutoff) and cutoff > 0.0):
        raise ValueError(f"cutoff must be positive and finite, got {cutoff!r}")
    cache = {}

    def nu1(ell):
        if ell not in cache:
            cache[ell] = _ground_state(interval, ell, n, kappa_fn)
        return cache[ell]

    if nu1(1) > cutoff:
        return 1
    lo = 1
    hi = 2
    while nu1(hi) <= cutoff:
        lo = hi
        hi *= 2
        if hi > 1 << 22:
            raise ValueError(f"no mode below {hi} clears cutoff {cutoff}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if nu1(mid) > cutoff:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class EigenTable:
    """Certified eigenvalue table of the sweep.

    ``entries`` are (ell, k, nu) triples sorted by (ell, k), complete for
    nu <= cutoff and padded up to cutoff * (1 + margin) so that boundary
    queries at the cutoff itself are interior to the data.  ``ell_max`` is
    the first excluded mode.
    """

    entries: tuple
    cutoff: float
    ell_max: int
    resolution: int
    tolerance: float
    margin: float = 0.05

    def __post_init__(self):
        limit = self.cutoff * (1.0 + self.margin)
        by_mode = {}
        last = None
        for ell, k, nu in self.entries:
            if last is not None and (ell, k) <= last:
                raise ValueError("entries must be sorted by (ell, k)")
            last = (ell, k)
            if nu > limit:
                raise ValueError(f"entry ({ell},{k}) exceeds retention limit: {nu}")
            by_mode.setdefault(ell, []).append((k, nu))
        for ell, rows in by_mode.items():
            ks = [k for k, _ in rows]
            if ks != list(range(1, len(ks) + 1)):
                raise ValueError(f"mode {ell} has non-consecutive branch indices")
            nus = [nu for _, nu in rows]
            if any(b <= a for a, b in zip(nus, nus[1:])):
                raise ValueError(f"mode {ell} eigenvalues not strictly increasing")
        ells = sorted(by_mode)
        for a, b in zip(ells, ells[1:]):
            shared = min(len(by_mode[a]), len(by_mode[b]))
            for i in range(shared):
                if by_mode[b][i][1] <= by_mode[a][i][1]:
                    raise ValueError(
                        f"branch {i + 1} not increasing between modes {a} and {b}"
                    )

    def modes(self):
        return sorted({ell for ell, _, _ in self.entries})

    def mode_values(self, ell):
        return np.array([nu for e, _, nu in self.entries if e == ell])

    def nus(self, through=None):
        """All eigenvalues sorted ascending, optionally truncated at ``through``."""
        vals = np.sort(np.array([nu for _, _, nu in self.entries]))
        if through is None:
            return vals
        through = float(through)
        if through > self.cutoff * (1.0 + self.margin):
            raise IncompleteTableError(
                f"table complete only through {self.cutoff}, asked for {through}"
            )
        return vals[: np.searchsorted(vals, through, side="right")]

    def to_csv(self):
        lines = ["ell,k,nu"]
        for ell, k, nu in self.entries:
            lines.append(f"{ell},{k},{nu:.17g}")
        return "\n".join(lines) + "\n"


def table_rows_from_csv(text):
    """Parse the to_csv format back into (ell, k, nu) triples."""
    lines = [ln for ln in text.strip().split("\n") if ln]
    if lines[0] != "ell,k,nu":
        raise ValueError(f"unexpected header {lines[0]!r}")
    out = []
    for ln in lines[1:]:
        ell, k, nu = ln.split(",")
        out.append((int(ell), int(k), float(nu)))
    return out


def _thread_count(threads):
    if threads is None:
        raw = os.environ.get("HYPERLAP_THREADS", "0")
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(f"HYPERLAP_THREADS must be an integer, got {raw!r}")
    if threads < 0:
        raise ValueError(f"thread count must be >= 0, got {threads}")
    if threads == 0:
        threads = os.cpu_count() or 1
    return threads


def sweep(
    interval,
    cutoff,
    tol=1e-10,
    n=400,
    margin=0.05,
    ell_max=None,
    threads=None,
    oracle_m=4000,
    kappa_fn=None,
):
    """Certified eigenvalue table of every family with ground state <= cutoff.

    ``ell_max``, when given, skips the adaptive search but is still verified
    (its ground state must clear the cutoff, else the table would be
    incomplete).  ``kappa_fn`` overrides the default coupling ell^2; it must
    be increasing.  Families run on a thread pool sized by ``threads``
    (None: the HYPERLAP_THREADS environment variable, 0 or unset meaning
    one worker per cpu); results are merged in mode order, so the table is
    deterministic regardless of scheduling.
    """
    cutoff = float(cutoff)
    if not (math.isfinite(cutoff) and cutoff > 0.0):
        raise ValueError(f"cutoff must be positive and finite, got {cutoff!r}")
    if margin < 0.0:
        raise ValueError(f"margin must be >= 0, got {margin}")
    if ell_max is None:
        ell_max = find_ell_max(interval, cutoff, n=n, kappa_fn=kappa_fn)
    else:
        ell_max = int(ell_max)
        if ell_max < 1:
            raise ValueError(f"ell_max must be >= 1, got {ell_max}")
        if _ground_state(interval, ell_max, n, kappa_fn) <= cutoff:
            raise IncompleteTableError(
                f"mode {ell_max} still has its ground state below {cutoff}; "
                "table would be incomplete"
            )
    retain = cutoff * (1.0 + margin)

    def solve_mode(ell):
        prob = SLProblem(interval=interval, pot=_pot_for(ell, kappa_fn))
        values, first_above, _ = _certified(prob, retain, tol, n, oracle_m)
        if first_above <= cutoff:
            raise CertificationError(
                f"mode {ell}: first discarded eigenvalue {first_above} "
                f"does not clear the cutoff {cutoff}",
                index=len(values),
            )
        return values

    ells = list(range(1, ell_max))
    workers = _thread_count(threads)
    if workers <= 1 or len(ells) <= 1:
        results = [solve_mode(ell) for ell in ells]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(solve_mode, ells))
    entries = []
    for ell, values in zip(ells, results):
        for k, nu in enumerate(values, start=1):
            entries.append((ell, k, float(nu)))
    return EigenTable(
        entries=tuple(entries),
        cutoff=cutoff,
        ell_max=ell_max,
        resolution=n,
        tolerance=tol,
        margin=margin,
    )
