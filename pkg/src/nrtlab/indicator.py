"""Constrained-sup indicator on a test region and its probing sweeps.

For a test region G inside the ambient disk |x| < R the indicator asks
how large the measured pairing l(g) can get over boundary data g whose
harmonic lifts z_g stay small on G:

    sup { |l(g)| : ||z_g||_{H1(G)} <= eps },

with g restricted to trigonometric polynomials of order <= N.  In that
finite-dimensional slice the constraint is the ellipsoid c^T Q c <=
eps^2 for the Gram matrix Q of the lifted basis and the objective is
b^T c, so the sup equals eps * sqrt(b^T Q^+ b).  Whether the sup stays
bounded or grows without bound as N increases is exactly what separates
regions that do or do not feel the cavity.

The module provides the Gram assembly, the pseudo-inverse sup with its
discarded-mass diagnostics, sweeps over N with a verdict, the
log-potential fit that drives the blow-up route, and a slope-based
diagnostic for curves of indicator values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .geometry import (
    DiskRegion,
    OriginLocation,
    QuadratureRule,
    build_disk_quadrature,
    validate_admissible,
)
from .harmonic import (
    BoundaryData,
    LogSource,
    annulus_neumann_solution,
    gap_neumann_trace,
)

# Relative eigenvalue cutoff below which Gram directions are treated as
# numerically null, and the share of |b| mass in those directions above
# which the sup is flagged as unbounded within the current order.
EIGEN_FLOOR = 1e-12
UNBOUNDED_SHARE = 1e-8


class Verdict(enum.Enum):
    """Outcome of a sweep: indicator bounded, blowing up, or unclear."""

    BOUNDED = "Bounded"
    BLOW_UP = "BlowUp"
    INCONCLUSIVE = "Inconclusive"


class OriginOnBoundaryError(ValueError):
    """Raised when the test region boundary passes through the origin.

    The indicator dichotomy needs the origin to be strictly inside or
    strictly outside the region; on the boundary neither closed form
    applies, so sweeps refuse to run.
    """


class GramConditioningError(RuntimeError):
    """Raised when a Gram matrix fails the positive-semidefinite check."""


def h1_inner(f, g, rule: QuadratureRule) -> float:
    """H1 inner product integral (f g + grad f . grad g) over an area rule.

    Both arguments must expose eval/grad.  Integrands with a declared
    singular point inside the rule's region are rejected, since the
    quadrature result would be meaningless there.
    """
    if rule.kind != "area":
        raise ValueError("H1 inner product requires an area quadrature rule")
    for fn in (f, g):
        singular = getattr(fn, "singular_points", None)
        if singular is None or rule.region is None:
            continue
        for point in singular():
            if rule.region.contains(point):
                raise ValueError(
                    f"integrand is singular at {point} inside the integration region {rule.region}"
                )
    fv = np.asarray(f.eval(rule.nodes))
    gv = np.asarray(g.eval(rule.nodes))
    fg = np.asarray(f.grad(rule.nodes))
    gg = np.asarray(g.grad(rule.nodes))
    dens = fv * gv + np.einsum("ij,ij->i", fg, gg)
    return rule.integrate(dens)


def _mode_numbers(order: int) -> np.ndarray:
    # Index layout: 0 -> constant, 2n-1 -> cos n, 2n -> sin n.
    n = np.arange(2 * order + 1)
    return (n + 1) // 2


def _harmonic_basis(order: int, points: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Values and gradients of the harmonic polynomials 1, Re z^n, Im z^n.

    Returns (V, Gx, Gy), each of shape (2*order+1, n_points), in the
    index layout of _mode_numbers.  Powers are built iteratively so the
    origin never hits a 0**0 ambiguity.
    """
    z = points[:, 0] + 1j * points[:, 1]
    dim = 2 * order + 1
    V = np.empty((dim, z.size))
    Gx = np.empty((dim, z.size))
    Gy = np.empty((dim, z.size))
    V[0] = 1.0
    Gx[0] = 0.0
    Gy[0] = 0.0
    power = np.ones_like(z)
    for n in range(1, order + 1):
        dpower = n * power
        power = power * z
        V[2 * n - 1] = power.real
        V[2 * n] = power.imag
        Gx[2 * n - 1] = dpower.real
        Gy[2 * n - 1] = -dpower.imag
        Gx[2 * n] = dpower.imag
        Gy[2 * n] = dpower.real
    return V, Gx, Gy


def _basis_gram(V: np.ndarray, Gx: np.ndarray, Gy: np.ndarray, weights: np.ndarray) -> np.ndarray:
    A = (V * weights) @ V.T + (Gx * weights) @ Gx.T + (Gy * weights) @ Gy.T
    return 0.5 * (A + A.T)


@dataclass(frozen=True)
class GramSystem:
    """Quadratic constraint and linear objective for one cutoff order.

    Q is the H1(G) Gram matrix of the lifted boundary modes
    z_phi(r, theta) = (r/R)^n {cos, sin}(n theta) in the layout of
    _mode_numbers, and b collects the pairings l(phi).  Q is kept
    symmetric to machine precision by construction.
    """

    order: int
    boundary_radius: float
    region: DiskRegion
    Q: np.ndarray
    b: np.ndarray
    eigen_floor: float = EIGEN_FLOOR

    def __post_init__(self):
        dim = 2 * self.order + 1
        Q = np.ascontiguousarray(np.asarray(self.Q, dtype=float))
        b = np.ascontiguousarray(np.asarray(self.b, dtype=float))
        if Q.shape != (dim, dim):
            raise ValueError(f"Q must be ({dim}, {dim}) for order {self.order}, got {Q.shape}")
        if b.shape != (dim,):
            raise ValueError(f"b must have length {dim}, got {b.shape}")
        if not np.array_equal(Q, Q.T):
            raise ValueError("Q must be exactly symmetric; symmetrize before constructing")
        Q.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return 2 * self.order + 1


def assemble_gram(
    cavity: DiskRegion,
    boundary_radius: float,
    order: int,
    w_trace: BoundaryData | None = None,
    quad_orders: tuple[int, int] | None = None,
    eigen_floor: float = EIGEN_FLOOR,
) -> GramSystem:
    """Build the Gram system for a test region at one cutoff order.

    The Gram matrix is assembled in the monomial basis 1, Re z^n, Im z^n
    (exact for the default quadrature orders, which integrate all
    products of degree <= 2*order) and rescaled by R^-n per column to
    the unit-trace boundary modes.  When w_trace is omitted the Neumann
    gap trace of the explicit unit-cavity solution at the given R is
    used, which requires R > 1.
    """
    if order < 1:
        raise ValueError(f"cutoff order must be >= 1, got {order}")
    validate_admissible(cavity, boundary_radius)
    if quad_orders is None:
        quad_orders = (max(order + 4, 16), max(2 * order + 8, 32))
    rule = build_disk_quadrature(cavity, quad_orders[0], quad_orders[1])
    V, Gx, Gy = _harmonic_basis(order, rule.nodes)
    A = _basis_gram(V, Gx, Gy, rule.weights)
    damp = float(boundary_radius) ** (-_mode_numbers(order).astype(float))
    Q = (A * damp[:, None]) * damp[None, :]
    Q = 0.5 * (Q + Q.T)

    if w_trace is None:
        w_trace = gap_neumann_trace(annulus_neumann_solution(boundary_radius), boundary_radius)
    R = float(boundary_radius)
    b = np.zeros(2 * order + 1)
    b[0] = 2.0 * np.pi * R * w_trace.cos_coeff[0]
    shared = min(order, w_trace.max_order)
    for n in range(1, shared + 1):
        b[2 * n - 1] = np.pi * R * w_trace.cos_coeff[n]
        b[2 * n] = np.pi * R * w_trace.sin_coeff[n]
    return GramSystem(
        order=order,
        boundary_radius=R,
        region=cavity,
        Q=Q,
        b=b,
        eigen_floor=eigen_floor,
    )


def _equilibrated_eigh(Q: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Symmetric diagonal equilibration followed by eigendecomposition.

    Scaling by 1/sqrt(diag Q) maps any diagonal rescaling of the same
    system to the identical equilibrated matrix, so pseudo-inverse
    results do not depend on how the basis columns were normalized.
    """
    d = np.sqrt(np.abs(np.diag(Q)))
    d[d == 0.0] = 1.0
    scale = 1.0 / d
    Qs = (Q * scale[:, None]) * scale[None, :]
    Qs = 0.5 * (Qs + Qs.T)
    lam, U = np.linalg.eigh(Qs)
    return scale, lam, U


@dataclass(frozen=True)
class SupResult:
    """Constrained sup at one cutoff order with conditioning diagnostics."""

    order: int
    eps: float
    value: float
    gain: float
    cond: float
    discarded_share: float
    unbounded: bool
    n_retained: int
    n_total: int


def sup_indicator(system: GramSystem, eps: float) -> SupResult:
    """Exact sup of |b^T c| over the ellipsoid c^T Q c <= eps^2.

    Computed as eps * sqrt(b^T Q^+ b) through an equilibrated
    eigendecomposition.  Eigendirections below eigen_floor (relative to
    the top eigenvalue) are dropped; if those directions carry more than
    a tiny share of b the true sup is infinite within this order and the
    result is flagged unbounded, with the finite part still reported.
    The value scales exactly linearly in eps because the gain is
    computed once and multiplied.
    """
    if eps <= 0.0:
        raise ValueError(f"constraint radius eps must be positive, got {eps}")
    scale, lam, U = _equilibrated_eigh(system.Q)
    lam_max = lam[-1]
    if lam_max <= 0.0 or lam[0] < -1e-10 * lam_max:
        raise GramConditioningError(
            f"Gram matrix at order {system.order} is not positive semidefinite "
            f"(eigenvalue range [{lam[0]:.3e}, {lam_max:.3e}])"
        )
    keep = lam > system.eigen_floor * lam_max
    b_eq = scale * system.b
    proj = U.T @ b_eq
    norm_b = float(np.linalg.norm(b_eq))
    if norm_b == 0.0:
        discarded = 0.0
    else:
        discarded = float(np.linalg.norm(proj[~keep]) / norm_b)
    if np.any(keep):
        gain = float(np.sqrt(np.sum(proj[keep] ** 2 / lam[keep])))
        cond = float(lam_max / lam[keep].min())
        n_retained = int(np.count_nonzero(keep))
    else:
        gain = 0.0
        cond = float("inf")
        n_retained = 0
    return SupResult(
        order=system.order,
        eps=float(eps),
        value=float(eps) * gain,
        gain=gain,
        cond=cond,
        discarded_share=discarded,
        unbounded=discarded > UNBOUNDED_SHARE,
        n_retained=n_retained,
        n_total=system.dim,
    )


@dataclass(frozen=True)
class IndicatorCurve:
    """Indicator values along a sweep parameter, with verdict attached.

    parameter is "N" for cutoff-order sweeps and "t" for probe-distance
    sweeps; grid holds the parameter values in sweep order.
    """

    parameter: str
    grid: np.ndarray
    values: np.ndarray
    eps: float
    verdict: Verdict | None = None
    details: tuple[SupResult, ...] | None = None

    def __post_init__(self):
        if self.parameter not in ("N", "t"):
            raise ValueError(f"sweep parameter must be 'N' or 't', got {self.parameter!r}")
        grid = np.ascontiguousarray(np.asarray(self.grid, dtype=float))
        values = np.ascontiguousarray(np.asarray(self.values, dtype=float))
        if grid.ndim != 1 or grid.shape != values.shape:
            raise ValueError("grid and values must be one-dimensional arrays of equal length")
        grid.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    @property
    def growth_ratios(self) -> np.ndarray:
        """Consecutive ratios values[k+1] / values[k], nan where undefined."""
        prev = self.values[:-1]
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(prev != 0.0, self.values[1:] / prev, np.nan)


def indicator_sweep(
    cavity: DiskRegion,
    boundary_radius: float,
    eps: float,
    orders,
    w_trace: BoundaryData | None = None,
    eigen_floor: float = EIGEN_FLOOR,
) -> IndicatorCurve:
    """Run the constrained sup over a list of increasing cutoff orders.

    Refuses regions whose boundary passes through the origin; there the
    bounded/blow-up dichotomy is not defined.  The verdict is BlowUp
    when any order flags unbounded b-mass or the last value at least
    doubles the first, Bounded when the last three values agree to 10
    percent, Inconclusive otherwise (and always with fewer than three
    orders, unless an unbounded flag already decided it).
    """
    orders = [int(n) for n in orders]
    if len(orders) == 0 or any(b <= a for a, b in zip(orders, orders[1:])):
        raise ValueError(f"orders must be a nonempty increasing sequence, got {orders}")
    where = cavity.classify_origin()
    if where is OriginLocation.BOUNDARY:
        raise OriginOnBoundaryError(
            f"boundary of disk(center={cavity.center}, radius={cavity.radius}) passes through "
            f"the origin (within relative tolerance 1e-9); the sweep verdict is undefined there"
        )
    results = []
    for order in orders:
        system = assemble_gram(cavity, boundary_radius, order, w_trace=w_trace, eigen_floor=eigen_floor)
        results.append(sup_indicator(system, eps))
    values = np.array([r.value for r in results])

    flagged = any(r.unbounded for r in results)
    if flagged:
        verdict = Verdict.BLOW_UP
    elif len(values) >= 3:
        if values[0] > 0.0 and values[-1] >= 2.0 * values[0]:
            verdict = Verdict.BLOW_UP
        else:
            tail = values[-3:]
            top = float(tail.max())
            if top == 0.0 or float(tail.max() - tail.min()) < 0.1 * top:
                verdict = Verdict.BOUNDED
            else:
                verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.INCONCLUSIVE
    return IndicatorCurve(
        parameter="N",
        grid=np.array(orders, dtype=float),
        values=values,
        eps=float(eps),
        verdict=verdict,
        details=tuple(results),
    )


@dataclass(frozen=True)
class RungeFit:
    """Least-squares fit of a shifted log potential by harmonic polynomials.

    g is the boundary trace of the fitted combination on r = R; its
    harmonic lift back into the disk reproduces the fit exactly, so
    zg_norm_on_G measures how small the lift stays on the test region
    while the pairing l(g) tracks the potential's gradient at the
    origin.
    """

    t: float
    cavity: DiskRegion
    ball: DiskRegion
    order: int
    g: BoundaryData
    residual: float
    norm_on_G: float
    zg_norm_on_G: float
    cond: float
    discarded_share: float
    n_retained: int


def runge_fit(
    t: float,
    cavity: DiskRegion,
    boundary_radius: float,
    order: int,
    quad_orders: tuple[int, int] | None = None,
    eigen_floor: float = EIGEN_FLOOR,
) -> RungeFit:
    """Fit E_t(x) = log|x - t e1| on G union B_{t/2}(0) at cutoff order N.

    The fit minimizes the H1 misfit over the union of the test region
    and a small ball around the origin.  Preconditions keep the
    singular point t e1 away from both: it must lie strictly outside
    the cavity closure, and the cavity must stay outside the closed
    ball of radius t about the origin.  Requires t < R so the probe
    point stays inside the ambient disk.
    """
    validate_admissible(cavity, boundary_radius)
    if not (0.0 < t < boundary_radius):
        raise ValueError(f"probe distance must satisfy 0 < t < {boundary_radius}, got {t}")
    if order < 1:
        raise ValueError(f"cutoff order must be >= 1, got {order}")
    point = (float(t), 0.0)
    gap = np.hypot(point[0] - cavity.center[0], point[1] - cavity.center[1])
    if gap <= cavity.radius:
        raise ValueError(
            f"singular point {point} lies inside the cavity closure "
            f"disk(center={cavity.center}, radius={cavity.radius})"
        )
    center_dist = np.hypot(cavity.center[0], cavity.center[1])
    if center_dist <= t + cavity.radius:
        raise ValueError(
            f"cavity disk(center={cavity.center}, radius={cavity.radius}) meets the closed "
            f"ball of radius {t} about the origin; move the cavity or shrink t"
        )
    ball = DiskRegion((0.0, 0.0), 0.5 * t)
    if quad_orders is None:
        quad_orders = (max(order + 16, 60), max(2 * order + 32, 160))
    probe = LogSource(point)

    dim = 2 * order + 1
    A = np.zeros((dim, dim))
    beta = np.zeros(dim)
    probe_sq = 0.0
    A_cavity = None
    cavity_sq = 0.0
    for region in (cavity, ball):
        rule = build_disk_quadrature(region, quad_orders[0], quad_orders[1])
        V, Gx, Gy = _harmonic_basis(order, rule.nodes)
        part = _basis_gram(V, Gx, Gy, rule.weights)
        fv = probe.eval(rule.nodes)
        fg = probe.grad(rule.nodes)
        load = V @ (rule.weights * fv) + Gx @ (rule.weights * fg[:, 0]) + Gy @ (rule.weights * fg[:, 1])
        sq = rule.integrate(fv * fv + np.einsum("ij,ij->i", fg, fg))
        A += part
        beta += load
        probe_sq += sq
        if region is cavity:
            A_cavity = part
            cavity_sq = sq
    A = 0.5 * (A + A.T)

    scale, lam, U = _equilibrated_eigh(A)
    lam_max = lam[-1]
    if lam_max <= 0.0 or lam[0] < -1e-10 * lam_max:
        raise GramConditioningError(
            f"fit normal matrix at order {order} is not positive semidefinite "
            f"(eigenvalue range [{lam[0]:.3e}, {lam_max:.3e}])"
        )
    keep = lam > eigen_floor * lam_max
    proj = U.T @ (scale * beta)
    coeff = scale * (U[:, keep] @ (proj[keep] / lam[keep]))
    cond = float(lam_max / lam[keep].min()) if np.any(keep) else float("inf")
    proj_norm = float(np.linalg.norm(proj))
    discarded_share = float(np.linalg.norm(proj[~keep]) / proj_norm) if proj_norm > 0.0 else 0.0

    residual_sq = probe_sq - 2.0 * float(coeff @ beta) + float(coeff @ A @ coeff)
    residual = float(np.sqrt(max(residual_sq, 0.0)))
    norm_on_G = float(np.sqrt(max(cavity_sq, 0.0)))
    zg_norm_on_G = float(np.sqrt(max(float(coeff @ A_cavity @ coeff), 0.0)))

    n = np.arange(order + 1)
    lift = float(boundary_radius) ** n.astype(float)
    cos_coeff = np.zeros(order + 1)
    sin_coeff = np.zeros(order + 1)
    cos_coeff[0] = coeff[0]
    for m in range(1, order + 1):
        cos_coeff[m] = coeff[2 * m - 1] * lift[m]
        sin_coeff[m] = coeff[2 * m] * lift[m]
    g = BoundaryData(cos_coeff, sin_coeff)
    return RungeFit(
        t=float(t),
        cavity=cavity,
        ball=ball,
        order=order,
        g=g,
        residual=residual,
        norm_on_G=norm_on_G,
        zg_norm_on_G=zg_norm_on_G,
        cond=cond,
        discarded_share=discarded_share,
        n_retained=int(np.count_nonzero(keep)),
    )


def scaled_sequence(fit: RungeFit, eps: float) -> BoundaryData:
    """Rescale the fitted boundary data so its lift has H1(G) norm near eps/2.

    The scale eps / (2 ||E_t||_{H1(G)}) uses the probe norm as the size
    reference; since the lift tracks the probe on G, the scaled lift
    lands close to eps/2 while the pairing inherits the same factor.
    """
    if eps <= 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    if fit.norm_on_G <= 0.0:
        raise ValueError("probe norm on the test region vanishes; cannot scale")
    return fit.g.scaled(eps / (2.0 * fit.norm_on_G))


def log_slope(curve: IndicatorCurve) -> tuple[float, float]:
    """Least-squares slope of log(value) along the sweep, with its R^2.

    The abscissa is log(1/t) for probe sweeps and N for order sweeps,
    so slope 1 on a t-sweep means values growing like 1/t.  Needs at
    least three samples and strictly positive values.
    """
    if curve.grid.size < 3:
        raise ValueError(f"slope fit needs at least 3 samples, got {curve.grid.size}")
    if np.any(curve.values <= 0.0):
        raise ValueError("slope fit requires strictly positive curve values")
    if curve.parameter == "t":
        x = -np.log(curve.grid)
    else:
        x = curve.grid
    y = np.log(curve.values)
    design = np.column_stack([x, np.ones_like(x)])
    sol, *_ = np.linalg.lstsq(design, y, rcond=None)
    slope = float(sol[0])
    fitted = design @ sol
    ss_res = float(np.sum((y - fitted) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return slope, r2


def blow_up_diagnostic(
    curve: IndicatorCurve,
    slope_threshold: float = 0.8,
    flat_threshold: float = 0.1,
    r2_threshold: float = 0.9,
) -> Verdict:
    """Classify a sweep curve by the slope of log(value) against the sweep axis.

    A fitted slope >= slope_threshold with regression R^2 >=
    r2_threshold reads as blow-up, slope <= flat_threshold as bounded,
    anything else as inconclusive.  Needs at least three samples and
    strictly positive values (an all-zero curve is bounded outright).
    """
    if curve.grid.size < 3:
        raise ValueError(f"diagnostic needs at least 3 samples, got {curve.grid.size}")
    if np.all(curve.values == 0.0):
        return Verdict.BOUNDED
    slope, r2 = log_slope(curve)
    if slope >= slope_threshold and r2 >= r2_threshold:
        return Verdict.BLOW_UP
    if abs(slope) <= flat_threshold:
        return Verdict.BOUNDED
    return Verdict.INCONCLUSIVE


def attach_verdict(curve: IndicatorCurve, verdict: Verdict) -> IndicatorCurve:
    return replace(curve, verdict=verdict)
