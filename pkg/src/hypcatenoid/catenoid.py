"""Scalar functions of the spherical catenoid family.

A catenoid is labeled by its neck distance a > 0 to the rotation axis.  In
warped-product coordinates (x along the axis, y distance to the axis) its
profile is the catenary x(y), an integral with an inverse-square-root
singularity at y = a.  This module evaluates the profile, the asymptotic
half-separation rho(a), tube and disk areas, the area difference Phi(a, r),
its large-r limit (the deficit), and the two terms of the deficit's second
derivative.

Every radicand sinh(2t)**2 - sinh(2a)**2 is evaluated through the exact
factorization sinh(2(t-a)) * sinh(2(t+a)), which is nonnegative by
construction and free of cancellation; heads of integrals additionally pull
the sqrt(t - a) factor out through sinhc so the singular weight can be
removed by substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadrature import Tolerance, quad_finite, quad_semi_infinite, quad_sqrt_endpoint

__all__ = [
    "AreaReport",
    "Catenoid",
    "CatenarySample",
    "area_deficit",
    "area_difference",
    "catenary_x",
    "concavity_terms",
    "disk_area_total",
    "gomes_rho",
    "mvt_f",
    "plane_separation",
    "sample_catenary",
    "tube_area",
]

_FOUR_PI = 4.0 * math.pi

# sinh(2a)**2 degrades doubles long before overflow; public entry points
# refuse neck distances past this cap.
_NECK_CAP = 25.0

# Head/tail split for singular-to-infinite integrals: the substitution needs
# a finite interval and the exponential decay bounds hold past a + 1.
_HEAD_SPAN = 1.0

# Integrands below decay like exp(-3t); past a + _TAIL_SPAN their remaining
# mass is ~1e-41 at worst and is dropped when the upper limit is finite.
_TAIL_SPAN = 40.0

_DECAY_RATE = 3.0


def _check_neck(a: float) -> None:
    if not 0.0 < a <= _NECK_CAP:
        raise ValueError(f"neck distance must be in (0, {_NECK_CAP}], got {a}")


def _sinhc(x: float) -> float:
    return math.sinh(x) / x if x != 0.0 else 1.0


@dataclass(frozen=True)
class Catenoid:
    """A spherical catenoid, identified by its neck distance to the axis."""

    neck_distance: float

    def __post_init__(self) -> None:
        _check_neck(self.neck_distance)


@dataclass(frozen=True)
class CatenarySample:
    """Sampled catenary profile points (x, y) with their neck parameter."""

    points: tuple[tuple[float, float], ...]
    neck_distance: float


@dataclass(frozen=True)
class AreaReport:
    """Tube area, total disk area, and their difference Phi(a, r)."""

    tube_area: float
    disk_area_total: float
    phi_a_r: float


def _profile_head(a: float):
    """Smooth factor of the catenary integrand on [a, a+1].

    True integrand: sinh(2a) / (cosh t * sqrt(sinh(2t)**2 - sinh(2a)**2)),
    with the 1/sqrt(t - a) weight pulled out.
    """
    sinh_2a = math.sinh(2.0 * a)

    def g(t: float) -> float:
        scale = 2.0 * _sinhc(2.0 * (t - a)) * math.sinh(2.0 * (t + a))
        return sinh_2a / (math.cosh(t) * math.sqrt(scale))

    return g


def _profile_tail(a: float):
    """Catenary integrand in factored form, valid away from t = a."""
    sinh_2a = math.sinh(2.0 * a)

    def g(t: float) -> float:
        radicand = math.sinh(2.0 * (t - a)) * math.sinh(2.0 * (t + a))
        return sinh_2a / (math.cosh(t) * math.sqrt(radicand))

    return g


def gomes_rho(a: float, tol: Tolerance) -> float:
    """Asymptotic half-separation rho(a) of the catenoid's boundary planes.

    Integrates sinh(2a) / (cosh t * sqrt(sinh(2t)**2 - sinh(2a)**2)) for t
    from a to infinity: a square-root-substituted head on [a, a+1] plus an
    exponentially decaying tail.
    """
    _check_neck(a)
    head = quad_sqrt_endpoint(_profile_head(a), "lower", a, a + _HEAD_SPAN, tol)
    tail = quad_semi_infinite(_profile_tail(a), a + _HEAD_SPAN, _DECAY_RATE, tol)
    return head.value + tail.value


def catenary_x(a: float, y: float, tol: Tolerance) -> float:
    """Axial coordinate x(y) of the catenary profile, zero at the neck y = a."""
    _check_neck(a)
    if y < a:
        raise ValueError(f"profile coordinate y={y} below the neck distance a={a}")
    head_hi = min(y, a + _HEAD_SPAN)
    head = quad_sqrt_endpoint(_profile_head(a), "lower", a, head_hi, tol)
    if y <= a + _HEAD_SPAN:
        return head.value
    # Past a + _TAIL_SPAN the integrand has decayed below ~1e-41; truncate.
    tail = quad_finite(_profile_tail(a), a + _HEAD_SPAN, min(y, a + _TAIL_SPAN), tol)
    return head.value + tail.value


def sample_catenary(a: float, y_max: float, n: int, tol: Tolerance) -> CatenarySample:
    """Sample n profile points graded toward the neck where dx/dy blows up.

    Node spacing follows y_i = a + (y_max - a) * (i/(n-1))**2, matching the
    (y - a)**(-1/2) growth of the profile slope at the neck.
    """
    _check_neck(a)
    if not y_max > a:
        raise ValueError(f"y_max={y_max} must exceed the neck distance a={a}")
    if n < 2:
        raise ValueError(f"need at least 2 samples, got n={n}")
    span = y_max - a
    points = []
    for i in range(n):
        frac = i / (n - 1)
        y = a + span * frac * frac
        points.append((catenary_x(a, y, tol), y))
    return CatenarySample(tuple(points), a)


def disk_area_total(r: float) -> float:
    """Combined area 4*pi*(cosh r - 1) of the two geodesic disks of radius r."""
    if r < 0.0:
        raise ValueError(f"disk radius must be nonnegative, got {r}")
    return _FOUR_PI * (math.cosh(r) - 1.0)


def _deficit_head(a: float):
    """Smooth factor of the combined tube-minus-disk integrand near t = a.

    True integrand: 4*pi*sinh(t) * (sinh(2t)/sqrt(D) - 1) with
    D = sinh(2t)**2 - sinh(2a)**2, rewritten as
    4*pi*sinh(t) * sinh(2a)**2 / (sqrt(D) * (sinh(2t) + sqrt(D))) so the
    e^(-3t) signal survives in doubles; the 1/sqrt(t - a) weight is pulled
    out for the substitution.
    """
    sinh_2a_sq = math.sinh(2.0 * a) ** 2

    def g(t: float) -> float:
        delta = t - a
        scale = 2.0 * _sinhc(2.0 * delta) * math.sinh(2.0 * (t + a))
        sqrt_scale = math.sqrt(scale)
        sqrt_d = math.sqrt(delta) * sqrt_scale
        return (
            _FOUR_PI
            * math.sinh(t)
            * sinh_2a_sq
            / (sqrt_scale * (math.sinh(2.0 * t) + sqrt_d))
        )

    return g


def _deficit_tail(a: float):
    """Combined tube-minus-disk integrand in factored form, away from t = a."""
    sinh_2a_sq = math.sinh(2.0 * a) ** 2

    def g(t: float) -> float:
        sqrt_d = math.sqrt(math.sinh(2.0 * (t - a)) * math.sinh(2.0 * (t + a)))
        return (
            _FOUR_PI * math.sinh(t) * sinh_2a_sq / (sqrt_d * (math.sinh(2.0 * t) + sqrt_d))
        )

    return g


def _deficit_integral(a: float, r: float, tol: Tolerance) -> float:
    """4*pi * int_a^r sinh(t) * (sinh(2t)/sqrt(D) - 1) dt, r may be inf."""
    head_hi = min(r, a + _HEAD_SPAN)
    head = quad_sqrt_endpoint(_deficit_head(a), "lower", a, head_hi, tol)
    if r <= a + _HEAD_SPAN:
        return head.value
    if math.isinf(r):
        tail = quad_semi_infinite(_deficit_tail(a), a + _HEAD_SPAN, _DECAY_RATE, tol)
    else:
        tail = quad_finite(
            _deficit_tail(a), a + _HEAD_SPAN, min(r, a + _TAIL_SPAN), tol
        )
    return head.value + tail.value


def area_difference(a: float, r: float, tol: Tolerance) -> AreaReport:
    """Area difference Phi(a, r) between the tube and its two spanning disks.

    Phi is evaluated from the combined integrand, never as a difference of
    two large areas, so its absolute accuracy is independent of r; the tube
    area is reconstructed as Phi plus the closed-form disk area.
    """
    _check_neck(a)
    if r < a:
        raise ValueError(f"tube radius r={r} must be at least the neck distance a={a}")
    phi = _deficit_integral(a, r, tol) - _FOUR_PI * (math.cosh(a) - 1.0)
    disks = disk_area_total(r)
    return AreaReport(tube_area=phi + disks, disk_area_total=disks, phi_a_r=phi)


def tube_area(a: float, r: float, tol: Tolerance) -> float:
    """Area of the compact tube between the neck circle at a and radius r."""
    return area_difference(a, r, tol).tube_area


def area_deficit(a: float, tol: Tolerance) -> float:
    """Limit phi(a) of Phi(a, r) as r grows; positive exactly below its zero."""
    _check_neck(a)
    return _deficit_integral(a, math.inf, tol) - _FOUR_PI * (math.cosh(a) - 1.0)


def plane_separation(a: float, r: float, tol: Tolerance) -> float:
    """Distance L between the two spanning disks' planes; equals 2*x(r)."""
    _check_neck(a)
    if r < a:
        raise ValueError(f"tube radius r={r} must be at least the neck distance a={a}")
    return 2.0 * catenary_x(a, r, tol)


def mvt_f(x: float, K: float) -> float:
    """Increasing comparison function whose unique zero separates deficit concavity.

    f(x) = -30 cosh 3x - 18 cosh 5x + 10 sinh 7x + 15 (1-K) cosh 8x.
    """
    if x < 0.0:
        raise ValueError(f"argument must be nonnegative, got {x}")
    if not 0.0 < K < 1.0:
        raise ValueError(f"K must lie in (0, 1), got {K}")
    return (
        -30.0 * math.cosh(3.0 * x)
        - 18.0 * math.cosh(5.0 * x)
        + 10.0 * math.sinh(7.0 * x)
        + 15.0 * (1.0 - K) * math.cosh(8.0 * x)
    )


def _concavity_head(a: float):
    """Smooth factor of the second concavity integrand near t = 0.

    True integrand (t-shifted so the singularity sits at t = 0):
    -4*pi * N(t) / (sqrt(sinh(2t) * sinh(4a+2t)) * sinh(4a+2t)**2) with
    N(t) = 5 cosh(a+t) - 3 cosh(3a+3t) - 3 cosh(5a+t) + cosh(7a+3t).
    """

    def g(t: float) -> float:
        numer = (
            5.0 * math.cosh(a + t)
            - 3.0 * math.cosh(3.0 * a + 3.0 * t)
            - 3.0 * math.cosh(5.0 * a + t)
            + math.cosh(7.0 * a + 3.0 * t)
        )
        sinh_outer = math.sinh(4.0 * a + 2.0 * t)
        scale = 2.0 * _sinhc(2.0 * t) * sinh_outer
        return -_FOUR_PI * numer / (math.sqrt(scale) * sinh_outer * sinh_outer)

    return g


def _concavity_tail(a: float):
    def g(t: float) -> float:
        numer = (
            5.0 * math.cosh(a + t)
            - 3.0 * math.cosh(3.0 * a + 3.0 * t)
            - 3.0 * math.cosh(5.0 * a + t)
            + math.cosh(7.0 * a + 3.0 * t)
        )
        sinh_outer = math.sinh(4.0 * a + 2.0 * t)
        radicand = math.sinh(2.0 * t) * sinh_outer
        return -_FOUR_PI * numer / (math.sqrt(radicand) * sinh_outer * sinh_outer)

    return g


def concavity_terms(a: float, tol: Tolerance) -> tuple[float, float]:
    """The two terms I1(a), I2(a) whose sum is the deficit's second derivative."""
    from .constants import compute_K  # deferred: constants builds on this module

    _check_neck(a)
    K = compute_K(tol)
    i1 = _deficit_integral(a, math.inf, tol) - _FOUR_PI * K * math.cosh(a)
    head = quad_sqrt_endpoint(_concavity_head(a), "lower", 0.0, _HEAD_SPAN, tol)
    tail = quad_semi_infinite(_concavity_tail(a), _HEAD_SPAN, _DECAY_RATE, tol)
    i2 = head.value + tail.value - _FOUR_PI * (1.0 - K) * math.cosh(a)
    return i1, i2
