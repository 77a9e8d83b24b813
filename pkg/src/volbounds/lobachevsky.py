"""Lobachevsky-function numerics and exact volumes of the standard ideal families.

Everything downstream (polyhedron and link volume bounds) is a rational
combination of a handful of transcendental constants: v_tet = 3*L(pi/3),
v_oct = 8*L(pi/4), values L(pi/n), and pi*log(n/2).  This module provides

* two structurally independent evaluators of the Lobachevsky function
  (a zeta-accelerated series and an adaptive-quadrature oracle),
* the closed-form volumes of ideal tetrahedra slices, regular bipyramids,
  antiprisms and twisted antiprisms, and
* :class:`VolumeExpr`, an exact rational combination of the basis constants
  that is only converted to floating point at the boundary.
"""

from __future__ import annotations

import math
from fractions import Fraction

from scipy.integrate import quad

__all__ = [
    "lobachevsky",
    "lobachevsky_quadrature",
    "v_tet",
    "v_oct",
    "V_TET",
    "V_OCT",
    "ideal_tetrahedron_volume",
    "regular_bipyramid_volume",
    "bipyramid_log_bound",
    "antiprism_volume",
    "twisted_antiprism_volume",
    "VolumeExpr",
]


def _even_zeta_table(count: int) -> list[float]:
    """zeta(2), zeta(4), ..., zeta(2*count) to double precision."""
    table = [math.pi**2 / 6.0, math.pi**4 / 90.0, math.pi**6 / 945.0]
    for n in range(4, count + 1):
        s = 2 * n
        # direct summation; tail < k^(1-s)/(s-1) drops below 1e-20 quickly
        k_max = max(4, int(10.0 ** (20.0 / s)) + 2)
        table.append(sum(k ** (-s) for k in range(1, k_max + 1)))
    return table[:count]


_ZETA_EVEN = _even_zeta_table(48)


def _reduce_angle(theta: float) -> float:
    """Map theta to the congruent angle in (-pi/2, pi/2] using periodicity."""
    r = math.fmod(theta, math.pi)
    if r > math.pi / 2.0:
        r -= math.pi
    elif r <= -math.pi / 2.0:
        r += math.pi
    return r


def lobachevsky(theta: float) -> float:
    """Lobachevsky function L(theta) = -integral_0^theta log|2 sin t| dt.

    The angle is reduced to (-pi/2, pi/2] via pi-periodicity and oddness,
    then evaluated by the zeta-accelerated series

        L(x) = x - x*log(2x) + sum_{n>=1} zeta(2n)/(n(2n+1)) * x^(2n+1)/pi^(2n)

    truncated adaptively with a geometric tail bound.  Absolute error stays
    below 1e-12 (in practice near machine precision).
    """
    if not math.isfinite(theta):
        raise ValueError("lobachevsky: theta must be finite")
    x = _reduce_angle(theta)
    if x == 0.0:
        return 0.0
    sign = 1.0
    if x < 0.0:
        sign, x = -1.0, -x

    ratio = (x / math.pi) ** 2
    total = x - x * math.log(2.0 * x)
    power = x
    for n, zeta in enumerate(_ZETA_EVEN, start=1):
        power *= ratio
        term = zeta * power / (n * (2 * n + 1))
        total += term
        # remaining terms are dominated by a geometric series of ratio <= 1/4
        if term < 1e-17 * (1.0 - ratio):
            break
    else:  # pragma: no cover - table is sized for the worst case x = pi/2
        raise AssertionError("series truncation bound not reached")
    return sign * total


def lobachevsky_quadrature(theta: float) -> float:
    """Independent evaluation of L(theta) by adaptive quadrature.

    The log singularity at t=0 is handled analytically,

        integral_0^x log(2 sin t) dt = x*log(2x) - x + integral_0^x log(sin(t)/t) dt,

    leaving a bounded integrand for the adaptive rule.  Kept deliberately
    separate from :func:`lobachevsky` so the two can oracle-check each other.
    """
    if not math.isfinite(theta):
        raise ValueError("lobachevsky_quadrature: theta must be finite")
    # periodicity only; the integral runs over [0, x) with x in [0, pi)
    x = math.fmod(theta, math.pi)
    if x < 0.0:
        x += math.pi
    if x == 0.0:
        return 0.0

    def log_sinc(t: float) -> float:
        if t == 0.0:
            return 0.0
        return math.log(math.sin(t) / t)

    smooth, _err = quad(log_sinc, 0.0, x, epsabs=1e-14, epsrel=1e-13, limit=400)
    return -(x * math.log(2.0 * x) - x + smooth)


def v_tet() -> float:
    """Volume of the regular ideal tetrahedron, 3*L(pi/3)."""
    return 3.0 * lobachevsky(math.pi / 3.0)


def v_oct() -> float:
    """Volume of the regular ideal octahedron, 8*L(pi/4)."""
    return 8.0 * lobachevsky(math.pi / 4.0)


V_TET = v_tet()
V_OCT = v_oct()


def _require_n(n: int, minimum: int, what: str) -> None:
    if not isinstance(n, int) or n < minimum:
        raise ValueError(f"{what}: need integer n >= {minimum}, got {n!r}")


def ideal_tetrahedron_volume(n: int) -> float:
    """Volume 2*L(pi/n) of the tetrahedron slice of the regular n-gonal bipyramid."""
    _require_n(n, 3, "ideal_tetrahedron_volume")
    return 2.0 * lobachevsky(math.pi / n)


def regular_bipyramid_volume(n: int) -> float:
    """Volume 2n*L(pi/n) of the regular ideal n-gonal bipyramid."""
    _require_n(n, 3, "regular_bipyramid_volume")
    return 2.0 * n * lobachevsky(math.pi / n)


def bipyramid_log_bound(n: int) -> float:
    """Upper bound 2*pi*log(n/2) for the regular ideal n-gonal bipyramid volume."""
    _require_n(n, 3, "bipyramid_log_bound")
    return 2.0 * math.pi * math.log(n / 2.0)


def antiprism_volume(n: int) -> float:
    """Thurston's volume 2n*[L(pi/4 + pi/2n) + L(pi/4 - pi/2n)] of the ideal
    right-angled n-antiprism."""
    _require_n(n, 3, "antiprism_volume")
    half = math.pi / (2.0 * n)
    return 2.0 * n * (lobachevsky(math.pi / 4.0 + half) + lobachevsky(math.pi / 4.0 - half))


def twisted_antiprism_volume(n: int) -> float:
    """Volume of the twisted n-antiprism, vol A(n-1) + vol A(3)."""
    _require_n(n, 4, "twisted_antiprism_volume")
    return antiprism_volume(n - 1) + antiprism_volume(3)


# ---------------------------------------------------------------------------
# Exact rational combinations of the basis constants
# ---------------------------------------------------------------------------

# basis keys: "one", "v_tet", "v_oct", ("lob", n) -> L(pi/n),
# ("pilog", n) -> pi*log(n/2)


def _basis_value(key) -> float:
    if key == "one":
        return 1.0
    if key == "v_tet":
        return V_TET
    if key == "v_oct":
        return V_OCT
    tag, n = key
    if tag == "lob":
        return lobachevsky(math.pi / n)
    if tag == "pilog":
        return math.pi * math.log(n / 2.0)
    raise KeyError(key)


class VolumeExpr:
    """Exact rational combination of {1, v_tet, v_oct, L(pi/n), pi*log(n/2)}.

    Bounds are assembled in this form and converted to floating point only at
    the boundary, so coefficient-level identities (e.g. "equals 4*v_tet") can
    be asserted exactly.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for key, coef in dict(terms or {}).items():
            frac = Fraction(coef)
            if frac:
                cleaned[key] = frac
        self._terms = cleaned

    @classmethod
    def constant(cls, value) -> "VolumeExpr":
        return cls({"one": Fraction(value)})

    @classmethod
    def v_tet(cls, coef=1) -> "VolumeExpr":
        return cls({"v_tet": Fraction(coef)})

    @classmethod
    def v_oct(cls, coef=1) -> "VolumeExpr":
        return cls({"v_oct": Fraction(coef)})

    @classmethod
    def lob(cls, n: int, coef=1) -> "VolumeExpr":
        return cls({("lob", int(n)): Fraction(coef)})

    @classmethod
    def pilog(cls, n: int, coef=1) -> "VolumeExpr":
        return cls({("pilog", int(n)): Fraction(coef)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    @property
    def value(self) -> float:
        return float(sum(float(c) * _basis_value(k) for k, c in self._terms.items()))

    def __add__(self, other: "VolumeExpr") -> "VolumeExpr":
        if not isinstance(other, VolumeExpr):
            return NotImplemented
        merged = dict(self._terms)
        for key, coef in other._terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coef
        return VolumeExpr(merged)

    def __sub__(self, other: "VolumeExpr") -> "VolumeExpr":
        if not isinstance(other, VolumeExpr):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self) -> "VolumeExpr":
        return (-1) * self

    def __mul__(self, scalar) -> "VolumeExpr":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return VolumeExpr({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, VolumeExpr) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "VolumeExpr(0)"

        def label(key):
            if key == "one":
                return "1"
            if isinstance(key, str):
                return key
            tag, n = key
            return f"L(pi/{n})" if tag == "lob" else f"pi*log({n}/2)"

        parts = [f"{c}*{label(k)}" for k, c in sorted(self._terms.items(), key=lambda kv: str(kv[0]))]
        return "VolumeExpr(" + " + ".join(parts) + ")"
