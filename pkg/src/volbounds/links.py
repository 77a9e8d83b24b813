"""Upper and lower volume bounds for hyperbolic link complements.

All bounds take the twist decomposition of a diagram (and, for some, extra
data: Jones coefficients, the white face census of the augmented polyhedron).
Hyperbolicity and diagram-level hypotheses (reduced, alternating, named-link
exclusions) cannot be decided from a decomposition, so they enter as caller
flags that gate applicability; the report never silently assumes them.

Bounds are assembled as exact rational combinations of the transcendental
constants and converted to floats late (see :class:`VolumeExpr`).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .lobachevsky import VolumeExpr
from .twists import TwistDecomposition, TwistStats, twist_stats

__all__ = [
    "LinkBound",
    "HypothesisFlags",
    "NotApplicable",
    "CensusMismatchError",
    "adams_crossing_bound",
    "adams_crossing_expr",
    "adams_octahedral_bound",
    "adams_octahedral_expr",
    "agol_thurston_bound",
    "agol_thurston_expr",
    "dasbach_tsvietkova_bound",
    "dasbach_tsvietkova_expr",
    "adams_twist_bound",
    "adams_twist_expr",
    "large_twist_bound",
    "large_twist_expr",
    "large_twist_refined_bound",
    "large_twist_refined_expr",
    "fkp_lower_bound",
    "fkp_lower_expr",
    "two_bridge_bounds",
    "two_bridge_bounds_expr",
    "jones_bounds",
    "jones_bounds_expr",
    "white_face_bound",
    "white_face_expr",
    "link_report",
]


class NotApplicable(Exception):
    """A bound's hypotheses are not met for the given input."""


class CensusMismatchError(ValueError):
    """White-face census violates the handshake sum n*f_n = 6t."""


@dataclass(frozen=True)
class LinkBound:
    name: str
    kind: str  # "upper" | "lower"
    value: float | None
    applicable: bool
    hypotheses: tuple[str, ...]
    citation: str
    best: bool = False


@dataclass(frozen=True)
class HypothesisFlags:
    """Caller-asserted diagram/link properties; everything defaults to False."""

    reduced: bool = False
    alternating: bool = False
    two_bridge: bool = False
    not_figure_eight: bool = False
    not_borromean: bool = False


def adams_crossing_expr(c: int, is_figure_eight: bool = False) -> VolumeExpr:
    if c < 3:
        raise ValueError("adams_crossing_bound: need crossing number >= 3")
    if is_figure_eight:
        raise NotApplicable("crossing bound excludes the figure-eight knot")
    return VolumeExpr.v_tet(4 * c - 16)


def adams_crossing_bound(c: int, is_figure_eight: bool = False) -> float:
    """Crossing-number bound v_tet (4c - 16) for hyperbolic knots other than
    the figure-eight."""
    return adams_crossing_expr(c, is_figure_eight).value


def adams_octahedral_expr(c: int) -> VolumeExpr:
    if c < 5:
        raise ValueError("adams_octahedral_bound: need crossing number >= 5")
    return VolumeExpr.v_oct(c - 5) + VolumeExpr.v_tet(4)


def adams_octahedral_bound(c: int) -> float:
    """Octahedral crossing bound v_oct (c - 5) + 4 v_tet for c >= 5."""
    return adams_octahedral_expr(c).value


def agol_thurston_expr(t: int) -> VolumeExpr:
    if t < 1:
        raise ValueError("agol_thurston_bound: need at least one twist")
    return VolumeExpr.v_tet(10 * (t - 1))


def agol_thurston_bound(t: int) -> float:
    """Twist-number bound 10 v_tet (t - 1), asymptotically sharp."""
    return agol_thurston_expr(t).value


def dasbach_tsvietkova_expr(s: TwistStats) -> VolumeExpr:
    t1, t2, t3 = s.exactly(1), s.exactly(2), s.exactly(3)
    g4 = s.at_least(4)
    if g4:
        a = 10
    elif t3:
        a = 7
    else:
        a = 6
    return VolumeExpr.v_tet(4 * t1 + 6 * t2 + 8 * t3 + 10 * g4 - a)


def dasbach_tsvietkova_bound(s: TwistStats) -> float:
    """Twist-length refinement v_tet (4 t1 + 6 t2 + 8 t3 + 10 g4 - a) of the
    twist-number bound, valid for reduced diagrams (alternating or not)."""
    return dasbach_tsvietkova_expr(s).value


# exact forms of the subtraction constant in the Adams twist-length bound
_ADAMS_A_CASES = (
    ("g2=0", VolumeExpr.v_oct(7) - VolumeExpr.v_tet(10)),
    ("g3=0 and t2>=1", VolumeExpr.v_tet(11)),
    (
        "g4=0 and t3>=1",
        VolumeExpr.lob(8, 32) + VolumeExpr.v_tet(5) - VolumeExpr.v_oct() - VolumeExpr.lob(7, 14),
    ),
    (
        "g5=0 and t4>=1",
        VolumeExpr.lob(10, 40)
        + VolumeExpr.lob(6, 12)
        - VolumeExpr.v_tet(2)
        - VolumeExpr.lob(4, 8)
        - VolumeExpr.lob(9, 18),
    ),
    (
        "g5>=1",
        VolumeExpr.v_tet(4) + VolumeExpr.lob(6, 12) + VolumeExpr.lob(10, 60) - VolumeExpr.lob(9, 54),
    ),
)


def adams_a_case(s: TwistStats) -> tuple[str, VolumeExpr]:
    """Select the subtraction constant, first matching case in printed order."""
    if s.at_least(2) == 0:
        return _ADAMS_A_CASES[0]
    if s.at_least(3) == 0 and s.exactly(2) >= 1:
        return _ADAMS_A_CASES[1]
    if s.at_least(4) == 0 and s.exactly(3) >= 1:
        return _ADAMS_A_CASES[2]
    if s.at_least(5) == 0 and s.exactly(4) >= 1:
        return _ADAMS_A_CASES[3]
    if s.at_least(5) >= 1:
        return _ADAMS_A_CASES[4]
    raise AssertionError("a-case analysis not exhaustive")  # unreachable for t >= 1


def adams_twist_expr(s: TwistStats) -> VolumeExpr:
    _, a = adams_a_case(s)
    return (
        VolumeExpr.v_oct(s.exactly(1))
        + VolumeExpr.v_tet(6 * s.exactly(2))
        + VolumeExpr.lob(8, 16 * s.exactly(3))
        + VolumeExpr.lob(10, 20 * s.exactly(4))
        + VolumeExpr.v_tet(10 * s.at_least(5))
        - a
    )


def adams_twist_bound(
    s: TwistStats,
    *,
    reduced_alternating: bool = True,
    is_borromean: bool = False,
) -> float:
    """Adams' per-length twist bound t1 v_oct + 6 t2 v_tet + 16 t3 L(pi/8)
    + 20 t4 L(pi/10) + 10 g5 v_tet - a.

    Hypotheses: c >= 5, t >= 3, reduced alternating diagram, link is not the
    Borromean rings; unmet hypotheses raise :class:`NotApplicable`.
    """
    if not reduced_alternating:
        raise NotApplicable("twist-length bound needs a reduced alternating diagram")
    if is_borromean:
        raise NotApplicable("twist-length bound excludes the Borromean rings")
    if s.t < 3:
        raise NotApplicable("twist-length bound needs at least 3 twists")
    if s.c < 5:
        raise NotApplicable("twist-length bound needs at least 5 crossings")
    return adams_twist_expr(s).value


def large_twist_expr(t: int) -> VolumeExpr:
    if t <= 8:
        raise NotApplicable("large-twist bound needs t > 8")
    return VolumeExpr.v_tet(Fraction(10) * (t - Fraction(14, 10)))


def large_twist_bound(t: int) -> float:
    """Improved twist-number bound 10 v_tet (t - 1.4) for diagrams with more
    than eight twists."""
    return large_twist_expr(t).value


def large_twist_refined_expr(t: int, delta: int) -> VolumeExpr:
    if t <= 8:
        raise NotApplicable("refined large-twist bound needs t > 8")
    if delta < 0:
        raise ValueError("large_twist_refined_bound: delta must be nonnegative")
    return VolumeExpr.v_tet(Fraction(10) * (t - Fraction(13, 10) - Fraction(delta, 10)))


def large_twist_refined_bound(t: int, delta: int) -> float:
    """Refinement 10 v_tet (t - 1.3 - delta/10) when the augmented polyhedron
    has delta + 2t triangles."""
    return large_twist_refined_expr(t, delta).value


def fkp_lower_expr(t: int) -> VolumeExpr:
    return VolumeExpr.constant(Fraction(70735, 100000) * (t - 1))


def fkp_lower_bound(t: int, min_twist_length: int, *, reduced_alternating: bool = True) -> float:
    """Lower bound 0.70735 (t - 1) for reduced alternating diagrams with
    t >= 2 twists, every twist of length at least 7."""
    if not reduced_alternating:
        raise NotApplicable("lower bound needs a reduced alternating diagram")
    if t < 2:
        raise NotApplicable("lower bound needs at least 2 twists")
    if min_twist_length < 7:
        raise NotApplicable("lower bound needs all twists of length >= 7")
    return fkp_lower_expr(t).value


def two_bridge_bounds_expr(t: int) -> tuple[VolumeExpr, VolumeExpr]:
    if t < 2:
        raise ValueError("two_bridge_bounds: need at least 2 twists")
    lower = VolumeExpr.v_tet(2 * t) - VolumeExpr.constant(Fraction(27066, 10000))
    upper = VolumeExpr.v_oct(2 * (t - 1))
    return lower, upper


def two_bridge_bounds(t: int) -> tuple[float, float]:
    """Two-sided bounds 2 v_tet t - 2.7066 <= vol <= 2 v_oct (t - 1) for
    two-bridge links with reduced alternating diagrams."""
    lo, hi = two_bridge_bounds_expr(t)
    return lo.value, hi.value


def jones_bounds_expr(abs_a2: int, abs_penultimate: int) -> tuple[VolumeExpr, VolumeExpr]:
    if abs_a2 < 0 or abs_penultimate < 0:
        raise ValueError("jones_bounds: coefficient magnitudes must be nonnegative")
    lower = VolumeExpr.v_oct(max(abs_penultimate, abs_a2 - 1))
    upper = VolumeExpr.v_tet(10 * (abs_a2 + abs_penultimate - 1))
    return lower, upper


def jones_bounds(abs_a2: int, abs_penultimate: int) -> tuple[float, float]:
    """Jones-coefficient bounds for prime alternating non-torus knots:
    v_oct max(|a_{m-1}|, |a_{n+1}|-1) <= vol <= 10 v_tet (|a_{n+1}| + |a_{m-1}| - 1)."""
    lo, hi = jones_bounds_expr(abs_a2, abs_penultimate)
    return lo.value, hi.value


def white_face_expr(t: int, white_census: dict[int, int]) -> VolumeExpr:
    if t < 2:
        raise ValueError("white_face_bound: need at least 2 twists")
    handshake = sum(n * f for n, f in white_census.items())
    if handshake != 6 * t:
        raise CensusMismatchError(
            f"white census sums to {handshake}, expected 6t = {6 * t}"
        )
    total = VolumeExpr.v_tet(4 * t - 8)
    for n, f in sorted(white_census.items()):
        total = total + VolumeExpr.lob(n, 2 * n * f)
    return total


def white_face_bound(t: int, white_census: dict[int, int]) -> float:
    """White-face refinement (4t - 8) v_tet + 2 sum_n n f_n L(pi/n) of the
    augmented-polyhedron bound; rejects censuses violating sum n f_n = 6t."""
    return white_face_expr(t, white_census).value


# ---------------------------------------------------------------------------
# Aggregated report
# ---------------------------------------------------------------------------


def link_report(
    d: TwistDecomposition,
    flags: HypothesisFlags = HypothesisFlags(),
    white_census: dict[int, int] | None = None,
    jones_coefficients: tuple[int, int] | None = None,
) -> list[LinkBound]:
    """Evaluate every bound with truthful applicability gating.

    Returns the catalog in fixed order with the minimum applicable upper and
    maximum applicable lower marked best.  With truthful flags, max lower
    never exceeds min upper.
    """
    s = twist_stats(d)
    rows: list[LinkBound] = []

    def add(name, kind, hypotheses, citation, compute, applicable=True):
        value = None
        ok = applicable
        if ok:
            try:
                value = compute()
            except NotApplicable:
                ok = False
        rows.append(
            LinkBound(
                name=name,
                kind=kind,
                value=value,
                applicable=ok,
                hypotheses=hypotheses,
                citation=citation,
            )
        )

    add(
        "adams-crossing",
        "upper",
        ("hyperbolic", "not the figure-eight knot"),
        "Adams 1983 crossing-number bound",
        lambda: adams_crossing_bound(s.c),
        applicable=flags.not_figure_eight and s.c >= 3,
    )
    add(
        "adams-octahedral",
        "upper",
        ("hyperbolic", "c >= 5"),
        "Adams 2013 octahedral bound (value computed from the exact form)",
        lambda: adams_octahedral_bound(s.c),
        applicable=s.c >= 5,
    )
    add(
        "agol-thurston",
        "upper",
        ("hyperbolic",),
        "Agol-Thurston appendix to Lackenby 2004",
        lambda: agol_thurston_bound(s.t),
    )
    add(
        "dasbach-tsvietkova",
        "upper",
        ("hyperbolic", "reduced diagram (alternating or not)"),
        "Dasbach-Tsvietkova 2015/2019",
        lambda: dasbach_tsvietkova_bound(s),
    )
    add(
        "adams-twist",
        "upper",
        ("hyperbolic", "reduced alternating", "c >= 5", "t >= 3", "not the Borromean rings"),
        "Adams 2017 twist-length bound",
        lambda: adams_twist_bound(
            s,
            reduced_alternating=flags.reduced and flags.alternating,
            is_borromean=not flags.not_borromean,
        ),
    )
    add(
        "large-twist",
        "upper",
        ("hyperbolic", "t > 8"),
        "augmented-link decomposition bound for t > 8",
        lambda: large_twist_bound(s.t),
        applicable=s.t > 8,
    )
    delta = white_census.get(3, 0) if white_census else None
    add(
        "large-twist-refined",
        "upper",
        ("hyperbolic", "t > 8", "white census known"),
        "augmented-link bound refined by the white triangles",
        lambda: large_twist_refined_bound(s.t, delta),
        applicable=s.t > 8 and delta is not None,
    )
    add(
        "white-face",
        "upper",
        ("hyperbolic", "white census known"),
        "white-face-census refinement of the augmented-link decomposition",
        lambda: white_face_bound(s.t, white_census),
        applicable=white_census is not None and s.t >= 2,
    )
    add(
        "fkp-lower",
        "lower",
        ("hyperbolic", "reduced alternating", "t >= 2", "all twist lengths >= 7"),
        "Futer-Kalfagianni-Purcell lower bound",
        lambda: fkp_lower_bound(
            s.t, s.min_length, reduced_alternating=flags.reduced and flags.alternating
        ),
    )
    tb_ok = flags.two_bridge and flags.reduced and flags.alternating and s.t >= 2
    add(
        "two-bridge-lower",
        "lower",
        ("hyperbolic", "two-bridge", "reduced alternating"),
        "Gueritaud-Futer two-bridge bounds",
        lambda: two_bridge_bounds(s.t)[0],
        applicable=tb_ok,
    )
    add(
        "two-bridge-upper",
        "upper",
        ("hyperbolic", "two-bridge", "reduced alternating"),
        "Gueritaud-Futer two-bridge bounds",
        lambda: two_bridge_bounds(s.t)[1],
        applicable=tb_ok,
    )
    if jones_coefficients is not None:
        a2, penult = jones_coefficients
        degenerate = a2 + penult - 1 <= 0
        add(
            "jones-lower",
            "lower",
            ("hyperbolic", "prime alternating non-torus knot"),
            "Dasbach-Lin Jones-coefficient bounds",
            lambda: jones_bounds(a2, penult)[0],
        )
        add(
            "jones-upper",
            "upper",
            ("hyperbolic", "prime alternating non-torus knot"),
            "Dasbach-Lin Jones-coefficient bounds",
            lambda: jones_bounds(a2, penult)[1],
            applicable=not degenerate,
        )

    best_upper = min((r.value for r in rows if r.applicable and r.kind == "upper"), default=None)
    best_lower = max((r.value for r in rows if r.applicable and r.kind == "lower"), default=None)
    marked = []
    for r in rows:
        if r.applicable and r.kind == "upper" and r.value == best_upper:
            marked.append(replace(r, best=True))
        elif r.applicable and r.kind == "lower" and r.value == best_lower:
            marked.append(replace(r, best=True))
        else:
            marked.append(r)
    return marked
