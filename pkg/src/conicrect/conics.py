"""Hyperbola and ellipse geometry: pedal coordinates, arcs, and excesses.

A hyperbola x^2/a^2 - y^2/b^2 = 1 is rectified through two auxiliary
ellipses: writing a = m - n, b = 2 sqrt(mn), the outer ellipse has semiaxes
(m+n, 2 sqrt(mn)) and the inner one (m, n).  The tangent segment cut on the
inner ellipse parameterizes the hyperbola arc, the finite excess (tangent
length minus arc) decomposes into named elliptic pieces, and its limit as
the point recedes equals twice the inner quadrant minus the outer quadrant.
Each closed form here is validated against the quadrature oracle in the
test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .agm import complete_E, complete_K, incomplete_E
from .errors import DomainError
from .landen import ResidualReport
from .quadrature import DEFAULT_TOLERANCE, Tolerance, integrate

__all__ = [
    "Hyperbola",
    "Ellipse",
    "LandenPair",
    "PedalPoint",
    "ExcessBreakdown",
    "semiaxes_to_pair",
    "pair_to_semiaxes",
    "hyperbola_radius_from_pedal",
    "hyperbola_point_from_pedal",
    "hyperbola_pedal_point",
    "hyperbola_arc",
    "ellipse_tangent_length",
    "abscissae_from_tangent",
    "ellipse_arc",
    "ellipse_quadrant",
    "excess_finite",
    "excess_infinity_closed",
    "excess_infinity_series",
    "excess_series_remainder_bound",
    "excess_infinity_landen",
    "landen_theorem_check",
    "fagnano_check",
    "simpson_arc",
    "maclaurin_excess_integrand",
]

PEDAL_GUARD = 1e-8  # p / a below this is accepted but flagged as ill-conditioned
TANGENT_GUARD = 1e-8  # (m - n - t)/(m - n) below this likewise


@dataclass(frozen=True)
class Hyperbola:
    """Hyperbola x^2/a^2 - y^2/b^2 = 1 with a the transverse semiaxis."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if self.a <= 0.0 or self.b <= 0.0:
            raise DomainError(
                f"hyperbola semiaxes must be positive, got a={self.a!r}, b={self.b!r}"
            )

    @property
    def focal_distance(self) -> float:
        return math.hypot(self.a, self.b)

    @property
    def eccentricity(self) -> float:
        return self.focal_distance / self.a

    @property
    def modulus(self) -> float:
        """Elliptic modulus a / sqrt(a^2 + b^2) of the excess integrals."""
        return self.a / self.focal_distance

    @property
    def axis_defect(self) -> float:
        """Auxiliary length (a^2 - b^2)/(2a); the pedal radius satisfies
        r^2 = 2 a axis_defect + a X with X = a b^2 / p^2."""
        return (self.a * self.a - self.b * self.b) / (2.0 * self.a)


@dataclass(frozen=True)
class Ellipse:
    """Ellipse x^2/a^2 + y^2/b^2 = 1."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if self.a <= 0.0 or self.b <= 0.0:
            raise DomainError(
                f"ellipse semiaxes must be positive, got a={self.a!r}, b={self.b!r}"
            )

    @property
    def g(self) -> float:
        """Squared eccentricity (a^2 - b^2)/a^2 when a >= b."""
        return (self.a - self.b) * (self.a + self.b) / (self.a * self.a)

    @property
    def eccentricity(self) -> float:
        if self.a < self.b:
            raise DomainError("eccentricity defined for a >= b; swap the axes")
        return math.sqrt(self.g)


@dataclass(frozen=True)
class LandenPair:
    """Coefficients m > n > 0 linking one hyperbola to its two ellipses."""

    m: float
    n: float

    def __post_init__(self) -> None:
        if not 0.0 < self.n < self.m:
            raise DomainError(
                f"LandenPair requires m > n > 0, got m={self.m!r}, n={self.n!r}"
            )

    @property
    def hyperbola(self) -> Hyperbola:
        return Hyperbola(self.m - self.n, 2.0 * math.sqrt(self.m * self.n))

    @property
    def ellipse_outer(self) -> Ellipse:
        return Ellipse(self.m + self.n, 2.0 * math.sqrt(self.m * self.n))

    @property
    def ellipse_inner(self) -> Ellipse:
        return Ellipse(self.m, self.n)


@dataclass(frozen=True)
class PedalPoint:
    """Pedal data of a curve point: center distance r, tangent-foot distance
    p, and tangent segment t with t^2 + p^2 = r^2."""

    r: float
    p: float
    t: float


@dataclass(frozen=True)
class ExcessBreakdown:
    """The named pieces of the finite-excess decomposition."""

    hyp_arc: float
    t_hyp: float
    t: float
    eta1: float
    eta2: float
    s1: float
    s2: float
    limit_L: float


def semiaxes_to_pair(a: float, b: float) -> LandenPair:
    """Invert a = m - n, b = 2 sqrt(mn):  m = (sqrt(a^2+b^2) + a)/2, n = b^2/(4m)."""
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"semiaxes must be positive, got a={a!r}, b={b!r}")
    m = 0.5 * (math.hypot(a, b) + a)
    # n = (sqrt(a^2+b^2) - a)/2 in the cancellation-free form b^2/(4m)
    n = b * b / (4.0 * m)
    return LandenPair(m, n)


def pair_to_semiaxes(pair: LandenPair) -> tuple[float, float]:
    h = pair.hyperbola
    return h.a, h.b


def _check_pedal(H: Hyperbola, p: float) -> None:
    if not 0.0 < p <= H.a:
        raise DomainError(f"pedal distance must lie in (0, a] = (0, {H.a!r}], got {p!r}")


def pedal_in_guard_band(H: Hyperbola, p: float) -> bool:
    return p < PEDAL_GUARD * H.a


def tangent_in_guard_band(pair: LandenPair, t: float) -> bool:
    span = pair.m - pair.n
    return span - t < TANGENT_GUARD * span


def hyperbola_radius_from_pedal(H: Hyperbola, p: float) -> float:
    """Center distance of the branch point whose tangent-foot distance is p:
    r^2 = a^2 - b^2 + a^2 b^2 / p^2."""
    _check_pedal(H, p)
    a, b = H.a, H.b
    ab_over_p = a * b / p
    return math.sqrt(a * a - b * b + ab_over_p * ab_over_p)


def _branch_parameter(H: Hyperbola, p: float) -> float:
    """sinh^2 of the branch parameter at pedal distance p."""
    a, b = H.a, H.b
    c2 = a * a + b * b
    return b * b * (a - p) * (a + p) / (p * p * c2)


def hyperbola_point_from_pedal(H: Hyperbola, p: float) -> tuple[float, float]:
    """Upper-right branch point whose tangent line has foot distance p.

    The pedal equation 1/p^2 = x^2/a^4 + y^2/b^4 is monotone along the
    branch and solves in closed form: with s = b^2 (a^2 - p^2)/(p^2 (a^2+b^2)),
    the point is (a sqrt(1+s), b sqrt(s)).
    """
    _check_pedal(H, p)
    s = _branch_parameter(H, p)
    return H.a * math.sqrt(1.0 + s), H.b * math.sqrt(s)


def hyperbola_tangent_length(H: Hyperbola, p: float) -> float:
    """Tangent segment sqrt(r^2 - p^2) = sqrt((a^2-p^2)(b^2+p^2)) / p."""
    _check_pedal(H, p)
    a, b = H.a, H.b
    return math.sqrt((a - p) * (a + p) * (b * b + p * p)) / p


def hyperbola_pedal_point(H: Hyperbola, p: float) -> PedalPoint:
    return PedalPoint(
        r=hyperbola_radius_from_pedal(H, p),
        p=p,
        t=hyperbola_tangent_length(H, p),
    )


def _rotated_arc_integrand(H: Hyperbola):
    # In the frame where the asymptote is vertical the branch is
    # y = ((a^2-b^2) x^2 + a^2 b^2)/(2abx); its speed has this closed form.
    a, b = H.a, H.b
    c2 = a * a + b * b
    a2b2 = a * a * b * b
    mid = 2.0 * a2b2 * (a * a - b * b)
    const = a2b2 * a2b2
    two_ab = 2.0 * a * b

    def f(x: float) -> float:
        w = x * x
        return math.sqrt((c2 * c2 * w - mid) * w + const) / (two_ab * w)

    return f


def hyperbola_arc(
    H: Hyperbola, p_lo: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> float:
    """Arc length from the vertex to the branch point with pedal distance p_lo.

    Integrates in the rotated frame (asymptote vertical), where the abscissa
    of the pedal-p point is (ab/sqrt(a^2+b^2)) * (sqrt(1+s) - sqrt(s)) and the
    vertex sits at ab/sqrt(a^2+b^2); the integrand is smooth on that range.
    """
    _check_pedal(H, p_lo)
    if p_lo == H.a:
        return 0.0
    s = _branch_parameter(H, p_lo)
    exp_minus_u = 1.0 / (math.sqrt(1.0 + s) + math.sqrt(s))
    x_vertex = H.a * H.b / H.focal_distance
    x_point = x_vertex * exp_minus_u
    result = integrate(_rotated_arc_integrand(H), x_point, x_vertex, tol)
    return result.value


def ellipse_tangent_length(E: Ellipse, x: float) -> float:
    """Pedal tangent segment of the ellipse at abscissa x.

    t = g x sqrt((a^2 - x^2)/(a^2 - g x^2)); zero at both x = 0 and x = a,
    with global maximum a - b at x^2 = a^3/(a + b).
    """
    if E.a < E.b:
        raise DomainError("tangent length defined for a >= b; swap the axes")
    if x < 0.0 or x > E.a * (1.0 + 1e-12):
        raise DomainError(f"abscissa must lie in [0, a] = [0, {E.a!r}], got {x!r}")
    g = E.g
    a2 = E.a * E.a
    num = max(a2 - x * x, 0.0)
    return g * x * math.sqrt(num / (a2 - g * x * x))


def abscissae_from_tangent(pair: LandenPair, t: float) -> tuple[float, float]:
    """The two inner-ellipse abscissae sharing pedal tangent length t.

    Roots of 2 g x^2 = t^2 + g m^2 -/+ sqrt(((m-n)^2 - t^2)((m+n)^2 - t^2)),
    returned as (x_minus, x_plus); they coincide at t = m - n.  The smaller
    root is evaluated in rationalized form to stay accurate near t = 0.
    """
    m, n = pair.m, pair.n
    if t < 0.0 or t > (m - n) * (1.0 + 1e-12):
        raise DomainError(
            f"tangent length must lie in [0, m-n] = [0, {m - n!r}], got {t!r}"
        )
    g = pair.ellipse_inner.g
    gm2 = g * m * m
    rad = max((m - n - t) * (m - n + t) * (m + n - t) * (m + n + t), 0.0)
    root = math.sqrt(rad)
    s = t * t + gm2 + root
    # (t^2 + gm^2 - root)/(2g) rationalizes to 2 m^2 t^2 / (g s)
    x2_minus = 2.0 * m * m * t * t / (g * s)
    x2_plus = 0.5 * s / g
    return math.sqrt(x2_minus), math.sqrt(min(x2_plus, m * m))


def _ellipse_arc_integrand(E: Ellipse):
    g = E.g
    a2 = E.a * E.a

    def f(x: float) -> float:
        return math.sqrt((a2 - g * x * x) / (a2 - x * x))

    return f


def ellipse_arc(E: Ellipse, x0: float, x1: float) -> float:
    """Arc of the ellipse between abscissae x0 <= x1, measured along x.

    Closed form a * (E(arcsin(x1/a), e) - E(arcsin(x0/a), e)) with e the
    eccentricity; requires a >= b.
    """
    if E.a < E.b:
        raise DomainError("ellipse_arc expects the major semiaxis first")
    if not 0.0 <= x0 <= x1 <= E.a * (1.0 + 1e-12):
        raise DomainError(
            f"need 0 <= x0 <= x1 <= a = {E.a!r}, got x0={x0!r}, x1={x1!r}"
        )
    if x0 == x1:
        return 0.0
    ecc = E.eccentricity
    phi0 = math.asin(min(x0 / E.a, 1.0))
    phi1 = math.asin(min(x1 / E.a, 1.0))
    return E.a * (incomplete_E(phi1, ecc) - incomplete_E(phi0, ecc))


def ellipse_quadrant(E: Ellipse) -> float:
    """Quarter-perimeter a E(e) of an ellipse with a >= b."""
    return E.a * complete_E(E.eccentricity)


def excess_finite(H: Hyperbola, p: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Tangent segment minus arc from the vertex, at pedal distance p.

    Strictly increasing as p decreases; tends to the closed-form limit as
    p -> 0.
    """
    return hyperbola_tangent_length(H, p) - hyperbola_arc(H, p, tol)


def excess_infinity_closed(H: Hyperbola) -> float:
    """Limit excess sqrt(a^2+b^2) E(k) - (b^2/sqrt(a^2+b^2)) K(k),
    k = a/sqrt(a^2+b^2)."""
    c = H.focal_distance
    k = H.a / c
    return c * complete_E(k) - H.b * H.b / c * complete_K(k)


_SERIES_COEFFS = (0.5, -3.0 / 16.0, 15.0 / 128.0, -175.0 / 2048.0)


def excess_infinity_series(H: Hyperbola, terms: int) -> float:
    """Flat-hyperbola expansion of the limit excess.

    (pi a^2 / 2b) (1/2 - 3(a/b)^2/16 + 15(a/b)^4/128 - ...), asymptotic in
    a/b; at most three terms are available.
    """
    if terms not in (1, 2, 3):
        raise DomainError(f"terms must be 1, 2, or 3, got {terms!r}")
    ratio = (H.a / H.b) ** 2
    total = 0.0
    power = 1.0
    for j in range(terms):
        total += _SERIES_COEFFS[j] * power
        power *= ratio
    return 0.5 * math.pi * H.a * H.a / H.b * total


def excess_series_remainder_bound(H: Hyperbola, terms: int) -> float:
    """Magnitude of the first omitted series term; bounds the truncation
    error while the terms still decrease (a alternating series)."""
    if terms not in (1, 2, 3):
        raise DomainError(f"terms must be 1, 2, or 3, got {terms!r}")
    ratio = (H.a / H.b) ** 2
    return 0.5 * math.pi * H.a * H.a / H.b * abs(_SERIES_COEFFS[terms]) * ratio**terms


def excess_infinity_landen(pair: LandenPair) -> float:
    """Limit excess as quadrant combination 2 S2 - S1.

    S2 = m E(sqrt(m^2-n^2)/m) is the inner quadrant, S1 = (m+n) E((m-n)/(m+n))
    the outer one; equals excess_infinity_closed on the derived hyperbola.
    """
    m, n = pair.m, pair.n
    s2 = m * complete_E(math.sqrt((m - n) * (m + n)) / m)
    s1 = (m + n) * complete_E((m - n) / (m + n))
    return 2.0 * s2 - s1


def _excess_t_integrand(pair: LandenPair):
    m, n = pair.m, pair.n

    def f(tau: float) -> float:
        return math.sqrt(((m - n - tau) * (m - n + tau)) / ((m + n - tau) * (m + n + tau)))

    return f


def _eta1_integrand(pair: LandenPair):
    m, n = pair.m, pair.n

    def f(tau: float) -> float:
        return math.sqrt(((m + n - tau) * (m + n + tau)) / ((m - n - tau) * (m - n + tau)))

    return f


def landen_theorem_check(
    pair: LandenPair, t: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> tuple[ExcessBreakdown, ResidualReport]:
    """Verify Hyp = t_Hyp + 2t + eta1 - 4 eta2 with all arcs from the oracle.

    The hyperbola point is fixed by p = sqrt((m-n)^2 - t^2); eta1 is the
    outer-ellipse arc in the tangent variable, eta2 the inner-ellipse arc up
    to the smaller abscissa sharing tangent length t.
    """
    m, n = pair.m, pair.n
    if not 0.0 < t < m - n:
        raise DomainError(f"t must lie in (0, m-n) = (0, {m - n!r}), got {t!r}")
    H = pair.hyperbola
    p = math.sqrt((m - n - t) * (m - n + t))
    t_hyp = hyperbola_tangent_length(H, p)
    hyp_arc = hyperbola_arc(H, p, tol)
    eta1 = integrate(_eta1_integrand(pair), 0.0, t, tol).value
    x_minus, _ = abscissae_from_tangent(pair, t)
    eta2 = integrate(
        _ellipse_arc_integrand(pair.ellipse_inner), 0.0, x_minus, tol
    ).value
    s1 = ellipse_quadrant(pair.ellipse_outer)
    s2 = ellipse_quadrant(pair.ellipse_inner)
    breakdown = ExcessBreakdown(
        hyp_arc=hyp_arc,
        t_hyp=t_hyp,
        t=t,
        eta1=eta1,
        eta2=eta2,
        s1=s1,
        s2=s2,
        limit_L=2.0 * s2 - s1,
    )
    report = ResidualReport(
        "landen-theorem",
        {"m": m, "n": n, "t": t},
        hyp_arc,
        t_hyp + 2.0 * t + eta1 - 4.0 * eta2,
    )
    return breakdown, report


def _ellipse_arc_theta_integrand(E: Ellipse):
    # same arc differential as _ellipse_arc_integrand under x = a sin(theta);
    # smooth at the vertex, where the x form cannot recover a - x accurately
    g = E.g
    a = E.a

    def f(theta: float) -> float:
        s = math.sin(theta)
        return a * math.sqrt(1.0 - g * s * s)

    return f


def fagnano_check(
    pair: LandenPair, t: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> ResidualReport:
    """Equal-tangent arc pair on the inner ellipse.

    With x- < x+ the two abscissae of tangent length t, the arc from the
    co-vertex to x- equals t plus the arc from x+ to the major vertex; at
    t -> m - n the points coincide at the maximal-tangent point.  Both arcs
    come from the oracle on the angle form of the arc differential.
    """
    m, n = pair.m, pair.n
    if not 0.0 < t < m - n:
        raise DomainError(f"t must lie in (0, m-n) = (0, {m - n!r}), got {t!r}")
    x_minus, x_plus = abscissae_from_tangent(pair, t)
    ds = _ellipse_arc_theta_integrand(pair.ellipse_inner)
    theta_minus = math.asin(min(x_minus / m, 1.0))
    theta_plus = math.asin(min(x_plus / m, 1.0))
    lhs = integrate(ds, 0.0, theta_minus, tol).value
    rhs = t + integrate(ds, theta_plus, 0.5 * math.pi, tol).value
    return ResidualReport("fagnano", {"m": m, "n": n, "t": t}, lhs, rhs)


def simpson_arc(
    H: Hyperbola, u0: float, u1: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> float:
    """Arc length in the reciprocal-abscissa variable u = a/x.

    ds = (a/d) sqrt(1 - d^2 u^2) / (u^2 sqrt(1 - u^2)) du with
    d^2 = a^2/(a^2+b^2); u = 1 is the vertex, u -> 0 recedes along the
    branch with a non-integrable pole (the tangent-length part), so u0 = 0
    is rejected.
    """
    if not 0.0 < u0 <= u1 <= 1.0:
        raise DomainError(f"need 0 < u0 <= u1 <= 1, got u0={u0!r}, u1={u1!r}")
    if u0 == u1:
        return 0.0
    c = H.focal_distance
    delta2 = (H.a / c) ** 2

    def f(u: float) -> float:
        u2 = u * u
        return c * math.sqrt(1.0 - delta2 * u2) / (u2 * math.sqrt((1.0 - u) * (1.0 + u)))

    singular = "hi" if u1 >= 1.0 - 1e-12 else "none"
    return integrate(f, u0, u1, tol, singular).value


def maclaurin_excess_integrand(H: Hyperbola, p: float) -> float:
    """Derivative of the finite excess with respect to the pedal distance:
    -p^2 / sqrt((a^2 - p^2)(b^2 + p^2)); reduces to -p^2/sqrt(a^4 - p^4) on
    the equilateral hyperbola."""
    a, b = H.a, H.b
    if not 0.0 < p < a:
        raise DomainError(f"pedal distance must lie in (0, a) = (0, {a!r}), got {p!r}")
    return -p * p / math.sqrt((a - p) * (a + p) * (b * b + p * p))
