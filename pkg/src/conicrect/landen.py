"""Modulus/amplitude maps, the AGM change of variable, and residual checks.

The ascending map k -> 2 sqrt(k)/(1+k) links one AGM step to a quadratic
modulus transformation of the first-kind integral; the substitution
y = y1 sqrt((1-p1^2 y1^2)/(1-q1^2 y1^2)) realizes the same step directly on
the defining differential.  The ``check_*`` functions evaluate both sides of
each identity independently and report the residual, so a regression is
diagnosable from the report alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .agm import (
    _amplitude_step,
    _ascend_modulus,
    _descend_modulus,
    complete_E,
    complete_K,
    incomplete_F,
)
from .errors import DomainError
from .quadrature import DEFAULT_TOLERANCE, Tolerance, integrate

__all__ = [
    "ModulusPair",
    "LagrangeParams",
    "ResidualReport",
    "modulus_ascend",
    "modulus_descend",
    "amplitude_map",
    "amplitude_inverse",
    "lagrange_substitution",
    "upper_limit",
    "check_gleichung",
    "check_borwein",
    "check_agm_invariance",
]


@dataclass(frozen=True)
class ModulusPair:
    """A modulus and its image under the ascending map."""

    k: float
    k_hat: float


@dataclass(frozen=True)
class LagrangeParams:
    """One AGM step (p, q) -> (p1, q1) = ((p+q)/2, sqrt(pq)).

    Requires 0 < q <= p; the derived means are computed on construction.
    """

    p: float
    q: float
    p1: float = field(init=False)
    q1: float = field(init=False)

    def __post_init__(self) -> None:
        if not 0.0 < self.q <= self.p:
            raise DomainError(
                f"LagrangeParams requires 0 < q <= p, got p={self.p!r}, q={self.q!r}"
            )
        object.__setattr__(self, "p1", 0.5 * (self.p + self.q))
        object.__setattr__(self, "q1", math.sqrt(self.p * self.q))


@dataclass(frozen=True)
class ResidualReport:
    """Both sides of an identity plus their absolute difference."""

    name: str
    inputs: dict[str, float]
    lhs: float
    rhs: float
    residual: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "residual", abs(self.lhs - self.rhs))

    def within(self, tolerance: float) -> bool:
        return self.residual <= tolerance


def modulus_ascend(k: float) -> float:
    """Ascending map k -> 2 sqrt(k)/(1+k); fixed points at 0 and 1."""
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"modulus must lie in [0, 1], got {k!r}")
    return _ascend_modulus(k)


def modulus_descend(k_hat: float) -> float:
    """Inverse of the ascending map: k = (1-k')/(1+k') with k' = sqrt(1-k_hat^2)."""
    if not 0.0 <= k_hat <= 1.0:
        raise DomainError(f"modulus must lie in [0, 1], got {k_hat!r}")
    return _descend_modulus(k_hat)


def modulus_pair(k: float) -> ModulusPair:
    return ModulusPair(k=k, k_hat=modulus_ascend(k))


def amplitude_map(phi_hat: float, k: float) -> float:
    """Amplitude on the smaller-modulus side of one descending step.

    Solves tan(phi) = sin(2 phi_hat)/(k + cos(2 phi_hat)) on the continuous
    increasing branch (equivalently sin(2 phi_hat - phi) = k sin(phi)).  For
    phi_hat in [0, pi/2] the result lies in [0, pi]; it passes pi/2 exactly
    at phi_hat = pi/4 + arcsin(k)/2 and reaches pi in the complete case.
    """
    if not 0.0 <= phi_hat <= 0.5 * math.pi:
        raise DomainError(f"phi_hat must lie in [0, pi/2], got {phi_hat!r}")
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {k!r}")
    return _amplitude_step(phi_hat, k)


def amplitude_inverse(phi: float, k: float) -> float:
    """The phi_hat in [phi/2, (phi + pi/2)/2] with amplitude_map(phi_hat, k) = phi.

    Closed form pi/4 + arcsin(k)/2 in the complete case; elsewhere bracketed
    bisection on sin(2 phi_hat - phi) - k sin(phi), which is strictly
    increasing in phi_hat on the bracket.
    """
    if not 0.0 <= phi <= 0.5 * math.pi:
        raise DomainError(f"phi must lie in [0, pi/2], got {phi!r}")
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {k!r}")
    if phi == 0.0:
        return 0.0
    half_pi = 0.5 * math.pi
    if abs(phi - half_pi) <= 1e-12:
        return 0.25 * math.pi + 0.5 * math.asin(k)
    target = k * math.sin(phi)
    lo = 0.5 * phi
    hi = 0.5 * (phi + half_pi)
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if math.sin(2.0 * mid - phi) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-16 * (1.0 + hi):
            break
    return 0.5 * (lo + hi)


def lagrange_substitution(y1: float, params: LagrangeParams) -> float:
    """The change of variable y = y1 sqrt((1 - p1^2 y1^2)/(1 - q1^2 y1^2)).

    Defined for |y1| < 1/p1; its maximum over [0, 1/p1) is 1/p, attained at
    y1 = sqrt(2/(p (p+q))).
    """
    p1, q1 = params.p1, params.q1
    if abs(y1) * p1 >= 1.0:
        raise DomainError(f"|y1| must be below 1/p1 = {1.0 / p1!r}, got {y1!r}")
    num = (1.0 - p1 * y1) * (1.0 + p1 * y1)
    den = (1.0 - q1 * y1) * (1.0 + q1 * y1)
    return y1 * math.sqrt(num / den)


def upper_limit(x: float, params: LagrangeParams) -> float:
    """Image of the upper integration limit under one AGM step.

    s(x, p, q) = (sqrt(2)/(p+q)) sqrt(1 + p q x^2 - sqrt((1-p^2 x^2)(1-q^2 x^2))),
    evaluated in the rationalized form x sqrt(2) / sqrt(1 + p q x^2 + R) which
    is algebraically identical and stable for small x.
    """
    p, q = params.p, params.q
    if x < 0.0 or x * p > 1.0 + 1e-12:
        raise DomainError(f"x must lie in [0, 1/p] = [0, {1.0 / p!r}], got {x!r}")
    a = max((1.0 - p * x) * (1.0 + p * x), 0.0)
    b = max((1.0 - q * x) * (1.0 + q * x), 0.0)
    r = math.sqrt(a * b)
    return x * math.sqrt(2.0) / math.sqrt(1.0 + p * q * x * x + r)


def check_gleichung(phi: float, k: float) -> ResidualReport:
    """Residual of F(phi, k) = 2/(1+k) F(phi_hat, k_hat) across one AGM step."""
    lhs = incomplete_F(phi, k)
    k_hat = modulus_ascend(k)
    phi_hat = amplitude_inverse(phi, k)
    rhs = 2.0 / (1.0 + k) * incomplete_F(phi_hat, k_hat)
    return ResidualReport("gleichung", {"phi": phi, "k": k}, lhs, rhs)


def check_borwein(k: float) -> ResidualReport:
    """Residual of E(k) = (1+k)/2 E(2 sqrt(k)/(1+k)) + (1-k^2)/2 K(k)."""
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {k!r}")
    lhs = complete_E(k)
    k_hat = modulus_ascend(k)
    rhs = 0.5 * (1.0 + k) * complete_E(k_hat) + 0.5 * (1.0 - k * k) * complete_K(k)
    return ResidualReport("borwein", {"k": k}, lhs, rhs)


def _binomial_root_integrand(p: float, q: float):
    def f(y: float) -> float:
        a = (1.0 - p * y) * (1.0 + p * y)
        b = (1.0 - q * y) * (1.0 + q * y)
        return 1.0 / math.sqrt(a * b)

    return f


def check_agm_invariance(
    x: float, p: float, q: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> ResidualReport:
    """Residual of the integral invariance across one AGM step.

    Both sides of
    int_0^x dy / sqrt((1-p^2 y^2)(1-q^2 y^2))
      = int_0^{s(x,p,q)} dy1 / sqrt((1-p1^2 y1^2)(1-q1^2 y1^2))
    are evaluated by the quadrature oracle; the left side carries an
    endpoint singularity exactly when x = 1/p.
    """
    if not 0.0 < q < p:
        raise DomainError(f"requires 0 < q < p, got p={p!r}, q={q!r}")
    if x < 0.0 or x * p > 1.0 + 1e-12:
        raise DomainError(f"x must lie in [0, 1/p], got {x!r}")
    params = LagrangeParams(p, q)
    singular = "hi" if x * p >= 1.0 - 1e-12 else "none"
    lhs = integrate(_binomial_root_integrand(p, q), 0.0, x, tol, singular)
    s = upper_limit(x, params)
    rhs = integrate(_binomial_root_integrand(params.p1, params.q1), 0.0, s, tol)
    return ResidualReport(
        "agm-invariance", {"x": x, "p": p, "q": q}, lhs.value, rhs.value
    )
