"""Arithmetic-geometric mean and elliptic integral kernels.

The complete integral of the first kind comes from the AGM of (1, k'); the
second kind descends the modulus quadratically, seeds a short hypergeometric
series, and ascends back through the two-ellipse identity.  The incomplete
first kind uses the descending modulus recursion with the matching amplitude
updates.  Every kernel is later cross-checked against the quadrature oracle,
which it never calls for its own result, except for the incomplete second
kind where correctness was preferred over a bespoke recursion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .quadrature import DEFAULT_TOLERANCE, Tolerance, integrate

__all__ = [
    "AgmSequence",
    "LemniscateArcs",
    "DEFAULT_AGM_TOLERANCE",
    "agm",
    "complete_K",
    "complete_E",
    "incomplete_F",
    "incomplete_E",
    "series_KE",
    "series_truncation_bound",
    "lemniscate",
]

DEFAULT_AGM_TOLERANCE = Tolerance(abs_tol=1e-15, rel_tol=1e-15, max_iter=60)

_F_MODULUS_FLOOR = 1e-10  # stop the descending recursion below this modulus
_SERIES_TERM_CAP = 200


@dataclass(frozen=True)
class AgmSequence:
    """Full AGM iteration record.

    ``iterates`` holds every (p_n, q_n) pair starting with the (possibly
    swapped) inputs; ``limit`` is the common limit M(p0, q0).
    """

    p0: float
    q0: float
    iterates: tuple[tuple[float, float], ...]
    limit: float
    iterations: int
    swapped: bool


@dataclass(frozen=True)
class LemniscateArcs:
    quarter_arc: float
    full_arc: float
    gauss_constant: float


def _check_modulus(k: float, *, allow_one: bool = False, name: str = "k") -> None:
    if not 0.0 <= k:
        raise DomainError(f"modulus {name} must satisfy {name} >= 0, got {k!r}")
    if allow_one:
        if k > 1.0:
            raise DomainError(f"modulus {name} must satisfy {name} <= 1, got {k!r}")
    elif k >= 1.0:
        raise DomainError(f"modulus {name} must satisfy {name} < 1, got {k!r}")


def _check_amplitude(phi: float) -> None:
    if not 0.0 <= phi <= 0.5 * math.pi:
        raise DomainError(f"amplitude phi must lie in [0, pi/2], got {phi!r}")


def complement(k: float) -> float:
    """Complementary modulus k' = sqrt(1 - k^2), computed without cancellation."""
    return math.sqrt((1.0 - k) * (1.0 + k))


def _descend_modulus(k: float) -> float:
    # (1 - k')/(1 + k') in the cancellation-free form (k/(1 + k'))^2
    kp = complement(k)
    r = k / (1.0 + kp)
    return r * r


def _ascend_modulus(k: float) -> float:
    return 2.0 * math.sqrt(k) / (1.0 + k)


def _amplitude_step(phi: float, k: float) -> float:
    """New amplitude after one descending modulus step.

    Solves tan(new) = sin(2*phi) / (k + cos(2*phi)) on the branch that keeps
    the map continuous and increasing; the true value stays within pi/2 of
    2*phi, which picks a unique solution of the tangent equation.
    """
    two_phi = 2.0 * phi
    psi = math.atan2(math.sin(two_phi), k + math.cos(two_phi))
    branch = round((two_phi - psi) / math.pi)
    return psi + branch * math.pi


def agm(p0: float, q0: float, tol: Tolerance = DEFAULT_AGM_TOLERANCE) -> AgmSequence:
    """Arithmetic-geometric mean iteration with full history.

    Inputs must be positive; if p0 < q0 they are swapped and the swap is
    recorded.  Terminates when |p_n - q_n| <= max(abs_tol, rel_tol * p_n).
    """
    if p0 <= 0.0 or q0 <= 0.0:
        raise DomainError(f"agm requires positive inputs, got p0={p0!r}, q0={q0!r}")
    swapped = p0 < q0
    if swapped:
        p0, q0 = q0, p0
    p, q = p0, q0
    iterates = [(p, q)]
    prev_diff = math.inf
    while True:
        diff = p - q
        if diff <= tol.target(p) or diff >= prev_diff:
            break
        if len(iterates) - 1 >= tol.max_iter:
            raise ConvergenceError(
                f"agm failed to converge within {tol.max_iter} iterations"
            )
        prev_diff = diff
        p, q = 0.5 * (p + q), math.sqrt(p * q)
        if q > p:  # sub-ulp rounding at convergence can invert the means
            q = p
        iterates.append((p, q))
    return AgmSequence(
        p0=p0,
        q0=q0,
        iterates=tuple(iterates),
        limit=0.5 * (p + q),
        iterations=len(iterates) - 1,
        swapped=swapped,
    )


def complete_K(k: float, tol: Tolerance = DEFAULT_AGM_TOLERANCE) -> float:
    """Complete elliptic integral of the first kind, K(k) = pi / (2 M(1, k')).

    Diverges at k = 1, which is rejected.
    """
    _check_modulus(k)
    if k == 0.0:
        return 0.5 * math.pi
    return 0.5 * math.pi / agm(1.0, complement(k), tol).limit


def complete_E(k: float, tol: Tolerance = DEFAULT_AGM_TOLERANCE) -> float:
    """Complete elliptic integral of the second kind.

    Descends the modulus until it drops below 1e-3, seeds K and E with the
    hypergeometric series, then ascends back through
    E(k_hat) = (E(k) - (1 - k^2)/2 * K(k)) * 2/(1 + k) with k_hat = 2 sqrt(k)/(1 + k).
    """
    _check_modulus(k, allow_one=True)
    if k == 0.0:
        return 0.5 * math.pi
    if k == 1.0:
        return 1.0
    chain = [k]
    while chain[-1] >= 1e-3:
        chain.append(_descend_modulus(chain[-1]))
        if len(chain) > 60:
            raise ConvergenceError("modulus descent failed to reach the series regime")
    k_small = chain[-1]
    e_val = series_KE("E", k_small, 10)
    k_val = series_KE("K", k_small, 10)
    for i in range(len(chain) - 2, -1, -1):
        kd = chain[i + 1]
        e_val = (e_val - 0.5 * (1.0 - kd * kd) * k_val) * 2.0 / (1.0 + kd)
        k_val = (1.0 + kd) * k_val
    return e_val


def incomplete_F(
    phi: float, k: float, tol: Tolerance = DEFAULT_AGM_TOLERANCE
) -> float:
    """Incomplete elliptic integral of the first kind F(phi, k).

    Descending recursion: F(phi, k) = (1 + k1)/2 * F(phi1, k1) with
    k1 = (1 - k')/(1 + k') and phi1 the matching amplitude, iterated until
    the modulus drops below 1e-10 where F(phi, k) ~ phi * (1 + k^2/4).
    """
    _check_amplitude(phi)
    _check_modulus(k)
    factor = 1.0
    cur_phi = phi
    cur_k = k
    steps = 0
    while cur_k > _F_MODULUS_FLOOR:
        cur_k = _descend_modulus(cur_k)
        cur_phi = _amplitude_step(cur_phi, cur_k)
        factor *= 0.5 * (1.0 + cur_k)
        steps += 1
        if steps > 60:
            raise ConvergenceError("modulus descent failed to reach the floor")
    return factor * cur_phi * (1.0 + 0.25 * cur_k * cur_k)


def incomplete_E(
    phi: float, k: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> float:
    """Incomplete elliptic integral of the second kind, by direct quadrature.

    The integrand sqrt(1 - k^2 sin^2) is smooth on [0, pi/2] for k <= 1, so
    the oracle tolerance is passed straight through.
    """
    _check_amplitude(phi)
    _check_modulus(k, allow_one=True)
    if phi == 0.0:
        return 0.0
    if k == 0.0:
        return phi
    m = k * k

    def integrand(theta: float) -> float:
        s = math.sin(theta)
        return math.sqrt(max(1.0 - m * s * s, 0.0))

    result = integrate(integrand, 0.0, phi, tol)
    if not result.converged:
        raise ConvergenceError("incomplete_E quadrature did not converge")
    return result.value


def series_KE(kind: str, k: float, terms: int) -> float:
    """Truncated hypergeometric series for K or E.

    K: (pi/2) * sum c_n k^(2n),  E: (pi/2) * sum c_n k^(2n) / (1 - 2n), with
    c_n = [(2n)! / (2^(2n) (n!)^2)]^2.  ``terms`` is capped at 200.
    """
    if kind not in ("K", "E"):
        raise DomainError(f"kind must be 'K' or 'E', got {kind!r}")
    if terms < 1:
        raise DomainError(f"terms must be at least 1, got {terms!r}")
    _check_modulus(k)
    terms = min(terms, _SERIES_TERM_CAP)
    m = k * k
    coeff = 1.0
    total = 1.0
    for n in range(1, terms):
        ratio = (2.0 * n - 1.0) / (2.0 * n)
        coeff *= ratio * ratio * m
        total += coeff if kind == "K" else coeff / (1.0 - 2.0 * n)
    return 0.5 * math.pi * total


def series_truncation_bound(kind: str, k: float, terms: int) -> float:
    """Bound on the truncation error: |first omitted term| / (1 - k^2)."""
    if kind not in ("K", "E"):
        raise DomainError(f"kind must be 'K' or 'E', got {kind!r}")
    _check_modulus(k)
    terms = min(terms, _SERIES_TERM_CAP)
    m = k * k
    coeff = 1.0
    for n in range(1, terms + 1):
        ratio = (2.0 * n - 1.0) / (2.0 * n)
        coeff *= ratio * ratio * m
    first_omitted = coeff if kind == "K" else coeff / (2.0 * terms - 1.0)
    return 0.5 * math.pi * first_omitted / (1.0 - m)


def lemniscate(radius: float) -> LemniscateArcs:
    """Arc lengths of the lemniscate (x^2+y^2)^2 = R^2 (x^2-y^2).

    quarter_arc = (R/sqrt(2)) K(1/sqrt(2)); full_arc = 2 pi R / M(1, sqrt(2));
    gauss_constant = 1/M(1, sqrt(2)).
    """
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    limit = agm(1.0, math.sqrt(2.0)).limit
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    return LemniscateArcs(
        quarter_arc=radius * inv_sqrt2 * complete_K(inv_sqrt2),
        full_arc=2.0 * math.pi * radius / limit,
        gauss_constant=1.0 / limit,
    )
