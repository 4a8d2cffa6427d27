# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Confluent hypergeometric functions M(a, c; x) and Ψ(a, c; x).

Only the parameter families needed by the Landau-level physics are
supported:

- M with a = −n (Laguerre polynomials of the radial functions), or with a
  half-integer c (the two M values of the Kummer connection formula).
- Ψ with a = 1/2 and c = 1/2 − k, k = 0, 1, 2, ... (the effective potentials).

Ψ(1/2, 1/2 − k; x) is evaluated on three branches:

- x ≤ KUMMER_CONNECTION_LIMIT: Kummer connection formula from two M series.
- up to the asymptotic switch: closed form Ψ(1/2, 1/2; x) = √π erfcx(√x)
  and Ψ(1/2, 3/2; x) = x^(−1/2), carried down in c by the contiguous relation.
- beyond: the divergent asymptotic series with optimal truncation.

The connection formula is limited to small x because its two terms grow like
e^x while Ψ decays like x^(−1/2). The recurrence loses a factor of about x per
step in c, so its range is widened with k before handing over to the series.
"""

import logging
import math
import warnings

from scipy import integrate, special

from magsat.common.errors import ConvergenceError, DomainError
from magsat.specfun.accuracy import FunctionAccuracy
from magsat.specfun.gamma import gamma_function

logger = logging.getLogger(__name__)

# Hard cap on power-series terms for M(a, c; x)
MAX_SERIES_TERMS: int = 10_000

# Relative size at which a series term is considered negligible
SERIES_EPSILON: float = 1e-17

# Largest x evaluated through the Kummer connection formula
KUMMER_CONNECTION_LIMIT: float = 2.0

# Asymptotic-series switch point for c = 1/2
ASYMPTOTIC_SWITCH_BASE: float = 30.0

# Growth of the asymptotic switch point per unit of k = 1/2 - c
ASYMPTOTIC_SWITCH_STEP: float = 10.0

# Smallest-term level below which the truncated asymptotic series is accepted
ASYMPTOTIC_ACCEPT: float = 1e-12

# Oracle results whose quadrature error estimate exceeds this are rejected
ORACLE_ACCEPT_REL: float = 1e-8

# Quadrature abscissae beyond this contribute nothing and would overflow s^(1/a)
_SIGMA_CUTOFF: float = 1e100


def _is_integer(value: float) -> bool:
    return value == math.floor(value)


def _is_half_integer(value: float) -> bool:
    return _is_integer(2.0 * value) and not _is_integer(value)


def kummer_m(a: float, c: float, x: float) -> float:
    """Kummer confluent hypergeometric function M(a, c; x).

    Summed as the power series Σ (a)_k/(c)_k x^k/k!. When a = −n the series
    terminates and the result is an exact polynomial evaluation.

    Args:
        a: Non-positive integer, or any real when c is a half-integer.
        c: Not a non-positive integer.
        x: Non-negative argument.

    Returns:
        M(a, c; x).

    Raises:
        DomainError: If c is a non-positive integer, the (a, c) family is not
            supported, or x < 0.
        ConvergenceError: If the series does not settle within
            MAX_SERIES_TERMS terms.

    Example:
        >>> kummer_m(0.0, 2.0, 5.0)
        1.0
        >>> kummer_m(-1.0, 2.0, 3.0)
        -0.5
    """
    if c <= 0 and _is_integer(c):
        raise DomainError(f"kummer_m is undefined for non-positive integer c={c}")
    polynomial = a <= 0 and _is_integer(a)
    if not (polynomial or _is_half_integer(c)):
        raise DomainError(
            f"kummer_m supports a = -n or half-integer c only, got a={a}, c={c}"
        )
    if x < 0:
        raise DomainError(f"kummer_m requires x >= 0, got x={x}")

    term = 1.0
    total = 1.0
    # past this index every ratio is positive and the terms eventually shrink
    settled_after = max(abs(a), abs(c), x)
    for k in range(MAX_SERIES_TERMS):
        term *= (a + k) / (c + k) * x / (k + 1)
        total += term
        if term == 0.0:
            return total
        if k > settled_after and abs(term) <= SERIES_EPSILON * abs(total):
            return total

    raise ConvergenceError(
        f"kummer_m({a}, {c}, {x}) did not converge in {MAX_SERIES_TERMS} terms",
        achieved_error=abs(term / total) if total else None,
    )


def _tricomi_order(a: float, c: float, x: float) -> int:
    """Validate the supported Ψ family and return k = 1/2 − c."""
    if a != 0.5:
        raise DomainError(f"tricomi_u supports a = 1/2 only, got a={a}")
    if _is_integer(c):
        raise DomainError(
            f"tricomi_u logarithmic case (integer c={c}) is not implemented"
        )
    order = 0.5 - c
    if not (_is_integer(order) and order >= 0):
        raise DomainError(f"tricomi_u requires c = 1/2 - k with k >= 0, got c={c}")
    if not x > 0:
        raise DomainError(f"tricomi_u requires x > 0, got x={x}")
    return int(order)


def asymptotic_switch(order: int) -> float:
    """Return the x above which Ψ(1/2, 1/2 − order; x) uses the asymptotic series.

    Args:
        order: k = 1/2 − c.

    Returns:
        The switch point ASYMPTOTIC_SWITCH_BASE + ASYMPTOTIC_SWITCH_STEP·k.
    """
    return ASYMPTOTIC_SWITCH_BASE + ASYMPTOTIC_SWITCH_STEP * order


def tricomi_u(a: float, c: float, x: float) -> float:
    """Tricomi confluent hypergeometric function Ψ(a, c; x).

    Args:
        a: Must be 1/2.
        c: Half-integer 1/2 − k with k = 0, 1, 2, ...
        x: Positive argument.

    Returns:
        Ψ(a, c; x) > 0 with relative error below 1e-9 for x ∈ (0, 1e6].

    Raises:
        DomainError: If c is an integer, outside the supported family,
            or x ≤ 0.

    Example:
        >>> round(tricomi_u(0.5, 0.5, 1e-12), 5)
        1.77245
    """
    order = _tricomi_order(a, c, x)
    if x <= KUMMER_CONNECTION_LIMIT:
        return tricomi_u_kummer(a, c, x)
    if x <= asymptotic_switch(order):
        return tricomi_u_recurrence(order, x)

    value, smallest = _asymptotic_series(a, c, x)
    if smallest > ASYMPTOTIC_ACCEPT:
        logger.debug(
            f"Asymptotic series for Psi(1/2, {c}; {x}) stalled at {smallest:.2e}; "
            f"using the recurrence"
        )
        return tricomi_u_recurrence(order, x)
    return value


def tricomi_u_kummer(a: float, c: float, x: float) -> float:
    """Ψ(a, c; x) reconstructed from two Kummer M values.

    Uses Ψ = Γ(1−c)/Γ(a−c+1)·M(a, c; x)
    + Γ(c−1)/Γ(a)·x^(1−c)·M(a−c+1, 2−c; x), valid for non-integer c.
    Accurate only while e^x stays moderate.

    Args:
        a: Positive parameter.
        c: Non-integer parameter (half-integer within this library).
        x: Positive argument.

    Returns:
        Ψ(a, c; x).

    Raises:
        DomainError: If c is an integer or x ≤ 0.
    """
    if _is_integer(c):
        raise DomainError(f"Kummer connection needs non-integer c, got c={c}")
    if not x > 0:
        raise DomainError(f"Kummer connection requires x > 0, got x={x}")
    first = gamma_function(1.0 - c) / gamma_function(a - c + 1.0) * kummer_m(a, c, x)
    second = (
        gamma_function(c - 1.0)
        / gamma_function(a)
        * x ** (1.0 - c)
        * kummer_m(a - c + 1.0, 2.0 - c, x)
    )
    return first + second


def tricomi_u_recurrence(order: int, x: float) -> float:
    """Ψ(1/2, 1/2 − order; x) by the contiguous relation in c.

    Starts from Ψ(1/2, 3/2; x) = x^(−1/2) and Ψ(1/2, 1/2; x) = √π erfcx(√x) and
    applies (c − a − 1)Ψ(a, c − 1) = (c − 1 + x)Ψ(a, c) − xΨ(a, c + 1).

    Args:
        order: k = 1/2 − c, non-negative.
        x: Positive argument.

    Returns:
        Ψ(1/2, 1/2 − order; x).

    Raises:
        DomainError: If order < 0 or x ≤ 0.
    """
    if order < 0 or not x > 0:
        raise DomainError(
            f"tricomi_u_recurrence requires order >= 0 and x > 0, "
            f"got order={order}, x={x}"
        )
    root_x = math.sqrt(x)
    upper = 1.0 / root_x
    current = math.sqrt(math.pi) * float(special.erfcx(root_x))
    c = 0.5
    for _ in range(order):
        lower = ((c - 1.0 + x) * current - x * upper) / (c - 1.5)
        upper, current = current, lower
        c -= 1.0
    return current


def _asymptotic_series(a: float, c: float, x: float) -> tuple[float, float]:
    """Sum x^(−a) Σ (a)_n (a−c+1)_n / n! (−1/x)^n up to its smallest term.

    Returns:
        The truncated sum and the size of the last kept term relative to it.
    """
    term = 1.0
    total = 1.0
    for n in range(MAX_SERIES_TERMS):
        candidate = term * (a + n) * (a - c + 1.0 + n) / (n + 1) * (-1.0 / x)
        if abs(candidate) >= abs(term):
            break
        term = candidate
        total += term
        if abs(term) <= SERIES_EPSILON * abs(total):
            break
    return x ** (-a) * total, abs(term / total)


def tricomi_u_asymptotic(a: float, c: float, x: float) -> float:
    """Ψ(a, c; x) from its large-x asymptotic series, optimally truncated.

    Args:
        a: Positive parameter.
        c: Real parameter.
        x: Positive argument, large compared with a and |c|.

    Returns:
        The truncated asymptotic value.

    Raises:
        DomainError: If x ≤ 0.
    """
    if not x > 0:
        raise DomainError(f"tricomi_u_asymptotic requires x > 0, got x={x}")
    value, _ = _asymptotic_series(a, c, x)
    return value


def tricomi_u_oracle(
    a: float, c: float, x: float, accuracy: FunctionAccuracy | None = None
) -> float:
    """Independent Ψ(a, c; x) from the Laplace integral representation.

    The integral Γ(a)⁻¹ ∫₀^∞ e^(−xt) t^(a−1) (1+t)^(c−a−1) dt is taken
    by adaptive Gauss–Kronrod quadrature after the substitution t = s^(1/a),
    which removes the endpoint singularity. For x ≥ 1 the variable is also
    scaled by x so that the exponential decays on a unit length.

    Args:
        a: Positive parameter.
        c: Real parameter.
        x: Positive argument.
        accuracy: Quadrature tolerances; defaults to FunctionAccuracy().

    Returns:
        Ψ(a, c; x).

    Raises:
        DomainError: If a ≤ 0 or x ≤ 0.
        ConvergenceError: If the quadrature reports trouble or its error
            estimate exceeds ORACLE_ACCEPT_REL relative; the estimate is
            attached as achieved_error.
    """
    if not (a > 0 and x > 0):
        raise DomainError(
            f"tricomi_u_oracle requires a > 0 and x > 0, got a={a}, x={x}"
        )
    accuracy = accuracy or FunctionAccuracy()
    exponent = c - a - 1.0
    inv_a = 1.0 / a
    norm = 1.0 / gamma_function(a + 1.0)

    if x >= 1.0:
        prefactor = norm * x ** (-a)

        def integrand(sigma: float) -> float:
            if sigma > _SIGMA_CUTOFF:
                return 0.0
            t = sigma**inv_a
            return math.exp(-t) * (1.0 + t / x) ** exponent

        breakpoint_s = 1.0
    else:
        prefactor = norm

        def integrand(sigma: float) -> float:
            if sigma > _SIGMA_CUTOFF:
                return 0.0
            t = sigma**inv_a
            return math.exp(-x * t) * (1.0 + t) ** exponent

        breakpoint_s = max(1.0, x ** (-a))

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        head, head_err = integrate.quad(
            integrand,
            0.0,
            breakpoint_s,
            epsabs=accuracy.abs_tol,
            epsrel=accuracy.rel_tol,
            limit=500,
        )
        tail, tail_err = integrate.quad(
            integrand,
            breakpoint_s,
            math.inf,
            epsabs=accuracy.abs_tol,
            epsrel=accuracy.rel_tol,
            limit=500,
        )

    trouble = [
        w for w in caught if issubclass(w.category, integrate.IntegrationWarning)
    ]
    value = prefactor * (head + tail)
    error = prefactor * (head_err + tail_err)
    if trouble or error > ORACLE_ACCEPT_REL * abs(value) + accuracy.abs_tol:
        raise ConvergenceError(
            f"tricomi_u_oracle({a}, {c}, {x}) quadrature did not converge: "
            f"error estimate {error:.3e} for value {value:.6e}",
            achieved_error=error,
        )
    return value
