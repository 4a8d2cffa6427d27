# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Log-gamma, gamma and digamma for real arguments.

Both ln Γ and ψ shift the argument upward with the functional recurrence
until it reaches ASYMPTOTIC_THRESHOLD and then sum the Stirling (resp.
digamma) asymptotic series with the even Bernoulli numbers. Negative
arguments of ψ and Γ go through the reflection formulas.
"""

import math

from magsat.common.errors import DomainError, PoleError

# Even-index Bernoulli numbers B_2, B_4, ..., B_20
BERNOULLI_EVEN: tuple[float, ...] = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
)

# Arguments below this value are shifted by recurrence before the asymptotic sum
ASYMPTOTIC_THRESHOLD: float = 10.0

# Number of Bernoulli corrections kept in the asymptotic series
ASYMPTOTIC_TERMS: int = 8

_HALF_LN_TWO_PI: float = 0.5 * math.log(2.0 * math.pi)


def _is_non_positive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def ln_gamma(x: float) -> float:
    """Natural logarithm of the gamma function for x > 0.

    Args:
        x: Positive real argument.

    Returns:
        ln Γ(x) with relative error below 1e-12 away from the zeros at 1 and 2.

    Raises:
        DomainError: If x is not strictly positive.

    Example:
        >>> ln_gamma(1.0)
        0.0
        >>> round(ln_gamma(0.5), 7)
        0.5723649
    """
    if not x > 0:
        raise DomainError(f"ln_gamma requires x > 0, got x={x}")
    if x == 1.0 or x == 2.0:
        return 0.0
    if math.isinf(x):
        return math.inf

    product = 1.0
    while x < ASYMPTOTIC_THRESHOLD:
        product *= x
        x += 1.0

    inv = 1.0 / x
    inv_sq = inv * inv
    correction = 0.0
    power = inv
    for k in range(1, ASYMPTOTIC_TERMS + 1):
        correction += BERNOULLI_EVEN[k - 1] / (2 * k * (2 * k - 1)) * power
        power *= inv_sq

    stirling = (x - 0.5) * math.log(x) - x + _HALF_LN_TWO_PI + correction
    return stirling - math.log(product)


def gamma_function(x: float) -> float:
    """Gamma function for real x that is not a non-positive integer.

    Positive arguments exponentiate ln_gamma; negative arguments use
    Γ(x)Γ(1−x) = π/sin(πx).

    Args:
        x: Real argument.

    Returns:
        Γ(x).

    Raises:
        PoleError: If x is 0, −1, −2, ...
    """
    if _is_non_positive_integer(x):
        raise PoleError(f"gamma_function has a pole at x={x}")
    if x > 0:
        return math.exp(ln_gamma(x))
    nearest = round(x)
    fraction = x - nearest
    sin_pi_x = math.sin(math.pi * fraction) * (-1.0 if nearest % 2 else 1.0)
    return math.pi / (sin_pi_x * math.exp(ln_gamma(1.0 - x)))


def digamma(x: float) -> float:
    """Digamma function ψ(x) = d ln Γ(x)/dx for real x.

    Args:
        x: Real argument, not a non-positive integer.

    Returns:
        ψ(x) with relative error below 1e-10 away from its positive root.

    Raises:
        PoleError: If x is 0, −1, −2, ...

    Example:
        >>> round(digamma(1.0), 10)
        -0.5772156649
    """
    if _is_non_positive_integer(x):
        raise PoleError(f"digamma has a pole at x={x}")
    if x < 0:
        # cot(πx) depends only on the distance to the nearest integer
        fraction = x - round(x)
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * fraction)

    shift = 0.0
    while x < ASYMPTOTIC_THRESHOLD:
        shift -= 1.0 / x
        x += 1.0

    inv_sq = 1.0 / (x * x)
    correction = 0.0
    power = inv_sq
    for k in range(1, ASYMPTOTIC_TERMS + 1):
        correction += BERNOULLI_EVEN[k - 1] / (2 * k) * power
        power *= inv_sq

    return shift + math.log(x) - 0.5 / x - correction
