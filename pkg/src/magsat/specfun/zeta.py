# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Hurwitz zeta function and its s-derivative at s = −1.

Both functions use Euler–Maclaurin summation: the first EULER_MACLAURIN_SHIFT
terms of the defining series are summed directly and the tail is replaced by
its integral, a boundary term and BERNOULLI_CORRECTIONS Bernoulli corrections.
The derivative differentiates that expansion term by term in s, which at
s = −1 leaves a closed expression (the Bernoulli corrections carry a factor
(s + 1) that kills all but the derivative of the rising factorial).

The finite-difference oracle is kept here so that the s-derivative can be
checked against an independent algorithm.
"""

import logging
import math

from magsat.common.errors import DomainError, PoleError
from magsat.specfun.gamma import BERNOULLI_EVEN

logger = logging.getLogger(__name__)

# Number of leading terms summed directly before the Euler-Maclaurin tail
EULER_MACLAURIN_SHIFT: int = 20

# Number of Bernoulli corrections in the Euler-Maclaurin tail
BERNOULLI_CORRECTIONS: int = 8

# Initial step of the Richardson table in the finite-difference oracle
ORACLE_INITIAL_STEP: float = 1e-2

# Number of step halvings in the Richardson table
ORACLE_LEVELS: int = 4


def hurwitz_zeta(s: float, q: float) -> float:
    """Hurwitz zeta function ζ(s, q) = Σ_k (q + k)^(−s).

    Args:
        s: Real order, s ≠ 1. Values s < 1 are the analytic continuation.
        q: Positive shift.

    Returns:
        ζ(s, q) with relative error below 1e-10.

    Raises:
        PoleError: If s == 1.
        DomainError: If q ≤ 0.

    Example:
        >>> round(hurwitz_zeta(2.0, 1.0), 7)
        1.6449341
        >>> round(hurwitz_zeta(-1.0, 1.0), 12)
        -0.083333333333
    """
    if s == 1.0:
        raise PoleError("hurwitz_zeta has a pole at s=1")
    if not q > 0:
        raise DomainError(f"hurwitz_zeta requires q > 0, got q={q}")

    a = q + EULER_MACLAURIN_SHIFT
    total = math.fsum((q + k) ** (-s) for k in range(EULER_MACLAURIN_SHIFT))
    total += a ** (1.0 - s) / (s - 1.0) + 0.5 * a ** (-s)

    rising = s
    power = a ** (-s - 1.0)
    for j in range(1, BERNOULLI_CORRECTIONS + 1):
        total += BERNOULLI_EVEN[j - 1] / math.factorial(2 * j) * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= a * a
    return total


def hurwitz_zeta_sderiv_m1(q: float) -> float:
    """Derivative ∂ζ(s, q)/∂s evaluated at s = −1.

    Args:
        q: Positive shift. Small q is fine: the k = 0 term −q ln q → 0.

    Returns:
        ζ′(−1, q) with absolute error below 1e-9.

    Raises:
        DomainError: If q ≤ 0.

    Example:
        >>> round(hurwitz_zeta_sderiv_m1(1.0), 7)
        -0.1654211
    """
    if not q > 0:
        raise DomainError(f"hurwitz_zeta_sderiv_m1 requires q > 0, got q={q}")

    a = q + EULER_MACLAURIN_SHIFT
    ln_a = math.log(a)
    direct = math.fsum(-(q + k) * math.log(q + k) for k in range(EULER_MACLAURIN_SHIFT))
    tail = 0.5 * a * a * ln_a - 0.25 * a * a - 0.5 * a * ln_a + (1.0 + ln_a) / 12.0
    for j in range(2, BERNOULLI_CORRECTIONS + 1):
        tail -= (
            BERNOULLI_EVEN[j - 1]
            * math.factorial(2 * j - 3)
            / math.factorial(2 * j)
            * a ** (2 - 2 * j)
        )
    return direct + tail


def hurwitz_zeta_sderiv_oracle(q: float, s: float = -1.0) -> float:
    """Finite-difference oracle for ∂ζ(s, q)/∂s.

    Central differences of hurwitz_zeta with steps ORACLE_INITIAL_STEP / 2^i
    are combined in a Richardson table. The smallest step stays near 1e-3
    because the direct sum cancels against the integral term and the
    round-off is divided by the step.

    Args:
        q: Positive shift.
        s: Order at which to differentiate, away from 1.

    Returns:
        The extrapolated derivative.

    Raises:
        DomainError: If q ≤ 0.
    """
    if not q > 0:
        raise DomainError(f"hurwitz_zeta_sderiv_oracle requires q > 0, got q={q}")

    table: list[list[float]] = []
    step = ORACLE_INITIAL_STEP
    for level in range(ORACLE_LEVELS):
        row = [(hurwitz_zeta(s + step, q) - hurwitz_zeta(s - step, q)) / (2.0 * step)]
        for k in range(1, level + 1):
            previous = table[level - 1][k - 1]
            row.append(row[k - 1] + (row[k - 1] - previous) / (4.0**k - 1.0))
        table.append(row)
        step /= 2.0

    logger.debug(
        f"Richardson table for zeta'({s}, {q}): last diagonal change "
        f"{abs(table[-1][-1] - table[-2][-2]):.3e}"
    )
    return table[-1][-1]
