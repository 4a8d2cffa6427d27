# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Real-valued special-function kernel.

Functions:
    ln_gamma: Natural log of the gamma function for x > 0.
    gamma_function: Gamma function for real arguments off the poles.
    digamma: Digamma function with reflection for negative arguments.
    kummer_m: Kummer M(a, c; x) for the supported parameter families.
    tricomi_u: Tricomi Ψ(1/2, 1/2 − k; x).
    tricomi_u_kummer: Ψ from the Kummer connection formula.
    tricomi_u_recurrence: Ψ from the contiguous relation seeded by erfcx.
    tricomi_u_asymptotic: Ψ from the optimally truncated asymptotic series.
    tricomi_u_oracle: Ψ from the Laplace integral by adaptive quadrature.
    hurwitz_zeta: Hurwitz zeta ζ(s, q) by Euler–Maclaurin summation.
    hurwitz_zeta_sderiv_m1: ∂ζ(s, q)/∂s at s = −1.
    hurwitz_zeta_sderiv_oracle: Finite-difference Richardson oracle for ∂ζ/∂s.

Classes:
    FunctionAccuracy: Tolerance bundle for the oracle forms.

Example:
    >>> from magsat.specfun import digamma, tricomi_u
    >>> round(digamma(0.5), 7)
    -1.96351
    >>> tricomi_u(0.5, -0.5, 10.0) > 0
    True
"""

from magsat.specfun.accuracy import FunctionAccuracy
from magsat.specfun.gamma import digamma, gamma_function, ln_gamma
from magsat.specfun.hypergeometric import (
    kummer_m,
    tricomi_u,
    tricomi_u_asymptotic,
    tricomi_u_kummer,
    tricomi_u_oracle,
    tricomi_u_recurrence,
)
from magsat.specfun.zeta import (
    hurwitz_zeta,
    hurwitz_zeta_sderiv_m1,
    hurwitz_zeta_sderiv_oracle,
)

__all__ = [
    "FunctionAccuracy",
    "ln_gamma",
    "gamma_function",
    "digamma",
    "kummer_m",
    "tricomi_u",
    "tricomi_u_kummer",
    "tricomi_u_recurrence",
    "tricomi_u_asymptotic",
    "tricomi_u_oracle",
    "hurwitz_zeta",
    "hurwitz_zeta_sderiv_m1",
    "hurwitz_zeta_sderiv_oracle",
]
