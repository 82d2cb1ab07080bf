"""Fractional derivatives integrated over their order.

Closed-form Riemann-Liouville derivatives, principal-value quadrature over the
order with Euler acceleration, and an exact residue oracle for cross-checks.
"""

from .errors import DomainError, GammaPoleError, NonConvergenceError
from .frac import (
    FracOrder,
    PowerSeries,
    ShiftedPower,
    rl_deriv_numeric,
    rl_deriv_power,
    rl_deriv_series,
    rl_integral_numeric,
)
from .orderquad import (
    OrderIntegralResult,
    QuadratureConfig,
    binom_integral,
    integrate_order,
    lemma_integral,
    lemma_integrand,
    main_identity_eval,
)
from .residue import closed_form_coeff, indented_integral_value, residue_at
from .specfun import gamma, gen_binom, pochhammer, rgamma, sinc

__version__ = "0.1.0"
