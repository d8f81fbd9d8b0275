"""The iteration x -> 1 - alpha/x and its hyperbolic closed forms.

With ``theta = arcosh(1 / (2 sqrt(alpha)))`` the characteristic roots of
``x^2 - x + alpha`` are ``r1, r2 = (1 +- tanh(theta)) / 2``. Orbits that are
symmetric (two terms summing to 1) are described by

    F0(x)  = (1 - tanh(theta) tanh(x theta / 2)) / 2
    F0*(x) = 1 - F0(x) = F0(-x)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import InvalidArgument

# Pole marker. An orbit passing through 0 continues 0 -> POLE -> 1.
POLE = float("-inf")

INCREASING = "increasing_to_r1"
DECREASING = "decreasing_to_r1"
EXITS = "exits_positive"
CONSTANT = "constant"


def is_pole(x: float) -> bool:
    return x == POLE


def theta_of(alpha: float) -> float:
    if not 0 < alpha <= 0.25:
        raise InvalidArgument(f"alpha must lie in (0, 1/4], got {alpha}")
    u = 0.5 / math.sqrt(alpha)
    # log form stays accurate as u -> 1
    return math.log(u + math.sqrt(max(u * u - 1.0, 0.0)))


def alpha_of_theta(theta: float) -> float:
    return 0.25 / math.cosh(theta) ** 2


@dataclass(frozen=True)
class MobiusParams:
    alpha: float
    theta: float
    r1: float
    r2: float

    @classmethod
    def from_alpha(cls, alpha: float) -> MobiusParams:
        theta = theta_of(alpha)
        t = math.tanh(theta)
        return cls(alpha, theta, 0.5 * (1 + t), 0.5 * (1 - t))

    def phi(self, x: float) -> float:
        return x * x - x + self.alpha


def step(alpha: float, x: float) -> float:
    if x == 0:
        return POLE
    if is_pole(x):
        return 1.0
    return 1.0 - alpha / x


def step_back(alpha: float, x: float) -> float:
    if x == 1:
        return POLE
    if is_pole(x):
        return 0.0
    return alpha / (1.0 - x)


def iterate_direct(alpha: float, x0: float, n: int) -> list[float]:
    """Orbit ``x_0 .. x_n`` (or ``x_0, x_{-1} .. x_n`` for negative ``n``)."""
    if x0 == 0:
        raise InvalidArgument("x0 must be nonzero")
    f = step if n >= 0 else step_back
    out = [float(x0)]
    for _ in range(abs(n)):
        out.append(f(alpha, out[-1]))
    return out


def closed_form(alpha: float, x0: float, n: int) -> float:
    """``x_n`` of the orbit through ``x0`` via the sinh formula.

    The numerator and denominator cancel heavily when ``x0`` is close to a
    fixed point, so the formula is evaluated in extended precision with
    enough guard digits for ``e^{2|n| theta}`` and the 53 bits of ``x0``.
    """
    if not 0 < alpha <= 0.25:
        raise InvalidArgument(f"alpha must lie in (0, 1/4], got {alpha}")
    if n == 0:
        return float(x0)
    with mpmath.workdps(40 + int(abs(n) * theta_of(alpha) / 1.15)):
        a, x = mpmath.mpf(alpha), mpmath.mpf(x0)
        if alpha == 0.25:
            # theta -> 0 limit: sinh(j theta) / sinh(theta) -> j
            num = 2 * (n + 1) * x - n
            den = 2 * (2 * n * x - (n - 1))
        else:
            theta = mpmath.acosh(0.5 / mpmath.sqrt(a))
            c = mpmath.cosh(theta)
            sh = [mpmath.sinh(j * theta) for j in (n - 1, n, n + 1)]
            num = 2 * c * sh[2] * x - sh[1]
            den = 2 * c * (2 * c * sh[1] * x - sh[0])
        # both parts can be tiny together (seed near r1 going backwards); a
        # pole is a denominator that vanishes relative to the numerator
        if abs(den) <= 1e-14 * abs(num):
            return POLE
        return float(num / den)


def _log_cosh(z: float) -> float:
    z = abs(z)
    return z + math.log1p(math.exp(-2.0 * z)) - math.log(2.0)


def f0_theta(theta: float, x: float) -> float:
    # 1 - tanh(a) tanh(b) = cosh(a - b) / (cosh(a) cosh(b)) avoids the cancellation
    b = 0.5 * x * theta
    if max(abs(b), theta) < 300.0:
        return 0.5 * math.cosh(theta - b) / (math.cosh(theta) * math.cosh(b))
    return 0.5 * math.exp(_log_cosh(theta - b) - _log_cosh(theta) - _log_cosh(b))


def f0_star_theta(theta: float, x: float) -> float:
    return f0_theta(theta, -x)


def f0(alpha: float, x: float) -> float:
    return f0_theta(theta_of(alpha), x)


def f0_star(alpha: float, x: float) -> float:
    return f0_star_theta(theta_of(alpha), x)


def symmetric_y0(alpha: float, l: int) -> float:
    """Largest root of ``x + F(l, x) = 1``: the seed of a symmetric orbit
    with ``y_0 + y_l = 1``."""
    if l < 0:
        raise InvalidArgument("l must be >= 0")
    return f0(alpha, l)


def symmetric_term(alpha: float, p: int, q: int, n: int) -> float:
    """``x_n`` of the symmetric orbit with ``x_p + x_q = 1``."""
    return f0_star(alpha, 2 * n - p - q)


def classify_orbit(alpha: float, x0: float, rtol: float = 1e-12) -> str:
    P = MobiusParams.from_alpha(alpha)
    if x0 <= 0:
        raise InvalidArgument("x0 must be positive")
    if math.isclose(x0, P.r1, rel_tol=rtol) or math.isclose(x0, P.r2, rel_tol=rtol):
        return CONSTANT
    if x0 > P.r1:
        return DECREASING
    if x0 < P.r2:
        return EXITS
    return INCREASING


def alpha_star() -> float:
    """Unique root in (0, 1) of ``(1 - x)^5 = x``; about 0.24512233."""
    c = (3 * math.sqrt(69) + 25) / 2
    return (4 - c ** (1 / 3) - c ** (-1 / 3)) / 3


def alpha_star_residuals(x: float) -> tuple[float, float, float, float]:
    """The four polynomial characterizations of ``alpha_star``, as residuals."""
    r1 = 0.5 * (1 + math.sqrt(1 - 4 * x))
    return ((1 - x) ** 5 - x,
            (1 - x) ** 2 + (1 - x) ** 3 - 1,
            x - (1 - x) ** 2 + (1 - x) ** 4,
            r1 ** 2 * (1 - x) - x)
