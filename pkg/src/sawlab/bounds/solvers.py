"""Closed-form bounds on connective constants, solved by bisection.

Every target function here is monotone on its bracket, so plain bisection
always converges; it runs until the bracket cannot shrink further in double
precision.
"""

from __future__ import annotations

import math
from typing import Callable

GOLDEN = (1 + math.sqrt(5)) / 2


class NoRootError(ArithmeticError):
    pass


def bisect_root(f: Callable[[float], float], lo: float, hi: float, max_iter: int = 2000) -> float:
    """Root of f on [lo, hi] where f(lo) and f(hi) have opposite signs."""
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoRootError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    # both ends are adjacent floats; keep the one with the smaller residual
    return lo if abs(f(lo)) <= abs(f(hi)) else hi


def _check_mu(mu: float):
    if not mu > 1:
        raise ValueError(f"connective constant must exceed 1, got {mu}")


def fisher_g(x: float) -> float:
    return x * x + x**3


def semicubic_h(x: float) -> float:
    return x**3 + x**4


def fisher_mu_pull(mu: float) -> float:
    """Connective constant of the Fisher transform of a cubic graph with constant mu.

    Solves x^2 + x^3 = 1/mu on (0, 1) and returns 1/x.
    """
    _check_mu(mu)
    target = 1.0 / mu
    x = bisect_root(lambda t: fisher_g(t) - target, 0.0, 1.0)
    return 1.0 / x


def fisher_mu_push(mu: float) -> float:
    """Inverse of fisher_mu_pull: the constant of the graph whose transform has mu."""
    _check_mu(mu)
    return 1.0 / fisher_g(1.0 / mu)


def fisher_iterate(mu0: float, k: int) -> list:
    """mu_0, ..., mu_k under repeated Fisher transformation."""
    _check_mu(mu0)
    if k < 1:
        raise ValueError("k must be >= 1")
    seq = [mu0]
    for _ in range(k):
        seq.append(fisher_mu_pull(seq[-1]))
    return seq


def fisher_rate_bounds(k: int) -> tuple:
    """Window (low, high) for 1/mu_k - 1/golden after k Fisher steps, k >= 1."""
    return -((4 / 7) ** k), (2 / (7 - math.sqrt(5))) ** k


def semicubic_solve(mu: float) -> float:
    """Constant of the graph Fisher-transformed at black vertices: x^3 + x^4 = 1/mu^2."""
    _check_mu(mu)
    target = 1.0 / (mu * mu)
    x = bisect_root(lambda t: semicubic_h(t) - target, 0.0, 1.0)
    return 1.0 / x


def girth_degree_residual(zeta: float, delta: int, g: int) -> float:
    m1 = zeta
    m2 = 2 * sum(zeta**j for j in range(1, g))
    return (delta - 2) * m1 / (1 + m1) + m2 / (1 + m2) - 1


def girth_degree_upper(delta: int, g: int) -> float:
    """Sharp upper bound on mu over Delta-regular graphs of girth g.

    The left side of the defining equation is increasing in zeta, so its
    smallest positive root is the unique root in (0, 1).
    """
    if delta < 3 or g < 3:
        raise ValueError("need delta >= 3 and g >= 3")
    zeta = bisect_root(lambda z: girth_degree_residual(z, delta, g), 0.0, 1.0)
    return 1.0 / zeta


def cubic_girth_residual(x: float) -> float:
    return 1 / x**2 + 1 / x**3 - 1 / math.sqrt(2)


def cubic_girth_lower(g: int) -> float:
    """Lower bound on mu for cubic graphs of girth 3 or 4."""
    if g == 3:
        return bisect_root(cubic_girth_residual, 1.0, 2.0)
    if g == 4:
        return 12 ** (1 / 6)
    raise ValueError(f"no cubic girth bound for g={g}")


def spectral_lower(delta: int, lam: float) -> float:
    """(Delta-1)^((1 + c*lam)/2) with c = Delta(Delta-1)/(Delta-2)^2."""
    if delta < 3:
        raise ValueError("need delta >= 3")
    if not 0 <= lam <= 1:
        raise ValueError(f"spectral bottom must lie in [0, 1], got {lam}")
    c = delta * (delta - 1) / (delta - 2) ** 2
    return math.sqrt(delta - 1) ** (1 + c * lam)
