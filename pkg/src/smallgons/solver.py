"""Bracketed bisection for the closure equations of each polygon family."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

from .closures import (
    bn_closure_residual,
    check_bn_order,
    z32_closure_residual,
    z64_path,
)
from .errors import BracketError, EvaluationError, InfeasibleError, SolveError
from .geometry import DEFAULT_TOL, ToleranceConfig

PI = math.pi

# Bisect until the bracket cannot shrink any further in double precision.
CLOSURE_TOL = ToleranceConfig(cert_tol=1e-9, root_tol=1e-14, bracket_tol=1e-300)


def _evaluate(f: Callable[[float], float], x: float) -> float:
    fx = f(x)
    if not math.isfinite(fx):
        raise EvaluationError(f"residual is not finite at {x!r}: {fx!r}")
    return fx


def bisect_root(
    f: Callable[[float], float], lo: float, hi: float, tol: ToleranceConfig = DEFAULT_TOL
) -> float:
    """Pure bisection on a sign-changing bracket ``[lo, hi]``.

    Halves until the bracket is no wider than ``tol.bracket_tol`` or the
    midpoint is no longer representable strictly inside it, then returns
    the endpoint with the smaller residual. An exact zero ends the search
    early. The sequence of evaluations depends only on ``f``, ``lo``, ``hi``
    so results are bit-reproducible.
    """
    if not lo < hi:
        raise BracketError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    flo, fhi = _evaluate(f, lo), _evaluate(f, hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0) == (fhi < 0):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]: f = {flo!r}, {fhi!r}")
    while hi - lo > tol.bracket_tol:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        fmid = _evaluate(f, mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return lo if abs(flo) <= abs(fhi) else hi


def expand_bracket(
    f: Callable[[float], float],
    center: float,
    half_width: float,
    *,
    lower: float = -math.inf,
    upper: float = math.inf,
    max_doublings: int = 60,
) -> tuple[float, float]:
    """Grow ``[center - w, center + w]`` (clipped to ``[lower, upper]``) until ``f`` changes sign.

    Points where ``f`` raises :class:`InfeasibleError` are pulled halfway back
    toward ``center``.
    """
    def safe(x):
        for _ in range(60):
            try:
                return x, _evaluate(f, x)
            except InfeasibleError:
                x = 0.5 * (x + center)
        raise SolveError(f"no feasible point found between {center!r} and {x!r}")

    w = half_width
    for _ in range(max_doublings + 1):
        lo, flo = safe(max(center - w, lower))
        hi, fhi = safe(min(center + w, upper))
        if (flo < 0) != (fhi < 0) or flo == 0.0 or fhi == 0.0:
            return lo, hi
        w *= 2
    raise SolveError(
        f"no sign change after {max_doublings} doublings around {center!r}",
        bracket=(max(center - w / 2, lower), min(center + w / 2, upper)),
    )


@dataclass(frozen=True)
class ClosureProblem:
    """A family's defining scalar equation together with its bracket and solution."""

    name: str
    n: int
    residual: Callable[[float], float]
    guess: float
    half_width: float
    lower: float = 0.0
    upper: float = math.inf
    bracket: Optional[tuple[float, float]] = None
    root: Optional[float] = None
    residual_at_root: Optional[float] = None

    def solve(self, tol: ToleranceConfig = CLOSURE_TOL) -> "ClosureProblem":
        try:
            lo, hi = expand_bracket(
                self.residual, self.guess, self.half_width, lower=self.lower, upper=self.upper
            )
            root = bisect_root(self.residual, lo, hi, tol)
        except (BracketError, EvaluationError) as exc:
            raise SolveError(f"{self.name}: {exc}") from exc
        value = self.residual(root)
        if abs(value) > tol.root_tol:
            raise SolveError(
                f"{self.name}: residual {value:.3e} at t = {root!r} exceeds {tol.root_tol:g}",
                bracket=(lo, hi),
            )
        return replace(self, bracket=(lo, hi), root=root, residual_at_root=value)


def t0_initial_guess(n: int) -> float:
    """Five-term large-n expansion of the B_n closure angle."""
    return (
        PI / n
        - PI**4 / n**5
        + PI**5 / n**6
        - 11 * PI**6 / (6 * n**7)
        + 35 * PI**7 / (12 * n**8)
    )


def bn_closure_problem(n: int) -> ClosureProblem:
    check_bn_order(n)
    return ClosureProblem(
        name=f"B_{n} closure",
        n=n,
        residual=lambda t: bn_closure_residual(n, t),
        guess=t0_initial_guess(n),
        half_width=2 * PI**4 / n**5,
        upper=PI / n,
    )


def solve_bn_angle(n: int) -> float:
    return bn_closure_problem(n).solve().root


def z32_closure_problem() -> ClosureProblem:
    return ClosureProblem(
        name="Z_32 closure",
        n=32,
        residual=z32_closure_residual,
        guess=PI / 32,
        half_width=1e-7,
        upper=PI / 32,
    )


def solve_z32_angle() -> float:
    return z32_closure_problem().solve().root


def z64_solve_y(t: float) -> float:
    """Ordinate y of v_50 = (-1/2, y) making |v_16 - v_15| = 2 sin(t/2).

    v_15 = (cos t - 1/2, y + sin t); of the two solutions the one with v_15
    below v_16 is returned.
    """
    if not 0 < t < PI / 64:
        raise InfeasibleError(f"t must lie in (0, pi/64), got {t!r}")
    x16, y16 = z64_path(t)[-1]
    disc = 4 * math.sin(t / 2) ** 2 - (x16 - (math.cos(t) - 0.5)) ** 2
    if disc < 0:
        raise InfeasibleError(f"v_16 is out of reach of v_15 at t = {t!r} (discriminant {disc:.3e})")
    return y16 - math.sin(t) - math.sqrt(disc)


def z64_closure_residual(t: float) -> float:
    """|v_51 - v_50|^2 - 4 sin^2(t/2) with y eliminated through :func:`z64_solve_y`."""
    y = z64_solve_y(t)
    x51, y51 = z64_path(t)[-2]
    return (x51 + 0.5) ** 2 + (y51 - y) ** 2 - 4 * math.sin(t / 2) ** 2


def z64_closure_problem() -> ClosureProblem:
    return ClosureProblem(
        name="Z_64 closure",
        n=64,
        residual=z64_closure_residual,
        guess=PI / 64,
        half_width=1e-8,
        upper=math.nextafter(PI / 64, 0.0),
    )


def solve_z64_angle() -> tuple[float, float]:
    t = z64_closure_problem().solve().root
    return t, z64_solve_y(t)


H8_COEFFICIENTS = (2, -18, 57, -78, 46, -12, 1)


def h8_polynomial(u: float) -> float:
    """2u^6 - 18u^5 + 57u^4 - 78u^3 + 46u^2 - 12u + 1 in Horner form."""
    acc = 0.0
    for c in H8_COEFFICIENTS:
        acc = acc * u + c
    return acc


def h8_interval() -> tuple[float, float]:
    return math.sin(PI / 8) ** 2, 4 * math.sin(PI / 16) ** 2


def h8_side_squared() -> float:
    """Squared side of the optimal equilateral octagon: the sextic's root in its isolating interval."""
    lo, hi = h8_interval()
    return bisect_root(h8_polynomial, lo, hi, CLOSURE_TOL)
