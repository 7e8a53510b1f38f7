"""Closed-form coordinates and closure residuals of the B_n, Z_32 and Z_64 polygons.

Every construction here starts at v_0 = (0, 0) with the axis vertex at
(0, 1); a step "+k" moves by the unit vector (sin kt, cos kt) and a step
"-k" by its opposite.
"""

from __future__ import annotations

import math

from .errors import DomainError


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def check_bn_order(n: int) -> None:
    if int(n) != n or not is_power_of_two(n) or n < 16:
        raise DomainError(f"B_n needs n = 2^s with s >= 4, got {n}")


def bn_step_multiples(n: int) -> list[int]:
    """Multiples k in [1, n/2 - 1] with k mod 4 != 2, ascending; 3n/8 - 1 of them."""
    return [k for k in range(1, n // 2) if k % 4 != 2]


def walk(steps, t: float, start=(0.0, 0.0)) -> list[tuple[float, float]]:
    """Partial sums start + sum_j sign_j (sin |k_j| t, cos |k_j| t) for signed multiples k_j."""
    x, y = start
    pts = [(x, y)]
    for k in steps:
        sign = 1.0 if k > 0 else -1.0
        x += sign * math.sin(abs(k) * t)
        y += sign * math.cos(abs(k) * t)
        pts.append((x, y))
    return pts


def bn_signed_steps(n: int) -> list[int]:
    return [k if j % 2 == 0 else -k for j, k in enumerate(bn_step_multiples(n))]


def bn_closed_form_point(n: int, t: float) -> tuple[float, float]:
    """(x, y) of v_{3n/4+1}, the second-to-last vertex of the half path."""
    q = n / 2 - 2
    w = (2 * math.cos(t) - 1) / (2 * math.cos(2 * t))
    x = math.sin(t) - w * (math.sin(2 * t) + math.sin(q * t))
    y = math.cos(t) - w * (math.cos(2 * t) + math.cos(q * t))
    return x, y


def bn_closure_residual(n: int, t: float) -> float:
    """(2 x_{3n/4+1} + sin((n/2-1)t))^2 + cos^2((n/2-1)t) - 4 sin^2(t/2).

    Zero when the side v_{3n/4+1} v_{3n/4} has the common length 2 sin(t/2).
    """
    check_bn_order(n)
    x, _ = bn_closed_form_point(n, t)
    a = (n / 2 - 1) * t
    return (2 * x + math.sin(a)) ** 2 + math.cos(a) ** 2 - 4 * math.sin(t / 2) ** 2


def z32_closure_residual(t: float) -> float:
    x10 = math.sin(5 * t) - math.sin(13 * t) + math.sin(14 * t)
    return (2 * x10 - math.sin(15 * t)) ** 2 + math.cos(15 * t) ** 2 - 4 * math.sin(t / 2) ** 2


# Signed multiples of the Z_64 main path v_0 - v_31 - v_63 - ... - v_51 - v_16.
Z64_STEPS = (1, -2, 3, -5, 6, -7, 8, -10, 11, -12, 13, -14, 15, -16, 17, -18, 19, -20, 22, -23, 25, -26, 29)
# Multiples absent from the main path; each one is a pendant edge.
Z64_PENDANTS = (4, 9, 21, 24, 27, 28)


def z64_path(t: float) -> list[tuple[float, float]]:
    """Points p_0 = v_0, ..., p_22 = v_51, p_23 = v_16 of the Z_64 main path."""
    return walk(Z64_STEPS, t)
