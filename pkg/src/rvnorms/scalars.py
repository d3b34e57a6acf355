"""Small helpers for mixed exact/floating scalar arithmetic.

Exact values are ``int`` and ``fractions.Fraction``; everything else
(float, complex) goes through ordinary floating point.  Python's numeric
tower handles the mixed products, so the only care needed is division
(``int / int`` must not silently produce a float on the exact path) and
extracting real parts from complex values that carry roundoff residue.
"""

from __future__ import annotations

from fractions import Fraction

EXACT_TYPES = (int, Fraction)


def is_exact(value) -> bool:
    return isinstance(value, EXACT_TYPES)


def exact_div(num, den):
    """Divide, keeping exact operands exact."""
    if is_exact(num) and is_exact(den):
        return Fraction(num, den) if isinstance(num, int) and isinstance(den, int) else Fraction(num) / den
    return num / den


def real_part_checked(value, *, tol: float = 1e-10):
    """Return the real part of ``value``, requiring a negligible imaginary residue.

    The allowance is ``tol`` relative to the magnitude of the value (with a
    floor of 1), which is what a numerically-Hermitian computation leaves
    behind.  Exact and real inputs pass through untouched.
    """
    if isinstance(value, complex):
        scale = max(1.0, abs(value))
        if abs(value.imag) > tol * scale:
            raise ArithmeticError(
                f"imaginary residue {value.imag!r} exceeds {tol!r} of scale {scale!r}"
            )
        return value.real
    return value
