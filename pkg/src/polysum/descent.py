"""Constructive identity transforms on binary quadratic values.

Each transform rewrites a representation of a fixed value into one with an
extra divisibility or parity property, by composing explicit two-square
identities.  Sign choices ("without loss of generality" in the usual
arguments) are made deterministic: the second argument is negated when
needed, otherwise the first.  Outputs are not unique; callers should check
the stated postcondition, not a particular pair.
"""

from __future__ import annotations

from math import isqrt


class ZeroInputError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def realis_transform(x: int, y: int, z: int) -> tuple[int, int, int]:
    """(x-2y-2z, y-2x-2z, z-2x-2y); the output square sum is 9(x^2+y^2+z^2)."""
    return (x - 2 * y - 2 * z, y - 2 * x - 2 * z, z - 2 * x - 2 * y)


# multipliers (p, q, r, s) of the step 9(a^2+m b^2) = (pa+qb)^2 + m(ra+sb)^2
_MOD3_STEPS = {
    2: ((1, 4), (2, -1)),
    5: ((2, 5), (1, -2)),
    8: ((1, 8), (1, -1)),
}


def descent_mod3(m: int, x: int, y: int) -> tuple[int, int]:
    """Rewrite w = x^2 + m*y^2 > 0 as u^2 + m*v^2 with 3 dividing at most one
    of u, v.  m must be 2, 5 or 8."""
    if m not in _MOD3_STEPS:
        raise ValueError(f"m must be one of 2, 5, 8, got {m}")
    if x == 0 and y == 0:
        raise ZeroInputError("w must be positive")
    k = 0
    while x % 3 == 0 and y % 3 == 0:
        x //= 3
        y //= 3
        k += 1
    (p, q), (r, s) = _MOD3_STEPS[m]
    for _ in range(k):
        u_plus, v_plus = p * x + q * y, r * x + s * y
        if u_plus % 3 or v_plus % 3:
            x, y = u_plus, v_plus
        else:
            x, y = p * x - q * y, r * x - s * y
    return x, y


def split_3_into_6(u: int, v: int) -> tuple[int, int]:
    """Rewrite w = u^2 + 2v^2 with 3 | w as 3x^2 + 6y^2."""
    w = u * u + 2 * v * v
    if w % 3:
        raise PreconditionError(f"3 does not divide {w}")
    # u^2 = v^2 (mod 3) here, so u = +-v (mod 3); align by negating v
    if (u - v) % 3:
        v = -v
    x = (u + 2 * v) // 3
    y = (u - v) // 3
    return x, y


def descent_mod5(x: int, y: int) -> tuple[int, int]:
    """Rewrite w = x^2 + 4y^2 > 0 as u^2 + 4v^2 with 5 dividing at most one
    of u, v, via 5(a^2+4b^2) = (a+-4b)^2 + 4(a-+b)^2."""
    if x == 0 and y == 0:
        raise ZeroInputError("w must be positive")
    k = 0
    while x % 5 == 0 and y % 5 == 0:
        x //= 5
        y //= 5
        k += 1
    for _ in range(2 * k):
        u_plus, v_plus = x + 4 * y, x - y
        if u_plus % 5 or v_plus % 5:
            x, y = u_plus, v_plus
        else:
            x, y = x - 4 * y, x + y
    return x, y


def descent_7_odd(x: int, y: int) -> tuple[int, int]:
    """Rewrite w = x^2 + 7y^2 with 8 | w as u^2 + 7v^2 with u, v both odd.

    Strips the common power of two, fixes a mixed-parity base with
    16(s^2+7t^2) = (3s+7t)^2 + 7(s-3t)^2, then climbs back through
    4(s^2+7t^2) = ((3s+7t)/2)^2 + 7((s-3t)/2)^2 after normalizing
    s = t (mod 4).
    """
    w = x * x + 7 * y * y
    if w % 8:
        raise PreconditionError(f"8 does not divide {w}")
    k = 0
    while x % 2 == 0 and y % 2 == 0:
        x //= 2
        y //= 2
        k += 1
    if x % 2 == 0 or y % 2 == 0:
        # exactly one even: x^2+7y^2 is odd, so k >= 2 and one 16-step
        # restores odd parity
        if k < 2:
            raise PreconditionError(f"8 does not divide {w}")
        x, y = 3 * x + 7 * y, x - 3 * y
        k -= 2
    for _ in range(k):
        if (x - y) % 4:  # odd x, y satisfy x = -y (mod 4) here
            y = -y
        x, y = (3 * x + 7 * y) // 2, (x - 3 * y) // 2
    return x, y


def _three_squares_with_multiple_of_3(n: int) -> tuple[int, int, int] | None:
    """(u, v, w) with n = u^2+v^2+w^2 and 3 | w, by exhaustive search."""
    w = 0
    while w * w <= n:
        rest = n - w * w
        u = 0
        while 2 * u * u <= rest:
            v2 = rest - u * u
            v = isqrt(v2)
            if v * v == v2:
                return u, v, w
            u += 1
        w += 3
    return None


def split_two_n(n: int) -> tuple[int, int, int]:
    """For n = 2 (mod 3) not of the form 4^k(8l+7): 2n = x^2 + 9y^2 + 18z^2.

    Found by locating a three-square representation of n whose multiple-of-3
    slot exists (exactly one slot is divisible by 3 in this residue class)
    and recombining the other two.
    """
    from .qform import three_square_excluded

    if n % 3 != 2 or three_square_excluded(n):
        raise PreconditionError(f"{n} is not 2 mod 3 with a three-square form")
    found = _three_squares_with_multiple_of_3(n)
    if found is None:  # unreachable: guaranteed by the precondition
        raise PreconditionError(f"no suitable three-square split of {n}")
    u, v, w = found
    z = w // 3
    # u, v are prime to 3 and u^2 = v^2 (mod 3), so 3 divides u+v or u-v
    if (u - v) % 3 == 0:
        x, three_y = u + v, u - v
    else:
        x, three_y = u - v, u + v
    return x, three_y // 3, z
