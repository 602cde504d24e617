"""Exact character degrees (standard-Young-tableau counts) by independent
routes, plus the integer-argument extensions of the two closed forms.

Everything returns exact Python ints; degrees overflow 64 bits well before
the sweep sizes used here, so big integers are mandatory throughout.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, conjugate, make_partition


@lru_cache(maxsize=None)
def _degree(p: Partition) -> int:
    if not p:
        return 1
    prod = 1
    conj = conjugate(p)
    for i, row in enumerate(p):
        for j in range(row):
            prod *= row + conj[j] - i - j - 1
    q, r = divmod(factorial(sum(p)), prod)
    if r:
        raise ArithmeticError(f"hook product does not divide n! for {p}")
    return q


def degree(p) -> int:
    """Number of standard Young tableaux of the given shape, via the hook
    length formula.  Memoized; the cache never changes results."""
    return _degree(make_partition(p))


def degree_uncached(p) -> int:
    """Same computation as degree() but bypassing the memo cache."""
    return _degree.__wrapped__(make_partition(p))


def degree_fat_hook(a: int, b: int, t: int) -> int:
    """Closed form for shapes (a, b, 1^t), a >= b >= 1, t >= 0."""
    if not (a >= b >= 1 and t >= 0):
        raise ValueError(f"need a >= b >= 1 and t >= 0, got {(a, b, t)}")
    num = factorial(a + b + t) * (a - b + 1)
    den = (a + t + 1) * (b + t) * factorial(a) * factorial(b - 1) * factorial(t)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division in fat-hook form at {(a, b, t)}")
    return q


def degree_three_row(r: int, s: int, t: int) -> int:
    """Closed form for shapes (r, s, t), r >= s >= t >= 0."""
    if not (r >= s >= t >= 0):
        raise ValueError(f"need r >= s >= t >= 0, got {(r, s, t)}")
    num = factorial(r + s + t) * (r - s + 1) * (r - t + 2) * (s - t + 1)
    den = factorial(r + 2) * factorial(s + 1) * factorial(t)
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact division in three-row form at {(r, s, t)}")
    return q


def syt_enumerate(p, bound: int = 14) -> int:
    """Count standard fillings by backtracking, independent of any formula.

    Values 1..n are placed one at a time at the end of some row; a placement
    is legal when the row stays within the shape and strictly shorter than
    the row above.  Completions are counted.
    """
    shape = make_partition(p)
    n = sum(shape)
    if n > bound:
        raise ValueError(f"enumeration limited to size {bound}, got {n}")
    if not shape:
        return 1
    rows = len(shape)
    lengths = [0] * rows
    count = 0

    def place(value: int):
        nonlocal count
        if value > n:
            count += 1
            return
        for i in range(rows):
            if lengths[i] < shape[i] and (i == 0 or lengths[i - 1] > lengths[i]):
                lengths[i] += 1
                place(value + 1)
                lengths[i] -= 1

    place(1)
    return count


def three_row_value(x: int, y: int, z: int) -> int:
    """The three-row closed form evaluated at arbitrary integer arguments.

    Reciprocal factorials of negative integers count as zero, so the value
    vanishes whenever x <= -3, y <= -2 or z <= -1.  On partitions (x, y, z)
    this equals degree((x, y, z)).  Requires x + y + z >= 0.
    """
    total = x + y + z
    if total < 0:
        raise ValueError(f"total {total} < 0: leading factorial undefined")
    if x + 2 < 0 or y + 1 < 0 or z < 0:
        return 0
    num = factorial(total) * (x - y + 1) * (x - z + 2) * (y - z + 1)
    val = Fraction(num, factorial(x + 2) * factorial(y + 1) * factorial(z))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer three-row value at {(x, y, z)}")
    return int(val)


def fat_hook_value(x: int, y: int, r: int) -> int:
    """The fat-hook closed form at arbitrary integer arguments, with the
    same zero convention for reciprocal factorials of negative integers.

    On shapes (x, y, 1^r) this equals degree((x, y, 1^r)).  The removable
    singularities x + r + 1 = 0 and y + r = 0 are excluded.
    """
    total = x + y + r
    if total < 0:
        raise ValueError(f"total {total} < 0: leading factorial undefined")
    if x + r + 1 == 0 or y + r == 0:
        raise ValueError(f"singular denominator at {(x, y, r)}")
    if x < 0 or y - 1 < 0 or r < 0:
        return 0
    num = factorial(total) * (x - y + 1)
    den = factorial(x) * factorial(y - 1) * factorial(r) * (x + r + 1) * (y + r)
    val = Fraction(num, den)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer fat-hook value at {(x, y, r)}")
    return int(val)
