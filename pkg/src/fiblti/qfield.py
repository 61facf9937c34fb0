"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Every pole, residue and closed-form sequence value in this package is an
element a + b*sqrt(d) with rational a, b and a square-free radicand d (d = 5
for the golden-ratio systems).  Keeping values in this form makes all
downstream decisions exact: ordering, rounding tests and region-of-convergence
radius comparisons are settled by integer sign analysis, never by floats.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "FieldMismatchError",
    "QuadRational",
    "GOLDEN_RATIO",
    "GOLDEN_RATIO_CONJUGATE",
    "SQRT5",
    "int_sqrt_exact",
    "sqrt_in_field",
    "square_free_decompose",
]

RationalLike = int | Fraction


class FieldMismatchError(ValueError):
    """Two values with irrational parts from different fields were combined."""


def square_free_decompose(m: int) -> tuple[int, int]:
    """Write m >= 1 as s*s*k with k square-free and return (s, k)."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    s = k = 1
    p = 2
    while p * p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                k *= p
        p += 1 if p == 2 else 2
    # The remainder has at most two prime factors: a square or square-free.
    r = math.isqrt(m)
    if r * r == m:
        s *= r
    else:
        k *= m
    return s, k


def int_sqrt_exact(m: int) -> int | None:
    """Return the integer r with r*r == m, or None if m is not a square."""
    if m < 0:
        raise ValueError(f"expected a non-negative integer, got {m}")
    r = math.isqrt(m)
    return r if r * r == m else None


def _frac_sqrt(x: Fraction) -> Fraction | None:
    """Exact rational square root of x >= 0, or None."""
    if x < 0:
        return None
    rn = int_sqrt_exact(x.numerator)
    rd = int_sqrt_exact(x.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


@lru_cache(maxsize=None)
def _validate_radicand(d: int) -> int:
    if d < 2:
        raise ValueError(f"radicand must be >= 2, got {d}")
    s, k = square_free_decompose(d)
    if s != 1:
        raise ValueError(f"radicand must be square-free, got {d} = {s}^2 * {k}")
    return d


_PARSE_RE = re.compile(
    r"""^\s*
        (?:(?P<rat>[+-]?\d+(?:/\d+)?))?
        (?:\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<rad>\d+)\s*\))?
        \s*$""",
    re.VERBOSE,
)


class QuadRational:
    """An element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).

    Values are immutable and store fully reduced `Fraction` components.
    Arithmetic with int and Fraction adopts the field of the quadratic
    operand.  A value with b = 0 is a plain rational and embeds in any field;
    combining two values whose irrational parts live in different fields
    raises FieldMismatchError.  Comparisons use the real embedding
    (sqrt(d) > 0) and are exact.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(
        self,
        a: RationalLike | str = 0,
        b: RationalLike | str = 0,
        d: int = 5,
    ) -> None:
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("components must be exact (int, Fraction or str), not float")
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._d = _validate_radicand(int(d))

    # -- accessors ---------------------------------------------------------

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return self._a

    @property
    def b(self) -> Fraction:
        """Coefficient of sqrt(d)."""
        return self._b

    @property
    def d(self) -> int:
        """Radicand of the field."""
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    @property
    def is_integer(self) -> bool:
        return self._b == 0 and self._a.denominator == 1

    def as_fraction(self) -> Fraction:
        """The value as a Fraction; raises ValueError if it is irrational."""
        if self._b != 0:
            raise ValueError(f"{self} is irrational")
        return self._a

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return int(self._a)

    # -- text form -----------------------------------------------------------

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        sep = "-" if self._b < 0 else "+"
        return f"{self._a}{sep}{abs(self._b)}*sqrt({self._d})"

    def __repr__(self) -> str:
        return f"QuadRational({self._a}, {self._b}, d={self._d})"

    @classmethod
    def parse(cls, text: str, d: int = 5) -> "QuadRational":
        """Parse the canonical text form, e.g. ``1/2-1/2*sqrt(5)`` or ``-3/4``.

        `d` is the field used when the text has no sqrt term.
        """
        m = _PARSE_RE.match(text)
        if m is None or (m.group("rat") is None and m.group("coef") is None):
            raise ValueError(f"cannot parse quadratic value from {text!r}")
        a = Fraction(m.group("rat")) if m.group("rat") else Fraction(0)
        if m.group("coef") is None:
            return cls(a, 0, d)
        if m.group("rat") is not None and m.group("sign") is None:
            raise ValueError(f"missing sign before sqrt term in {text!r}")
        b = Fraction(m.group("coef"))
        if m.group("sign") == "-":
            b = -b
        return cls(a, b, int(m.group("rad")))

    # -- coercion ------------------------------------------------------------

    def _pair(self, other) -> "tuple[QuadRational, QuadRational] | None":
        """Bring self and other into one field, or None if not coercible."""
        if isinstance(other, QuadRational):
            if other._d == self._d:
                return self, other
            if other._b == 0:
                return self, QuadRational(other._a, 0, self._d)
            if self._b == 0:
                return QuadRational(self._a, 0, other._d), other
            raise FieldMismatchError(
                f"cannot combine sqrt({self._d}) and sqrt({other._d}) values"
            )
        if isinstance(other, (int, Fraction)):
            return self, QuadRational(other, 0, self._d)
        return None

    # -- ring operations -------------------------------------------------------

    def __add__(self, other) -> "QuadRational":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return QuadRational(x._a + y._a, x._b + y._b, x._d)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadRational":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return QuadRational(x._a - y._a, x._b - y._b, x._d)

    def __rsub__(self, other) -> "QuadRational":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return QuadRational(y._a - x._a, y._b - x._b, x._d)

    def __neg__(self) -> "QuadRational":
        return QuadRational(-self._a, -self._b, self._d)

    def __pos__(self) -> "QuadRational":
        return self

    def __mul__(self, other) -> "QuadRational":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return QuadRational(
            x._a * y._a + x._d * x._b * y._b,
            x._a * y._b + x._b * y._a,
            x._d,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadRational":
        """Field conjugate a - b*sqrt(d)."""
        return QuadRational(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm a*a - d*b*b (the product with the conjugate)."""
        return self._a * self._a - self._d * self._b * self._b

    def inv(self) -> "QuadRational":
        """Multiplicative inverse conj(x)/norm(x)."""
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError(f"inverse of zero in Q(sqrt({self._d}))")
        return QuadRational(self._a / nrm, -self._b / nrm, self._d)

    def __truediv__(self, other) -> "QuadRational":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x * y.inv()

    def __rtruediv__(self, other) -> "QuadRational":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return y * x.inv()

    def __pow__(self, n: int) -> "QuadRational":
        """Square-and-multiply power; negative exponents invert first."""
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = QuadRational(1, 0, self._d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- order and sign --------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real value: -1, 0 or +1."""
        sa = (self._a > 0) - (self._a < 0)
        if self._b == 0:
            return sa
        sb = (self._b > 0) - (self._b < 0)
        if self._a == 0 or sa == sb:
            return sb
        # Opposite-signed parts: compare a^2 against d*b^2.
        lhs = self._a * self._a
        rhs = self._d * self._b * self._b
        if lhs == rhs:  # impossible for square-free d >= 2 unless zero
            return 0
        return sa if lhs > rhs else sb

    def __abs__(self) -> "QuadRational":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return bool(self._a or self._b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadRational):
            if self._b == 0 and other._b == 0:
                return self._a == other._a
            return self._d == other._d and self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def _cmp(self, other) -> "int | None":
        pair = self._pair(other)
        if pair is None:
            return None
        x, y = pair
        return (x - y).sign()

    def __lt__(self, other) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c < 0

    def __le__(self, other) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c <= 0

    def __gt__(self, other) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c > 0

    def __ge__(self, other) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c >= 0

    # -- float embedding ---------------------------------------------------------

    def __float__(self) -> float:
        """Convert to float, accurate to a few ULP even under cancellation.

        The value is rewritten as (A + B*sqrt(d))/Q with integers, and
        floor(|B|*sqrt(d)*2^k) is taken with `math.isqrt`; k grows until the
        scaled numerator carries more than a double's 53 bits, so the single
        rounding happens in the final exact Fraction-to-float division.
        Raises OverflowError when the value is out of float range.
        """
        if self._b == 0:
            return float(self._a)
        qa = self._a.denominator
        qb = self._b.denominator
        q = qa * qb // math.gcd(qa, qb)
        big_a = self._a.numerator * (q // qa)
        big_b = self._b.numerator * (q // qb)
        shift = 64
        while True:
            root = math.isqrt(big_b * big_b * self._d << (2 * shift))
            num = (big_a << shift) + (root if big_b > 0 else -root)
            if abs(num).bit_length() > 56:
                return float(Fraction(num, q << shift))
            shift *= 2

    def __complex__(self) -> complex:
        return complex(float(self), 0.0)


def sqrt_in_field(x: QuadRational) -> QuadRational | None:
    """Exact square root of x inside Q(sqrt(d)) itself, or None.

    Used by the pole factorizer when a quadratic with field coefficients has a
    field-valued discriminant root (e.g. a repeated pole).  Returns the
    non-negative root when one exists.
    """
    if x.sign() < 0:
        return None
    if not x:
        return QuadRational(0, 0, x.d)
    if x.b == 0:
        r = _frac_sqrt(x.a)
        if r is not None:
            return QuadRational(r, 0, x.d)
        r = _frac_sqrt(x.a / x.d)
        if r is not None:
            return QuadRational(0, r, x.d)
        return None
    # Solve (p + q*sqrt(d))^2 = a + b*sqrt(d): p^2 + d q^2 = a, 2 p q = b.
    root_norm = _frac_sqrt(x.norm())
    if root_norm is None:
        return None
    for p2 in ((x.a + root_norm) / 2, (x.a - root_norm) / 2):
        p = _frac_sqrt(p2)
        if p is None or p == 0:
            continue
        cand = QuadRational(p, x.b / (2 * p), x.d)
        if cand * cand == x:
            return abs(cand)
    return None


#: The golden ratio (1 + sqrt(5))/2, the growing pole of the Fibonacci system.
GOLDEN_RATIO = QuadRational(Fraction(1, 2), Fraction(1, 2), 5)

#: Its field conjugate (1 - sqrt(5))/2 = -1/GOLDEN_RATIO, the decaying pole.
GOLDEN_RATIO_CONJUGATE = QuadRational(Fraction(1, 2), Fraction(-1, 2), 5)

#: sqrt(5) as an exact field element.
SQRT5 = QuadRational(0, 1, 5)
