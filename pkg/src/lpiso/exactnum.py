"""Exact scalars and rigorous interval arithmetic.

Gaussian rationals are the scalar field for all vector arithmetic.  Reals that
cannot be held exactly (powers |z|^p, logarithms, exponentials, arctangents)
are returned as dyadic intervals that are guaranteed to contain the true value
and, where an operation takes a precision argument k, to have width <= 2^-k.
Refinement is self-validating: series are evaluated in interval arithmetic
with explicit remainder bounds at an increasing working precision until the
width contract is met, so soundness never depends on a hand error estimate.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Callable, Union


class NoSurvivorError(Exception):
    """Every box was excluded: the function has no zero in the search disk."""


class BudgetExceeded(Exception):
    """A subdivision or refinement budget was exhausted before certification."""


# ---------------------------------------------------------------------------
# rationals and Gaussian rationals
# ---------------------------------------------------------------------------

def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


class GaussianRational:
    """An element of Q(i), held as two reduced fractions.  Treat as immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.re == other and self.im == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        d = other.abs_sq()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        """|z|^2, always an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit_modulus(self) -> bool:
        return self.abs_sq() == 1


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


def format_gaussian(z: GaussianRational) -> str:
    """Render as "num/den" or "num/den+num/den i" (sign folded, no spaces)."""
    if z.im == 0:
        return format_fraction(z.re)
    sign = "+" if z.im > 0 else "-"
    return f"{format_fraction(z.re)}{sign}{format_fraction(abs(z.im))}i"


_GAUSSIAN_RE = _re.compile(
    r"^\s*(-?\d+(?:/\d+)?)\s*(?:([+-])\s*(\d+(?:/\d+)?)\s*i)?\s*$"
)


def parse_gaussian(text: str) -> GaussianRational:
    m = _GAUSSIAN_RE.match(text)
    if not m:
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_part = Fraction(m.group(1))
    if m.group(2) is None:
        return GaussianRational(re_part)
    im_part = Fraction(m.group(3))
    if m.group(2) == "-":
        im_part = -im_part
    return GaussianRational(re_part, im_part)


class Exponent:
    """A rational exponent p >= 1 together with its conjugate q (None for p=1)."""

    __slots__ = ("p", "q")

    def __init__(self, p: Union[int, Fraction, str]):
        p = Fraction(p)
        if p < 1:
            raise ValueError(f"exponent must satisfy p >= 1, got {p}")
        self.p = p
        self.q = None if p == 1 else p / (p - 1)

    @property
    def is_two(self) -> bool:
        return self.p == 2

    @property
    def half(self) -> Fraction:
        return self.p / 2

    def __eq__(self, other):
        return isinstance(other, Exponent) and self.p == other.p

    def __hash__(self):
        return hash(("Exponent", self.p))

    def __repr__(self):
        return f"Exponent({self.p})"


# ---------------------------------------------------------------------------
# dyadic rationals
# ---------------------------------------------------------------------------

class Dyadic:
    """Exact m * 2^e with integer mantissa and exponent.  Treat as immutable."""

    __slots__ = ("m", "e")

    def __init__(self, m: int, e: int = 0):
        if m == 0:
            e = 0
        elif not m & 1:
            # strip trailing zero bits so mantissas stay small under iteration
            shift = (m & -m).bit_length() - 1
            m >>= shift
            e += shift
        self.m = m
        self.e = e

    @staticmethod
    def zero() -> "Dyadic":
        return Dyadic(0)

    @staticmethod
    def one() -> "Dyadic":
        return Dyadic(1)

    @staticmethod
    def pow2(k: int) -> "Dyadic":
        """2^k."""
        return Dyadic(1, k)

    @staticmethod
    def from_fraction_floor(x: Fraction, k: int) -> "Dyadic":
        """Largest multiple of 2^-k that is <= x."""
        if k >= 0:
            return Dyadic((x.numerator << k) // x.denominator, -k)
        return Dyadic(x.numerator // (x.denominator << -k), -k)

    @staticmethod
    def from_fraction_ceil(x: Fraction, k: int) -> "Dyadic":
        return -Dyadic.from_fraction_floor(-x, k)

    @staticmethod
    def from_fraction_exact(x: Fraction) -> "Dyadic":
        den = x.denominator
        if den & (den - 1):
            raise ValueError(f"{x} is not dyadic")
        return Dyadic(x.numerator, -(den.bit_length() - 1))

    def to_fraction(self) -> Fraction:
        if self.e >= 0:
            return Fraction(self.m << self.e)
        return Fraction(self.m, 1 << -self.e)

    def is_zero(self) -> bool:
        return self.m == 0

    def sign(self) -> int:
        return (self.m > 0) - (self.m < 0)

    def __neg__(self):
        return Dyadic(-self.m, self.e)

    def __add__(self, other: "Dyadic"):
        if self.m == 0:
            return other
        if other.m == 0:
            return self
        e = min(self.e, other.e)
        return Dyadic((self.m << (self.e - e)) + (other.m << (other.e - e)), e)

    def __sub__(self, other: "Dyadic"):
        return self + (-other)

    def __mul__(self, other: "Dyadic"):
        return Dyadic(self.m * other.m, self.e + other.e)

    def round_floor(self, k: int) -> "Dyadic":
        """Round down to the 2^-k grid."""
        if self.m == 0 or self.e >= -k:
            return self
        shift = -k - self.e
        return Dyadic(self.m >> shift, -k)

    def round_ceil(self, k: int) -> "Dyadic":
        return -((-self).round_floor(k))

    def _cmp(self, other: "Dyadic") -> int:
        m1, e1, m2, e2 = self.m, self.e, other.m, other.e
        s1 = (m1 > 0) - (m1 < 0)
        s2 = (m2 > 0) - (m2 < 0)
        if s1 != s2:
            return -1 if s1 < s2 else 1
        if s1 == 0:
            return 0
        a1 = m1 if m1 > 0 else -m1
        a2 = m2 if m2 > 0 else -m2
        l1, l2 = a1.bit_length() + e1, a2.bit_length() + e2
        if l1 != l2:
            return s1 if l1 > l2 else -s1
        d = e1 - e2
        if d >= 0:
            m1s, m2s = m1 << d, m2
        else:
            m1s, m2s = m1, m2 << -d
        if m1s == m2s:
            return 0
        return 1 if m1s > m2s else -1

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        return isinstance(other, Dyadic) and self.m == other.m and self.e == other.e

    def __hash__(self):
        return hash((self.m, self.e))

    def __repr__(self):
        return f"Dyadic({self.m}, {self.e})"

    def to_decimal(self) -> str:
        """Exact decimal rendering (dyadics always terminate)."""
        m, e = self.m, self.e
        if e >= 0:
            return str(m << e)
        sign = "-" if m < 0 else ""
        m = abs(m)
        scaled = m * 5 ** (-e)
        digits = str(scaled).rjust(-e + 1, "0")
        return f"{sign}{digits[:e]}.{digits[e:]}"

    @staticmethod
    def from_decimal(text: str) -> "Dyadic":
        return Dyadic.from_fraction_exact(Fraction(text.strip()))


# ---------------------------------------------------------------------------
# dyadic intervals
# ---------------------------------------------------------------------------

class DyadicInterval:
    """A closed interval [lo, hi] with dyadic endpoints.  Treat as immutable.

    All operations are outward: the result interval contains every value the
    exact operation can take on the operand intervals.  Constructors on the
    library boundary use :meth:`checked`; internal arithmetic maintains the
    ordering invariant itself.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Dyadic, hi: Dyadic):
        self.lo = lo
        self.hi = hi

    @staticmethod
    def checked(lo: Dyadic, hi: Dyadic) -> "DyadicInterval":
        if lo > hi:
            raise ValueError(f"interval endpoints out of order: {lo!r} > {hi!r}")
        return DyadicInterval(lo, hi)

    @staticmethod
    def point(x: Dyadic) -> "DyadicInterval":
        return DyadicInterval(x, x)

    @staticmethod
    def zero() -> "DyadicInterval":
        return DyadicInterval.point(Dyadic.zero())

    @staticmethod
    def from_fraction(x: Fraction, k: int = 64) -> "DyadicInterval":
        """Point interval when x is dyadic, else a 2^-k outward enclosure."""
        den = x.denominator
        if den & (den - 1) == 0:
            return DyadicInterval.point(Dyadic.from_fraction_exact(x))
        return DyadicInterval(
            Dyadic.from_fraction_floor(x, k), Dyadic.from_fraction_ceil(x, k)
        )

    def to_fractions(self):
        return self.lo.to_fraction(), self.hi.to_fraction()

    def width(self) -> Fraction:
        return (self.hi - self.lo).to_fraction()

    def width_leq(self, k: int) -> bool:
        """width <= 2^-k, exactly."""
        return (self.hi - self.lo) <= Dyadic.pow2(-k)

    def midpoint(self) -> Fraction:
        return (self.lo.to_fraction() + self.hi.to_fraction()) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo.to_fraction() <= x <= self.hi.to_fraction()

    def excludes_zero(self) -> bool:
        return self.lo.sign() > 0 or self.hi.sign() < 0

    def strictly_positive(self) -> bool:
        return self.lo.sign() > 0

    def __neg__(self):
        return DyadicInterval(-self.hi, -self.lo)

    def __add__(self, other: "DyadicInterval"):
        return DyadicInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "DyadicInterval"):
        return DyadicInterval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "DyadicInterval"):
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        if a.m >= 0:  # self >= 0
            if c.m >= 0:
                return DyadicInterval(a * c, b * d)
            if d.m <= 0:
                return DyadicInterval(b * c, a * d)
            return DyadicInterval(b * c, b * d)
        if b.m <= 0:  # self <= 0
            if c.m >= 0:
                return DyadicInterval(a * d, b * c)
            if d.m <= 0:
                return DyadicInterval(b * d, a * c)
            return DyadicInterval(a * d, a * c)
        if c.m >= 0:  # self straddles 0, other >= 0
            return DyadicInterval(a * d, b * d)
        if d.m <= 0:
            return DyadicInterval(b * c, a * c)
        return DyadicInterval(min(a * d, b * c), max(a * c, b * d))

    def scale(self, c: Fraction, k: int = 64) -> "DyadicInterval":
        """Multiply by an exact rational, outward at 2^-k when c is not dyadic."""
        c = Fraction(c)
        den = c.denominator
        if den & (den - 1) == 0:  # dyadic factor: exact
            factor = Dyadic(c.numerator, -(den.bit_length() - 1))
            a, b = self.lo * factor, self.hi * factor
            return DyadicInterval(a, b) if c >= 0 else DyadicInterval(b, a)
        lo_c = self.lo.to_fraction() * c
        hi_c = self.hi.to_fraction() * c
        if c < 0:
            lo_c, hi_c = hi_c, lo_c
        return DyadicInterval(
            _fraction_floor_or_exact(lo_c, k), _fraction_ceil_or_exact(hi_c, k)
        )

    def outward(self, k: int) -> "DyadicInterval":
        """Round endpoints outward to the 2^-k grid (bounds mantissa growth)."""
        return DyadicInterval(self.lo.round_floor(k), self.hi.round_ceil(k))

    def widen(self, r: Dyadic) -> "DyadicInterval":
        return DyadicInterval(self.lo - r, self.hi + r)

    def abs(self) -> "DyadicInterval":
        if self.lo.sign() >= 0:
            return self
        if self.hi.sign() <= 0:
            return -self
        return DyadicInterval(Dyadic.zero(), max(-self.lo, self.hi))

    def intersects(self, other: "DyadicInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: "DyadicInterval") -> "DyadicInterval":
        return DyadicInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def clamp_nonnegative(self) -> "DyadicInterval":
        """Intersect with [0, inf); only valid when the true value is >= 0."""
        if self.lo.sign() >= 0:
            return self
        return DyadicInterval(Dyadic.zero(), max(self.hi, Dyadic.zero()))

    def div_int(self, n: int, k: int) -> "DyadicInterval":
        """Divide by a positive integer, outward at 2^-k."""
        return DyadicInterval(
            _dyadic_div_int_floor(self.lo, n, k), -_dyadic_div_int_floor(-self.hi, n, k)
        )

    def __repr__(self):
        return f"[{self.lo.to_decimal()},{self.hi.to_decimal()}]"


def _dyadic_div_int_floor(x: Dyadic, n: int, k: int) -> Dyadic:
    """floor(x / n) on the 2^-k grid, integer arithmetic only."""
    shift = x.e + k
    if shift >= 0:
        return Dyadic((x.m << shift) // n, -k)
    return Dyadic(x.m // (n << -shift), -k)


def _fraction_floor_or_exact(x: Fraction, k: int) -> Dyadic:
    den = x.denominator
    if den & (den - 1) == 0:
        return Dyadic.from_fraction_exact(x)
    return Dyadic.from_fraction_floor(x, k)


def _fraction_ceil_or_exact(x: Fraction, k: int) -> Dyadic:
    den = x.denominator
    if den & (den - 1) == 0:
        return Dyadic.from_fraction_exact(x)
    return Dyadic.from_fraction_ceil(x, k)


def format_interval(iv: DyadicInterval) -> str:
    return f"[{iv.lo.to_decimal()},{iv.hi.to_decimal()}]"


def parse_interval(text: str) -> DyadicInterval:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not an interval: {text!r}")
    lo_s, hi_s = text[1:-1].split(",")
    return DyadicInterval.checked(Dyadic.from_decimal(lo_s), Dyadic.from_decimal(hi_s))


def interval_div(x: DyadicInterval, y: DyadicInterval, k: int) -> DyadicInterval:
    """x / y, outward at 2^-k; y must exclude zero."""
    if not y.excludes_zero():
        raise ZeroDivisionError("divisor interval contains zero")
    x_lo, x_hi = x.to_fractions()
    y_lo, y_hi = y.to_fractions()
    quotients = [x_lo / y_lo, x_lo / y_hi, x_hi / y_lo, x_hi / y_hi]
    return DyadicInterval(
        _fraction_floor_or_exact(min(quotients), k),
        _fraction_ceil_or_exact(max(quotients), k),
    )


# ---------------------------------------------------------------------------
# complex boxes
# ---------------------------------------------------------------------------

class ComplexInterval:
    """A rectangle in C: re-interval x im-interval."""

    __slots__ = ("re", "im")

    def __init__(self, re: DyadicInterval, im: DyadicInterval):
        self.re = re
        self.im = im

    @staticmethod
    def point(z: GaussianRational, k: int = 64) -> "ComplexInterval":
        return ComplexInterval(
            DyadicInterval.from_fraction(z.re, k), DyadicInterval.from_fraction(z.im, k)
        )

    def excludes_zero(self) -> bool:
        return self.re.excludes_zero() or self.im.excludes_zero()

    def center(self) -> GaussianRational:
        return GaussianRational(self.re.midpoint(), self.im.midpoint())

    def __sub__(self, other: "ComplexInterval"):
        return ComplexInterval(self.re - other.re, self.im - other.im)

    def __add__(self, other: "ComplexInterval"):
        return ComplexInterval(self.re + other.re, self.im + other.im)

    def mul_scalar(self, z: GaussianRational, k: int = 64) -> "ComplexInterval":
        re = self.re.scale(z.re, k) - self.im.scale(z.im, k)
        im = self.re.scale(z.im, k) + self.im.scale(z.re, k)
        return ComplexInterval(re, im)

    def abs_sq_interval(self) -> DyadicInterval:
        re_sq = _square_interval(self.re)
        im_sq = _square_interval(self.im)
        return re_sq + im_sq

    def min_abs_sq(self) -> Fraction:
        """Exact minimum of |z|^2 over the box."""
        return self.abs_sq_interval().lo.to_fraction()

    def __repr__(self):
        return f"ComplexInterval({self.re!r}, {self.im!r})"


def _square_interval(iv: DyadicInterval) -> DyadicInterval:
    if iv.lo.sign() >= 0:
        return DyadicInterval(iv.lo * iv.lo, iv.hi * iv.hi)
    if iv.hi.sign() <= 0:
        return DyadicInterval(iv.hi * iv.hi, iv.lo * iv.lo)
    return DyadicInterval(Dyadic.zero(), max(iv.lo * iv.lo, iv.hi * iv.hi))


# ---------------------------------------------------------------------------
# integer roots and exact powers
# ---------------------------------------------------------------------------

def integer_root_floor(n: int, c: int) -> int:
    """floor(n^(1/c)) for n >= 0, c >= 1."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1) or c == 1:
        return n
    x = 1 << (-(-n.bit_length() // c))  # upper-ish seed
    while True:
        y = ((c - 1) * x + n // x ** (c - 1)) // c
        if y >= x:
            break
        x = y
    while x ** c > n:
        x -= 1
    return x


def _exact_rational_power(x: Fraction, alpha: Fraction):
    """x^alpha as an exact Fraction when one exists, else None.  x >= 0."""
    if x == 0:
        return Fraction(0)
    a, c = alpha.numerator, alpha.denominator
    num, den = x.numerator ** a, x.denominator ** a
    rn = integer_root_floor(num, c)
    if rn ** c != num:
        return None
    rd = integer_root_floor(den, c)
    if rd ** c != den:
        return None
    return Fraction(rn, rd)


# ---------------------------------------------------------------------------
# logarithm, exponential, arctangent (interval, self-validating)
# ---------------------------------------------------------------------------

def _mag_bound_bits(u: Fraction) -> int:
    """Largest b with |u| <= 2^-b (0 when |u| > 1/2); bit-length arithmetic."""
    num, den = abs(u.numerator), u.denominator
    if num == 0:
        return 1 << 30
    b = den.bit_length() - num.bit_length()
    # 2^(num.bl - 1) <= num, den < 2^den.bl  =>  |u| > 2^(num.bl - den.bl)
    # refine: |u| <= 2^-b iff num << b <= den
    while (num << b) > den:
        b -= 1
    while (num << (b + 1)) <= den:
        b += 1
    return b


def _atanh_series(u: Fraction, w: int) -> DyadicInterval:
    """atanh(u) = sum u^(2j+1)/(2j+1), rigorous for |u| <= 1/2."""
    if u == 0:
        return DyadicInterval.zero()
    if abs(u) > Fraction(1, 2):
        raise ValueError("series argument out of range")
    b = _mag_bound_bits(u)  # >= 1
    # tail after J terms: |u|^(2J+1)/(1-u^2) <= 2^(-b(2J+1)+1); want <= 2^-(w+4)
    terms = max(1, -(-(w + 5 - b) // (2 * b)))
    u_iv = DyadicInterval.from_fraction(u, w + 8)
    u2 = (u_iv * u_iv).outward(w + 8)
    term = u_iv
    total = term
    for j in range(1, terms):
        term = (term * u2).outward(w + 8)
        total = (total + term.div_int(2 * j + 1, w + 8)).outward(w + 8)
    rho = Dyadic.pow2(-(b * (2 * terms + 1) - 1))
    return total.widen(rho)


_LN2_CACHE: dict[int, DyadicInterval] = {}


def _ln2(w: int) -> DyadicInterval:
    iv = _LN2_CACHE.get(w)
    if iv is None:
        iv = _atanh_series(Fraction(1, 3), w).scale(Fraction(2))
        _LN2_CACHE[w] = iv
    return iv


def _ln_fraction(x: Fraction, w: int) -> DyadicInterval:
    """ln x for rational x > 0, working precision w."""
    if x <= 0:
        raise ValueError("logarithm of nonpositive value")
    # write x = y * 2^e with y in [1, 2)
    e = x.numerator.bit_length() - x.denominator.bit_length()
    two_e = Fraction(2) ** e
    if two_e > x:
        e -= 1
        two_e /= 2
    y = x / two_e
    u = (y - 1) / (y + 1)  # in [0, 1/3)
    body = _atanh_series(u, w).scale(Fraction(2))
    if e == 0:
        return body
    return (body + _ln2(w).scale(Fraction(e))).outward(w + 4)


def _exp_dyadic(t: Dyadic, w: int) -> DyadicInterval:
    """e^t for a dyadic t, working precision w."""
    if t.is_zero():
        return DyadicInterval.point(Dyadic.one())
    # halve until |t'| <= 1/2, then Taylor, then square back up
    mag_bits = t.m.bit_length() + t.e  # |t| < 2^mag_bits
    s = max(0, mag_bits + 1)
    inner = w + 2 * s + 12
    tp = Dyadic(t.m, t.e - s)
    tp_iv = DyadicInterval.point(tp)
    term = DyadicInterval.point(Dyadic.one())
    total = term
    j = 1
    fact_shifted = 2  # j! * 2^j; tail after j terms <= 2 * 2^-j / j!
    threshold = 1 << (inner + 3)
    while fact_shifted < threshold:
        term = (term * tp_iv).div_int(j, inner + 8)
        total = (total + term).outward(inner + 8)
        j += 1
        fact_shifted *= 2 * j
    rho = Dyadic.pow2(-(inner + 2))
    total = total.widen(rho)
    for _ in range(s):
        total = (total * total).outward(inner + 8)
    return total


def _exp_interval(t: DyadicInterval, w: int) -> DyadicInterval:
    lo = _exp_dyadic(t.lo, w).lo
    hi = _exp_dyadic(t.hi, w).hi
    return DyadicInterval(lo, hi)


def pow_fraction(x: Fraction, alpha: Fraction, k: int) -> DyadicInterval:
    """x^alpha for rational x >= 0, alpha > 0: contains the value, width <= 2^-k.

    Exact rational results (perfect powers) come back as point or near-point
    intervals; everything else goes through exp(alpha * ln x).
    """
    if x < 0:
        raise ValueError("negative base")
    if x == 0:
        return DyadicInterval.zero()
    if x == 1:
        return DyadicInterval.point(Dyadic.one())
    exact = _exact_rational_power(x, alpha)
    if exact is not None:
        return DyadicInterval.from_fraction(exact, k + 1)
    w = k + 8
    while True:
        ln_iv = _ln_fraction(x, w)
        t = ln_iv.scale(alpha, w + 8)
        result = _exp_interval(t, w)
        if result.width_leq(k):
            return result
        w += max(8, w // 2)


def pow_interval(X: DyadicInterval, alpha: Fraction, k: int) -> DyadicInterval:
    """t^alpha over a nonnegative interval (monotone in t for alpha > 0)."""
    lo_fr, hi_fr = X.to_fractions()
    if lo_fr < 0:
        lo_fr = Fraction(0)
    lo = pow_fraction(lo_fr, alpha, k + 1).lo if lo_fr > 0 else Dyadic.zero()
    hi = pow_fraction(hi_fr, alpha, k + 1).hi if hi_fr > 0 else Dyadic.zero()
    if lo > hi:  # can only happen via rounding of a near-point input
        lo = hi
    return DyadicInterval(lo, hi)


def abs_pow(z: GaussianRational, p: Exponent, k: int) -> DyadicInterval:
    """|z|^p as an interval of width <= 2^-k containing the exact value."""
    return pow_fraction(z.abs_sq(), p.half, k)


def abs_pow_box(box: ComplexInterval, p: Exponent, k: int) -> DyadicInterval:
    """Range enclosure of |z|^p over a complex box."""
    return pow_interval(box.abs_sq_interval(), p.half, k)


def _arctan_small(u: Fraction, w: int) -> DyadicInterval:
    """arctan(u) by alternating series, rigorous for |u| <= 1/2."""
    if u == 0:
        return DyadicInterval.zero()
    if abs(u) > Fraction(1, 2):
        raise ValueError("series argument out of range")
    b = _mag_bound_bits(u)  # >= 1
    # alternating: remainder <= |u|^(2J+1)/(2J+1) <= 2^(-b(2J+1))
    terms = max(1, -(-(w + 4 - b) // (2 * b)))
    u_iv = DyadicInterval.from_fraction(u, w + 8)
    u2 = (u_iv * u_iv).outward(w + 8)
    term = u_iv
    total = term
    for j in range(1, terms):
        term = (term * u2).outward(w + 8)
        contrib = term.div_int(2 * j + 1, w + 8)
        total = (total + (-contrib if j % 2 else contrib)).outward(w + 8)
    rho = Dyadic.pow2(-(b * (2 * terms + 1)))
    return total.widen(rho)


_PI_CACHE: dict[int, DyadicInterval] = {}
_ATAN_HALF_CACHE: dict[int, DyadicInterval] = {}


def pi_interval(w: int) -> DyadicInterval:
    """pi = 16 arctan(1/5) - 4 arctan(1/239)."""
    iv = _PI_CACHE.get(w)
    if iv is None:
        a = _arctan_small(Fraction(1, 5), w + 6).scale(Fraction(16))
        b = _arctan_small(Fraction(1, 239), w + 6).scale(Fraction(4))
        iv = (a - b).outward(w + 2)
        _PI_CACHE[w] = iv
    return iv


def _atan_half(w: int) -> DyadicInterval:
    iv = _ATAN_HALF_CACHE.get(w)
    if iv is None:
        iv = _arctan_small(Fraction(1, 2), w)
        _ATAN_HALF_CACHE[w] = iv
    return iv


def _arctan_raw(x: Fraction, w: int) -> DyadicInterval:
    if x < 0:
        return -_arctan_raw(-x, w)
    if x > 1:
        # arctan x = pi/2 - arctan(1/x)
        half_pi = pi_interval(w).scale(Fraction(1, 2), w + 4)
        return (half_pi - _arctan_raw(1 / x, w)).outward(w + 2)
    if x > Fraction(1, 2):
        # arctan x = arctan(1/2) + arctan((x - 1/2)/(1 + x/2)); residual <= 1/3
        u = (x - Fraction(1, 2)) / (1 + x / 2)
        return (_atan_half(w) + _arctan_small(u, w)).outward(w + 2)
    return _arctan_small(x, w)


def arctan_interval(x: Fraction, k: int) -> DyadicInterval:
    """arctan(x): interval containing the value, width <= 2^-k."""
    if x == 0:
        return DyadicInterval.zero()
    w = k + 6
    while True:
        iv = _arctan_raw(x, w)
        if iv.width_leq(k):
            return iv
        w += max(8, w // 2)


# ---------------------------------------------------------------------------
# unique-zero search on a disk
# ---------------------------------------------------------------------------

IntervalFunction = Callable[[ComplexInterval, int], Union[DyadicInterval, ComplexInterval]]

ZERO_FIND_DEPTH_BUDGET = 64


def zero_find(
    func: IntervalFunction,
    radius: Fraction,
    k: int,
    depth_budget: int = ZERO_FIND_DEPTH_BUDGET,
) -> GaussianRational:
    """Locate the unique zero of an interval-evaluable function on a disk.

    ``func(box, prec)`` must return an interval (real or complex) containing
    every value of the function on ``box``.  The square around the disk
    D(0; radius) is subdivided 4x4 per level; boxes whose image excludes zero
    and boxes wholly outside the disk are discarded; the search stops once all
    survivors fit in a 2^-k ball and returns the lexicographically least
    surviving box center (lowest re, then lowest im).

    Raises NoSurvivorError when every box is excluded (so the unique-zero
    precondition was violated) and BudgetExceeded when the depth budget runs
    out before the survivors contract.
    """
    r_sq = radius * radius
    hi = Dyadic.from_fraction_ceil(radius, 8)
    lo = -hi
    boxes = [ComplexInterval(DyadicInterval(lo, hi), DyadicInterval(lo, hi))]
    for depth in range(depth_budget):
        prec = k + 4 + 2 * depth
        survivors = []
        for box in boxes:
            if box.min_abs_sq() > r_sq:
                continue
            image = func(box, prec)
            if image.excludes_zero():
                continue
            survivors.append(box)
        if not survivors:
            raise NoSurvivorError(
                "all boxes excluded: no zero of the function in the disk"
            )
        re_span = max(b.re.hi for b in survivors) - min(b.re.lo for b in survivors)
        im_span = max(b.im.hi for b in survivors) - min(b.im.lo for b in survivors)
        if re_span <= Dyadic.pow2(-(k + 1)) and im_span <= Dyadic.pow2(-(k + 1)):
            centers = sorted(
                (b.center() for b in survivors), key=lambda z: (z.re, z.im)
            )
            return centers[0]
        boxes = [piece for box in survivors for piece in _subdivide(box)]
    raise BudgetExceeded(
        f"zero_find: survivors did not contract within {depth_budget} levels"
    )


def _subdivide(box: ComplexInterval):
    return [
        ComplexInterval(re_piece, im_piece)
        for re_piece in _split4(box.re)
        for im_piece in _split4(box.im)
    ]


def _split4(iv: DyadicInterval):
    # quarters of a dyadic interval are exact dyadics: no rounding needed
    step = Dyadic((iv.hi - iv.lo).m, (iv.hi - iv.lo).e - 2)
    cuts = [iv.lo]
    for _ in range(3):
        cuts.append(cuts[-1] + step)
    cuts.append(iv.hi)
    return [DyadicInterval(a, b) for a, b in zip(cuts, cuts[1:])]
