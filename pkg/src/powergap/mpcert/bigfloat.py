"""Arbitrary-precision binary floats with directed rounding.

A ``BigFloat`` is sign * man * 2**exp with ``man`` odd (trailing zero bits
stripped), ``man.bit_length() <= prec``, and ``man == 0`` iff ``sign == 0``.
Every rounding in the package happens here, and only here.  Rounding is
directed: ``'d'`` rounds toward -inf, ``'u'`` toward +inf.  Directed
rounding at precision p is *correct* relative to the p-bit grid, and the
grids are nested across precisions; both facts are what the enclosure
nesting invariants of the interval layer rest on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DOWN = "d"
UP = "u"


def _strip(man: int, exp: int) -> tuple[int, int]:
    """Remove trailing zero bits of a positive mantissa."""
    if man == 0:
        return 0, 0
    t = (man & -man).bit_length() - 1
    if t:
        man >>= t
        exp += t
    return man, exp


@dataclass(frozen=True, slots=True)
class BigFloat:
    sign: int  # -1, 0, +1
    man: int  # positive, odd (0 iff sign == 0)
    exp: int  # binary exponent: value = sign * man * 2**exp
    prec: int  # precision in bits this value was rounded to

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(prec: int = 64) -> "BigFloat":
        return BigFloat(0, 0, 0, prec)

    @staticmethod
    def from_int(v: int, prec: int = 0, mode: str = DOWN) -> "BigFloat":
        """Exact if prec == 0 or v fits; otherwise rounded as directed."""
        if v == 0:
            return BigFloat.zero(prec or 64)
        if prec == 0:
            prec = max(64, v.bit_length())
        return _round_signed(v, 0, prec, mode)

    @staticmethod
    def from_man_exp(num: int, exp: int, prec: int, mode: str) -> "BigFloat":
        return _round_signed(num, exp, prec, mode)

    @staticmethod
    def from_fraction(f: Fraction, prec: int, mode: str) -> "BigFloat":
        return _div(f.numerator, 0, f.denominator, 0, prec, mode)

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def signed_man(self) -> int:
        return self.sign * self.man

    def to_fraction(self) -> Fraction:
        """Exact value (every BigFloat is a dyadic rational)."""
        if self.sign == 0:
            return Fraction(0)
        if self.exp >= 0:
            return Fraction(self.sign * self.man << self.exp)
        return Fraction(self.sign * self.man, 1 << -self.exp)

    def magnitude_exp(self) -> int:
        """e with 2**(e-1) <= |x| < 2**e; only valid for nonzero values."""
        return self.exp + self.man.bit_length()

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        m, e = self.man, self.exp
        b = m.bit_length()
        if b > 64:
            m >>= b - 64
            e += b - 64
        try:
            return float(self.sign * m) * 2.0**e
        except OverflowError:
            return float("inf") * self.sign

    def __repr__(self) -> str:
        if self.sign == 0:
            return "BigFloat(0)"
        return f"BigFloat({self.sign * self.man}*2^{self.exp}, prec={self.prec})"

    # -- exact comparisons -------------------------------------------------

    def cmp(self, other: "BigFloat") -> int:
        """Exact three-way comparison; never materializes huge shifts."""
        if self.sign != other.sign:
            return -1 if self.sign < other.sign else 1
        if self.sign == 0:
            return 0
        s = self.sign
        ma, ea = self.man, self.exp
        mb, eb = other.man, other.exp
        ta = ea + ma.bit_length()
        tb = eb + mb.bit_length()
        if ta != tb:
            return s if ta > tb else -s
        # same binade: align over a bounded shift
        d = ea - eb
        if d >= 0:
            r = (ma << d) - mb
        else:
            r = ma - (mb << -d)
        if r == 0:
            return 0
        return s if r > 0 else -s

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def neg(self) -> "BigFloat":
        return BigFloat(-self.sign, self.man, self.exp, self.prec)

    def abs(self) -> "BigFloat":
        return BigFloat(abs(self.sign), self.man, self.exp, self.prec)


def _round_signed(num: int, exp: int, prec: int, mode: str, sticky: int = 0) -> BigFloat:
    """Round num * 2**exp (plus an infinitesimal of sign `sticky`) to prec bits.

    `sticky` stands for a nonzero quantity of known sign whose magnitude is
    strictly below one unit in the last retained place; callers guarantee
    this.  Directed rounding on magnitudes: toward -inf for 'd', toward
    +inf for 'u'.
    """
    assert prec >= 1
    if num == 0:
        assert sticky == 0, "sticky rounding needs a dominant term"
        return BigFloat(0, 0, 0, prec)
    if num < 0:
        mag = -num
        m_mode = UP if mode == DOWN else DOWN
        s = -sticky
        sign = -1
    else:
        mag = num
        m_mode = mode
        s = sticky
        sign = 1
    # m_mode 'd' now means toward zero (floor of magnitude), 'u' away from zero
    b = mag.bit_length()
    shift = b - prec
    if shift <= 0:
        if (m_mode == DOWN and s < 0) or (m_mode == UP and s > 0):
            # nudge off the grid in the sticky direction
            mag = (mag << -shift + 1) + (1 if m_mode == UP else -1)
            exp += shift - 1
            mag, exp = _strip(mag, exp)
            if mag.bit_length() > prec:  # decrement may not shorten; re-round
                return _round_signed(sign * mag, exp, prec, mode)
            return BigFloat(sign, mag, exp, prec)
        mag, exp = _strip(mag, exp)
        return BigFloat(sign, mag, exp, prec)
    q, r = divmod(mag, 1 << shift)
    exp += shift
    inexact_up = r != 0 or s > 0
    inexact_dn = r == 0 and s < 0
    if m_mode == UP and inexact_up:
        q += 1
    elif m_mode == DOWN and inexact_dn:
        q -= 1
    q, exp = _strip(q, exp)
    if q.bit_length() > prec:
        return _round_signed(sign * q, exp, prec, mode)
    return BigFloat(sign, q, exp, prec)


# -- directed dyadic arithmetic on (signed mantissa, exponent) pairs --------


def _add(xm: int, xe: int, ym: int, ye: int, prec: int, mode: str) -> BigFloat:
    """Directed-rounded xm*2^xe + ym*2^ye; huge exponent gaps go through a
    sticky bit instead of materializing the shift."""
    if xm == 0:
        return _round_signed(ym, ye, prec, mode)
    if ym == 0:
        return _round_signed(xm, xe, prec, mode)
    xt = xe + abs(xm).bit_length()
    yt = ye + abs(ym).bit_length()
    if xt < yt:
        xm, xe, xt, ym, ye, yt = ym, ye, yt, xm, xe, xt
    # now |x| >= |y|/2; y is negligible when its magnitude sits far below
    # x's last retained bit
    if yt < xt - (prec + 8):
        return _round_signed(xm, xe, prec, mode, sticky=1 if ym > 0 else -1)
    d = xe - ye  # bounded: xe - ye = (xt - yt) + (len_y - len_x)
    if d >= 0:
        num = (xm << d) + ym
        e = ye
    else:
        num = xm + (ym << -d)
        e = xe
    return _round_signed(num, e, prec, mode)


def _mul(xm: int, xe: int, ym: int, ye: int, prec: int, mode: str) -> BigFloat:
    return _round_signed(xm * ym, xe + ye, prec, mode)


def _div(xm: int, xe: int, ym: int, ye: int, prec: int, mode: str) -> BigFloat:
    """Directed-rounded (xm*2^xe) / (ym*2^ye); ym must be nonzero."""
    assert ym != 0
    if xm == 0:
        return BigFloat(0, 0, 0, prec)
    sign = 1
    if xm < 0:
        xm = -xm
        sign = -sign
    if ym < 0:
        ym = -ym
        sign = -sign
    # scale numerator so the quotient carries prec + 2 significant bits
    k = prec + 2 - (xm.bit_length() - ym.bit_length())
    if k > 0:
        q, r = divmod(xm << k, ym)
        e = xe - ye - k
    else:
        q, r = divmod(xm, ym << -k)
        e = xe - ye - k
    sticky = 1 if r else 0
    return _round_signed(sign * q, e, prec, mode, sticky=sign * sticky)


def add(a: BigFloat, b: BigFloat, prec: int, mode: str) -> BigFloat:
    return _add(a.signed_man(), a.exp, b.signed_man(), b.exp, prec, mode)


def sub(a: BigFloat, b: BigFloat, prec: int, mode: str) -> BigFloat:
    return _add(a.signed_man(), a.exp, -b.signed_man(), b.exp, prec, mode)


def mul(a: BigFloat, b: BigFloat, prec: int, mode: str) -> BigFloat:
    return _mul(a.signed_man(), a.exp, b.signed_man(), b.exp, prec, mode)


def div(a: BigFloat, b: BigFloat, prec: int, mode: str) -> BigFloat:
    return _div(a.signed_man(), a.exp, b.signed_man(), b.exp, prec, mode)


def sqrt(a: BigFloat, prec: int, mode: str) -> BigFloat:
    """Directed square root of a nonnegative BigFloat."""
    assert a.sign >= 0
    if a.sign == 0:
        return BigFloat(0, 0, 0, prec)
    m, e = a.man, a.exp
    # pad to at least 2*prec + 6 bits, keeping the exponent even
    pad = max(0, 2 * prec + 6 - m.bit_length())
    if (e - pad) % 2:
        pad += 1
    M = m << pad
    r = math.isqrt(M)
    exact = r * r == M
    return _round_signed(r, (e - pad) // 2, prec, mode, sticky=0 if exact else 1)


def from_int_pow(base: int, k: int, prec: int, mode: str) -> BigFloat:
    """Directed base**k for integer base >= 1 and any integer k."""
    if k >= 0:
        return _round_signed(base**k, 0, prec, mode)
    return _div(1, 0, base**-k, 0, prec, mode)
