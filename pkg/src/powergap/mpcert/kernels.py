"""Certified elementary-function kernels over exact dyadic arguments.

Everything here works in integer fixed point at scale 2**w: a real r is
carried as a pair of ints (lo, hi) with lo <= r*2**w <= hi.  Divisions are
floor/ceil so interval registers stay certified, series tails are bounded
by explicit alternating/geometric estimates, and every kernel widens its
final register pair by at least two extra units.  The two-unit rule makes
enclosures strictly nested across working precisions, which the interval
layer's containment invariants rely on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError
from .bigfloat import DOWN, UP, BigFloat, _round_signed


def _fdiv(a: int, b: int) -> int:
    """Floor division (b > 0)."""
    return a // b


def _cdiv(a: int, b: int) -> int:
    """Ceiling division (b > 0)."""
    return -((-a) // b)


def _iv_mul(al: int, ah: int, bl: int, bh: int, w: int) -> tuple[int, int]:
    """Product of fixed-point intervals, outward at scale w."""
    ps = (al * bl, al * bh, ah * bl, ah * bh)
    return _fdiv(min(ps), 1 << w), _cdiv(max(ps), 1 << w)


def _floor_scaled(m: int, e: int) -> int:
    """floor(m * 2**e) for a signed integer m."""
    return m << e if e >= 0 else m >> -e


def _ceil_scaled(m: int, e: int) -> int:
    return m << e if e >= 0 else _cdiv(m, 1 << -e)


# -- cached constants ---------------------------------------------------------


@lru_cache(maxsize=64)
def ln2_fixed(w: int) -> tuple[int, int]:
    """Enclosure of ln(2)*2**w from 2*atanh(1/3) (positive series)."""
    one = 1 << w
    lo = hi = 0
    i = 0
    p = 3  # 3**(2i+1)
    while True:
        t = _fdiv(2 * one, (2 * i + 1) * p)
        lo += t
        hi += t + 1
        if t < 2:
            hi += 2  # geometric tail, ratio 1/9
            break
        i += 1
        p *= 9
    return lo - 2, hi + 2


def _atan_inv_fixed(q: int, w: int) -> tuple[int, int]:
    """Enclosure of atan(1/q)*2**w for integer q >= 2 (alternating series)."""
    one = 1 << w
    lo = hi = 0
    i = 0
    p = q  # q**(2i+1)
    while True:
        t = _fdiv(one, (2 * i + 1) * p)
        if i % 2 == 0:
            lo += t
            hi += t + 1
        else:
            lo -= t + 1
            hi -= t
        if t == 0:
            break
        i += 1
        p *= q * q
    return lo - 2, hi + 2


@lru_cache(maxsize=64)
def pi_fixed(w: int) -> tuple[int, int]:
    """Machin: pi = 16*atan(1/5) - 4*atan(1/239)."""
    a5l, a5h = _atan_inv_fixed(5, w + 8)
    a9l, a9h = _atan_inv_fixed(239, w + 8)
    lo = 16 * a5l - 4 * a9h
    hi = 16 * a5h - 4 * a9l
    return _fdiv(lo, 256) - 2, _cdiv(hi, 256) + 2


def k_pi(prec: int) -> tuple[BigFloat, BigFloat]:
    w = prec + 32
    lo, hi = pi_fixed(w)
    return _round_signed(lo, -w, prec, DOWN), _round_signed(hi, -w, prec, UP)


# -- exp ----------------------------------------------------------------------


def _exp_series_point(r: int, w: int) -> tuple[int, int]:
    """Enclosure of exp(r/2**w)*2**w for |r| <= (3/4)*2**w."""
    one = 1 << w
    sl = sh = one
    tl = th = one
    j = 0
    while True:
        j += 1
        prods = (tl * r, th * r)
        d = j << w
        tl = _fdiv(min(prods), d)
        th = _cdiv(max(prods), d)
        sl += tl
        sh += th
        if max(abs(tl), abs(th)) <= 2:
            break
    # remaining terms: ratio <= 3/4 starting below 3 units
    return sl - 12, sh + 12


def k_exp(x: BigFloat, prec: int) -> tuple[BigFloat, BigFloat]:
    """Certified enclosure of exp(x) for an exact dyadic x."""
    if x.is_zero:
        one = BigFloat(1, 1, 0, prec)
        return one, one
    w = prec + 32
    xt = x.magnitude_exp()
    if xt < -(w + 8):
        # exp(x) sits within one ulp of 1, on the side of sign(x)
        return (
            _round_signed(1, 0, prec, DOWN, sticky=min(x.sign, 0)),
            _round_signed(1, 0, prec, UP, sticky=max(x.sign, 0)),
        )
    s = max(0, math.isqrt(w) - 6)
    wi = w + s + 24
    xm, xe = x.signed_man(), x.exp
    if xt <= -1:
        big_i = 0
        rl = _floor_scaled(xm, xe + wi)
        rh = _ceil_scaled(xm, xe + wi)
    else:
        # x = big_i*ln2 + r with |r| well below 3/4
        w2 = wi + xt + 8
        l2l, l2h = ln2_fixed(w2)
        xf = Fraction(xm, 1) * Fraction(2) ** xe
        big_i = math.floor(xf * (1 << w2) / l2l + Fraction(1, 2))
        cands = []
        for l2 in (l2l, l2h):
            v = xf - Fraction(big_i * l2, 1 << w2)
            cands.append(v)
        vlo, vhi = min(cands), max(cands)
        rl = math.floor(vlo * (1 << wi))
        rh = math.ceil(vhi * (1 << wi))
    assert max(abs(rl), abs(rh)) <= ((1 << wi) * 3) // 4 + 4, "reduction out of range"
    # series on r/2**s, then square s times
    rl = _fdiv(rl, 1 << s)
    rh = _cdiv(rh, 1 << s)
    lo, _ = _exp_series_point(rl, wi)
    _, hi = _exp_series_point(rh, wi)
    for _ in range(s):
        lo, hi = _iv_mul(lo, hi, lo, hi, wi)
    lo -= 2
    hi += 2
    assert lo > 0
    return (
        _round_signed(lo, big_i - wi, prec, DOWN),
        _round_signed(hi, big_i - wi, prec, UP),
    )


# -- log ----------------------------------------------------------------------


def k_log(x: BigFloat, prec: int) -> tuple[BigFloat, BigFloat]:
    """Certified enclosure of ln(x) for an exact dyadic x > 0."""
    if x.sign <= 0:
        raise DomainError("log of a nonpositive value")
    w = prec + 32
    t = max(1, math.isqrt(w) // 4)
    wi = w + 2 * t + 24
    one = 1 << wi
    # normalize x = m * 2**k, m in [1, 2)
    k = x.magnitude_exp() - 1
    e2 = x.exp - k + wi
    if e2 >= 0:
        ml = mh = x.man << e2
    else:
        ml = x.man >> -e2
        mh = ml + (1 if x.man & ((1 << -e2) - 1) else 0)
    # t square roots pull m toward 1; ln x = 2**t * ln(m**(1/2**t)) + k ln 2
    for _ in range(t):
        ml = math.isqrt(ml << wi)
        v = mh << wi
        r = math.isqrt(v)
        mh = r if r * r == v else r + 1
    rl = _fdiv((ml - one) << wi, mh + one)
    rh = _cdiv((mh - one) << wi, ml + one)
    if rl < 0:
        rl = 0
    sl = sh = 0
    pl, ph = rl, rh
    i = 0
    while True:
        sl += _fdiv(pl, 2 * i + 1)
        sh += _cdiv(ph, 2 * i + 1)
        if ph <= 2:
            sh += 3  # geometric tail, ratio r**2 <= 1/9
            break
        i += 1
        pl, ph = _iv_mul(pl, ph, rl, rh, wi)
        pl, ph = _iv_mul(pl, ph, rl, rh, wi)
    lnl = (sl << (t + 1)) - (1 << (t + 1))
    lnh = (sh << (t + 1)) + (1 << (t + 1))
    l2l, l2h = ln2_fixed(wi)
    if k >= 0:
        lo, hi = lnl + k * l2l, lnh + k * l2h
    else:
        lo, hi = lnl + k * l2h, lnh + k * l2l
    return (
        _round_signed(lo - 2, -wi, prec, DOWN),
        _round_signed(hi + 2, -wi, prec, UP),
    )


# -- sin / cos ----------------------------------------------------------------


def _sin_series_point(r: int, w: int) -> tuple[int, int]:
    """Enclosure of sin(r/2**w)*2**w for |r| <= 0.8*2**w."""
    sl = sh = 0
    tl = th = r
    j = 1
    while True:
        sl += min(tl, th)
        sh += max(tl, th)
        if max(abs(tl), abs(th)) <= 2:
            break
        d = ((2 * j) * (2 * j + 1)) << (2 * w)
        nxt = (tl * r * r, th * r * r)
        tl = _fdiv(-max(nxt), d)
        th = _cdiv(-min(nxt), d)
        j += 1
    return sl - 4, sh + 4


def _cos_series_point(r: int, w: int) -> tuple[int, int]:
    """Enclosure of cos(r/2**w)*2**w for |r| <= 0.8*2**w."""
    one = 1 << w
    sl = sh = 0
    tl = th = one
    j = 0
    while True:
        sl += min(tl, th)
        sh += max(tl, th)
        if max(abs(tl), abs(th)) <= 2:
            break
        d = ((2 * j + 1) * (2 * j + 2)) << (2 * w)
        nxt = (tl * r * r, th * r * r)
        tl = _fdiv(-max(nxt), d)
        th = _cdiv(-min(nxt), d)
        j += 1
    return sl - 4, sh + 4


def k_sin_cos(
    xl: BigFloat, xh: BigFloat, prec: int
) -> tuple[tuple[BigFloat, BigFloat], tuple[BigFloat, BigFloat]]:
    """Certified enclosures of (sin, cos) over [xl, xh].

    Falls back to [-1, 1] whenever the quadrant of the reduced argument
    cannot be certified; the fallback contains every tighter answer, so
    precision nesting is preserved.
    """
    w = prec + 32
    m1 = BigFloat(-1, 1, 0, prec)
    p1 = BigFloat(1, 1, 0, prec)
    full = ((m1, p1), (m1, p1))
    mag = max(
        xl.magnitude_exp() if not xl.is_zero else 0,
        xh.magnitude_exp() if not xh.is_zero else 0,
        0,
    )
    if mag > (1 << 20):
        return full
    w2 = w + mag + 16
    pl, ph = pi_fixed(w2)
    fl = xl.to_fraction()
    fh = xh.to_fraction()
    # q = round(x*2/pi); pick the denominator bound per sign for soundness
    def _u(f: Fraction, p_lo: int, p_hi: int) -> Fraction:
        den = p_hi if f >= 0 else p_lo
        return f * 2 * (1 << w2) / den

    q_lo = math.floor(min(_u(fl, pl, ph), _u(fl, ph, pl)) + Fraction(1, 2))
    q_hi = math.floor(max(_u(fh, pl, ph), _u(fh, ph, pl)) + Fraction(1, 2))
    if q_lo != q_hi:
        return full
    q = q_lo
    pi_iv = (Fraction(pl, 1 << w2), Fraction(ph, 1 << w2))
    r_cands_lo = [fl - q * p / 2 for p in pi_iv]
    r_cands_hi = [fh - q * p / 2 for p in pi_iv]
    rl = math.floor(min(r_cands_lo) * (1 << w))
    rh = math.ceil(max(r_cands_hi) * (1 << w))
    if max(abs(rl), abs(rh)) > ((1 << w) * 4) // 5:
        return full
    sin_r = (_sin_series_point(rl, w)[0], _sin_series_point(rh, w)[1])
    cos_lo = _cos_series_point(max(abs(rl), abs(rh)), w)[0]
    cos_hi = (1 << w) if rl <= 0 <= rh else _cos_series_point(min(abs(rl), abs(rh)), w)[1]
    cos_r = (cos_lo, cos_hi)

    def neg(iv):
        return (-iv[1], -iv[0])

    table_sin = {0: sin_r, 1: cos_r, 2: neg(sin_r), 3: neg(cos_r)}
    table_cos = {0: cos_r, 1: neg(sin_r), 2: neg(cos_r), 3: sin_r}
    out = []
    one = 1 << w
    for lo, hi in (table_sin[q % 4], table_cos[q % 4]):
        lo = max(lo - 2, -one)
        hi = min(hi + 2, one)
        out.append(
            (
                _round_signed(lo, -w, prec, DOWN) if lo else BigFloat.zero(prec),
                _round_signed(hi, -w, prec, UP) if hi else BigFloat.zero(prec),
            )
        )
    return out[0], out[1]
