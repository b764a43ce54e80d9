"""Exact arithmetic in the degree-8 real field K = Q(sqrt2, s), s = sqrt(5 - sqrt5).

The minimal polynomial of s is s^4 - 10 s^2 + 20, which is Eisenstein at 5.
Everything the dodecahedron computations need lives in K:

    sqrt5          = 5 - s^2
    sqrt(5+sqrt5)  = 3 s - s^3 / 2          (so s * sqrt(5+sqrt5) = sqrt20)
    cos(pi/5)      = (1+sqrt5)/4 ... etc.

An element is stored as 8 integers over a common positive denominator, in
the basis (1, s, s^2, s^3, r, rs, rs^2, rs^3) with r = sqrt2.  Zero testing
is coordinate-wise; sign determination uses integer interval enclosures of
the basis values at adaptive precision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


class DivisionByZero(ZeroDivisionError):
    """Division by an exact zero field element."""


class InvalidRadicand(ValueError):
    """sqrt constructor got a negative or unrepresentable radicand."""


class PrecisionExhausted(RuntimeError):
    """Interval sign refinement hit the precision cap (should not happen)."""


_SIGN_START_BITS = 128
_SIGN_MAX_BITS = 8192


def _gcd8(n, d):
    g = d
    for v in n:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _mul4(a, b):
    """Multiply two degree<4 integer polynomials in s, reduce by s^4 = 10 s^2 - 20."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    z0 = a0 * b0
    z1 = a0 * b1 + a1 * b0
    z2 = a0 * b2 + a1 * b1 + a2 * b0
    z3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
    z4 = a1 * b3 + a2 * b2 + a3 * b1
    z5 = a2 * b3 + a3 * b2
    z6 = a3 * b3
    # s^4 = 10 s^2 - 20,  s^5 = 10 s^3 - 20 s,  s^6 = 80 s^2 - 200
    return (
        z0 - 20 * z4 - 200 * z6,
        z1 - 20 * z5,
        z2 + 10 * z4 + 80 * z6,
        z3 + 10 * z5,
    )


# ---------------------------------------------------------------------------
# interval enclosures of the basis values, scaled by 2^k
# ---------------------------------------------------------------------------

@lru_cache(maxsize=32)
def _basis_enclosure(k):
    """Integer enclosures [lo, hi] of (s, s^2, s^3, r, rs, rs^2, rs^3) * 2^k."""
    one = 1 << k
    a = isqrt(5 << (2 * k))
    sqrt5 = (a, a + 1)
    s2 = (5 * one - sqrt5[1], 5 * one - sqrt5[0])          # 5 - sqrt5
    s = (isqrt(s2[0] << k), isqrt(s2[1] << k) + 1)
    r = (isqrt(2 << (2 * k)), isqrt(2 << (2 * k)) + 1)

    def pos_mul(u, v):
        return ((u[0] * v[0]) >> k, ((u[1] * v[1]) >> k) + 1)

    s3 = pos_mul(s, s2)
    rs = pos_mul(r, s)
    rs2 = pos_mul(r, s2)
    rs3 = pos_mul(r, s3)
    return (s, s2, s3, r, rs, rs2, rs3)


_BASIS_FLOAT = None


def _basis_float():
    global _BASIS_FLOAT
    if _BASIS_FLOAT is None:
        s = math.sqrt(5.0 - math.sqrt(5.0))
        r = math.sqrt(2.0)
        _BASIS_FLOAT = (1.0, s, s * s, s ** 3, r, r * s, r * s * s, r * s ** 3)
    return _BASIS_FLOAT


class FieldElement:
    """An element of K, immutable.  Supports +, -, *, /, comparisons, float()."""

    __slots__ = ("n", "d")

    def __init__(self, n, d=1, _normalized=False):
        if d < 0:
            n = tuple(-v for v in n)
            d = -d
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            g = _gcd8(n, d)
            if g > 1:
                n = tuple(v // g for v in n)
                d //= g
        self.n = tuple(n)
        self.d = d

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_int(v):
        return FieldElement((v, 0, 0, 0, 0, 0, 0, 0), 1, _normalized=True)

    @staticmethod
    def from_rational(q):
        q = Fraction(q)
        return FieldElement((q.numerator, 0, 0, 0, 0, 0, 0, 0), q.denominator,
                            _normalized=True)

    @staticmethod
    def from_coords(coords):
        """Build from 8 Fractions in the basis (1, s, s^2, s^3) x (1, sqrt2)."""
        fr = [Fraction(c) for c in coords]
        if len(fr) != 8:
            raise ValueError("need 8 coordinates")
        d = 1
        for f in fr:
            d = d * f.denominator // gcd(d, f.denominator)
        return FieldElement(tuple(f.numerator * (d // f.denominator) for f in fr), d)

    @property
    def coords(self):
        """The 8 rational coordinates."""
        return tuple(Fraction(v, self.d) for v in self.n)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.d == b.d:
            return FieldElement(tuple(x + y for x, y in zip(a.n, b.n)), a.d)
        return FieldElement(tuple(x * b.d + y * a.d for x, y in zip(a.n, b.n)),
                            a.d * b.d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(tuple(-v for v in self.n), self.d, _normalized=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.d == b.d:
            return FieldElement(tuple(x - y for x, y in zip(a.n, b.n)), a.d)
        return FieldElement(tuple(x * b.d - y * a.d for x, y in zip(a.n, b.n)),
                            a.d * b.d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a0, a1 = self.n[:4], self.n[4:]
        b0, b1 = other.n[:4], other.n[4:]
        # (a0 + a1 r)(b0 + b1 r) = a0 b0 + 2 a1 b1 + (a0 b1 + a1 b0) r
        p = _mul4(a0, b0)
        q = _mul4(a1, b1)
        u = _mul4(a0, b1)
        v = _mul4(a1, b0)
        n = tuple(p[i] + 2 * q[i] for i in range(4)) + \
            tuple(u[i] + v[i] for i in range(4))
        return FieldElement(n, self.d * other.d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        a, b = self.n[:4], self.n[4:]
        # 1/(a + b r) = (a - b r) / (a^2 - 2 b^2); the norm lies in Q(s)
        norm = tuple(x - 2 * y for x, y in
                     zip(_mul4(a, a), _mul4(b, b)))
        inv_norm_num, inv_norm_den = _invert_qs(norm)
        conj = a + tuple(-v for v in b)
        out = []
        for half in (conj[:4], conj[4:]):
            out.extend(_mul4(half, inv_norm_num))
        # self = n/d, so 1/self = d * (conj / (norm)) with scaling
        n = tuple(v * self.d for v in out)
        return FieldElement(n, inv_norm_den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not any(self.n)

    def is_rational(self):
        return not any(self.n[1:])

    def __bool__(self):
        return any(self.n)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.n == other.n and self.d == other.d

    def __hash__(self):
        return hash((self.n, self.d))

    def sign(self):
        """Exact sign in {-1, 0, +1}."""
        if not any(self.n):
            return 0
        if not any(self.n[1:]):
            v = self.n[0]
            return 1 if v > 0 else -1
        k = _SIGN_START_BITS
        while k <= _SIGN_MAX_BITS:
            lo, hi = self._enclosure(k)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            k *= 2
        raise PrecisionExhausted(f"sign undecided at {_SIGN_MAX_BITS} bits")

    def _enclosure(self, k):
        """Integer interval (lo, hi) with value * 2^k in [lo, hi] (denominator ignored)."""
        basis = _basis_enclosure(k)
        lo = self.n[0] << k
        hi = lo
        for coeff, (bl, bh) in zip(self.n[1:], basis):
            if coeff > 0:
                lo += coeff * bl
                hi += coeff * bh
            elif coeff < 0:
                lo += coeff * bh
                hi += coeff * bl
        return lo, hi

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- conversions --------------------------------------------------------

    def __float__(self):
        b = _basis_float()
        acc = 0.0
        for coeff, bf in zip(self.n, b):
            if coeff:
                acc += coeff / self.d * bf if abs(coeff) < (1 << 52) else \
                    float(Fraction(coeff, self.d)) * bf
        return acc

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("not rational")
        return Fraction(self.n[0], self.d)

    def serialize(self):
        """8 decimal rational strings, bit-exact."""
        return [str(c) for c in self.coords]

    @staticmethod
    def deserialize(strings):
        return FieldElement.from_coords([Fraction(t) for t in strings])

    def __repr__(self):
        if self.is_rational():
            return f"K({Fraction(self.n[0], self.d)})"
        return f"K({float(self):.12g}~)"


def _coerce(v):
    if isinstance(v, FieldElement):
        return v
    if isinstance(v, int):
        return FieldElement((v, 0, 0, 0, 0, 0, 0, 0), 1, _normalized=True)
    if isinstance(v, Fraction):
        return FieldElement((v.numerator, 0, 0, 0, 0, 0, 0, 0), v.denominator,
                            _normalized=True)
    return NotImplemented


def _invert_qs(c):
    """Invert c (integer 4-tuple, coeffs of 1,s,s^2,s^3) mod s^4 - 10 s^2 + 20.

    Returns (num, den): an integer 4-tuple and positive integer denominator.
    Uses the extended Euclidean algorithm over Q[x].
    """
    if not any(c):
        raise DivisionByZero("inverse of zero in Q(s)")
    mod = [Fraction(20), Fraction(0), Fraction(-10), Fraction(0), Fraction(1)]
    a = [Fraction(v) for v in c]

    def deg(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    def polymod(p, q):
        p = p[:]
        dq = deg(q)
        while deg(p) >= dq:
            dp = deg(p)
            f = p[dp] / q[dq]
            for i in range(dq + 1):
                p[dp - dq + i] -= f * q[i]
            p[dp] = Fraction(0)
        return p

    # extended gcd: find u with u * a == gcd (mod s^4 - 10 s^2 + 20)
    r0, r1 = mod[:], a + [Fraction(0)]
    s0, s1 = [Fraction(0)] * 5, [Fraction(0)] * 5
    t0, t1 = s0[:], s1[:]
    t0[0] = Fraction(0)
    s0[0] = Fraction(1)  # s tracks coeff of mod; t tracks coeff of a
    t1 = [Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0)]
    while deg(r1) >= 0:
        dq, dp = deg(r1), deg(r0)
        if dp < dq:
            r0, r1, t0, t1 = r1, r0, t1, t0
            continue
        f = r0[dp] / r1[dq]
        shift = dp - dq
        for i in range(dq + 1):
            r0[shift + i] -= f * r1[i]
        for i in range(5 - shift):
            t0[shift + i] -= f * t1[i]
        if deg(r0) < deg(r1):
            r0, r1, t0, t1 = r1, r0, t1, t0
    g = r0
    dg = deg(g)
    if dg != 0:
        raise ArithmeticError("element not invertible (minimal poly not coprime?)")
    inv = [t0[i] / g[0] for i in range(4)]
    den = 1
    for f in inv:
        den = den * f.denominator // gcd(den, f.denominator)
    num = tuple(f.numerator * (den // f.denominator) for f in inv)
    return num, den


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

ZERO = FieldElement.from_int(0)
ONE = FieldElement.from_int(1)
TWO = FieldElement.from_int(2)
HALF = FieldElement.from_rational(Fraction(1, 2))

S = FieldElement((0, 1, 0, 0, 0, 0, 0, 0))            # sqrt(5 - sqrt5)
SQRT2 = FieldElement((0, 0, 0, 0, 1, 0, 0, 0))
SQRT5 = FieldElement((5, 0, -1, 0, 0, 0, 0, 0))        # 5 - s^2
SQRT_5_PLUS = FieldElement((0, 6, 0, -1, 0, 0, 0, 0), 2)   # 3 s - s^3/2
PHI = (ONE + SQRT5) / 2

# cos/sin of multiples of pi/5 (36 degrees)
COS36 = (ONE + SQRT5) / 4
SIN36 = SQRT2 * S / 4
COS72 = (SQRT5 - ONE) / 4
SIN72 = SQRT2 * SQRT_5_PLUS / 4


def sqrt_rational(q):
    """Exact sqrt of a nonnegative rational, if it lies in K (i.e. in Q(sqrt2))."""
    return sqrt_q5(Fraction(q), Fraction(0))


def sqrt_q5(a, b):
    """Exact sqrt(a + b*sqrt5) as an element of K.

    Tries z = alpha * m with alpha in Q(sqrt5) and m in {1, sqrt2, s, s*sqrt2},
    i.e. z^2 = alpha^2 * m^2 with m^2 in {1, 2, 5-sqrt5, 10-2 sqrt5}.
    Raises InvalidRadicand if a + b sqrt5 < 0 or no representation exists.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        return ZERO
    # sign of a + b sqrt5
    if (FieldElement.from_rational(a) + FieldElement.from_rational(b) * SQRT5).sign() < 0:
        raise InvalidRadicand(f"negative radicand {a} + {b} sqrt5")
    multipliers = (
        (ONE, Fraction(1), Fraction(0)),
        (SQRT2, Fraction(2), Fraction(0)),
        (S, Fraction(5), Fraction(-1)),
        (SQRT2 * S, Fraction(10), Fraction(-2)),
    )
    for m_elt, ma, mb in multipliers:
        # need (a + b sqrt5)/(ma + mb sqrt5) = (u + v sqrt5)^2
        den = ma * ma - 5 * mb * mb
        aa = (a * ma - 5 * b * mb) / den
        bb = (b * ma - a * mb) / den
        sol = _sqrt_in_q5(aa, bb)
        if sol is not None:
            u, v = sol
            cand = (FieldElement.from_rational(u)
                    + FieldElement.from_rational(v) * SQRT5) * m_elt
            if cand.sign() < 0:
                cand = -cand
            return cand
    raise InvalidRadicand(f"sqrt({a} + {b} sqrt5) not in K")


def _sqrt_in_q5(a, b):
    """Solve (u + v sqrt5)^2 = a + b sqrt5 over Q, or return None."""
    if b == 0:
        r = _rational_sqrt(a)
        if r is not None:
            return (r, Fraction(0))
        r = _rational_sqrt(a / 5)
        if r is not None:
            return (Fraction(0), r)
        return None
    disc = a * a - 5 * b * b
    rd = _rational_sqrt(disc) if disc >= 0 else None
    if rd is None:
        return None
    for u2 in ((a + rd) / 2, (a - rd) / 2):
        if u2 > 0:
            u = _rational_sqrt(u2)
            if u is not None and u != 0:
                return (u, b / (2 * u))
    return None


def _rational_sqrt(q):
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rdn = isqrt(num), isqrt(den)
    if rn * rn == num and rdn * rdn == den:
        return Fraction(rn, rdn)
    return None


# ---------------------------------------------------------------------------
# exact complex numbers over K (duck-type a subset of the complex API)
# ---------------------------------------------------------------------------

class KComplex:
    """Complex number with FieldElement parts; mimics the builtin complex API."""

    __slots__ = ("real", "imag")

    def __init__(self, real, imag=ZERO):
        self.real = real if isinstance(real, FieldElement) else _coerce(real)
        self.imag = imag if isinstance(imag, FieldElement) else _coerce(imag)

    def conjugate(self):
        return KComplex(self.real, -self.imag)

    def __add__(self, other):
        other = _ccoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KComplex(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __neg__(self):
        return KComplex(-self.real, -self.imag)

    def __sub__(self, other):
        other = _ccoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KComplex(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        other = _ccoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _ccoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KComplex(self.real * other.real - self.imag * other.imag,
                        self.real * other.imag + self.imag * other.real)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _ccoerce(other)
        if other is NotImplemented:
            return NotImplemented
        n2 = other.real * other.real + other.imag * other.imag
        if n2.is_zero():
            raise DivisionByZero("complex division by zero")
        inv = n2.inverse()
        return KComplex((self.real * other.real + self.imag * other.imag) * inv,
                        (self.imag * other.real - self.real * other.imag) * inv)

    def __eq__(self, other):
        other = _ccoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.real == other.real and self.imag == other.imag

    def __hash__(self):
        return hash((self.real, self.imag))

    def __complex__(self):
        return complex(float(self.real), float(self.imag))

    def __repr__(self):
        return f"KC({float(self.real):.10g}, {float(self.imag):.10g})"


def _ccoerce(v):
    if isinstance(v, KComplex):
        return v
    if isinstance(v, (int, Fraction, FieldElement)):
        r = _coerce(v) if not isinstance(v, FieldElement) else v
        if r is NotImplemented:
            return NotImplemented
        return KComplex(r, ZERO)
    return NotImplemented


KC_ZERO = KComplex(ZERO, ZERO)
KC_ONE = KComplex(ONE, ZERO)
KC_I = KComplex(ZERO, ONE)


def abs2(z):
    """Squared modulus, exact for KComplex and float for complex."""
    if isinstance(z, KComplex):
        return z.real * z.real + z.imag * z.imag
    return z.real * z.real + z.imag * z.imag


@lru_cache(maxsize=None)
def unit_tenth(k):
    """exp(i pi k / 5) as an exact KComplex (k taken mod 10)."""
    k %= 10
    if k == 0:
        return KC_ONE
    if k == 1:
        return KComplex(COS36, SIN36)
    if k == 2:
        return KComplex(COS72, SIN72)
    base = unit_tenth(1)
    out = base
    for _ in range(k - 1):
        out = out * base
    return out


@lru_cache(maxsize=None)
def omega(k=1):
    """exp(2 pi i k / 5) as an exact KComplex."""
    return unit_tenth(2 * k)
