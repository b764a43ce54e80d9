"""Bivariate polynomials and rational functions with FieldElement coefficients."""

from __future__ import annotations

import json
from fractions import Fraction

from .field import FieldElement, KComplex, ONE, ZERO, _coerce


class NormalizationUndefined(ZeroDivisionError):
    """Rational-function denominator vanishes at the normalization point."""


def _as_field(v):
    if isinstance(v, FieldElement):
        return v
    c = _coerce(v)
    if c is NotImplemented:
        raise TypeError(f"cannot use {type(v)} as coefficient")
    return c


class BivariatePoly:
    """Polynomial in (x, y) stored as {(i, j): nonzero FieldElement}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for ij, c in terms.items():
                c = _as_field(c)
                if not c.is_zero():
                    t[ij] = c
        self.terms = t

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(c):
        c = _as_field(c)
        return BivariatePoly({(0, 0): c})

    @staticmethod
    def variable(name):
        if name == "x":
            return BivariatePoly({(1, 0): ONE})
        if name == "y":
            return BivariatePoly({(0, 1): ONE})
        raise ValueError(name)

    # -- basic queries -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree (-1 for the zero polynomial)."""
        return max((i + j for i, j in self.terms), default=-1)

    def degrees(self):
        """(max x-degree, max y-degree), (-1, -1) if zero."""
        if not self.terms:
            return (-1, -1)
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def coeff(self, i, j):
        return self.terms.get((i, j), ZERO)

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BivariatePoly):
            other = BivariatePoly.constant(other)
        t = dict(self.terms)
        for ij, c in other.terms.items():
            acc = t.get(ij)
            s = c if acc is None else acc + c
            if s.is_zero():
                t.pop(ij, None)
            else:
                t[ij] = s
        out = BivariatePoly.__new__(BivariatePoly)
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BivariatePoly.__new__(BivariatePoly)
        out.terms = {ij: -c for ij, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, BivariatePoly):
            other = BivariatePoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return BivariatePoly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, BivariatePoly):
            c = _as_field(other)
            if c.is_zero():
                return BivariatePoly()
            out = BivariatePoly.__new__(BivariatePoly)
            out.terms = {ij: v * c for ij, v in self.terms.items()}
            return out
        t = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                ij = (i1 + i2, j1 + j2)
                p = c1 * c2
                acc = t.get(ij)
                t[ij] = p if acc is None else acc + p
        out = BivariatePoly.__new__(BivariatePoly)
        out.terms = {ij: c for ij, c in t.items() if not c.is_zero()}
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        out = BivariatePoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- evaluation ----------------------------------------------------------

    def eval(self, x, y):
        """Evaluate; exact for FieldElement/Fraction/int, numeric for float/complex."""
        if isinstance(x, (float, complex)) or isinstance(y, (float, complex)):
            return self.eval_float(x, y)
        dx, dy = self.degrees()
        if dx < 0:
            return ZERO
        xp = [ONE]
        for _ in range(dx):
            xp.append(xp[-1] * x)
        yp = [ONE]
        for _ in range(dy):
            yp.append(yp[-1] * y)
        acc = ZERO
        for (i, j), c in self.terms.items():
            acc = acc + c * xp[i] * yp[j]
        return acc

    def to_float_coeffs(self):
        """List of (i, j, float coeff) for fast numeric evaluation."""
        return [(i, j, float(c)) for (i, j), c in sorted(self.terms.items())]

    def eval_float(self, x, y):
        acc = 0.0
        for (i, j), c in self.terms.items():
            acc += float(c) * x ** i * y ** j
        return acc

    # -- calculus / substitution ---------------------------------------------

    def diff(self, var):
        t = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i > 0:
                t[(i - 1, j)] = c * i
            elif var == "y" and j > 0:
                t[(i, j - 1)] = c * j
        return BivariatePoly(t)

    def subst_affine(self, var, a, b):
        """Substitute var <- a + b * var, exactly."""
        a, b = _as_field(a), _as_field(b)
        lin = BivariatePoly({(0, 0): a}) + BivariatePoly(
            {((1, 0) if var == "x" else (0, 1)): b})
        return self.compose(lin if var == "x" else BivariatePoly.variable("x"),
                            lin if var == "y" else BivariatePoly.variable("y"))

    def compose(self, gx, gy):
        """Exact composition self(gx(x,y), gy(x,y))."""
        if not self.terms:
            return BivariatePoly()
        dx, dy = self.degrees()
        xpow = [BivariatePoly.constant(1)]
        for _ in range(dx):
            xpow.append(xpow[-1] * gx)
        ypow = [BivariatePoly.constant(1)]
        for _ in range(dy):
            ypow.append(ypow[-1] * gy)
        out = BivariatePoly()
        for (i, j), c in self.terms.items():
            out = out + xpow[i] * ypow[j] * c
        return out

    def restrict_x(self, x0):
        """Univariate polynomial in y obtained by fixing x = x0."""
        x0 = _as_field(x0)
        dy = self.degrees()[1]
        coeffs = [ZERO] * (dy + 1)
        for (i, j), c in self.terms.items():
            coeffs[j] = coeffs[j] + c * x0 ** i
        return UnivariatePoly(coeffs)

    def restrict_y(self, y0):
        y0 = _as_field(y0)
        dx = self.degrees()[0]
        coeffs = [ZERO] * (dx + 1)
        for (i, j), c in self.terms.items():
            coeffs[i] = coeffs[i] + c * y0 ** j
        return UnivariatePoly(coeffs)

    # -- serialization --------------------------------------------------------

    def to_json(self):
        recs = [{"i": i, "j": j, "coeff": c.serialize()}
                for (i, j), c in sorted(self.terms.items())]
        return recs

    @staticmethod
    def from_json(recs):
        return BivariatePoly({(r["i"], r["j"]):
                              FieldElement.deserialize(r["coeff"]) for r in recs})

    def dumps(self):
        return json.dumps(self.to_json())

    @staticmethod
    def loads(s):
        return BivariatePoly.from_json(json.loads(s))

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            mono = ("" if i == 0 else f"x^{i}") + ("" if j == 0 else f"y^{j}")
            bits.append(f"{float(c):+.6g}{mono}")
        return "Poly(" + " ".join(bits) + ")"


X = BivariatePoly.variable("x")
Y = BivariatePoly.variable("y")


class UnivariatePoly:
    """Dense univariate polynomial over K (used for segment restrictions)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_as_field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def eval(self, t):
        if isinstance(t, (float, complex)):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * t + float(c)
            return acc
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def subst_affine(self, a, b):
        """t <- a + b t."""
        a, b = _as_field(a), _as_field(b)
        out = []
        for c in reversed(self.coeffs):
            # out = out * (a + b t) + c
            new = [ZERO] * (len(out) + 1)
            for i, v in enumerate(out):
                new[i] = new[i] + v * a
                new[i + 1] = new[i + 1] + v * b
            new[0] = new[0] + c
            out = new
        return UnivariatePoly(out)

    def partial_sums(self):
        acc = ZERO
        out = []
        for c in self.coeffs:
            acc = acc + c
            out.append(acc)
        return out

    def deriv(self):
        return UnivariatePoly([c * (i + 1) for i, c in enumerate(self.coeffs[1:])])

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return "UPoly(" + ", ".join(f"{float(c):.6g}" for c in self.coeffs) + ")"


class RationalFn2:
    """Quotient of two bivariate polynomials (denominator not identically 0)."""

    __slots__ = ("numer", "denom")

    def __init__(self, numer, denom):
        if denom.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        self.numer = numer
        self.denom = denom

    def eval(self, x, y):
        return self.numer.eval(x, y) / self.denom.eval(x, y)

    def compose(self, gx, gy):
        return RationalFn2(self.numer.compose(gx, gy), self.denom.compose(gx, gy))

    def normalized_numerator(self, at=(1, 1)):
        """Numerator with sign fixed to be positive at `at`.

        Returns (poly, flagged): flagged is True when the numerator vanishes at
        the normalization point, in which case the sign is left alone.
        """
        ax, ay = (_as_field(v) for v in at)
        dv = self.denom.eval(ax, ay)
        if dv.is_zero():
            raise NormalizationUndefined("denominator vanishes at normalization point")
        nv = self.numer.eval(ax, ay)
        s = (nv / dv).sign()
        if s == 0:
            return self.numer, True
        return (self.numer if s > 0 else -self.numer), False


def rational_numerator(fn, normalize_at=(1, 1)):
    """Sign-normalized numerator of a rational function (positive at the point)."""
    poly, flagged = fn.normalized_numerator(normalize_at)
    return poly, flagged


# complex-coefficient helpers -------------------------------------------------

class CPoly:
    """Bivariate polynomial with KComplex coefficients (thin pair wrapper)."""

    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        self.re = re if re is not None else BivariatePoly()
        self.im = im if im is not None else BivariatePoly()

    @staticmethod
    def constant(z):
        return CPoly(BivariatePoly.constant(z.real), BivariatePoly.constant(z.imag))

    @staticmethod
    def affine(c0, cx, cy):
        """c0 + cx*x + cy*y with KComplex coefficients."""
        return CPoly(
            BivariatePoly({(0, 0): c0.real, (1, 0): cx.real, (0, 1): cy.real}),
            BivariatePoly({(0, 0): c0.imag, (1, 0): cx.imag, (0, 1): cy.imag}))

    def conj(self):
        return CPoly(self.re, -self.im)

    def __add__(self, other):
        return CPoly(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return CPoly(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return CPoly(self.re * other.re - self.im * other.im,
                     self.re * other.im + self.im * other.re)

    def eval(self, x, y):
        return KComplex(self.re.eval(x, y), self.im.eval(x, y))
