"""City decomposition of the states and the rhombus maps acting on them.

Each state splits into four cities; on a city the far-point map is a single
rhombus map, and the interfaces between cities are cubic curves whose
coefficients are of the form s * sqrt(a + b*sqrt5).  The tables below are
validated in the test suite against independent derivations (difference of
squared triple-point distances, cross-ratio numerators); the rhombus maps
agree with the triple-point maps exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import (
    COS36,
    COS72,
    FieldElement,
    KComplex,
    ONE,
    SIN36,
    SIN72,
    SQRT5,
    ZERO,
    omega as omega_c,
    sqrt_q5,
)
from .field import InvalidRadicand  # re-exported for callers
from .poly import BivariatePoly


class OutOfDomain(ValueError):
    """Point outside the (closed) domain of a rhombus map."""


# ---------------------------------------------------------------------------
# interface cubics: entry (row nonzero only for total degree <= 3) is
# s * sqrt(a + b sqrt5) on the monomial x^col y^row
# ---------------------------------------------------------------------------

CUBIC_DATA = {
    "g8316": (
        ((+1, -1, -1, +1), (+1, +1, -1, 0), (-1, +1, 0, 0), (-1, 0, 0, 0)),
        ((50, 585, 225, 40), (283, 12, 8, 0), (25, 40, 0, 0), (8, 0, 0, 0)),
        ((20, 171, -99, -16), (105, -4, 0, 0), (-11, -16, 0, 0), (0, 0, 0, 0)),
    ),
    "g8349": (
        ((+1, -1, -1, +1), (+1, -1, +1, 0), (-1, +1, 0, 0), (+1, 0, 0, 0)),
        ((940, 9840, 235, 60), (7780, 100, 20, 0), (75, 60, 0, 0), (20, 0, 0, 0)),
        ((420, 4400, 105, 20), (3476, 44, -4, 0), (25, 20, 0, 0), (-4, 0, 0, 0)),
    ),
    "g8319": (
        ((0, -1, +1, -1), (+1, +1, -1, 0), (-1, -1, 0, 0), (-1, 0, 0, 0)),
        ((0, 85, 130, 5), (29, 206, 9, 0), (20, 5, 0, 0), (9, 0, 0, 0)),
        ((0, 38, 58, 2), (12, 90, 4, 0), (8, 2, 0, 0), (4, 0, 0, 0)),
    ),
    "g8346": (
        ((0, -1, +1, +1), (+1, +1, +1, 0), (-1, +1, 0, 0), (+1, 0, 0, 0)),
        ((0, 126075, 58835, 16810), (109265, 336200, 16810, 0),
         (294175, 16810, 0, 0), (16810, 0, 0, 0)),
        ((0, 42025, 25215, 0), (31939, 26896, 6724, 0),
         (126075, 0, 0, 0), (6724, 0, 0, 0)),
    ),
    "g8369": (
        ((+1, -1, -1, +1), (+1, +1, -1, 0), (-1, +1, 0, 0), (-1, 0, 0, 0)),
        ((4700, 41160, 210, 175), (14180, 1220, 5, 0), (2010, 175, 0, 0), (5, 0, 0, 0)),
        ((2100, 18400, 80, 75), (6316, 524, 1, 0), (880, 75, 0, 0), (1, 0, 0, 0)),
    ),
    "h8369": (
        ((0, -1, +1, +1), (+1, -1, +1, 0), (-1, +1, 0, 0), (+1, 0, 0, 0)),
        ((0, 196800, 103040, 15040), (1056320, 2044160, 28480, 0),
         (515200, 15040, 0, 0), (28480, 0, 0, 0)),
        ((0, 88000, 46080, 6720), (472384, 914176, 12736, 0),
         (230400, 6720, 0, 0), (12736, 0, 0, 0)),
    ),
}

_CUBIC_CACHE = {}


def build_city_cubic(name):
    """Assemble an interface cubic from the checked-in tables.

    Names: g8316, g8349, g8319, g8346, g8369, h8369, and g1638 (obtained from
    g8316 by the reflection y -> -y).  Raises InvalidRadicand when a table
    entry is not a K-representable radical.
    """
    if name in _CUBIC_CACHE:
        return _CUBIC_CACHE[name]
    if name == "g1638":
        poly = build_city_cubic("g8316").subst_affine("y", 0, -1)
    else:
        s, a, b = CUBIC_DATA[name]
        terms = {}
        for r in range(4):
            for c in range(4):
                if s[r][c] == 0:
                    continue
                terms[(c, r)] = sqrt_q5(a[r][c], b[r][c]) * s[r][c]
        poly = BivariatePoly(terms)
    _CUBIC_CACHE[name] = poly
    return poly


# ---------------------------------------------------------------------------
# rhombus maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RhombusMapSpec:
    """Flag (R, e, v): v a vertex, e = [v, a] an edge; v_opp the opposite vertex.

    The map sends z to the intersection of line(v_opp, z') with the line
    through z parallel to e, where z' = line(v, z) meet D and D is the
    diagonal [a, b] not containing v.  Fixed pointwise on the diagonals; the
    domain closure is the pair of closed triangles cut off by the diagonals
    on the e and e' sides.
    """
    v: KComplex
    a: KComplex            # other endpoint of the flag edge e
    v_opp: KComplex
    label: str = ""

    @property
    def b(self):
        return self.v + self.v_opp - self.a

    def vertices(self):
        return (self.v, self.a, self.v_opp, self.b)

    def opposite(self):
        """The inverse map's flag (R, e', v')."""
        return RhombusMapSpec(self.v_opp, self.b, self.v,
                              label=self.label + "'")

    def diagonal(self):
        return (self.a, self.b)

    def _normal_coords(self, z):
        """Coordinates (u, w) with psi(u, w) = z for the normalizing affine map."""
        col1 = (self.v_opp - self.a) * Fraction(1, 2)
        col2 = (self.a - self.v) * Fraction(1, 2)
        t = (self.v + self.v_opp) * Fraction(1, 2)
        d = z - t
        det = col1.real * col2.imag - col2.real * col1.imag
        u = (d.real * col2.imag - col2.real * d.imag) / det
        w = (col1.real * d.imag - d.real * col1.imag) / det
        return u, w

    def in_domain(self, z, open_domain=True):
        u, w = self._normal_coords(z)
        lhs = u * u - w * w
        s = lhs.sign() if isinstance(lhs, FieldElement) else \
            (0 if lhs == 0 else (1 if lhs > 0 else -1))
        one_m = 1 - u * u
        s1 = one_m.sign() if isinstance(one_m, FieldElement) else \
            (0 if one_m == 0 else (1 if one_m > 0 else -1))
        if open_domain:
            return s > 0 and s1 > 0
        return s >= 0 and s1 >= 0

    def apply(self, z, check_domain=True):
        """Image of z; exact for KComplex input, float for complex input."""
        if check_domain and not self.in_domain(z, open_domain=False):
            raise OutOfDomain(f"{z!r} outside the domain of {self.label or 'map'}")
        zp = _line_intersect(self.v, z, self.a, self.b)
        return _line_intersect(self.v_opp, zp, z, z + (self.a - self.v))

    def transformed(self, fn):
        return RhombusMapSpec(fn(self.v), fn(self.a), fn(self.v_opp), self.label)

    def to_json(self):
        def pt(z):
            return [str(c) for c in (*z.real.coords, *z.imag.coords)]
        return {"label": self.label, "v": pt(self.v), "a": pt(self.a),
                "v_opp": pt(self.v_opp)}


def _line_intersect(a, b, c, d):
    e1 = b - a
    e2 = d - c
    det = e1.real * (-e2.imag) + e2.real * e1.imag
    rx = c.real - a.real
    ry = c.imag - a.imag
    t = (rx * (-e2.imag) + e2.real * ry) / det
    return a + e1 * t


def normal_form_map(x, y):
    """The normalized rhombus map on [-1,1]^2 with flag at (-1,-1)."""
    return (x, (x * x + y) / (1 + y))


# rhombus geometry: half-diagonal lengths of the two Penrose-shaped rhombi
_S1 = (SQRT5 - 1) / 4           # sin(pi/10)
_S3 = (SQRT5 + 1) / 4           # sin(3 pi/10)

FAT_CENTER_X = COS72            # = sin(3 pi/10) - 1/2
FAT_HALF_X = 3 * SIN72 * _S3 / SIN36
FAT_HALF_Y = 3 * SIN72
THIN_CENTER_X = -_S3
THIN_HALF_X = 3 * _S3
THIN_HALF_Y = 3 * _S3 * SIN72 / _S1


def _kc(x, y):
    return KComplex(x, y)


_FAT_TOP = _kc(FAT_CENTER_X, FAT_HALF_Y)
_FAT_BOT = _kc(FAT_CENTER_X, -FAT_HALF_Y)
_FAT_L = _kc(FAT_CENTER_X - FAT_HALF_X, ZERO)
_FAT_R = _kc(FAT_CENTER_X + FAT_HALF_X, ZERO)
_THIN_REND = _kc(THIN_CENTER_X + THIN_HALF_X, ZERO)
_THIN_LEND = _kc(THIN_CENTER_X - THIN_HALF_X, ZERO)
_THIN_TOP = _kc(THIN_CENTER_X, THIN_HALF_Y)
_THIN_BOT = _kc(THIN_CENTER_X, -THIN_HALF_Y)
_W3 = omega_c(3)

CITY_MAPS = {
    "163": RhombusMapSpec(_FAT_BOT, _FAT_R, _FAT_TOP, "163"),
    "168": RhombusMapSpec(_FAT_TOP, _FAT_L, _FAT_BOT, "168"),
    "831": RhombusMapSpec(_FAT_BOT, _FAT_L, _FAT_TOP, "831"),
    "836": RhombusMapSpec(_FAT_TOP, _FAT_R, _FAT_BOT, "836"),
    "834": RhombusMapSpec(_W3 * _THIN_REND, _W3 * _THIN_TOP, _W3 * _THIN_LEND, "834"),
    "839": RhombusMapSpec(_W3 * _THIN_LEND, _W3 * _THIN_BOT, _W3 * _THIN_REND, "839"),
}

CITY_TRIPLES = {
    "163": (1, 6, 3), "168": (1, 6, 8), "164": (1, 6, 4), "169": (1, 6, 9),
    "831": (8, 3, 1), "834": (8, 3, 4), "836": (8, 3, 6), "839": (8, 3, 9),
}


def reflect_bisector(z):
    """Reflection across the sector bisector ray at angle pi/5."""
    if isinstance(z, complex):
        return complex(omega_c(1)) * z.conjugate()
    return omega_c(1) * z.conjugate()


class _ConjugatedMap:
    """A rhombus map conjugated by the bisector reflection (for 164/169 etc.)."""

    def __init__(self, base, label):
        self.base = base
        self.label = label

    def apply(self, z, check_domain=True):
        return reflect_bisector(self.base.apply(reflect_bisector(z), check_domain))

    def in_domain(self, z, open_domain=True):
        return self.base.in_domain(reflect_bisector(z), open_domain)


CITY_MAPS["164"] = _ConjugatedMap(CITY_MAPS["163"], "164")
CITY_MAPS["169"] = _ConjugatedMap(CITY_MAPS["168"], "169")


# ---------------------------------------------------------------------------
# classification of points of the fundamental sector into cities
# ---------------------------------------------------------------------------
#
# Sign conventions (calibrated against the Voronoi arg-max at probe points and
# frozen):  writing g(name) for the table cubics,
#   city 163 = { p in lower kite : g1638 <= 0 },   168: g1638 >= 0,
#   city 831 = { g8316 >= 0 and g8319 <= 0 },      834: g8349 <= 0, g8346 >= 0,
#   city 836 = { g8316 <= 0, g8346 <= 0, g8369 <= 0 },
#   city 839 = { g8319 >= 0, g8349 >= 0, g8369 >= 0 }.

BOUNDARY_TOL = 1e-12


def _float_sign(v, tol):
    if isinstance(v, FieldElement):
        return v.sign()
    return 0 if abs(v) <= tol else (1 if v > 0 else -1)


class CityAtlas:
    """Sign-based point location within the three fundamental states."""

    def __init__(self):
        self.cubics = {n: build_city_cubic(n)
                       for n in ("g1638", "g8316", "g8319", "g8346",
                                 "g8349", "g8369", "h8369")}
        self._floats = {n: p.to_float_coeffs() for n, p in self.cubics.items()}

    def _eval(self, name, p, tol):
        if isinstance(p, KComplex):
            return self.cubics[name].eval(p.real, p.imag).sign()
        acc = 0.0
        x, y = p.real, p.imag
        for i, j, c in self._floats[name]:
            acc += c * x ** i * y ** j
        return _float_sign(acc, tol)

    def classify_s0(self, p, tol=BOUNDARY_TOL):
        """Cities of the kite state containing p (one, or several on edges)."""
        side = _bisector_side(p, tol)
        out = []
        if side <= 0:
            s = self._eval("g1638", p, tol)
            if s <= 0:
                out.append("163")
            if s >= 0:
                out.append("168")
        if side >= 0:
            q = reflect_bisector(p)
            s = self._eval("g1638", q, tol)
            if s <= 0:
                out.append("164")
            if s >= 0:
                out.append("169")
        return out

    def classify_s1(self, p, tol=BOUNDARY_TOL):
        s16 = self._eval("g8316", p, tol)
        s19 = self._eval("g8319", p, tol)
        s46 = self._eval("g8346", p, tol)
        s49 = self._eval("g8349", p, tol)
        s69 = self._eval("g8369", p, tol)
        out = []
        if s16 >= 0 and s19 <= 0:
            out.append("831")
        if s49 <= 0 and s46 >= 0:
            out.append("834")
        if s16 <= 0 and s46 <= 0 and s69 <= 0:
            out.append("836")
        if s19 >= 0 and s49 >= 0 and s69 >= 0:
            out.append("839")
        return out

    def to_json(self):
        return {
            "cubics": {n: p.to_json() for n, p in self.cubics.items()},
            "maps": {k: (m.to_json() if isinstance(m, RhombusMapSpec)
                         else {"conjugated_from": m.base.label, "label": m.label})
                     for k, m in CITY_MAPS.items()},
            "triples": {k: list(v) for k, v in CITY_TRIPLES.items()},
        }


def _bisector_side(p, tol):
    """-1 below the bisector ray (angle < 36 deg), +1 above, 0 on it."""
    v = p.imag * COS36 - p.real * SIN36 if isinstance(p, KComplex) else \
        p.imag * float(COS36) - p.real * float(SIN36)
    return _float_sign(v, tol) if not isinstance(v, FieldElement) else v.sign()


_ATLAS = None


def atlas():
    global _ATLAS
    if _ATLAS is None:
        _ATLAS = CityAtlas()
    return _ATLAS
