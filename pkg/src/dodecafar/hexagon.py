"""Moving sites of the vertex competition: the decagon D_p and hexagon H_p.

Each site is an affine function alpha + beta * conj(p) of the base point p
(a transplant through one of the ten shortest antipodal chains).  The six
hexagon sites drive a small Voronoi computation whose essential vertices are
the only candidates for the far point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chains import TransplantCode, develop, straightforward_chains, transplant_code_of
from .field import FieldElement, KComplex, ZERO, abs2


class NotStronglyConvex(ValueError):
    """Hexagon degenerate: three vertices collinear."""


class NoCircumcenter(ValueError):
    """Triple point undefined: the three sites are collinear."""


# Transplant codes of the ten straightforward chains, indexed by decagon
# position.  Pairs (j, j+5) are equidistant from p for every p (the asterisk
# identity); indices run consecutively around the decagon.  The table is
# re-derived from chain developments in the tests.
SITE_CODES = {
    0: (0, 1, 3, 3, 0, 9),
    1: (0, 3, 3, 1, 0, 7),
    2: (1, 3, 3, 0, 0, 5),
    3: (3, 3, 1, 0, 0, 3),
    4: (3, 3, 0, 0, 1, 1),
    5: (3, 1, 0, 0, 3, 9),
    6: (3, 0, 0, 1, 3, 7),
    7: (1, 0, 0, 3, 3, 5),
    8: (0, 0, 1, 3, 3, 3),
    9: (0, 0, 3, 3, 1, 1),
}

SITE_TRANSPLANTS = {j: TransplantCode(c) for j, c in SITE_CODES.items()}

HEX_INDICES = (1, 3, 4, 6, 8, 9)
DECAGON_ONLY = (0, 2, 5, 7)

# convex-position order of the hexagon sites (counterclockwise)
HEX_HULL_ORDER = (4, 3, 1, 9, 8, 6)


def derive_site_codes():
    """Recompute the code table from exact chain developments (for validation).

    Returns {index: (code, chain sequence)}.
    """
    codes = {}
    for seq in straightforward_chains():
        ch = develop(seq, exact=True, check_embedding=False)
        codes[seq] = transplant_code_of(ch).c
    by_angle = sorted(codes.items(),
                      key=lambda kv: math.atan2(
                          complex(TransplantCode(kv[1]).evaluate(0j)).imag,
                          complex(TransplantCode(kv[1]).evaluate(0j)).real) % (2 * math.pi))
    # indices run 4,3,2,1,0,9,8,7,6,5 counterclockwise from angle ~24 degrees
    order = (4, 3, 2, 1, 0, 9, 8, 7, 6, 5)
    return {order[i]: (code, seq) for i, (seq, code) in enumerate(by_angle)}


@dataclass
class HexagonConfig:
    """Sites of D_p / H_p at a particular base point (exact or float)."""
    p: object                       # KComplex or complex
    sites: dict                     # index -> point
    exact: bool

    def hull(self):
        return [self.sites[j] for j in HEX_HULL_ORDER]


def hexagon_sites(p):
    """All ten sites at p; exact when p is a KComplex, float when complex."""
    exact = isinstance(p, KComplex)
    sites = {j: SITE_TRANSPLANTS[j].evaluate(p) for j in range(10)}
    return HexagonConfig(p, sites, exact)


def _sgn(v):
    if isinstance(v, (int, float, Fraction)):
        return 0 if v == 0 else (1 if v > 0 else -1)
    return v.sign()


def mu(config, q, indices=HEX_INDICES, tol=0.0):
    """Minimum distance from q to the chosen sites and the set of minimizers.

    Comparisons are exact in exact mode; `tol` widens the minimizer set in
    float mode.  Returns (distance as float, [indices], squared distance).
    """
    best = None
    for j in indices:
        d2 = abs2(q - config.sites[j])
        if best is None or _sgn(d2 - best) < 0:
            best = d2
    mins = []
    for j in indices:
        d2 = abs2(q - config.sites[j])
        diff = d2 - best
        if _sgn(diff) == 0 or (tol and float(diff) <= tol):
            mins.append(j)
    return math.sqrt(max(float(best), 0.0)), mins, best


# ---------------------------------------------------------------------------
# triple points via the homogeneous lift
# ---------------------------------------------------------------------------

def _lift(z):
    return (z.real, z.imag, _one_like(z.real))


def _one_like(v):
    if isinstance(v, float):
        return 1.0
    return FieldElement.from_int(1)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _bisector_line(pi, pj):
    """Homogeneous line through the midpoint and its 90-degree offset point."""
    half = Fraction(1, 2)
    pm = (pi + pj) * half
    rot = _mul_i(pi - pj)
    qm = pm + rot
    return _cross(_lift(pm), _lift(qm))


def _mul_i(z):
    if isinstance(z, complex):
        return z * 1j
    return KComplex(-z.imag, z.real)


def triple_point(i, j, k, config):
    """Point equidistant from sites p_i, p_j, p_k (exact cross-product form)."""
    pi, pj, pk = config.sites[i], config.sites[j], config.sites[k]
    l1 = _bisector_line(pi, pj)
    l2 = _bisector_line(pj, pk)
    x, y, z = _cross(l1, l2)
    if _sgn(z) == 0:
        raise NoCircumcenter(f"sites {i},{j},{k} collinear")
    if isinstance(x, float):
        return complex(x / z, y / z)
    return KComplex(x / z, y / z)


def triple_point_homogeneous_polys(i, j, k):
    """Triple point (X(x,y), Y(x,y), Z(x,y)) as exact bivariate polynomials.

    The base point is p = x + i y; sites are affine in conj(p), so X, Y, Z
    have total degree at most 4.
    """
    from .poly import BivariatePoly, CPoly

    def site_poly(idx):
        alpha, beta = SITE_TRANSPLANTS[idx].affine_parts()
        # alpha + beta*(x - i y)
        return CPoly.affine(alpha, beta, _kc_scale(beta))

    def lift_poly(cp):
        return (cp.re, cp.im, BivariatePoly.constant(1))

    def cross_poly(a, b):
        return (a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0])

    def bisector(ci, cj):
        half = Fraction(1, 2)
        pm = CPoly((ci.re + cj.re) * half, (ci.im + cj.im) * half)
        d = ci - cj
        rot = CPoly(-d.im, d.re)
        qm = pm + rot
        return cross_poly(lift_poly(pm), lift_poly(qm))

    si, sj, sk = site_poly(i), site_poly(j), site_poly(k)
    return cross_poly(bisector(si, sj), bisector(sj, sk))


def _kc_scale(beta):
    # coefficient of y in beta * conj(x + i y) is -i beta
    return KComplex(beta.imag, -beta.real)


# ---------------------------------------------------------------------------
# Voronoi decomposition of the hexagon
# ---------------------------------------------------------------------------

@dataclass
class VoronoiDiagram:
    config: HexagonConfig
    cells: dict                     # site index -> list of polygon vertices (ccw)
    essential: list                 # (point, sorted tuple of minimal indices)
    edges: dict                     # frozenset({i, j}) -> (q1, q2)


def _clip_halfplane(poly, a, b, c):
    """Sutherland-Hodgman clip of a polygon by a x + b y <= c."""
    out = []
    n = len(poly)
    if n == 0:
        return out
    vals = [a * q.real + b * q.imag - c for q in poly]
    for idx in range(n):
        q0, q1 = poly[idx], poly[(idx + 1) % n]
        v0, v1 = vals[idx], vals[(idx + 1) % n]
        s0, s1 = _sgn(v0), _sgn(v1)
        if s0 <= 0:
            out.append(q0)
        if (s0 < 0 < s1) or (s1 < 0 < s0):
            t = v0 / (v0 - v1)
            out.append(q0 + (q1 - q0) * t)
    return out


def check_strongly_convex(config):
    hull = config.hull()
    n = len(hull)
    for i in range(n):
        a, b, c = hull[i], hull[(i + 1) % n], hull[(i + 2) % n]
        s = _sgn(((b - a).conjugate() * (c - a)).imag)
        if s == 0:
            raise NotStronglyConvex("three hexagon vertices collinear")


def voronoi(config, tol=0.0):
    """Voronoi decomposition of H_p by half-plane clipping (exact or float)."""
    check_strongly_convex(config)
    hull = config.hull()
    cells = {}
    for j in HEX_INDICES:
        pj = config.sites[j]
        poly = list(hull)
        for i in HEX_INDICES:
            if i == j:
                continue
            pi = config.sites[i]
            # |q-pj|^2 <= |q-pi|^2  <=>  2(pi-pj).q <= |pi|^2-|pj|^2
            d = pi - pj
            a = 2 * d.real
            b = 2 * d.imag
            c = abs2(pi) - abs2(pj)
            poly = _clip_halfplane(poly, a, b, c)
        cells[j] = poly
    essential = _essential_vertices(config, cells, tol)
    edges = _cell_edges(cells, tol)
    return VoronoiDiagram(config, cells, essential, edges)


def _inside_hull_strict(config, q, tol=0.0):
    hull = config.hull()
    n = len(hull)
    signs = []
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        v = ((b - a).conjugate() * (q - a)).imag
        if isinstance(v, float):
            signs.append(1 if v > tol else (-1 if v < -tol else 0))
        else:
            signs.append(v.sign())
    return all(s > 0 for s in signs) or all(s < 0 for s in signs)


def _essential_vertices(config, cells, tol):
    pts = []
    for j, poly in cells.items():
        for q in poly:
            if _inside_hull_strict(config, q, tol):
                pts.append(q)
    out = []
    for q in pts:
        if any(_points_close(q, r, tol) for r, _ in out):
            continue
        _, mins, _ = mu(config, q, tol=(1e-9 if not config.exact else 0.0))
        out.append((q, tuple(sorted(mins))))
    return out


def _points_close(a, b, tol):
    d = a - b
    if isinstance(d, complex):
        return abs(d) <= max(tol, 1e-12)
    return d.real.is_zero() and d.imag.is_zero()


def _cell_edges(cells, tol):
    edges = {}
    keys = sorted(cells)
    for ii in range(len(keys)):
        for jj in range(ii + 1, len(keys)):
            i, j = keys[ii], keys[jj]
            shared = []
            for q in cells[i]:
                if any(_points_close(q, r, tol) for r in cells[j]):
                    if not any(_points_close(q, s, tol) for s in shared):
                        shared.append(q)
            if len(shared) == 2:
                edges[frozenset({i, j})] = tuple(shared)
    return edges


def essential_vertex_candidates(config, tol=1e-9):
    """Voronoi vertices of the hexagon via the empty-circumdisk criterion.

    Returns [(point, squared radius, triple)]; faster than full clipping and
    exact in exact mode.
    """
    out = []
    idx = HEX_INDICES
    eff_tol = 0.0 if config.exact else tol
    for a in range(6):
        for b in range(a + 1, 6):
            for c in range(b + 1, 6):
                i, j, k = idx[a], idx[b], idx[c]
                try:
                    q = triple_point(i, j, k, config)
                except NoCircumcenter:
                    continue
                r2 = abs2(q - config.sites[i])
                ok = True
                for m in idx:
                    if m in (i, j, k):
                        continue
                    d2 = abs2(q - config.sites[m])
                    diff = d2 - r2
                    if isinstance(diff, float):
                        if diff < -eff_tol:
                            ok = False
                            break
                    elif diff.sign() < 0:
                        ok = False
                        break
                if not ok:
                    continue
                if not _inside_hull_strict(config, q, 0.0 if config.exact else -tol):
                    continue
                out.append((q, r2, (i, j, k)))
    return out
