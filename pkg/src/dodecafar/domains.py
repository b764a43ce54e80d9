"""States of the base pentagon, the triangles used for certification, and the
polynomial maps from the unit square onto them.

The pentagon splits into 15 quadrilateral states: three per symmetry sector.
In the fundamental sector (angles 0..72 degrees) they are the kite S0 at the
origin, the quad S1 below the bisector ray, and its reflection S2.  Each
state carries a parallel segment foliation preserved by the far-point map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import (
    COS36,
    COS72,
    FieldElement,
    KComplex,
    ONE,
    PHI,
    SIN36,
    SIN72,
    ZERO,
    abs2,
    omega as omega_c,
    unit_tenth,
)
from .posdom import TriangleMap

# key points (exact)
V0 = KComplex(COS36 * PHI / 2, SIN36 * PHI / 2)        # pentagon edge midpoint
V1 = KComplex(COS36 / (PHI * PHI), SIN36 / (PHI * PHI))
V2 = KComplex(COS36 / 2, SIN36 / 2)
V3 = KComplex(COS72, ZERO)                             # tip of the kite on the axis
P_ONE = KComplex(ONE, ZERO)
ORIGIN = KComplex(ZERO, ZERO)

# reflection across the sector bisector (angle pi/5): z -> omega * conj(z)
def reflect_bisector(z):
    if isinstance(z, complex):
        w = complex(omega_c(1))
        return w * z.conjugate()
    return omega_c(1) * z.conjugate()


V3_REFLECTED = reflect_bisector(V3)

# state polygons in the fundamental sector, counterclockwise
STATE_S0 = (ORIGIN, V3, V1, V3_REFLECTED)
STATE_S1 = (V3, P_ONE, V0, V1)
STATE_S2 = tuple(reversed([reflect_bisector(v) for v in STATE_S1]))

# certification triangles
TRI_Y0 = (ORIGIN, V3, V1)            # lower half of S0
TRI_Y1 = (V1, V3, P_ONE)
TRI_Y2 = (V1, V2, P_ONE)
TRI_Y3 = (V0, V2, P_ONE)
TRI_1638 = TRI_Y0
TRI_8349 = (P_ONE, V0, V1)
TRI_8316 = (ORIGIN, P_ONE, V2)

# foliation directions (unit complex numbers)
FOLIATION_S0 = unit_tenth(1)                     # parallel to the bisector
FOLIATION_S1 = unit_tenth(9)                     # angle -pi/5
FOLIATION_S2 = unit_tenth(3)                     # reflected copy

# ---------------------------------------------------------------------------
# the triangle maps (affine parts of the square -> triangle surjections)
# ---------------------------------------------------------------------------
#
# Square corners (0,0), (1,0), (1,1) land on the triangle vertices listed per
# map; the inner factor (x, xy) is supplied by TriangleMap.  The target
# assignments reproduce the published parameterizations; the one for TRI_Y1
# is pinned by the requirement that the square edge y = 1 maps onto the
# segment L1 = [V1, (1,0)] shared with TRI_Y2, with (1,0) at x = 0 matching
# the TRI_Y2 map (derived; see tests).

def _onto(v00, v10, v11):
    return TriangleMap.onto((v00.real, v00.imag), (v10.real, v10.imag),
                            (v11.real, v11.imag))


MAP_1638 = _onto(ORIGIN, V3, V1)
MAP_8349 = _onto(V1, P_ONE, V0)
MAP_8316 = _onto(ORIGIN, P_ONE, V2)
MAP_Y0 = MAP_1638
MAP_Y1 = _onto(P_ONE, V3, V1)
MAP_Y2 = _onto(P_ONE, V1, V2)
MAP_Y3 = _onto(P_ONE, V0, V2)

TRIANGLE_MAPS = {
    "Y0": (TRI_Y0, MAP_Y0),
    "Y1": (TRI_Y1, MAP_Y1),
    "Y2": (TRI_Y2, MAP_Y2),
    "Y3": (TRI_Y3, MAP_Y3),
    "T1638": (TRI_1638, MAP_1638),
    "T8349": (TRI_8349, MAP_8349),
    "T8316": (TRI_8316, MAP_8316),
}


def _sgn(v):
    if isinstance(v, (int, float, Fraction)):
        return 0 if v == 0 else (1 if v > 0 else -1)
    return v.sign()


def _side(p, a, b):
    v = ((b - a).conjugate() * (p - a)).imag
    return _sgn(v)


def point_in_polygon(p, poly, closed=True):
    """Exact (or float) containment in a convex polygon given ccw."""
    signs = [_side(p, poly[i], poly[(i + 1) % len(poly)])
             for i in range(len(poly))]
    if closed:
        return all(s >= 0 for s in signs)
    return all(s > 0 for s in signs)


# ---------------------------------------------------------------------------
# whole-pentagon state atlas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StateRef:
    """A state of the pentagon: sector rotation omega^k applied to a base state."""
    sector: int            # 0..4
    base: str              # "S0" | "S1" | "S2"

    def polygon(self):
        base = {"S0": STATE_S0, "S1": STATE_S1, "S2": STATE_S2}[self.base]
        w = omega_c(self.sector)
        return tuple(w * v for v in base)

    def foliation_direction(self):
        base = {"S0": FOLIATION_S0, "S1": FOLIATION_S1, "S2": FOLIATION_S2}[self.base]
        return omega_c(self.sector) * base


ALL_STATES = tuple(StateRef(k, b) for k in range(5) for b in ("S0", "S1", "S2"))


def state_edges():
    """Deduplicated list of state edge segments over the whole pentagon."""
    segs = []
    seen = set()
    for st in ALL_STATES:
        poly = st.polygon()
        for i in range(len(poly)):
            a, b = poly[i], poly[(i + 1) % len(poly)]
            key = frozenset({(complex(a).real.__round__(9), complex(a).imag.__round__(9)),
                             (complex(b).real.__round__(9), complex(b).imag.__round__(9))})
            if key not in seen:
                seen.add(key)
                segs.append((a, b))
    return segs


STATE_EDGE_SEGMENTS_FLOAT = None


def distance_to_state_edges(q):
    """Float distance from q to the union of state edges."""
    global STATE_EDGE_SEGMENTS_FLOAT
    if STATE_EDGE_SEGMENTS_FLOAT is None:
        STATE_EDGE_SEGMENTS_FLOAT = [(complex(a), complex(b)) for a, b in state_edges()]
    q = complex(q)
    best = math.inf
    for a, b in STATE_EDGE_SEGMENTS_FLOAT:
        d = b - a
        t = ((q - a).real * d.real + (q - a).imag * d.imag) / abs(d) ** 2
        t = min(1.0, max(0.0, t))
        best = min(best, abs(q - (a + t * d)))
    return best


def pentagon_polygon(exact=True):
    if exact:
        return tuple(omega_c(k) for k in range(5))
    return tuple(complex(omega_c(k)) for k in range(5))


def in_pentagon(p, closed=True):
    return point_in_polygon(p, pentagon_polygon(isinstance(p, KComplex)), closed)


def sector_of(p):
    """Rotation count k such that omega^-k p lies in the closed sector 0..72deg.

    Ties (points on sector rays, including the origin) resolve to the smaller k.
    """
    if isinstance(p, KComplex):
        for k in range(5):
            q = omega_c((5 - k) % 5) * p
            # angle(q) in [0, 72]: above the real axis, below the omega ray
            if _sgn(q.imag) >= 0 and _sgn((omega_c(1).conjugate() * q).imag) <= 0:
                return k
        raise ValueError("point not in any sector")
    ang = math.atan2(p.imag, p.real) % (2 * math.pi)
    return int(ang // (2 * math.pi / 5)) % 5


def locate_state(p):
    """StateRef containing p (closed states; boundary points give the first hit)."""
    hits = locate_states(p)
    if not hits:
        raise ValueError(f"{p} lies in no state (outside the pentagon?)")
    return hits[0]


def locate_states(p):
    """All states whose closed polygon contains p."""
    out = []
    for st in ALL_STATES:
        if point_in_polygon(p, st.polygon()):
            out.append(st)
    return out
