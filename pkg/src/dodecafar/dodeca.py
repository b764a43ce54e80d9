"""Combinatorial model of the regular dodecahedron with faces numbered 0..11.

Face 0 is the base pentagon, face 11 its antipode.  Faces 1..5 form the lower
belt (in cyclic order around face 0), faces 6..10 the upper belt.  Vertices
are the 20 mutually-adjacent face triples.  Each face carries an oriented
cycle of its five vertices; orientations are globally consistent, so a chain
developed into the plane keeps a single handedness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import FieldElement, ONE, PHI, SIN72, SQRT2, SQRT5, omega as omega_c

# neighbor sets; lower belt k is adjacent to upper faces 6+((k+1)%5), 6+((k+2)%5)
FACE_ADJACENCY = {
    0: frozenset({1, 2, 3, 4, 5}),
    1: frozenset({0, 2, 5, 8, 9}),
    2: frozenset({0, 1, 3, 9, 10}),
    3: frozenset({0, 2, 4, 10, 6}),
    4: frozenset({0, 3, 5, 6, 7}),
    5: frozenset({0, 1, 4, 7, 8}),
    6: frozenset({11, 7, 10, 3, 4}),
    7: frozenset({11, 6, 8, 4, 5}),
    8: frozenset({11, 7, 9, 5, 1}),
    9: frozenset({11, 8, 10, 1, 2}),
    10: frozenset({11, 9, 6, 2, 3}),
    11: frozenset({6, 7, 8, 9, 10}),
}

# involution fixing faces 0, 4, 9, 11 (reflection symmetry)
MIRROR_PERM = (0, 2, 1, 5, 4, 3, 7, 6, 10, 9, 8, 11)

# rotation by 2*pi/5 about the 0-11 axis
OMEGA_PERM = (0, 2, 3, 4, 5, 1, 7, 8, 9, 10, 6, 11)

# antipodal face pairing
ANTIPODE = (11, 6, 7, 8, 9, 10, 1, 2, 3, 4, 5, 0)


def mirror_sequence(seq):
    """Entrywise image of a face-index sequence under the mirror involution."""
    return [MIRROR_PERM[i] for i in seq]


def omega_sequence(seq, k=1):
    """Face sequence of the chain whose development is rotated by exp(2 pi i k/5)."""
    out = list(seq)
    for _ in range(k % 5):
        out = [OMEGA_PERM[i] for i in out]
    return out


def _neighbor_cycles():
    """Cyclic order of neighbors around every face, consistently oriented.

    Face 0's cycle is fixed as (1,2,3,4,5); orientation propagates so that
    adjacent faces traverse their shared edge in opposite directions.
    """
    undirected = {}
    for f, nbrs in FACE_ADJACENCY.items():
        nbrs = sorted(nbrs)
        start = nbrs[0]
        cycle = [start]
        while len(cycle) < 5:
            cur = cycle[-1]
            nxt = [v for v in nbrs
                   if v not in cycle and v in FACE_ADJACENCY[cur]]
            cycle.append(nxt[0])
        undirected[f] = cycle

    cycles = {0: (1, 2, 3, 4, 5)}
    todo = [0]
    while todo:
        f = todo.pop()
        cyc = cycles[f]
        for idx in range(5):
            g = cyc[idx]
            if g in cycles:
                continue
            pred = cyc[idx - 1]
            succ = cyc[(idx + 1) % 5]
            # consistent orientation: g's cycle contains succ, f, pred in order
            raw = undirected[g]
            i = raw.index(f)
            if raw[(i + 1) % 5] == pred and raw[i - 1] == succ:
                oriented = tuple(raw)
            elif raw[(i + 1) % 5] == succ and raw[i - 1] == pred:
                oriented = tuple(reversed(raw))
            else:
                raise AssertionError(f"adjacency table broken at faces {f},{g}")
            cycles[g] = oriented
            todo.append(g)
    return cycles


NEIGHBOR_CYCLES = _neighbor_cycles()


def _vertices():
    verts = set()
    for f, cyc in NEIGHBOR_CYCLES.items():
        for i in range(5):
            verts.add(frozenset({f, cyc[i], cyc[(i + 1) % 5]}))
    return sorted(verts, key=sorted)


VERTICES = _vertices()
VERTEX_INDEX = {v: i for i, v in enumerate(VERTICES)}


def face_vertex_cycle(f):
    """Oriented cycle of the five vertex ids of face f."""
    cyc = NEIGHBOR_CYCLES[f]
    return tuple(VERTEX_INDEX[frozenset({f, cyc[i], cyc[(i + 1) % 5]})]
                 for i in range(5))


FACE_VERTEX_CYCLES = {f: face_vertex_cycle(f) for f in range(12)}


def antipodal_vertex(v):
    """Vertex id of the antipode of vertex id v."""
    return VERTEX_INDEX[frozenset(ANTIPODE[f] for f in VERTICES[v])]


def _vertex_coloring():
    """5-coloring with every face rainbow (same-color classes are tetrahedra).

    Deterministic backtracking seeded by face 0's vertex cycle.
    """
    n = len(VERTICES)
    colors = [-1] * n
    base = FACE_VERTEX_CYCLES[0]
    for c, v in enumerate(base):
        colors[v] = c
    faces_of_vertex = [[] for _ in range(n)]
    for f, cyc in FACE_VERTEX_CYCLES.items():
        for v in cyc:
            faces_of_vertex[v].append(f)

    order = [v for v in range(n) if colors[v] < 0]

    def ok(v, c):
        for f in faces_of_vertex[v]:
            for w in FACE_VERTEX_CYCLES[f]:
                if w != v and colors[w] == c:
                    return False
        return True

    def solve(k):
        if k == len(order):
            return True
        v = order[k]
        for c in range(5):
            if ok(v, c):
                colors[v] = c
                if solve(k + 1):
                    return True
                colors[v] = -1
        return False

    if not solve(0):
        raise AssertionError("no rainbow coloring found")
    return tuple(colors)


VERTEX_COLORS = _vertex_coloring()


def face_distance_classes():
    """Faces grouped by graph distance from face 0."""
    dist = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for f in frontier:
            for g in FACE_ADJACENCY[f]:
                if g not in dist:
                    dist[g] = dist[f] + 1
                    nxt.append(g)
        frontier = nxt
    out = {}
    for f, d in dist.items():
        out.setdefault(d, set()).add(f)
    return out


# ---------------------------------------------------------------------------
# planar base pentagon
# ---------------------------------------------------------------------------
#
# Gauge: which vertex of face 0 sits at which 5th root of unity, and whether
# the stored cycle runs counterclockwise.  The values below were calibrated
# once against the published transplant codes (see tests): the vertex cycle
# of face 0 is placed counterclockwise with cycle position 0 at angle
# 2*pi*GAUGE_ROT/5.

GAUGE_ROT = 1
GAUGE_CCW = True


def base_pentagon_positions(exact=True):
    """Positions of face 0's vertex cycle: cycle slot i -> 5th root of unity."""
    if exact:
        pts = [omega_c(k) for k in range(5)]
    else:
        pts = [complex(math.cos(2 * math.pi * k / 5), math.sin(2 * math.pi * k / 5))
               for k in range(5)]
    if GAUGE_CCW:
        return [pts[(GAUGE_ROT + i) % 5] for i in range(5)]
    return [pts[(GAUGE_ROT - i) % 5] for i in range(5)]


@dataclass(frozen=True)
class PlanarPentagon:
    """A developed copy of a face: vertex ids with exact planar positions, ccw."""
    face: int
    vertex_ids: tuple        # 5 vertex ids, in traversal order
    positions: tuple         # matching positions (KComplex or complex)

    @property
    def colors(self):
        return tuple(VERTEX_COLORS[v] for v in self.vertex_ids)

    def center(self):
        acc = self.positions[0]
        for p in self.positions[1:]:
            acc = acc + p
        if isinstance(acc, complex):
            return acc / 5
        return acc * Fraction(1, 5)

    def position_of(self, vertex_id):
        return self.positions[self.vertex_ids.index(vertex_id)]


def spatial_bounds():
    """Exact spatial constants backing the adjacent-face exclusion argument.

    Face circumradius is 1.  Returns the face "diameter" in the sense used by
    the exclusion argument (largest distance from a face point to a chosen
    edge, i.e. vertex to opposite edge), the inradius of the solid, and the
    verified inequality chain 2 + phi < 4 < pi * phi^2 / 2.
    """
    face_diameter = ONE + PHI / 2
    inradius = PHI * PHI / 2
    # pi > 355/113 > 3.1415929 would overshoot; use the safe lower bound 3.14159
    pi_lo = Fraction(314159, 100000)
    path_bound_ok = (2 + PHI).sign() > 0 and (4 - (2 + PHI)).sign() > 0
    antipodal_ok = (inradius * pi_lo - 4).sign() > 0
    return {
        "face_diameter": face_diameter,
        "inradius": inradius,
        "edge_length": 2 * SIN72,
        "two_plus_phi_below_4": path_bound_ok,
        "antipodal_above_4": antipodal_ok,
    }


def face_graph_json():
    """Serializable description of the combinatorial structure."""
    return {
        "adjacency": {str(f): sorted(FACE_ADJACENCY[f]) for f in range(12)},
        "neighbor_cycles": {str(f): list(NEIGHBOR_CYCLES[f]) for f in range(12)},
        "antipode": list(ANTIPODE),
        "mirror": list(MIRROR_PERM),
        "omega": list(OMEGA_PERM),
        "vertices": [sorted(v) for v in VERTICES],
        "vertex_colors": list(VERTEX_COLORS),
    }
