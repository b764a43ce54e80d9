"""Pentagon chains: planar development, straight/crooked certificates,
exhaustive enumeration, transplant codes, and bottleneck quadrilaterals.

A chain is recorded by its face-index sequence (starting at face 0).  The
development places the base pentagon at the 5th roots of unity and rolls
across shared edges; all arithmetic is exact over K unless float mode is
requested for search pruning.  Straightness is certified only by an exact
spanning segment, crookedness only by an exact bad edge triple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import dodeca as _dodeca
from .dodeca import (
    ANTIPODE,
    FACE_ADJACENCY,
    FACE_VERTEX_CYCLES,
    MIRROR_PERM,
    PlanarPentagon,
    VERTEX_COLORS,
    VERTICES,
    antipodal_vertex,
    base_pentagon_positions,
    mirror_sequence,
    omega_sequence,
)
from .field import (
    FieldElement,
    KComplex,
    ONE,
    PHI,
    SIN72,
    ZERO,
    abs2,
    omega as omega_c,
    unit_tenth,
)


class InvalidChain(ValueError):
    """Face sequence is not a valid non-backtracking walk from face 0."""


class NotEmbedded(ValueError):
    """Developed pentagons overlap in their interiors."""


class NotAntipodalChain(ValueError):
    """Transplant codes require the chain to end at face 11."""


class UnresolvedChain(RuntimeError):
    """A chain certified neither straight nor crooked; the run fails closed."""


@dataclass
class PentagonChain:
    seq: tuple
    pentagons: list                 # PlanarPentagon, exact or float positions
    shared_edges: list              # (vid_a, vid_b, pos_a, pos_b) per transition
    exact: bool

    def __len__(self):
        return len(self.seq)

    @property
    def first(self):
        return self.pentagons[0]

    @property
    def last(self):
        return self.pentagons[-1]


def _rot_constant(exact):
    k = 1 if _dodeca.GAUGE_CCW else 4
    return omega_c(k) if exact else complex(math.cos(2 * math.pi * k / 5),
                                            math.sin(2 * math.pi * k / 5))


def _extend_pentagon(prev, g, rot):
    """Develop face g across its shared edge with the pentagon `prev`."""
    prev_ids = prev.vertex_ids
    gcycle = FACE_VERTEX_CYCLES[g]
    shared = [v for v in gcycle if v in prev_ids]
    if len(shared) != 2:
        raise InvalidChain(f"faces {prev.face},{g} do not share an edge")
    # prev traverses u -> v; consistent orientation makes g traverse v -> u
    i_u = None
    for k in range(5):
        a, b = prev_ids[k], prev_ids[(k + 1) % 5]
        if a in shared and b in shared:
            u, v = a, b
            break
    else:
        raise InvalidChain("shared vertices not consecutive")
    j = gcycle.index(v)
    if gcycle[(j + 1) % 5] != u:
        raise AssertionError("orientation propagation is broken")
    pos = {v: prev.position_of(v), u: prev.position_of(u)}
    pa, pb = pos[v], pos[u]
    for k in range(2, 5):
        nxt = gcycle[(j + k) % 5]
        pc = pb + (pb - pa) * rot
        pos[nxt] = pc
        pa, pb = pb, pc
    positions = tuple(pos[w] for w in gcycle)
    return PlanarPentagon(g, gcycle, positions), (u, v, pos[u], pos[v])


def validate_walk(seq):
    seq = tuple(seq)
    if not seq or seq[0] != 0:
        raise InvalidChain("chains start at face 0")
    for a, b in zip(seq, seq[1:]):
        if b not in FACE_ADJACENCY[a]:
            raise InvalidChain(f"faces {a},{b} not adjacent")
    for a, b in zip(seq, seq[2:]):
        if a == b:
            raise InvalidChain("immediate backtracking")
    return seq


def develop(seq, exact=True, check_embedding=True):
    """Develop a face walk into the plane (base pentagon at the roots of unity)."""
    seq = validate_walk(seq)
    rot = _rot_constant(exact)
    base = PlanarPentagon(seq[0], FACE_VERTEX_CYCLES[seq[0]],
                          tuple(base_pentagon_positions(exact)))
    pentagons = [base]
    edges = []
    for g in seq[1:]:
        pent, edge = _extend_pentagon(pentagons[-1], g, rot)
        pentagons.append(pent)
        edges.append(edge)
    chain = PentagonChain(seq, pentagons, edges, exact)
    if check_embedding and not chain_embedded(chain):
        raise NotEmbedded(f"chain {seq} self-overlaps")
    return chain


# ---------------------------------------------------------------------------
# embedding test (float separating-axis; developments are rigid so margins
# are macroscopic)
# ---------------------------------------------------------------------------

def _float_positions(pent):
    if isinstance(pent.positions[0], complex):
        return pent.positions
    return tuple(complex(p) for p in pent.positions)


def _polys_separated(pa, pb, eps=1e-9):
    for poly_a, poly_b in ((pa, pb), (pb, pa)):
        n = len(poly_a)
        for i in range(n):
            a, b = poly_a[i], poly_a[(i + 1) % n]
            d = b - a
            nx, ny = -d.imag, d.real
            amin = min(nx * p.real + ny * p.imag for p in poly_a)
            amax = max(nx * p.real + ny * p.imag for p in poly_a)
            bmin = min(nx * p.real + ny * p.imag for p in poly_b)
            bmax = max(nx * p.real + ny * p.imag for p in poly_b)
            if amax <= bmin + eps or bmax <= amin + eps:
                return True
    return False


def chain_embedded(chain):
    polys = [_float_positions(p) for p in chain.pentagons]
    n = len(polys)
    for i in range(n):
        for j in range(i + 1, n):
            if not _polys_separated(polys[i], polys[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# crookedness and straightness certificates
# ---------------------------------------------------------------------------

def _side(p, a, b):
    """Sign of the cross product (b-a) x (p-a); exact for KComplex points."""
    v = (b - a).conjugate() * (p - a)
    if isinstance(v, complex):
        s = v.imag
        return 0 if s == 0 else (1 if s > 0 else -1)
    return v.imag.sign()


def _bad_triple(e1, e2, e3):
    """True when no line can meet all three segments (exact test).

    Both endpoints of e2 strictly on the same side of all four lines through
    one endpoint of e1 and one of e3.
    """
    for a in e1:
        for b in e3:
            if a == b:
                return False
            s1 = _side(e2[0], a, b)
            s2 = _side(e2[1], a, b)
            if s1 == 0 or s1 != s2:
                return False
    return True


def bad_triple_filter(chain):
    """'certified-crooked' if some shared-edge triple is bad, else 'unknown'."""
    edges = [(e[2], e[3]) for e in chain.shared_edges]
    n = len(edges)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if _bad_triple(edges[i], edges[j], edges[k]):
                    return "certified-crooked"
    return "unknown"


def find_bad_triple(chain):
    edges = [(e[2], e[3]) for e in chain.shared_edges]
    n = len(edges)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if _bad_triple(edges[i], edges[j], edges[k]):
                    return (i, j, k)
    return None


def _point_in_convex(p, poly, strict=False):
    """Exact containment of p in a convex polygon (traversal orientation free)."""
    signs = [_side(p, poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly))]
    if strict:
        return all(s > 0 for s in signs) or all(s < 0 for s in signs)
    return all(s >= 0 for s in signs) or all(s <= 0 for s in signs)


def segment_crossing_params(a, b, chain, require_interior_endpoints=True):
    """Exact test that segment [a, b] lies in the chain, crossing every shared edge.

    Returns the list of crossing parameters (as exact field elements) when the
    segment spans the chain, else None.  Endpoints must lie in the first/last
    pentagons (strict interiors when require_interior_endpoints).
    """
    if not _point_in_convex(a, chain.first.positions, strict=require_interior_endpoints):
        return None
    if not _point_in_convex(b, chain.last.positions, strict=require_interior_endpoints):
        return None
    d = b - a
    params = []
    for (_, _, pu, pv) in chain.shared_edges:
        sa = _side(a, pu, pv)
        sb = _side(b, pu, pv)
        if sa == 0 and sb == 0:
            return None
        if sa == sb:
            return None
        if sa == 0 or sb == 0:
            # an endpoint on the edge line: only legal if it is the segment end
            # inside the matching face; treat as failure for simplicity
            return None
        # crossing parameter t with a + t d on line(pu, pv):
        # cross(v - u, a + t d - u) = 0
        ev = pv - pu
        num = (ev.conjugate() * (pu - a)).imag
        den = (ev.conjugate() * d).imag
        t = num / den
        # crossing point within the closed edge [pu, pv]
        p = a + d * t
        su = ((p - pu).conjugate() * (pv - pu)).imag
        if not _is_zero(su):
            return None
        dot0 = _dot(p - pu, pv - pu)
        dot1 = _dot(p - pv, pu - pv)
        if _sign(dot0) < 0 or _sign(dot1) < 0:
            return None
        params.append(t)
    for t0, t1 in zip(params, params[1:]):
        if _sign(t1 - t0) < 0:
            return None
    return params


def _dot(z, w):
    v = z.conjugate() * w
    return v.real


def _sign(v):
    if isinstance(v, (int, float)):
        return 0 if v == 0 else (1 if v > 0 else -1)
    if isinstance(v, Fraction):
        return 0 if v == 0 else (1 if v > 0 else -1)
    return v.sign()


def _is_zero(v):
    if isinstance(v, (int, float, Fraction)):
        return v == 0
    return v.is_zero()


def _interior_grid(pent, k):
    """Dyadic interior points of a pentagon: center blended toward vertices."""
    c = pent.center()
    pts = [c]
    denom = 1 << k
    for num in range(1, denom):
        w = Fraction(num, denom)
        for v in pent.positions:
            pts.append(c + (v - c) * w)
        for i in range(5):
            m = (pent.positions[i] + pent.positions[(i + 1) % 5]) * Fraction(1, 2)
            pts.append(c + (m - c) * w)
    return pts


def find_spanning_witness(chain, max_refine=4):
    """Search dyadic endpoint pairs for an exact spanning segment.

    Returns (a, b) or None.  Absence proves nothing; presence is an exact
    straightness certificate (verified over K).
    """
    if len(chain.seq) == 1:
        c = chain.first.center()
        return (c, c)
    fchain = chain if not chain.exact else None
    # float prefilter uses a parallel float development
    fdev = develop(chain.seq, exact=False, check_embedding=False) \
        if chain.exact else chain
    for k in range(0, max_refine):
        cand_a = _interior_grid(fdev.first, k)
        cand_b = _interior_grid(fdev.last, k)
        hit = _float_witness(fdev, cand_a, cand_b)
        if hit is None:
            continue
        ia, ib = hit
        if not chain.exact:
            return None  # float chains cannot carry exact certificates
        ga = _interior_grid(chain.first, k)
        gb = _interior_grid(chain.last, k)
        a, b = ga[ia], gb[ib]
        if segment_crossing_params(a, b, chain) is not None:
            return (a, b)
    return None


def _float_witness(fdev, cand_a, cand_b):
    edges = [(e[2], e[3]) for e in fdev.shared_edges]
    fa = [complex(p) if not isinstance(p, complex) else p for p in cand_a]
    fb = [complex(p) if not isinstance(p, complex) else p for p in cand_b]
    for ia, a in enumerate(fa):
        for ib, b in enumerate(fb):
            if _float_spans(a, b, edges):
                return ia, ib
    return None


def _float_spans(a, b, edges, eps=1e-9):
    d = b - a
    last_t = -1.0
    for pu, pv in edges:
        u = complex(pu) if not isinstance(pu, complex) else pu
        v = complex(pv) if not isinstance(pv, complex) else pv
        ev = v - u
        den = (ev.conjugate() * d).imag
        if abs(den) < eps:
            return False
        t = (ev.conjugate() * (u - a)).imag / den
        if t < last_t - eps or t < eps or t > 1 - eps:
            return False
        p = a + t * d
        s = ((p - u).conjugate() * (v - u)).real
        if s < eps or s > abs(ev) ** 2 - eps:
            return False
        last_t = t
    return True


def classify_chain(chain):
    """'certified-straight' (witness) or 'certified-crooked' (bad triple).

    Raises UnresolvedChain when neither certificate is found.
    """
    status = bad_triple_filter(chain)
    if status == "certified-crooked":
        return "certified-crooked", find_bad_triple(chain)
    w = find_spanning_witness(chain)
    if w is not None:
        return "certified-straight", w
    raise UnresolvedChain(f"chain {chain.seq} has no certificate")


# ---------------------------------------------------------------------------
# transplant codes
# ---------------------------------------------------------------------------

def _solve_zomega(alpha):
    """Write an exact complex alpha as sum_{k=0..3} d_k omega^k, d_k in Q."""
    basis = [omega_c(k) for k in range(4)]
    # coordinates: real parts live in slots 0,2; imag parts in slots 5,7
    rows = []
    rhs = []
    for slot in (0, 2):
        rows.append([b.real.coords[slot] for b in basis])
        rhs.append(alpha.real.coords[slot])
    for slot in (5, 7):
        rows.append([b.imag.coords[slot] for b in basis])
        rhs.append(alpha.imag.coords[slot])
    sol = _solve4(rows, rhs)
    # verify in full
    acc = KComplex(ZERO, ZERO)
    for d, b in zip(sol, basis):
        acc = acc + b * FieldElement.from_rational(d)
    if not (acc == alpha):
        raise ArithmeticError("point is not in Z[omega]")
    return sol


def _solve4(rows, rhs):
    m = [row[:] + [r] for row, r in zip(rows, rhs)]
    n = 4
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


@dataclass(frozen=True)
class TransplantCode:
    """Six integers (c0..c4, c5): the developed image of the far point of p is
    sum c_k omega^k + exp(i pi c5 / 5) * conj(p)."""
    c: tuple

    def __iter__(self):
        return iter(self.c)

    def evaluate(self, p):
        """Exact (KComplex p) or float (complex p) transplant of p."""
        if isinstance(p, complex):
            acc = 0j
            for k in range(5):
                acc += self.c[k] * complex(math.cos(2 * math.pi * k / 5),
                                           math.sin(2 * math.pi * k / 5))
            return acc + complex(unit_tenth(self.c[5])) * p.conjugate()
        acc = KComplex(ZERO, ZERO)
        for k in range(5):
            if self.c[k]:
                acc = acc + omega_c(k) * self.c[k]
        return acc + unit_tenth(self.c[5]) * p.conjugate()

    def affine_parts(self):
        """(alpha, beta) with transplant(p) = alpha + beta * conj(p), exact."""
        acc = KComplex(ZERO, ZERO)
        for k in range(5):
            if self.c[k]:
                acc = acc + omega_c(k) * self.c[k]
        return acc, unit_tenth(self.c[5])

    def mirror(self):
        c0, c1, c2, c3, c4, c5 = self.c
        return TransplantCode((c2, c1, c0, c4, c3, (8 - c5) % 10))

    def omega(self):
        c0, c1, c2, c3, c4, c5 = self.c
        return TransplantCode((c4, c0, c1, c2, c3, (c5 + 4) % 10))


def transplant_code_of(chain):
    """Read the transplant code off an exactly developed chain ending at face 11."""
    if chain.seq[-1] != 11:
        raise NotAntipodalChain(f"chain {chain.seq} ends at {chain.seq[-1]}")
    if not chain.exact:
        raise ValueError("transplant codes need an exact development")
    base, last = chain.first, chain.last
    v0, v1, v2 = base.vertex_ids[:3]
    z0, z1 = base.position_of(v0), base.position_of(v1)
    w0 = last.position_of(antipodal_vertex(v0))
    w1 = last.position_of(antipodal_vertex(v1))
    beta = (w1 - w0) / (z1 - z0).conjugate()
    alpha = w0 - beta * z0.conjugate()
    w2 = last.position_of(antipodal_vertex(v2))
    if not (alpha + beta * base.position_of(v2).conjugate() == w2):
        raise ArithmeticError("development is not conjugate-affine")
    c5 = next((k for k in range(10) if unit_tenth(k) == beta), None)
    if c5 is None:
        raise ArithmeticError("conjugate factor is not a 10th root of unity")
    d = _solve_zomega(alpha)
    ints = []
    for q in d:
        if Fraction(q).denominator != 1:
            raise ArithmeticError("code coefficients not integral")
        ints.append(int(q))
    shift = -min(min(ints), 0)
    code = tuple(v + shift for v in ints) + (shift, c5)
    return TransplantCode(code)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@dataclass
class ChainSearchSpec:
    end_faces: frozenset
    max_len: int
    min_len: int = 2
    efficient_only: bool = True
    exclude_faces: frozenset = frozenset()
    require_suffix: tuple = ()      # e.g. (11, 9) for chains ending 11,9

    def __post_init__(self):
        if self.max_len > 12:
            raise ValueError("max_len capped at 12")


@dataclass
class ClassifiedChain:
    seq: tuple
    status: str                      # certified-straight | certified-crooked
    witness: Optional[tuple] = None
    bad_triple: Optional[tuple] = None


def _efficient_step(a, b):
    return not (a >= 6 and b <= 5)


def enumerate_walks(spec):
    """All embedded chains matching the spec (deterministic DFS order).

    Yields float developments (sequence + pentagons) for every walk whose
    length is within bounds; terminal filtering is the caller's business.
    """
    rot = _rot_constant(False)
    base = PlanarPentagon(0, FACE_VERTEX_CYCLES[0],
                          tuple(complex(p) for p in base_pentagon_positions(False)))
    out = []

    def dfs(seq, pents):
        if len(seq) >= spec.min_len and seq[-1] in spec.end_faces:
            if not spec.require_suffix or \
                    tuple(seq[-len(spec.require_suffix):]) == spec.require_suffix:
                out.append(tuple(seq))
        if len(seq) >= spec.max_len:
            return
        prev = seq[-2] if len(seq) >= 2 else None
        for g in sorted(FACE_ADJACENCY[seq[-1]]):
            if g == prev or g in spec.exclude_faces:
                continue
            if spec.efficient_only and not _efficient_step(seq[-1], g):
                continue
            pent, _ = _extend_pentagon(pents[-1], g, rot)
            fp = _float_positions(pent)
            if any(not _polys_separated(_float_positions(p), fp)
                   for p in pents[:-1]):
                continue
            seq.append(g)
            pents.append(pent)
            dfs(seq, pents)
            seq.pop()
            pents.pop()

    dfs([0], [base])
    return out


def enumerate_chains(spec):
    """Enumerate chains per spec, each carrying an exact certificate.

    Returns a list of ClassifiedChain in canonical (DFS) order.  Any chain
    that is neither certified straight nor certified crooked raises
    UnresolvedChain: the run fails closed.
    """
    seqs = enumerate_walks(spec)
    out = []
    for seq in seqs:
        chain = develop(seq, exact=True, check_embedding=False)
        status, cert = classify_chain(chain)
        if status == "certified-straight":
            out.append(ClassifiedChain(seq, status, witness=cert))
        else:
            out.append(ClassifiedChain(seq, status, bad_triple=cert))
    return out


def mirror_representative(seq):
    """Canonical representative of {seq, mirror(seq)} (lexicographic min)."""
    m = tuple(mirror_sequence(seq))
    return min(tuple(seq), m)


# ---------------------------------------------------------------------------
# the basic and admissible chains
# ---------------------------------------------------------------------------

BASIC_CHAINS = (
    (0, 2, 9),
    (0, 2, 1, 9),
    (0, 2, 10, 9),
    (0, 3, 2, 9),
    (0, 3, 2, 10, 9),
    (0, 3, 10, 9),
    (0, 4, 3, 10, 9),
)


def basic_chains_with_mirrors():
    out = list(BASIC_CHAINS)
    out.extend(tuple(mirror_sequence(c)) for c in BASIC_CHAINS)
    return out


def admissible_chains():
    """The 70 chains: dihedral images of the basic chains with 11 appended."""
    seen = []
    for c in BASIC_CHAINS:
        base = tuple(c) + (11,)
        for m in (base, tuple(mirror_sequence(base))):
            s = list(m)
            for _ in range(5):
                s = omega_sequence(s)
                t = tuple(s)
                if t not in seen:
                    seen.append(t)
    return seen


def straightforward_chains():
    """The 10 admissible chains of length 4 (the 0,a,b,11 walks)."""
    return [c for c in admissible_chains() if len(c) == 4]


def competing_chains():
    """The 60 admissible chains of length at least 5."""
    return [c for c in admissible_chains() if len(c) > 4]


# ---------------------------------------------------------------------------
# bottleneck quadrilaterals
# ---------------------------------------------------------------------------

EDGE_LENGTH = 2 * SIN72


@dataclass(frozen=True)
class BottleneckQuad:
    """Quadrilateral with distinguished sides A1A2 and B1B2 of pentagon edge length."""
    a1: object
    a2: object
    b1: object
    b2: object

    def segment_sq(self, u, v):
        """Squared length of the segment from A(u) to B(v); exact for rationals."""
        pa = self.a1 + (self.a2 - self.a1) * u
        pb = self.b1 + (self.b2 - self.b1) * v
        return abs2(pb - pa)

    def corners_sq(self):
        return {(i, j): self.segment_sq(Fraction(i), Fraction(j))
                for i in (0, 1) for j in (0, 1)}


def quad_of_chain(chain):
    """Bottleneck quad: first and last shared edges, endpoint order as stored."""
    (ua, va, pa1, pa2) = chain.shared_edges[0]
    (ub, vb, pb1, pb2) = chain.shared_edges[-1]
    return BottleneckQuad(pa1, pa2, pb1, pb2), (ua, va), (ub, vb)


def comparison_quad(chain, comparison, b_vertex_ids):
    """Quad with the A-side of `chain` and the matching physical last-face edge
    of `comparison` (vertex ids give the color correspondence)."""
    (_, _, pa1, pa2) = chain.shared_edges[0]
    last = comparison.last
    q1 = last.position_of(b_vertex_ids[0])
    q2 = last.position_of(b_vertex_ids[1])
    return BottleneckQuad(pa1, pa2, q1, q2)


def compression_check(q, qbar):
    """'dominates' iff |Q(i,j)| >= |Qbar(i,j)| at the four corners (exact).

    The squared-length difference is bi-affine in (u, v), so corner dominance
    certifies |Q(u,v)| >= |Qbar(u,v)| on the whole square.
    """
    ca, cb = q.corners_sq(), qbar.corners_sq()
    for ij in ca:
        if _sign(ca[ij] - cb[ij]) < 0:
            return "fails_at_corner", ij
    return "dominates", None


def halfplane_split_check(q, qbar, constraint):
    """Certify |Q| >= |Qbar| on the triangle u+v<=1 or u+v>=1 of the square.

    Checks the three corners; the squared difference is bi-affine, so edge
    behavior along the axes follows, and the hypotenuse restriction (an exact
    univariate quadratic) is certified separately.
    """
    if constraint == "u+v<=1":
        corners = ((0, 0), (1, 0), (0, 1))
    elif constraint == "u+v>=1":
        corners = ((1, 0), (0, 1), (1, 1))
    else:
        raise ValueError(constraint)
    diff = {}
    for i in (0, 1):
        for j in (0, 1):
            diff[(i, j)] = q.segment_sq(Fraction(i), Fraction(j)) - \
                qbar.segment_sq(Fraction(i), Fraction(j))
    for ij in corners:
        if _sign(diff[ij]) < 0:
            return False
    # difference g(u,v) = g00 + A u + B v + C u v; restrict to u + v = 1
    g00 = diff[(0, 0)]
    a = diff[(1, 0)] - g00
    b = diff[(0, 1)] - g00
    c = diff[(1, 1)] - diff[(1, 0)] - diff[(0, 1)] + g00
    # g(u, 1-u) = (g00 + b) + (a - b + c) u - c u^2
    q0 = g00 + b
    q1 = a - b + c
    q2 = -c
    return _quadratic_nonneg_on_unit(q0, q1, q2)


def _quadratic_nonneg_on_unit(c0, c1, c2):
    """Exact: c0 + c1 t + c2 t^2 >= 0 for all t in [0, 1]."""
    at0 = _sign(c0)
    at1 = _sign(c0 + c1 + c2)
    if at0 < 0 or at1 < 0:
        return False
    s2 = _sign(c2)
    if s2 <= 0:
        return True                      # concave: endpoint minima
    # convex: check the vertex if it lies inside (0,1)
    tnum = -c1
    tden = 2 * c2
    if _sign(tnum) <= 0 or _sign(tnum - tden) >= 0:
        return True
    val = 4 * c2 * c0 - c1 * c1          # sign of discriminant-style minimum
    return _sign(val) >= 0


def min_distance_sq_between(poly_a, poly_b):
    """Exact squared distance between two convex polygons (vertex/edge pairs)."""
    best = None

    def upd(v):
        nonlocal best
        if best is None or _sign(v - best) < 0:
            best = v

    for pa in poly_a:
        for pb in poly_b:
            upd(abs2(pa - pb))
    for poly1, poly2 in ((poly_a, poly_b), (poly_b, poly_a)):
        n = len(poly1)
        for i in range(n):
            a, b = poly1[i], poly1[(i + 1) % n]
            d = b - a
            dd = abs2(d)
            for p in poly2:
                t = _dot(p - a, d) / dd
                if _sign(t) > 0 and _sign(1 - t) > 0:
                    upd(abs2(p - (a + d * t)))
    return best


def min_spanning_exceeds(chain, bound_sq):
    """True when every first-to-last-face segment is longer than sqrt(bound_sq).

    Uses the unconstrained polygon distance, a lower bound for spanning
    segments; exact.
    """
    d2 = min_distance_sq_between(chain.first.positions, chain.last.positions)
    return _sign(d2 - bound_sq) > 0
