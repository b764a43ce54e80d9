"""Coefficient-sum positivity certificates on the unit box, with subdivision.

A polynomial F = sum A_I x^I is *positive dominant* when every partial
coefficient sum over the lower set {I' <= I} is nonnegative; this certifies
F >= 0 on [0,1]^2.  Strong (all sums > 0) certifies F > 0 on the closed box,
solid (dominant + total sum > 0) certifies F > 0 on the open box.  When a
polynomial is not dominant the box is subdivided and induced polynomials are
tested on the pieces; shared split segments are handled by univariate
restrictions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .field import FieldElement, ZERO, ONE
from .poly import BivariatePoly, UnivariatePoly, RationalFn2


class DegenerateDomain(ValueError):
    """Sub-rectangle with empty interior."""


@dataclass
class DominanceVerdict:
    kind: str                      # plain | strong | solid | negative-mirror
    holds: bool
    failing_index: Optional[tuple] = None
    coefficient_sums: list = field(default_factory=list)   # [((i, j), sign)]

    def to_json(self):
        return {"kind": self.kind, "holds": self.holds,
                "failing_index": list(self.failing_index) if self.failing_index else None,
                "coefficient_sums": [[list(ij), s] for ij, s in self.coefficient_sums]}


def _partial_sums(F):
    """Dense 2D prefix sums of the coefficient grid; returns (grid, dx, dy)."""
    dx, dy = F.degrees()
    if dx < 0:
        return [[ZERO]], 0, 0
    grid = [[F.coeff(i, j) for j in range(dy + 1)] for i in range(dx + 1)]
    for i in range(dx + 1):
        row = grid[i]
        for j in range(1, dy + 1):
            row[j] = row[j] + row[j - 1]
    for i in range(1, dx + 1):
        prev, row = grid[i - 1], grid[i]
        for j in range(dy + 1):
            row[j] = row[j] + prev[j]
    return grid, dx, dy


def is_positive_dominant(F, flavor="plain"):
    """Test the dominance criterion; flavor in {plain, strong, solid}."""
    if flavor not in ("plain", "strong", "solid"):
        raise ValueError(flavor)
    grid, dx, dy = _partial_sums(F)
    sums = []
    failing = None
    holds = True
    for i in range(dx + 1):
        for j in range(dy + 1):
            s = grid[i][j].sign()
            sums.append(((i, j), s))
            if holds:
                bad = s < 0 if flavor == "plain" else s <= 0
                if flavor == "solid":
                    bad = s < 0
                if bad:
                    holds = False
                    failing = (i, j)
    if flavor == "solid" and holds:
        if grid[dx][dy].sign() <= 0:
            holds = False
            failing = (dx, dy)
    return DominanceVerdict(flavor, holds, failing, sums)


def dominant_sign(F, flavor="plain"):
    """Try F then -F; returns (epsilon, verdict) with epsilon in {+1, -1, 0}.

    A verdict for -F is reported with kind 'negative-mirror'.  epsilon == 0
    means neither sign certifies.
    """
    v = is_positive_dominant(F, flavor)
    if v.holds:
        return 1, v
    w = is_positive_dominant(-F, flavor)
    if w.holds:
        w.kind = "negative-mirror"
        return -1, w
    return 0, v


def univariate_dominant(P, flavor="plain"):
    """Dominance for a univariate polynomial on [0, 1]."""
    sums = P.partial_sums()
    if not sums:
        sums = [ZERO]
    verdict = DominanceVerdict(flavor, True, None,
                               [((i, 0), s.sign()) for i, s in enumerate(sums)])
    for i, s in enumerate(sums):
        sg = s.sign()
        bad = sg < 0 if flavor in ("plain", "solid") else sg <= 0
        if bad:
            verdict.holds = False
            verdict.failing_index = (i, 0)
            return verdict
    if flavor == "solid" and sums[-1].sign() <= 0:
        verdict.holds = False
        verdict.failing_index = (len(sums) - 1, 0)
    return verdict


def univariate_dominant_sign(P, flavor="plain"):
    v = univariate_dominant(P, flavor)
    if v.holds:
        return 1, v
    w = univariate_dominant(UnivariatePoly([-c for c in P.coeffs]), flavor)
    if w.holds:
        w.kind = "negative-mirror"
        return -1, w
    return 0, v


# ---------------------------------------------------------------------------
# subdivision
# ---------------------------------------------------------------------------

def induced_on_subrect(F, rect, flip_x=None, flip_y=False):
    """F composed with an affine isomorphism [0,1]^2 -> rect.

    rect is ((x0, x1), (y0, y1)) with rational corners inside [0,1]^2.
    By default the x-substitution runs backwards from 1 when the rectangle
    is an upper slice [a, 1] with a > 0 (yielding the F(1 - x/2, y) form for
    the upper half); set flip_x/flip_y explicitly to override.
    """
    (x0, x1), (y0, y1) = rect
    x0, x1, y0, y1 = (Fraction(v) for v in (x0, x1, y0, y1))
    if not (0 <= x0 < x1 <= 1 and 0 <= y0 < y1 <= 1):
        raise DegenerateDomain(f"bad rectangle {rect}")
    if flip_x is None:
        flip_x = x1 == 1 and x0 > 0
    out = F
    if flip_x:
        out = out.subst_affine("x", x1, x0 - x1)
    else:
        out = out.subst_affine("x", x0, x1 - x0)
    if flip_y:
        out = out.subst_affine("y", y1, y0 - y1)
    else:
        out = out.subst_affine("y", y0, y1 - y0)
    return out


@dataclass
class CertificateNode:
    domain: tuple                 # ((x0,x1),(y0,y1)) as Fractions, original coords
    test: str                     # description of the dominance test tried
    verdict: Optional[DominanceVerdict]
    status: str                   # proved | inconclusive | split
    children: list = field(default_factory=list)
    segments: list = field(default_factory=list)   # (desc, DominanceVerdict, status)

    def to_json(self):
        return {
            "domain": [[str(self.domain[0][0]), str(self.domain[0][1])],
                       [str(self.domain[1][0]), str(self.domain[1][1])]],
            "test": self.test,
            "verdict": self.verdict.to_json() if self.verdict else None,
            "status": self.status,
            "segments": [{"test": d, "verdict": v.to_json(), "status": s}
                         for d, v, s in self.segments],
            "children": [c.to_json() for c in self.children],
        }


@dataclass
class CertificateTree:
    goal: str                     # nonneg | strict-pos-open
    status: str                   # proved | inconclusive
    root: CertificateNode
    max_depth: int

    @property
    def proved(self):
        return self.status == "proved"

    def to_json(self):
        return {"goal": self.goal, "status": self.status,
                "max_depth": self.max_depth, "root": self.root.to_json()}

    def leaf_count(self):
        def count(n):
            return 1 if not n.children else sum(count(c) for c in n.children)
        return count(self.root)


def _prove_univariate(P, depth, max_depth):
    """Certify P > 0 on (0,1) by solid dominance with 1D subdivision."""
    v = univariate_dominant(P, "solid")
    if v.holds:
        return True
    if depth >= max_depth:
        return False
    lo = P.subst_affine(Fraction(0), Fraction(1, 2))       # t/2
    hi = P.subst_affine(Fraction(1), Fraction(-1, 2))      # 1 - t/2
    mid = P.eval(FieldElement.from_rational(Fraction(1, 2)))
    if mid.sign() <= 0:
        return False
    return (_prove_univariate(lo, depth + 1, max_depth)
            and _prove_univariate(hi, depth + 1, max_depth))


def prove_sign_on_box(F, goal="nonneg", max_depth=8):
    """Recursive subdivision prover for F >= 0 on [0,1]^2 or F > 0 on (0,1)^2.

    Halves alternately in x and y by depth parity; strict goals add the
    univariate restriction along the shared segment.  Returns a
    CertificateTree whose status is 'proved' or 'inconclusive'; inconclusive
    is never a disproof.
    """
    if goal not in ("nonneg", "strict-pos-open"):
        raise ValueError(goal)
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    flavor = "plain" if goal == "nonneg" else "solid"

    def note(domain, poly, depth):
        v = is_positive_dominant(poly, flavor)
        node = CertificateNode(domain, f"{flavor} dominance", v,
                               "proved" if v.holds else "inconclusive")
        if v.holds:
            return node, True
        if depth >= max_depth:
            return node, False
        (x0, x1), (y0, y1) = domain
        node.status = "split"
        # Splitting always carries the shared-segment solid check; a zero
        # pinned on the split line therefore yields Inconclusive, never a
        # certificate that glosses over it.
        if depth % 2 == 0:
            xm = (x0 + x1) / 2
            lo = poly.subst_affine("x", Fraction(0), Fraction(1, 2))
            hi = poly.subst_affine("x", Fraction(1), Fraction(-1, 2))
            doms = (((x0, xm), (y0, y1)), ((xm, x1), (y0, y1)))
            seg = poly.restrict_x(Fraction(1, 2))
            ok = _prove_univariate(seg, 0, max_depth)
            node.segments.append((f"x = {xm}", univariate_dominant(seg, "solid"),
                                  "proved" if ok else "inconclusive"))
            if not ok:
                node.status = "inconclusive"
                return node, False
        else:
            ym = (y0 + y1) / 2
            lo = poly.subst_affine("y", Fraction(0), Fraction(1, 2))
            hi = poly.subst_affine("y", Fraction(1), Fraction(-1, 2))
            doms = (((x0, x1), (y0, ym)), ((x0, x1), (ym, y1)))
            seg = poly.restrict_y(Fraction(1, 2))
            ok = _prove_univariate(seg, 0, max_depth)
            node.segments.append((f"y = {ym}", univariate_dominant(seg, "solid"),
                                  "proved" if ok else "inconclusive"))
            if not ok:
                node.status = "inconclusive"
                return node, False
        ok_all = True
        for sub, dom in zip((lo, hi), doms):
            child, ok = note(dom, sub, depth + 1)
            node.children.append(child)
            ok_all = ok_all and ok
        node.status = "proved" if ok_all else "inconclusive"
        return node, ok_all

    whole = ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(1)))
    root, ok = note(whole, F, 0)
    return CertificateTree(goal, "proved" if ok else "inconclusive", root, max_depth)


# ---------------------------------------------------------------------------
# triangle domains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangleMap:
    """Surjective polynomial map [0,1]^2 -> triangle, phi = f1 o f2.

    f2(x, y) = (x, x y) carries the square onto the triangle T0 with vertices
    (0,0), (1,0), (1,1); f1 is the affine map sending T0 onto the target.
    Certifying a pullback on the square certifies the original on the triangle.
    """
    a: FieldElement
    b: FieldElement
    e: FieldElement
    c: FieldElement
    d: FieldElement
    f: FieldElement

    def affine(self, x, y):
        return (self.a * x + self.b * y + self.e,
                self.c * x + self.d * y + self.f)

    def apply(self, x, y):
        return self.affine(x, x * y)

    def apply_float(self, x, y):
        a, b, e, c, d, f = (float(v) for v in
                            (self.a, self.b, self.e, self.c, self.d, self.f))
        return (a * x + b * x * y + e, c * x + d * x * y + f)

    def component_polys(self):
        gx = BivariatePoly({(0, 0): self.e, (1, 0): self.a, (1, 1): self.b})
        gy = BivariatePoly({(0, 0): self.f, (1, 0): self.c, (1, 1): self.d})
        return gx, gy

    def corner_images(self):
        """Images of the square corners (0,0), (1,0), (1,1) (triangle vertices)."""
        return (self.affine(ZERO, ZERO), self.affine(ONE, ZERO), self.affine(ONE, ONE))

    @staticmethod
    def onto(v00, v10, v11):
        """Affine f1 with f1(0,0)=v00, f1(1,0)=v10, f1(1,1)=v11."""
        a = v10[0] - v00[0]
        c = v10[1] - v00[1]
        b = v11[0] - v10[0]
        d = v11[1] - v10[1]
        return TriangleMap(a, b, v00[0], c, d, v00[1])


def pull_back_to_square(F, tmap):
    """Exact composite F o phi (normalized numerator when F is rational)."""
    gx, gy = tmap.component_polys()
    if isinstance(F, RationalFn2):
        comp = F.compose(gx, gy)
        poly, _flagged = comp.normalized_numerator((1, 1))
        return poly
    return F.compose(gx, gy)


# ---------------------------------------------------------------------------
# coarse whole-box bounds
# ---------------------------------------------------------------------------

def constant_term_dominates(F):
    """True when |F(0,0)| exceeds the sum of all other coefficient magnitudes.

    Certifies that F has no zero on [0,1]^2 (the constant term wins).
    Returns (holds, sign_of_constant).
    """
    c0 = F.coeff(0, 0)
    s0 = c0.sign()
    if s0 == 0:
        return False, 0
    rest = ZERO
    for ij, c in F.terms.items():
        if ij != (0, 0):
            rest = rest + abs(c)
    return (abs(c0) - rest).sign() > 0, s0
