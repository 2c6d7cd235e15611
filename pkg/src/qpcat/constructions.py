"""Builders for the concrete objects of the study: weighted-line genus data,
the squid QP, the five-vertex QP, the q2222 family, the tubular algebra
presentation, the Keller QP of a presentation, and the star tilting quiver.

Vertex names follow the usual sheaf-theoretic labels (O, O(c), O(xi),
Si[j]) so that JSON output can be compared against pictures by eye.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import NamedTuple

from .potential import PathSum, Potential, PotentialError, QP, cyclic_normal_form
from .quiver import Arrow, Quiver, QuiverError
from .scalars import RF_LAM, RF_ONE, RatFunc, rf


class WeightData(NamedTuple):
    weights: tuple
    p: int                # lcm of the weights
    genus: Fraction
    kind: str             # "domestic" | "tubular" | "wild"


def genus_and_type(weights):
    """Exact genus of the weighted projective line and its trichotomy class.

    genus = 1 + ((t-2)p - sum_i p/p_i) / 2 with p = lcm(weights); the class
    is domestic, tubular or wild according to genus <1, =1, >1.
    """
    ws = tuple(int(w) for w in weights)
    if not ws:
        raise ValueError("at least one weight is required")
    for w in ws:
        if w < 2:
            raise ValueError("weights must be >= 2, got %d" % w)
    t = len(ws)
    p = lcm(*ws)
    genus = 1 + Fraction((t - 2) * p - sum(p // w for w in ws), 2)
    if genus < 1:
        kind = "domestic"
    elif genus == 1:
        kind = "tubular"
    else:
        kind = "wild"
    return WeightData(ws, p, genus, kind)


def lambda_orbit(lam):
    """The six parameters giving an equivalent tubular line of type (2,2,2,2)."""
    lam = rf(lam)
    one = RF_ONE
    return (lam, one / lam, one - lam, one - one / lam,
            one / (one - lam), lam / (one - lam))


def _normalize_points(t, extra):
    """Projective parameters [l1:l2] per branch; the first three are fixed."""
    pts = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
           (Fraction(1), Fraction(1))]
    pts = [(rf(a), rf(b)) for a, b in pts]
    extra = list(extra or ())
    if t > 3 and len(extra) != t - 3:
        raise ValueError("weights beyond the third need %d extra parameter(s)" % (t - 3))
    for x in extra:
        pts.append((rf(x), RF_ONE))
    pts = pts[:t]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            a1, a2 = pts[i]
            b1, b2 = pts[j]
            if (a1 * b2 - a2 * b1).is_zero():
                raise ValueError("parameter points %d and %d coincide" % (i + 1, j + 1))
    return pts


def squid_qp(weights, params=None):
    """QP of the squid tilting configuration for the given weight list.

    Quiver: two arrows u, v from O to O(c); per branch i an arrow gammai
    from O(c) to the top tube vertex Si[p_i - 1], a chain descending the
    tube, and a return arrow rhoi from the top back to O. The potential is
    the relation-times-return sum: for branch i with point [l1:l2] the term
    is l2*(gammai u rhoi) - l1*(gammai v rhoi). A branch of weight 1 has an
    empty tube and contributes nothing.
    """
    ws = tuple(int(w) for w in weights)
    if not ws:
        raise ValueError("at least one weight is required")
    for w in ws:
        if w < 1:
            raise ValueError("weights must be >= 1, got %d" % w)
    pts = _normalize_points(len(ws), params)

    vertices = ["O", "O(c)"]
    arrows = [Arrow("u", "O", "O(c)"), Arrow("v", "O", "O(c)")]
    raw_terms = []
    for i, w in enumerate(ws, start=1):
        if w == 1:
            continue
        tube = ["S%d[%d]" % (i, j) for j in range(1, w)]
        vertices.extend(tube)
        top = tube[-1]
        gamma = "gamma%d" % i
        rho = "rho%d" % i
        arrows.append(Arrow(gamma, "O(c)", top))
        arrows.append(Arrow(rho, top, "O"))
        for j in range(w - 1, 1, -1):
            arrows.append(Arrow("s%d_%d" % (i, j), "S%d[%d]" % (i, j),
                                "S%d[%d]" % (i, j - 1)))
        l1, l2 = pts[i - 1]
        raw_terms.append((l2, (gamma, "u", rho)))
        raw_terms.append((-l1, (gamma, "v", rho)))
    q = Quiver(vertices, arrows)
    return QP(q, cyclic_normal_form(raw_terms, q))


def squid_tube_tops(weights):
    """The vertex subset {O, O(c), top of each tube} used in restriction."""
    keep = ["O", "O(c)"]
    for i, w in enumerate(weights, start=1):
        if w >= 2:
            keep.append("S%d[%d]" % (i, w - 1))
    return keep


def five_vertex_qp():
    """The five-vertex QP: two arrows 1=>2, a fan 2->3,4,5 and returns to 1.

    The potential is the squid potential of weights (2,2,2) carried along
    the relabeling O->1, O(c)->2, tube tops->3,4,5, u->x1, v->x2.
    """
    q = Quiver(["1", "2", "3", "4", "5"], [
        Arrow("x1", "1", "2"), Arrow("x2", "1", "2"),
        Arrow("a3", "2", "3"), Arrow("a4", "2", "4"), Arrow("a5", "2", "5"),
        Arrow("b3", "3", "1"), Arrow("b4", "4", "1"), Arrow("b5", "5", "1"),
    ])
    sq = squid_qp((2, 2, 2))
    rename_v = {"O": "1", "O(c)": "2", "S1[1]": "3", "S2[1]": "4", "S3[1]": "5"}
    rename_a = {"u": "x1", "v": "x2",
                "gamma1": "a3", "gamma2": "a4", "gamma3": "a5",
                "rho1": "b3", "rho2": "b4", "rho3": "b5"}
    del rename_v
    terms = [(c, tuple(rename_a[x] for x in w)) for w, c in sq.potential.terms.items()]
    return QP(q, cyclic_normal_form(terms, q))


def q2222_quiver():
    return Quiver(["1", "2", "3", "4", "5", "6"], [
        Arrow("a", "2", "1"), Arrow("b", "3", "2"), Arrow("c", "1", "3"),
        Arrow("d", "5", "1"), Arrow("e", "2", "4"), Arrow("f", "6", "2"),
        Arrow("g", "3", "5"), Arrow("h", "4", "3"), Arrow("i", "1", "6"),
        Arrow("j", "5", "4"), Arrow("k", "6", "5"), Arrow("l", "4", "6"),
    ])


def _check_tubular_parameter(lam):
    lam = rf(lam)
    if lam.is_constant() and lam.as_fraction() in (0, 1):
        raise ValueError("the tubular parameter must avoid {0, 1}")
    return lam


def q2222_qp(lam=RF_LAM):
    """The 6-vertex, 12-arrow QP with the eight-term cubic potential

        L*abc - dgc + dki - afi + jgh - ebh + efl - jkl

    where L is the parameter (symbolic by default, any rational except 0, 1).
    """
    lam = _check_tubular_parameter(lam)
    q = q2222_quiver()
    one = RF_ONE
    raw = [
        (lam, ("a", "b", "c")), (-one, ("d", "g", "c")),
        (one, ("d", "k", "i")), (-one, ("a", "f", "i")),
        (one, ("j", "g", "h")), (-one, ("e", "b", "h")),
        (one, ("e", "f", "l")), (-one, ("j", "k", "l")),
    ]
    return QP(q, cyclic_normal_form(raw, q))


class AlgebraPresentation(NamedTuple):
    """A quiver with named relations, each a combination of parallel paths."""
    quiver: Quiver
    relations: tuple  # of (name, PathSum)


def make_presentation(quiver, relations):
    seen = set()
    out = []
    for name, ps in relations:
        if name in seen:
            raise ValueError("duplicate relation name %r" % name)
        seen.add(name)
        if ps.lazy or not ps.terms:
            raise ValueError("relation %s must be a nonzero combination of paths" % name)
        endpoints = {(ps.quiver.arrow(w[-1]).src, ps.quiver.arrow(w[0]).tgt)
                     for w in ps.terms}
        if len(endpoints) != 1:
            raise ValueError("relation %s mixes paths with different endpoints" % name)
        if min(len(w) for w in ps.terms) < 2:
            raise ValueError("relation %s contains a path of length < 2" % name)
        out.append((name, ps))
    return AlgebraPresentation(quiver, tuple(out))


def relation_endpoints(quiver, ps):
    word = next(iter(ps.terms))
    return quiver.arrow(word[-1]).src, quiver.arrow(word[0]).tgt


def tubular_algebra(lam=RF_LAM):
    """Presentation of the tubular algebra of type (2,2,2,2) at the parameter.

    Six vertices, eight arrows a,b,d,e,f,g,j,k and four relations spanning
    L*ab - dg, dk - af, jg - eb, ef - jk. The first relation is oriented so
    that the Keller potential of this presentation coincides on the nose
    with the q2222 potential.
    """
    lam = _check_tubular_parameter(lam)
    q = Quiver(["1", "2", "3", "4", "5", "6"], [
        Arrow("a", "2", "1"), Arrow("b", "3", "2"), Arrow("d", "5", "1"),
        Arrow("e", "2", "4"), Arrow("f", "6", "2"), Arrow("g", "3", "5"),
        Arrow("j", "5", "4"), Arrow("k", "6", "5"),
    ])
    one = RF_ONE

    def ps(pairs):
        out = PathSum(q)
        for coef, word in pairs:
            out.add_term(coef, word)
        return out

    rels = [
        ("r1", ps([(lam, ("a", "b")), (-one, ("d", "g"))])),
        ("r2", ps([(one, ("d", "k")), (-one, ("a", "f"))])),
        ("r3", ps([(one, ("j", "g")), (-one, ("e", "b"))])),
        ("r4", ps([(one, ("e", "f")), (-one, ("j", "k"))])),
    ]
    return make_presentation(q, rels)


def keller_qp(pres):
    """QP of a presentation: one return arrow per relation, potential sum r*rho_r.

    For a relation r running i -> j the new arrow rho_r runs j -> i and the
    potential picks up every term of r closed up by rho_r.
    """
    q0 = pres.quiver
    arrows = list(q0.arrows)
    raw = []
    for name, ps in pres.relations:
        src, tgt = relation_endpoints(q0, ps)
        rho = "rho_%s" % name
        arrows.append(Arrow(rho, tgt, src))
        for word, coef in ps.terms.items():
            raw.append((coef, word + (rho,)))
    q = Quiver(q0.vertices, arrows)
    return QP(q, cyclic_normal_form(raw, q))


def canonical_ct_quiver(p1, p2, p3):
    """The star tilting quiver: O -> O(xi) -> O(c) -> O with a tube per branch.

    Branch i of weight p has tube vertices Si[1..p-2] with a descending
    chain, entered from O(c) at the top and leaving to O(xi); a branch of
    weight 2 has no tube, keeping only the triangle through O(xi).
    """
    ps = (int(p1), int(p2), int(p3))
    for p in ps:
        if p < 2:
            raise ValueError("weights must be >= 2, got %d" % p)
    vertices = ["O", "O(c)"] + ["O(x%d)" % i for i in (1, 2, 3)]
    arrows = [Arrow("z", "O(c)", "O")]
    for i, p in enumerate(ps, start=1):
        ox = "O(x%d)" % i
        arrows.append(Arrow("x%d" % i, "O", ox))
        arrows.append(Arrow("y%d" % i, ox, "O(c)"))
        if p == 2:
            continue
        tube = ["S%d[%d]" % (i, j) for j in range(1, p - 1)]
        vertices.extend(tube)
        top = tube[-1]
        arrows.append(Arrow("gamma%d" % i, "O(c)", top))
        arrows.append(Arrow("delta%d" % i, top, ox))
        for j in range(p - 2, 1, -1):
            arrows.append(Arrow("s%d_%d" % (i, j), "S%d[%d]" % (i, j),
                                "S%d[%d]" % (i, j - 1)))
    return Quiver(vertices, arrows)
