"""Rational embeddings and polytope constructors.

Facet enumeration is a brute-force supporting-hyperplane test over exact
integers, which is plenty at desk scale and needs no convex hull
dependency.  All builders return an :class:`EmbeddedComplex` that passed
that validation (or, for combinatorial spheres, a seeded generic
embedding validated against the algebraic consequences actually used:
linear system of parameters plus partial Lefschetz injectivity).
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Optional, Sequence

from .complexes import SimplicialComplex
from .exactla import QMatrix, Subspace, kernel_of_int_rows, rank, rat, rat_str, solve


class GeomError(ValueError):
    pass


class NotFullDim(GeomError):
    pass


class NotSimplicial(GeomError):
    pass


class PointNotVertex(GeomError):
    pass


class DegenerateCut(GeomError):
    pass


class ValidationFailedAfterRetries(GeomError):
    pass


class Embedding:
    """Map from vertex labels to rational d-vectors."""

    __slots__ = ("d", "points")

    def __init__(self, d: int, points: dict):
        self.d = d
        self.points = {v: tuple(rat(x) for x in p) for v, p in points.items()}
        for p in self.points.values():
            if len(p) != d:
                raise ValueError("point of wrong dimension")

    def point(self, v: int) -> tuple:
        return self.points[v]

    def translated(self, offset: Sequence[Fraction]) -> "Embedding":
        return Embedding(
            self.d,
            {v: tuple(x + o for x, o in zip(p, offset)) for v, p in self.points.items()},
        )

    def restricted(self, labels: Iterable[int]) -> "Embedding":
        return Embedding(self.d, {v: self.points[v] for v in labels})

    def centered(self) -> "Embedding":
        """Translate so the centroid of the points is the origin."""
        n = len(self.points)
        cen = [sum(p[j] for p in self.points.values()) / n for j in range(self.d)]
        return self.translated([-c for c in cen])


class EmbeddedComplex:
    """A simplicial complex together with a rational embedding.

    kind 'natural-polytope': the complex is the boundary of the convex
    hull of the points.  kind 'generic-sphere': a seeded embedding that
    passed l.s.o.p. and partial Lefschetz validation.  kind 'framework':
    an unvalidated carrier (skeleta, projected links, graph frameworks).
    """

    __slots__ = ("complex", "embedding", "kind")

    def __init__(self, complex: SimplicialComplex, embedding: Embedding, kind: str):
        if kind not in ("natural-polytope", "generic-sphere", "framework"):
            raise ValueError(f"unknown kind: {kind}")
        missing = [v for v in complex.vertices if v not in embedding.points]
        if missing:
            raise ValueError(f"vertices without coordinates: {missing}")
        self.complex = complex
        self.embedding = embedding
        self.kind = kind

    @property
    def d(self) -> int:
        return self.embedding.d

    @property
    def n(self) -> int:
        return self.complex.n_vertices

    def rmatrix(self) -> QMatrix:
        """(d+1) x n matrix: rows are the coordinate forms and the all-ones row."""
        verts = self.complex.vertices
        rows = [[self.embedding.point(v)[j] for v in verts] for j in range(self.d)]
        rows.append([1] * len(verts))
        return QMatrix(self.d + 1, len(verts), rows)

    def to_json(self) -> dict:
        verts = self.complex.vertices
        remap = {v: i + 1 for i, v in enumerate(verts)}
        facets = sorted(sorted(remap[v] for v in f) for f in self.complex.facets)
        pts = [[rat_str(x) for x in self.embedding.point(v)] for v in verts]
        return {
            "n": len(verts),
            "facets": facets,
            "d": self.d,
            "points": pts,
            "kind": self.kind,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EmbeddedComplex":
        c = SimplicialComplex.from_facets(obj["n"], obj["facets"])
        pts = {i + 1: tuple(rat(x) for x in p) for i, p in enumerate(obj["points"])}
        return cls(c, Embedding(obj["d"], pts), obj["kind"])

    def __repr__(self) -> str:
        return f"EmbeddedComplex({self.complex!r}, d={self.d}, kind={self.kind})"


def lsop_and_lefschetz(ec: EmbeddedComplex) -> QMatrix:
    """Coefficient rows of the l.s.o.p. forms and the all-ones Lefschetz form."""
    return ec.rmatrix()


# -- exact supporting-hyperplane machinery ----------------------------


def _scaled_int_points(points: Sequence[Sequence[Fraction]]) -> list:
    """Scale all points by one positive integer so coordinates are integers."""
    mult = 1
    for p in points:
        for x in p:
            mult = lcm(mult, x.denominator)
    return [[x.numerator * (mult // x.denominator) for x in p] for p in points]


def _hyperplane_int(pts: Sequence[Sequence[int]]) -> Optional[tuple]:
    """Integer functional (a, c) with a.x + c = 0 on all pts; None if degenerate."""
    d = len(pts[0])
    rows = [list(p) + [1] for p in pts]
    ker = kernel_of_int_rows(rows, d + 1)
    if ker.dim != 1:
        return None
    vec = ker.basis.entries[0]
    mult = lcm(*[x.denominator for x in vec])
    ints = [int(x * mult) for x in vec]
    return tuple(ints[:d]), ints[d]


def boundary_from_points(points: Sequence[Sequence]) -> EmbeddedComplex:
    """Boundary complex of the convex hull of rational points.

    The hull must be full-dimensional and simplicial with every input
    point a vertex; the returned embedding is translated so the centroid
    of the vertices is the origin.  Vertex i+1 corresponds to points[i].
    """
    pts = [tuple(rat(x) for x in p) for p in points]
    n = len(pts)
    if n == 0:
        raise NotFullDim("no points")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    aug = [list(p) + [1] for p in pts]
    if rank(QMatrix(n, d + 1, aug)) != d + 1:
        raise NotFullDim(f"points do not affinely span dimension {d}")
    ipts = _scaled_int_points(pts)
    facets = []
    for sub in combinations(range(n), d):
        hp = _hyperplane_int([ipts[i] for i in sub])
        if hp is None:
            continue
        a, c = hp
        pos = neg = zero = 0
        for j in range(n):
            if j in sub:
                continue
            s = sum(ai * xi for ai, xi in zip(a, ipts[j])) + c
            if s > 0:
                pos += 1
            elif s < 0:
                neg += 1
            else:
                zero += 1
        if zero and (pos == 0 or neg == 0):
            raise NotSimplicial(
                f"supporting hyperplane through {[i + 1 for i in sub]} contains "
                f"more than {d} points"
            )
        if zero == 0 and (pos == 0 or neg == 0):
            facets.append(tuple(i + 1 for i in sub))
    covered = {v for f in facets for v in f}
    if covered != set(range(1, n + 1)):
        inside = sorted(set(range(1, n + 1)) - covered)
        raise PointNotVertex(f"points {inside} are not vertices of the hull")
    complex = SimplicialComplex.from_facets(n, facets)
    emb = Embedding(d, {i + 1: pts[i] for i in range(n)}).centered()
    return EmbeddedComplex(complex, emb, "natural-polytope")


# -- builders ----------------------------------------------------------


def simplex_boundary(d: int) -> EmbeddedComplex:
    """Boundary of the d-simplex on e_1..e_d and -(e_1+...+e_d)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    pts = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    pts.append([-1] * d)
    return boundary_from_points(pts)


def cross_polytope(d: int) -> EmbeddedComplex:
    """Boundary of conv(+-e_1, ..., +-e_d); vertex v is antipodal to v+d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    pts = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    pts += [[-1 if i == j else 0 for j in range(d)] for i in range(d)]
    return boundary_from_points(pts)


def cyclic_polytope(d: int, n: int) -> EmbeddedComplex:
    """Cyclic polytope from the moment curve at integer parameters 1..n."""
    if n <= d:
        raise ValueError("need n > d")
    pts = [[Fraction(t) ** j for j in range(1, d + 1)] for t in range(1, n + 1)]
    return boundary_from_points(pts)


def _facet_barycenter(ec: EmbeddedComplex, facet: Sequence[int]) -> list:
    k = len(facet)
    return [sum(ec.embedding.point(v)[j] for v in facet) / k for j in range(ec.d)]


def _try_point_beyond(ec: EmbeddedComplex, facet: tuple, new_point: Sequence[Fraction]):
    """Hull of ec's vertices plus new_point if it stellarly subdivides facet."""
    verts = list(ec.complex.vertices)
    pts = [ec.embedding.point(v) for v in verts] + [tuple(new_point)]
    try:
        cand = boundary_from_points(pts)
    except GeomError:
        return None
    new_label = len(verts) + 1
    expected = {frozenset(f) for f in ec.complex.facets if frozenset(f) != frozenset(facet)}
    expected |= {
        frozenset(set(facet) - {v}) | {new_label} for v in facet
    }
    relabel = {i + 1: verts[i] for i in range(len(verts))}
    relabel[new_label] = new_label
    got = {frozenset(relabel[v] for v in f) for f in cand.complex.facets}
    want = {frozenset(f) for f in expected}
    if got != want:
        return None
    return cand


def stellar_subdivide_facet(ec: EmbeddedComplex, facet: Iterable[int]) -> EmbeddedComplex:
    """Place a vertex just beyond the chosen facet and retriangulate.

    The new point sits on the ray through the facet barycenter, pulled in
    until the hull validates as exactly the subdivision.
    """
    ftup = tuple(sorted(facet))
    if frozenset(ftup) not in ec.complex.facets:
        raise ValueError(f"not a facet: {ftup}")
    bary = _facet_barycenter(ec, ftup)
    eps = Fraction(1, 4)
    for _ in range(40):
        q = [(1 + eps) * x for x in bary]
        cand = _try_point_beyond(ec, ftup, q)
        if cand is not None:
            return cand
        eps /= 2
    raise ValidationFailedAfterRetries(f"no valid stellar point beyond {ftup}")


def stacked_polytope(d: int, n: int, seed: int = 0) -> EmbeddedComplex:
    """Repeatedly stack a vertex beyond a facet of the d-simplex, up to n vertices.

    The facet choice and a jitter of the new point inside the facet are
    drawn from the seed, so instances are reproducible and, for seed > 0,
    in suitably general position.
    """
    if n < d + 1:
        raise ValueError("need n >= d+1")
    rng = random.Random(seed)
    ec = simplex_boundary(d)
    while ec.n < n:
        facet_list = sorted(tuple(sorted(f)) for f in ec.complex.facets)
        ftup = facet_list[rng.randrange(len(facet_list))]
        if seed == 0:
            base = _facet_barycenter(ec, ftup)
        else:
            weights = [Fraction(rng.randint(2, 9)) for _ in ftup]
            tot = sum(weights)
            base = [
                sum(w * ec.embedding.point(v)[j] for w, v in zip(weights, ftup)) / tot
                for j in range(d)
            ]
        eps = Fraction(1, 4)
        cand = None
        for _ in range(40):
            q = [(1 + eps) * x for x in base]
            cand = _try_point_beyond(ec, ftup, q)
            if cand is not None:
                break
            eps /= 2
        if cand is None:
            raise ValidationFailedAfterRetries(f"stacking beyond {ftup} failed")
        ec = cand
    return ec


def join_of_simplex_boundaries(k: int, seed: int = 0) -> EmbeddedComplex:
    """Join of two boundaries of k-simplices: a (2k-1)-sphere on 2k+2 vertices.

    Not realized as a polytope here; returns a validated generic embedding
    in dimension 2k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    first = list(range(1, k + 2))
    second = list(range(k + 2, 2 * k + 3))
    facets = [
        tuple(sorted(set(first) - {a})) + tuple(sorted(set(second) - {b}))
        for a in first
        for b in second
    ]
    c = SimplicialComplex.from_facets(2 * k + 2, facets)
    return generic_embedding(c, 2 * k, seed)


def generic_embedding(c: SimplicialComplex, d: int, seed: int = 0,
                      retries: int = 3) -> EmbeddedComplex:
    """Seeded random integer coordinates validated as generic enough.

    Accepts a draw only if the coordinate forms are a linear system of
    parameters (per-degree quotient dimensions equal the h-numbers) and
    multiplication by the all-ones form is injective below the middle
    degree.  Both properties are the consequences of genericity the rest
    of the package consumes.
    """
    if c.dim != d - 1 or not c.is_pure():
        raise ValueError(f"expected a pure (d-1)-dimensional complex for d={d}")
    from . import algebra  # lazy; algebra depends on geom types

    rng = random.Random(seed)
    last = "no attempt"
    for _ in range(retries):
        pts = {
            v: tuple(Fraction(rng.randint(-10**6, 10**6)) for _ in range(d))
            for v in c.vertices
        }
        ec = EmbeddedComplex(c, Embedding(d, pts), "generic-sphere")
        if rank(ec.rmatrix()) != d + 1:
            last = "points do not affinely span"
            continue
        try:
            model = algebra.artinian_reduction(ec, "theta")
        except algebra.LsopFailure as exc:
            last = f"lsop failed: {exc}"
            continue
        flags = algebra.lefschetz_map_ranks(model)
        bad = [
            i for i in range(-(-d // 2))
            if i < len(flags) and not flags[i][0]
        ]
        if bad:
            last = f"Lefschetz multiplication not injective in degrees {bad}"
            continue
        return ec
    raise ValidationFailedAfterRetries(
        f"no valid generic embedding after {retries} draws (last: {last})"
    )


# -- prime decomposition and projections -------------------------------


def _component_from_labels(ec: EmbeddedComplex, labels: Sequence[int]) -> EmbeddedComplex:
    """Validated sub-polytope on a label subset, keeping parent coordinates."""
    labels = sorted(labels)
    pts = [ec.embedding.point(v) for v in labels]
    cand = boundary_from_points(pts)
    facets = [
        tuple(sorted(labels[v - 1] for v in f)) for f in cand.complex.facets
    ]
    comp = SimplicialComplex(facets)
    return EmbeddedComplex(comp, ec.embedding.restricted(labels), "natural-polytope")


def prime_components(ec: EmbeddedComplex) -> list:
    """Split along missing-facet hyperplanes until no missing facets remain.

    Components keep the parent's vertex labels and coordinates; the list
    is ordered lexicographically by sorted vertex set.
    """
    if ec.kind != "natural-polytope":
        raise ValueError("prime decomposition needs a natural polytope")
    out = []
    ipts = {v: p for v, p in zip(ec.complex.vertices,
                                 _scaled_int_points([ec.embedding.point(v)
                                                     for v in ec.complex.vertices]))}

    def split(sub: EmbeddedComplex):
        miss = sub.complex.missing_faces(dim=sub.d - 1)
        if not miss:
            out.append(sub)
            return
        tau = miss[0]
        hp = _hyperplane_int([ipts[v] for v in tau])
        if hp is None:
            raise DegenerateCut(f"missing facet {tau} is affinely degenerate")
        a, cc = hp
        side_pos, side_neg = list(tau), list(tau)
        for v in sub.complex.vertices:
            if v in tau:
                continue
            s = sum(ai * xi for ai, xi in zip(a, ipts[v])) + cc
            if s > 0:
                side_pos.append(v)
            elif s < 0:
                side_neg.append(v)
            else:
                raise DegenerateCut(f"vertex {v} lies on the cut through {tau}")
        split(_component_from_labels(ec, side_pos))
        split(_component_from_labels(ec, side_neg))

    split(ec)
    return sorted(out, key=lambda comp: comp.complex.vertices)


def connected_sum(ec1: EmbeddedComplex, ec2: EmbeddedComplex,
                  facet1: Optional[Sequence[int]] = None,
                  facet2: Optional[Sequence[int]] = None) -> EmbeddedComplex:
    """Glue two simplicial d-polytopes along a facet of each.

    The second polytope is mapped affinely so the chosen facets match
    (sorted vertex order), then squashed toward the facet by a projective
    map fixing the facet hyperplane until the union is convex with
    exactly the expected facet set.
    """
    if ec1.d != ec2.d:
        raise ValueError("dimensions differ")
    d = ec1.d
    f1 = tuple(sorted(facet1)) if facet1 else min(
        tuple(sorted(f)) for f in ec1.complex.facets)
    f2 = tuple(sorted(facet2)) if facet2 else min(
        tuple(sorted(f)) for f in ec2.complex.facets)
    if frozenset(f1) not in ec1.complex.facets:
        raise ValueError(f"not a facet of the first summand: {f1}")
    if frozenset(f2) not in ec2.complex.facets:
        raise ValueError(f"not a facet of the second summand: {f2}")

    ipts1 = _scaled_int_points([ec1.embedding.point(v) for v in f1])
    hp = _hyperplane_int(ipts1)
    a, c = hp
    # orient (a, c) outward: interior of ec1 on the negative side
    others = [v for v in ec1.complex.vertices if v not in f1]
    s0 = _eval_functional(a, c, ec1.embedding.point(others[0]))
    if s0 > 0:
        a, c = tuple(-x for x in a), -c
    bary1 = _facet_barycenter(ec1, f1)
    target_apex = [b + Fraction(ai) for b, ai in zip(bary1, a)]

    verts2 = list(ec2.complex.vertices)
    cen2 = [sum(ec2.embedding.point(v)[j] for v in verts2) / len(verts2)
            for j in range(d)]
    src = [list(ec2.embedding.point(v)) for v in f2] + [cen2]
    dst = [list(ec1.embedding.point(v)) for v in f1] + [target_apex]
    tmap = _affine_map_through(src, dst)
    if tmap is None:
        raise GeomError("degenerate facet correspondence")

    free2 = [v for v in verts2 if v not in f2]
    imgs = {v: tmap(ec2.embedding.point(v)) for v in free2}
    n1 = ec1.complex.n_vertices
    label2 = {v: n1 + i + 1 for i, v in enumerate(free2)}
    match = dict(zip(f2, f1))

    expected = {frozenset(f) for f in ec1.complex.facets if frozenset(f) != frozenset(f1)}
    for f in ec2.complex.facets:
        if frozenset(f) == frozenset(f2):
            continue
        expected.add(frozenset(match.get(v, label2.get(v)) for v in f))

    s = Fraction(1)
    for _ in range(60):
        pts = [ec1.embedding.point(v) for v in ec1.complex.vertices]
        ok = True
        for v in free2:
            img = imgs[v]
            h = _eval_functional(a, c, img)
            if h <= 0:
                ok = False
                break
            denom = 1 + s * h
            pts.append(tuple(b + (x - b) / denom for x, b in zip(img, bary1)))
        if ok:
            try:
                cand = boundary_from_points(pts)
                got = {frozenset(f) for f in cand.complex.facets}
                if got == expected:
                    return cand
            except GeomError:
                pass
        s *= 4
    raise ValidationFailedAfterRetries("connected sum did not validate")


def _eval_functional(a: Sequence, c, point: Sequence) -> Fraction:
    return sum(rat(ai) * x for ai, x in zip(a, point)) + c


def _affine_map_through(src: Sequence[Sequence], dst: Sequence[Sequence]):
    """Affine map sending each src point to the matching dst point.

    Needs len(src) = d+1 affinely independent sources; returns a callable
    or None when degenerate.
    """
    d = len(src[0])
    cols = []
    for j in range(d):
        a = QMatrix(len(src), d + 1, [list(p) + [1] for p in src])
        col = solve(a, [q[j] for q in dst])
        if col is None:
            return None
        cols.append(col)
    m = QMatrix(d + 1, d + 1, [list(p) + [1] for p in src])
    if rank(m) != d + 1:
        return None

    def apply(x: Sequence) -> tuple:
        xs = list(x) + [1]
        return tuple(sum(ci * xi for ci, xi in zip(col, xs)) for col in cols)

    return apply


def cone_projection(ec: EmbeddedComplex, apex: int,
                    hyperplane: Optional[tuple] = None) -> EmbeddedComplex:
    """Central projection of the link of `apex` from its own position.

    Returns the link with the projected (d-1)-dimensional coordinates,
    in a hyperplane not through the apex and not parallel to any edge at
    the apex.  With the default separating hyperplane the result is the
    vertex figure and validates as a natural polytope; otherwise it is
    returned as an unvalidated framework.
    """
    p = ec.embedding.point
    link = ec.complex.link([apex])
    neighbors = list(link.vertices)
    if not neighbors:
        raise ValueError("apex has empty link")

    if hyperplane is None:
        a, b = _separating_functional(ec, apex, neighbors)
    else:
        a, b = hyperplane
        a = tuple(rat(x) for x in a)
        b = rat(b)
        ha = _dot(a, p(apex))
        if ha == b:
            raise GeomError("hyperplane contains the apex")
        for v in neighbors:
            if _dot(a, p(apex)) == _dot(a, p(v)):
                raise GeomError(f"edge to {v} is parallel to the hyperplane")

    ha = _dot(a, p(apex))
    j0 = next(i for i, x in enumerate(a) if x != 0)
    x0 = [Fraction(0)] * ec.d
    x0[j0] = b / a[j0]

    proj_pts = {}
    for v in neighbors:
        t = (b - ha) / (_dot(a, p(v)) - ha)
        img = [pa + t * (pv - pa) for pa, pv in zip(p(apex), p(v))]
        rel = [x - y for x, y in zip(img, x0)]
        proj_pts[v] = tuple(rel[i] for i in range(ec.d) if i != j0)

    emb = Embedding(ec.d - 1, proj_pts)
    try:
        cand = boundary_from_points([proj_pts[v] for v in neighbors])
        relabel = {i + 1: neighbors[i] for i in range(len(neighbors))}
        got = SimplicialComplex(
            [tuple(relabel[v] for v in f) for f in cand.complex.facets])
        if got == link:
            return EmbeddedComplex(link, emb, "natural-polytope")
    except GeomError:
        pass
    return EmbeddedComplex(link, emb, "framework")


def _dot(a: Sequence, x: Sequence) -> Fraction:
    return sum(ai * xi for ai, xi in zip(a, x))


def from_builder_string(spec: str, seed: int = 0) -> EmbeddedComplex:
    """Build an instance from the mini-grammar 'name:key=val,...'.

    Names: simplex, cross, cyclic, stacked, stellar-cross, join-simplices,
    connected-sum.  An explicit seed key overrides the argument.
    """
    name, _, rest = spec.partition(":")
    name = name.strip()
    kv = {}
    if rest:
        for part in rest.split(","):
            key, _, val = part.partition("=")
            kv[key.strip()] = int(val)
    seed = kv.get("seed", seed)
    if name == "simplex":
        return simplex_boundary(kv["d"])
    if name == "cross":
        return cross_polytope(kv["d"])
    if name == "cyclic":
        return cyclic_polytope(kv["d"], kv["n"])
    if name == "stacked":
        return stacked_polytope(kv["d"], kv["n"], seed=seed)
    if name == "stellar-cross":
        d = kv["d"]
        return stellar_subdivide_facet(cross_polytope(d), range(1, d + 1))
    if name == "join-simplices":
        return join_of_simplex_boundaries(kv["k"], seed=seed)
    if name == "connected-sum":
        d = kv["d"]
        parts = kv.get("m", 2)
        out = cross_polytope(d)
        for _ in range(parts - 1):
            out = connected_sum(out, cross_polytope(d))
        return out
    raise ValueError(f"unknown builder: {name!r}")


def _separating_functional(ec: EmbeddedComplex, apex: int, neighbors: list) -> tuple:
    """Functional a with a.p(v) < a.p(apex) for all link vertices v."""
    p = ec.embedding.point
    tries = [
        tuple(sum(p(apex)[j] - p(v)[j] for v in neighbors) for j in range(ec.d)),
        p(apex),
    ]
    rng = random.Random(17)
    for _ in range(20):
        tries.append(tuple(Fraction(rng.randint(-999, 999)) for _ in range(ec.d)))
    for a in tries:
        ha = _dot(a, p(apex))
        vals = [_dot(a, p(v)) for v in neighbors]
        if all(v < ha for v in vals):
            b = (ha + max(vals)) / 2
            return tuple(rat(x) for x in a), b
    raise GeomError(f"no separating hyperplane found at vertex {apex}")
