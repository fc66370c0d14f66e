"""GKZ coordinates of triangulations of standard regular polygons.

A standard polygon is inscribed in the unit circle with vertex j at angle
2*pi*j/n.  All metric checks work in double precision with an explicit
tolerance (default 1e-9).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .facelattice import build_face_lattice, embed_into_double
from .triangulations import (
    PartialTriangulation,
    enumerate_symmetric_triangulations,
    enumerate_triangulations,
    triangles,
)

TOL = 1e-9


@dataclass(frozen=True)
class StandardPolygon:
    n: int

    @property
    def vertices(self) -> np.ndarray:
        theta = 2 * np.pi * np.arange(self.n) / self.n
        return np.column_stack([np.cos(theta), np.sin(theta)])

    def area(self) -> float:
        return 0.5 * self.n * math.sin(2 * math.pi / self.n)


def triangle_area(p, q, r) -> float:
    return 0.5 * abs((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]))


@dataclass(frozen=True)
class GkzVector:
    n: int
    coords: tuple

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.coords, dtype=dtype)


def gkz_vector(polygon: StandardPolygon | int, t: PartialTriangulation) -> GkzVector:
    """Per-vertex sums of the areas of the incident triangles of t."""
    if isinstance(polygon, int):
        polygon = StandardPolygon(polygon)
    if t.n != polygon.n:
        raise InputError(f"triangulation of a {t.n}-gon given for a {polygon.n}-gon")
    if not t.is_triangulation:
        raise InputError("GKZ vectors are defined for full triangulations only")
    pts = polygon.vertices
    coords = [0.0] * polygon.n
    for i, j, k in triangles(t):
        a = triangle_area(pts[i], pts[j], pts[k])
        coords[i] += a
        coords[j] += a
        coords[k] += a
    return GkzVector(polygon.n, tuple(float(c) for c in coords))


def affine_dimension(points, tol: float = TOL) -> int:
    """Dimension of the affine span, with singular values below tol treated as zero."""
    pts = np.asarray([np.asarray(p, dtype=float) for p in points])
    if pts.size == 0:
        raise InputError("affine_dimension needs at least one point")
    if tol <= 0:
        raise InputError("tolerance must be positive")
    diffs = pts[1:] - pts[0]
    if len(diffs) == 0:
        return 0
    return int(np.linalg.matrix_rank(diffs, tol=tol))


@dataclass(frozen=True)
class Involution:
    """Coordinate permutation i -> i + n2/2 (mod n2) induced by the half-turn."""

    n2: int

    def __post_init__(self):
        if self.n2 % 2 or self.n2 < 2:
            raise InputError(f"involution needs an even size, got {self.n2}")

    @property
    def permutation(self) -> list:
        h = self.n2 // 2
        return [(i + h) % self.n2 for i in range(self.n2)]

    def apply(self, v) -> np.ndarray:
        x = np.asarray(v, dtype=float)
        return x[self.permutation]


def tau_fixed(v: GkzVector, inv: Involution | None = None, tol: float = TOL) -> bool:
    if inv is None:
        inv = Involution(v.n)
    if v.n != inv.n2:
        raise InputError(f"vector of length {v.n} for an involution of size {inv.n2}")
    x = np.asarray(v.coords)
    return bool(np.max(np.abs(x - inv.apply(x))) <= tol)


@dataclass
class EmbeddingReport:
    n: int
    translation: np.ndarray
    max_translation_deviation: float
    max_distance_deviation: float
    exterior_triangle_area: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.max_translation_deviation < self.tol and self.max_distance_deviation < self.tol


def pad(v, n: int) -> np.ndarray:
    """Place the coordinates of an n-vector on the even slots of a 2n-vector."""
    out = np.zeros(2 * n)
    out[0::2] = np.asarray(v, dtype=float)
    return out


def check_embedding_isometry(n: int, tol: float = TOL) -> EmbeddingReport:
    """Compare GKZ vectors of P_n triangulations with those of their images in P_2n.

    The distance deviation is relative: |d' - d| / d over all pairs.
    """
    source = enumerate_triangulations(n)
    src = np.array([gkz_vector(n, t).coords for t in source])
    img = np.array([gkz_vector(2 * n, embed_into_double(t)).coords for t in source])
    shifts = img - np.array([pad(v, n) for v in src])
    translation = shifts[0]
    trans_dev = float(np.max(np.abs(shifts - translation)))

    dist_dev = 0.0
    for i, j in itertools.combinations(range(len(source)), 2):
        d = np.linalg.norm(src[i] - src[j])
        d2 = np.linalg.norm(img[i] - img[j])
        dist_dev = max(dist_dev, abs(d2 - d) / d)

    pts = StandardPolygon(2 * n).vertices
    ear = triangle_area(pts[0], pts[1], pts[2])
    return EmbeddingReport(n, translation, trans_dev, dist_dev, ear, tol)


def gkz_vertices(n: int, symmetric: bool = False) -> list:
    """(triangulation, GKZ vector) pairs for every (symmetric) triangulation of P_n."""
    ts = enumerate_symmetric_triangulations(n) if symmetric else enumerate_triangulations(n)
    return [(t, gkz_vector(n, t)) for t in ts]


def gkz_json(n: int, symmetric: bool = False) -> str:
    verts = [{"triangulation": t.to_dict(), "gkz": [float(f"{x:.12g}") for x in v.coords]}
             for t, v in gkz_vertices(n, symmetric)]
    return json.dumps({"n": n, "symmetric": symmetric, "vertices": verts}, indent=1)


def span_basis(points, tol: float = TOL):
    """Centroid and orthonormal basis (rows) of the affine span of the points."""
    pts = np.asarray(points, dtype=float)
    center = pts.mean(axis=0)
    _, s, vt = np.linalg.svd(pts - center)
    k = int(np.sum(s > tol))
    return center, vt[:k]


def _face_cycle(lattice, face_index, vindex) -> list:
    """Vertices of a 2-face in cyclic order (walking its edges)."""
    verts = lattice.below(face_index, rank=0)
    edges = [lattice.down[e] for e in lattice.below(face_index, rank=1)]
    nbrs = {v: [] for v in verts}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    cycle = [verts[0]]
    prev = None
    while len(cycle) < len(verts):
        cur = cycle[-1]
        nxt = next(w for w in nbrs[cur] if w != prev and w not in cycle)
        prev = cur
        cycle.append(nxt)
    return [vindex[v] for v in cycle]


def export_off(n: int, symmetric: bool = False) -> str:
    """OFF file of a 3-dimensional standard associahedron or cyclohedron.

    Vertices are projected onto an orthonormal basis of their affine span.
    """
    lattice = build_face_lattice(n, symmetric)
    if lattice.dim != 3:
        raise InputError(f"OFF export is only for 3-polytopes, this one has dimension {lattice.dim}")
    vidx = [i for i, r in enumerate(lattice.ranks) if r == 0]
    vindex = {v: k for k, v in enumerate(vidx)}
    coords = np.array([gkz_vector(n, lattice.faces[i]).coords for i in vidx])
    center, basis = span_basis(coords)
    xyz = (coords - center) @ basis.T

    faces = []
    for fi, r in enumerate(lattice.ranks):
        if r != 2:
            continue
        cyc = _face_cycle(lattice, fi, vindex)
        p = xyz[cyc]
        normal = np.cross(p[1] - p[0], p[2] - p[0])
        if np.dot(normal, p.mean(axis=0)) < 0:
            cyc = cyc[::-1]
        faces.append(cyc)

    n_edges = sum(1 for r in lattice.ranks if r == 1)
    lines = ["OFF", f"{len(xyz)} {len(faces)} {n_edges}"]
    for x in xyz:
        lines.append(" ".join(f"{c:.12g}" for c in x))
    for f in faces:
        lines.append(" ".join(str(k) for k in [len(f), *f]))
    return "\n".join(lines) + "\n"

