"""Face lattices and flip graphs of associahedra and cyclohedra.

Faces are partial triangulations ordered by reverse inclusion.  The rank of a
face is its dimension: (n-3) - #diagonals for the associahedron and
(n/2-1) - #orbits for the cyclohedron, so triangulations have rank 0 and the
empty set is the top cell.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .errors import InputError
from .triangulations import (
    Diagonal,
    PartialTriangulation,
    catalan,
    enumerate_partial_triangulations,
    enumerate_symmetric_partial_triangulations,
    enumerate_symmetric_triangulations,
    enumerate_triangulations,
    flip,
    is_central,
    regions,
    share_triangle,
    symmetric_flip,
    symmetric_orbits,
)


class TwoFaceKind(enum.Enum):
    SQUARE = 4
    PENTAGON = 5
    HEXAGON = 6


def _check(n: int, symmetric: bool) -> None:
    if n < 3:
        raise InputError(f"polygon size must be at least 3, got {n}")
    if symmetric and (n % 2 or n < 4):
        raise InputError(f"the cyclohedron needs an even polygon with n >= 4, got {n}")


def dimension(n: int, symmetric: bool) -> int:
    return n // 2 - 1 if symmetric else n - 3


def face_rank(pt: PartialTriangulation, symmetric: bool) -> int:
    if symmetric:
        return dimension(pt.n, True) - len(symmetric_orbits(pt))
    return dimension(pt.n, False) - len(pt.diagonals)


@dataclass
class FaceLattice:
    """Graded poset of (centrally symmetric) partial triangulations.

    ``faces`` is sorted by rank and then lexicographically; ``covers`` holds
    index pairs ``(i, j)`` where face ``j`` lies immediately below face ``i``
    (it has one more diagonal, or one more orbit).
    """

    n: int
    symmetric: bool
    faces: list
    ranks: list
    covers: list
    index: dict = field(repr=False)

    @property
    def dim(self) -> int:
        return dimension(self.n, self.symmetric)

    @property
    def top(self) -> int:
        return self.index[PartialTriangulation(self.n)]

    def rank_of(self, face: PartialTriangulation) -> int:
        return self.ranks[self._idx(face)]

    def by_rank(self, r: int) -> list:
        return [f for f, k in zip(self.faces, self.ranks) if k == r]

    @cached_property
    def down(self) -> list:
        out = [[] for _ in self.faces]
        for i, j in self.covers:
            out[i].append(j)
        return out

    @cached_property
    def up(self) -> list:
        out = [[] for _ in self.faces]
        for i, j in self.covers:
            out[j].append(i)
        return out

    def _idx(self, face) -> int:
        if isinstance(face, int):
            return face
        try:
            return self.index[face]
        except KeyError:
            raise InputError(f"{face!r} is not a face of this lattice") from None

    def below(self, face, rank: int | None = None) -> list:
        """Indices of faces at or below ``face`` (optionally only those of one rank)."""
        start = self._idx(face)
        seen = {start}
        stack = [start]
        while stack:
            for j in self.down[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return sorted(i for i in seen if rank is None or self.ranks[i] == rank)

    def above(self, face, rank: int | None = None) -> list:
        start = self._idx(face)
        seen = {start}
        stack = [start]
        while stack:
            for j in self.up[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return sorted(i for i in seen if rank is None or self.ranks[i] == rank)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "symmetric": self.symmetric,
            "faces": [f.to_dict() for f in self.faces],
            "ranks": list(self.ranks),
            "covers": [list(c) for c in self.covers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def build_face_lattice(n: int, symmetric: bool = False) -> FaceLattice:
    _check(n, symmetric)
    if symmetric:
        faces = enumerate_symmetric_partial_triangulations(n)
    else:
        faces = enumerate_partial_triangulations(n)
    ranks = [face_rank(f, symmetric) for f in faces]
    order = sorted(range(len(faces)), key=lambda i: (ranks[i], faces[i].key()))
    faces = [faces[i] for i in order]
    ranks = [ranks[i] for i in order]
    index = {f: i for i, f in enumerate(faces)}

    covers = []
    for j, f in enumerate(faces):
        parts = symmetric_orbits(f) if symmetric else [frozenset([d]) for d in f.diagonals]
        for part in parts:
            upper = PartialTriangulation._trusted(n, f.diagonals - part)
            covers.append((index[upper], j))
    covers.sort()
    return FaceLattice(n, symmetric, faces, ranks, covers, index)


def f_vector(lattice: FaceLattice, include_top: bool = False) -> tuple:
    """Face counts (f_0, ..., f_{d-1}); the top cell is appended only on request."""
    counts = [0] * (lattice.dim + 1)
    for r in lattice.ranks:
        counts[r] += 1
    return tuple(counts if include_top else counts[:-1])


def classify_two_face(lattice: FaceLattice, face) -> TwoFaceKind:
    """Square, pentagon or hexagon, by counting the vertices of a 2-face."""
    i = lattice._idx(face)
    if lattice.ranks[i] != 2:
        raise InputError(f"face has rank {lattice.ranks[i]}, expected 2")
    k = len(lattice.below(i, rank=0))
    try:
        return TwoFaceKind(k)
    except ValueError:
        raise InputError(f"2-face with {k} vertices") from None


def two_face_from_flips(t: PartialTriangulation, x, y, symmetric: bool = False) -> TwoFaceKind:
    """Kind of the 2-face at vertex t spanned by flipping x and y.

    In the associahedron x and y are diagonals; in the cyclohedron they are
    half-turn orbits.  Interacting means some member of x and some member of
    y are sides of a common triangle of t.
    """
    xs = [Diagonal(*d) for d in (x if symmetric else [x])]
    ys = [Diagonal(*d) for d in (y if symmetric else [y])]
    touching = any(share_triangle(t, a, b) for a in xs for b in ys)
    if not touching:
        return TwoFaceKind.SQUARE
    if symmetric and (any(is_central(d, t.n) for d in xs) or any(is_central(d, t.n) for d in ys)):
        return TwoFaceKind.HEXAGON
    return TwoFaceKind.PENTAGON


@dataclass
class FlipGraph:
    n: int
    symmetric: bool
    vertices: list
    edges: list

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from(self.edges)
        return g

    def degrees(self) -> list:
        return [d for _, d in sorted(self.graph.degree())]

    def is_connected(self) -> bool:
        return nx.is_connected(self.graph)

    def to_dot(self) -> str:
        lines = [f'graph flips_{self.n}{"_sym" if self.symmetric else ""} {{']
        for i, v in enumerate(self.vertices):
            label = json.dumps([list(d) for d in v.sorted()]).replace('"', '\\"')
            lines.append(f'  {i} [label="{label}"];')
        for i, j in self.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def flip_graph(n: int, symmetric: bool = False) -> FlipGraph:
    """Vertices are triangulations, edges are (symmetric) flips."""
    _check(n, symmetric)
    verts = enumerate_symmetric_triangulations(n) if symmetric else enumerate_triangulations(n)
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for i, v in enumerate(verts):
        if symmetric:
            moves = [symmetric_flip(v, o) for o in symmetric_orbits(v)]
        else:
            moves = [flip(v, d) for d in v.sorted()]
        for w in moves:
            j = index[w]
            edges.add((min(i, j), max(i, j)))
    return FlipGraph(n, symmetric, verts, sorted(edges))


def embed_into_double(pt: PartialTriangulation) -> PartialTriangulation:
    """Send the n-gon onto the even vertices of the 2n-gon (j -> 2j).

    The images of the n boundary edges become diagonals {2j, 2j+2}.
    """
    n = pt.n
    m = 2 * n
    ring = {Diagonal(*sorted((2 * j, (2 * j + 2) % m))) for j in range(n)}
    return PartialTriangulation._trusted(m, ring | {Diagonal(2 * a, 2 * b) for a, b in pt.diagonals})


def region_catalan_product(pt: PartialTriangulation) -> int:
    """Number of triangulations refining pt: product of Catalan numbers of its regions."""
    out = 1
    for r in regions(pt):
        out *= catalan(len(r) - 2)
    return out
