"""The triangular grid model.

An m-grid is m rows of upright unit triangles: row r (1-based, top to
bottom) holds triangles at diagonals d = 1..r.  Each upright triangle
carries three resistance labels, one per side: L (left), R (right) and
B (base).  Every edge of the grid belongs to exactly one upright triangle,
so a grid of size m carries exactly 3*m*(m+1)/2 labels.

Vertices are addressed as (vrow, vpos) with vrow = 0..m and vpos = 0..vrow.
Upright triangle (r, d) has apex (r-1, d-1), bottom-left (r, d-1) and
bottom-right (r, d); its L edge joins apex to bottom-left, R joins apex to
bottom-right, and B joins the two bottom vertices.

Symmetries.  The grid has the dihedral symmetry of the triangle: a vertical
reflection (r, d) <-> (r, r+1-d) swapping L and R, and a rotation by 2*pi/3
cycling the three corner triangles (1,1) -> (m,1) -> (m,m).  A grid whose
labels are invariant under both is called symmetric.  A symmetric grid is
determined by its labels on the upper-left sector (triangles whose
barycentric distances to the three sides are sorted), which meets every
symmetry orbit exactly once; see ``determining_triangles``.
"""

from __future__ import annotations

import json
from typing import Iterator, Mapping, NamedTuple

from .fields import RATIONALS, FieldContract

SIDES = ("L", "R", "B")


class GridError(ValueError):
    pass


class EdgeRef(NamedTuple):
    """Address of one edge: owning triangle (row, diagonal) and side."""

    r: int
    d: int
    side: str


def validate_edge_ref(ref: EdgeRef, m: int) -> None:
    r, d, side = ref
    if side not in SIDES:
        raise GridError(f"side must be one of {SIDES}, got {side!r}")
    if not (1 <= d <= r <= m):
        raise GridError(f"edge ({r},{d},{side}) violates 1 <= d <= r <= m={m}")


def triangle_count(m: int) -> int:
    return m * (m + 1) // 2

def edge_count(m: int) -> int:
    return 3 * triangle_count(m)

def vertex_count(m: int) -> int:
    return (m + 1) * (m + 2) // 2


# -- symmetry maps -----------------------------------------------------------

def reflect_edge(ref: EdgeRef, m: int) -> EdgeRef:
    """Vertical reflection: (r,d) -> (r, r+1-d) with L and R swapped."""
    r, d, side = ref
    swapped = {"L": "R", "R": "L", "B": "B"}[side]
    return EdgeRef(r, r + 1 - d, swapped)


def rotate_edge(ref: EdgeRef, m: int) -> EdgeRef:
    """Rotation by 2*pi/3: (r,d) -> (m+1-d, r+1-d) with L->B, R->L, B->R.

    Maps the corner triangles cyclically (1,1) -> (m,1) -> (m,m) -> (1,1).
    """
    r, d, side = ref
    mapped = {"L": "B", "R": "L", "B": "R"}[side]
    return EdgeRef(m + 1 - d, r + 1 - d, mapped)


def edge_orbit(ref: EdgeRef, m: int) -> set[EdgeRef]:
    """Orbit of an edge under the full six-element symmetry group."""
    seen = {ref}
    frontier = [ref]
    while frontier:
        e = frontier.pop()
        for image in (reflect_edge(e, m), rotate_edge(e, m)):
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return seen


# -- determining region ------------------------------------------------------

def corner_distances(r: int, d: int, m: int) -> tuple[int, int, int]:
    """Barycentric distances (to left side, right side, bottom) of a triangle.

    These sum to m - 1.  The reflection swaps the first two, the rotation
    cycles all three, so orbits correspond to multisets of distances.
    """
    return (d - 1, r - d, m - r)


def determining_triangles(m: int) -> list[tuple[int, int]]:
    """Canonical determining region: the upper-left sector of the grid.

    A triangle is in the sector when its corner distances are sorted,
    d-1 <= r-d <= m-r, i.e. it lies at least as close to the top corner as
    to the bottom ones and no further from the left side than the right.
    Every symmetry orbit contains exactly one sorted multiset, so the sector
    meets every orbit, and a symmetric grid is determined by its labels
    there.  (For a 3-grid the sector is {(1,1), (2,1)}; the triangle fixed
    by the rotation, present when m = 1 mod 3, has all distances equal and
    is always included.)
    """
    out = []
    for r in range(1, m + 1):
        for d in range(1, r + 1):
            a, b, c = corner_distances(r, d, m)
            if a <= b <= c:
                out.append((r, d))
    return out


def determining_edges(m: int) -> list[EdgeRef]:
    return [EdgeRef(r, d, s) for (r, d) in determining_triangles(m)
            for s in SIDES]


def is_boundary(ref: EdgeRef, m: int) -> bool:
    """True exactly for the 3m outer edges: left side (d=1, L), right side
    (d=r, R) and bottom row (r=m, B)."""
    validate_edge_ref(ref, m)
    r, d, side = ref
    return ((side == "L" and d == 1)
            or (side == "R" and d == r)
            or (side == "B" and r == m))


# -- the grid ----------------------------------------------------------------

class Grid:
    """Immutable triangular grid with field-valued edge labels.

    ``triangles`` maps (r, d) to an (L, R, B) value triple.  ``reductions``
    counts how many reduction steps produced this grid from its ancestor.
    """

    __slots__ = ("m", "reductions", "field", "_tri", "_symmetric")

    def __init__(self, m: int, triangles: Mapping[tuple[int, int], tuple],
                 field: FieldContract = RATIONALS, reductions: int = 0,
                 _validate: bool = True):
        self.m = m
        self.reductions = reductions
        self.field = field
        self._tri = dict(triangles)
        self._symmetric = None
        if _validate:
            self._validate()

    def _validate(self) -> None:
        if self.m < 1:
            raise GridError(f"grid size must be >= 1, got {self.m}")
        expected = [(r, d) for r in range(1, self.m + 1) for d in range(1, r + 1)]
        if sorted(self._tri) != expected:
            raise GridError(f"grid of size {self.m} needs exactly the triangles "
                            f"(r,d), 1 <= d <= r <= {self.m}")
        zero = self.field.zero
        for (r, d), triple in self._tri.items():
            if len(triple) != 3:
                raise GridError(f"triangle ({r},{d}) needs 3 labels")
            if self.field.ordered and not all(v > zero for v in triple):
                raise GridError(f"non-positive resistance label at triangle ({r},{d})")

    # -- access ----------------------------------------------------------

    def triangle(self, r: int, d: int) -> tuple:
        return self._tri[(r, d)]

    def label(self, r: int, d: int, side: str):
        return self._tri[(r, d)][SIDES.index(side)]

    def label_at(self, ref: EdgeRef):
        validate_edge_ref(ref, self.m)
        return self._tri[(ref.r, ref.d)][SIDES.index(ref.side)]

    def edge_refs(self) -> Iterator[EdgeRef]:
        for r in range(1, self.m + 1):
            for d in range(1, r + 1):
                for s in SIDES:
                    yield EdgeRef(r, d, s)

    def items(self) -> Iterator[tuple[EdgeRef, object]]:
        for (r, d), (L, R, B) in self._tri.items():
            yield EdgeRef(r, d, "L"), L
            yield EdgeRef(r, d, "R"), R
            yield EdgeRef(r, d, "B"), B

    @property
    def edge_count(self) -> int:
        return edge_count(self.m)

    def is_symmetric(self) -> bool:
        """True when labels are invariant under reflection and rotation."""
        if self._symmetric is None:
            self._symmetric = all(
                self.label_at(reflect_edge(e, self.m)) == v
                and self.label_at(rotate_edge(e, self.m)) == v
                for e, v in self.items())
        return self._symmetric

    def __eq__(self, other) -> bool:
        return (isinstance(other, Grid) and self.m == other.m
                and self.reductions == other.reductions
                and self._tri == other._tri)

    def __repr__(self) -> str:
        return (f"Grid(m={self.m}, reductions={self.reductions}, "
                f"field={self.field.name})")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        labels = [{"r": e.r, "d": e.d, "side": e.side,
                   "value": self.field.format(v)}
                  for e, v in sorted(self.items(),
                                     key=lambda ev: (ev[0].r, ev[0].d,
                                                     SIDES.index(ev[0].side)))]
        return json.dumps({"m": self.m, "reductions": self.reductions,
                           "labels": labels}, indent=1)

    @staticmethod
    def from_json(text: str, field: FieldContract = RATIONALS) -> "Grid":
        data = json.loads(text)
        m = data["m"]
        tri: dict[tuple[int, int], list] = {}
        for item in data["labels"]:
            ref = EdgeRef(item["r"], item["d"], item["side"])
            validate_edge_ref(ref, m)
            triple = tri.setdefault((ref.r, ref.d), [None, None, None])
            idx = SIDES.index(ref.side)
            if triple[idx] is not None:
                raise GridError(f"duplicate label for {ref}")
            triple[idx] = field.parse(item["value"])
        triangles = {}
        for key, triple in tri.items():
            if None in triple:
                raise GridError(f"missing label(s) for triangle {key}")
            triangles[key] = tuple(triple)
        return Grid(m, triangles, field=field,
                    reductions=data.get("reductions", 0))


def all_one_grid(n: int, field: FieldContract = RATIONALS) -> Grid:
    """The n-grid whose resistance labels are uniformly the field's one."""
    if n < 1:
        raise GridError(f"grid size must be >= 1, got {n}")
    one = field.one
    tri = {(r, d): (one, one, one)
           for r in range(1, n + 1) for d in range(1, r + 1)}
    g = Grid(n, tri, field=field, reductions=0, _validate=False)
    g._symmetric = True
    return g


def symmetry_complete(partial: Mapping, m: int, *,
                      field: FieldContract = RATIONALS,
                      reductions: int = 0) -> Grid:
    """Extend labels on the determining region to a full symmetric grid.

    ``partial`` carries labels for edges of ``determining_triangles(m)``
    (keys may be EdgeRef or plain (r, d, side) tuples).  Labels propagate
    along symmetry orbits.  Keys outside the determining region, an edge
    receiving two distinct values along different orbits, or a grid edge
    left undetermined are all errors.  (A key whose orbit is already covered
    is legal as long as the values agree, so e.g. a 1-grid is determined by
    its L label alone.)
    """
    allowed = set(determining_edges(m))
    supplied = {}
    for key, value in partial.items():
        ref = EdgeRef(*key)
        validate_edge_ref(ref, m)
        if ref not in allowed:
            raise GridError(f"edge {tuple(ref)} is outside the determining region")
        supplied[ref] = value

    labels: dict[EdgeRef, object] = {}
    for ref, value in supplied.items():
        for image in edge_orbit(ref, m):
            existing = labels.get(image)
            if existing is None:
                labels[image] = value
            elif existing != value:
                raise GridError(
                    f"inconsistent symmetry overlap at {tuple(image)}: "
                    f"{field.format(existing)} vs {field.format(value)}")

    tri = {}
    for r in range(1, m + 1):
        for d in range(1, r + 1):
            try:
                tri[(r, d)] = tuple(labels[EdgeRef(r, d, s)] for s in SIDES)
            except KeyError as exc:
                raise GridError(f"determining region incomplete: triangle "
                                f"({r},{d}) not reached by any orbit") from exc
    g = Grid(m, tri, field=field, reductions=reductions)
    g._symmetric = True
    return g


def restrict_to_determining(grid: Grid) -> dict[EdgeRef, object]:
    """Labels of a grid on its determining region (inverse of completion)."""
    return {ref: grid.label_at(ref) for ref in determining_edges(grid.m)}
