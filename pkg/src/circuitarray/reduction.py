"""One-step grid reduction and the circuit transformation functions.

Reducing an m-grid to an (m-1)-grid is equivalent-circuit surgery: replace
every upright triangle by a star (delta-wye), drop the three corner tails,
merge the series pairs along the boundary, and turn the remaining claws back
into triangles (wye-delta).  Composing those steps gives closed formulas for
each child edge directly in terms of parent labels, built from

    delta(x, y, z) = x*y / (x + y + z)        (triangle edge -> star leg)
    wye(x, y, z)   = (x*y + y*z + z*x) / x    (star legs -> triangle edge)

and plain series addition.  Each parent triangle (L, R, B) contributes three
star legs, one per corner: apex = delta(L, R, B), bottom-left = delta(B, L, R),
bottom-right = delta(R, B, L).  A child edge is then either the wye of the
three legs meeting at the parent vertex it straddles (interior edges) or the
series sum of the two legs meeting there (boundary edges).

Everything is generic over the scalar field: the same code reduces grids of
exact rationals and grids of rational functions.

``reduce_window`` is the workhorse behind deep column builds: it computes
exactly the same labels as repeated ``reduce_once`` but restricts work to
the triangles that can influence a requested read row, and memoizes on label
values so the large uniform interior of a reduced grid costs almost nothing.
"""

from __future__ import annotations

import enum

from .fields import FieldContract, fast_rationals
from .grid import (SIDES, EdgeRef, Grid, GridError, determining_triangles,
                   symmetry_complete)


class TransformKind(enum.Enum):
    """The four child-edge transformation shapes.

    Boundary edges on the right side and bottom row use BOUNDARY_LEFT
    composed with the grid's rotational symmetry (same formula, rotated
    arguments), so four kinds cover every child edge.
    """

    BOUNDARY_LEFT = "boundary-left"
    NONBOUNDARY_LEFT = "left"
    NONBOUNDARY_RIGHT = "right"
    BASE = "base"


def delta(x, y, z):
    """Star leg at the corner where triangle edges x and y meet."""
    s = x + y + z
    if s == 0:
        raise ZeroDivisionError("delta with zero edge sum")
    return x * y / s


def wye(x, y, z):
    """Triangle edge opposite the star leg x, given the other legs y and z."""
    if x == 0:
        raise ZeroDivisionError("wye with zero opposite leg")
    return (x * y + y * z + z * x) / x


def series_merge(r1, r2):
    """Resistance of two resistors in series."""
    return r1 + r2


def triangle_legs(L, R, B):
    """Star legs (apex, bottom-left, bottom-right) of one upright triangle."""
    s = L + R + B
    if s == 0:
        raise ZeroDivisionError("delta-wye with zero edge sum")
    return (L * R / s, B * L / s, R * B / s)


def transform_kind(r: int, d: int, side: str, m_child: int) -> TransformKind:
    if side == "L":
        return TransformKind.BOUNDARY_LEFT if d == 1 else TransformKind.NONBOUNDARY_LEFT
    if side == "R":
        return TransformKind.BOUNDARY_LEFT if d == r else TransformKind.NONBOUNDARY_RIGHT
    return TransformKind.BOUNDARY_LEFT if r == m_child else TransformKind.BASE


def child_edge(parent: Grid, r: int, d: int, side: str):
    """Label of edge (r, d, side) in the one-step reduction of ``parent``.

    Domain limits follow from which parent triangles each formula touches;
    violations are rejected with the failing inequality named.
    """
    m = parent.m
    mc = m - 1
    if mc < 1:
        raise GridError("parent grid must have m >= 2")
    if side not in SIDES:
        raise GridError(f"side must be one of {SIDES}, got {side!r}")
    if not 1 <= d <= r <= mc:
        raise GridError(f"child edge needs 1 <= d <= r <= m-1; "
                        f"got r={r}, d={d}, m-1={mc}")
    legs = {}

    def leg(rr, dd):
        v = legs.get((rr, dd))
        if v is None:
            v = triangle_legs(*parent.triangle(rr, dd))
            legs[(rr, dd)] = v
        return v

    if side == "L":
        if d == 1:
            return series_merge(leg(r, 1)[1], leg(r + 1, 1)[0])
        return wye(leg(r, d - 1)[2], leg(r, d)[1], leg(r + 1, d)[0])
    if side == "R":
        if d == r:
            return series_merge(leg(r, r)[2], leg(r + 1, r + 1)[0])
        return wye(leg(r, d + 1)[1], leg(r, d)[2], leg(r + 1, d + 1)[0])
    if r == mc:
        return series_merge(leg(m, d)[2], leg(m, d + 1)[1])
    return wye(leg(r + 2, d + 1)[0], leg(r + 1, d)[2], leg(r + 1, d + 1)[1])


def _reduce_triangles(tri, m, out_triangles):
    """Child label triples for the listed child triangles.

    ``tri`` maps parent (r, d) to (L, R, B).  Same formulas as child_edge,
    with delta legs shared across the child edges of one pass.
    """
    legs = {}

    def leg(rr, dd):
        v = legs.get((rr, dd))
        if v is None:
            L, R, B = tri[(rr, dd)]
            s = L + R + B
            v = (L * R / s, B * L / s, R * B / s)
            legs[(rr, dd)] = v
        return v

    mc = m - 1
    child = {}
    for (r, d) in out_triangles:
        if d == 1:
            Lv = leg(r, 1)[1] + leg(r + 1, 1)[0]
        else:
            a = leg(r, d - 1)[2]; b = leg(r, d)[1]; c = leg(r + 1, d)[0]
            Lv = b + c + b * c / a
        if d == r:
            Rv = leg(r, r)[2] + leg(r + 1, r + 1)[0]
        else:
            a = leg(r, d + 1)[1]; b = leg(r, d)[2]; c = leg(r + 1, d + 1)[0]
            Rv = b + c + b * c / a
        if r == mc:
            Bv = leg(m, d)[2] + leg(m, d + 1)[1]
        else:
            a = leg(r + 2, d + 1)[0]; b = leg(r + 1, d)[2]; c = leg(r + 1, d + 1)[1]
            Bv = b + c + b * c / a
        child[(r, d)] = (Lv, Rv, Bv)
    return child


def reduce_once(grid: Grid) -> Grid:
    """Reduce an m-grid to the equivalent (m-1)-grid.

    Symmetric grids are reduced on the determining region only and completed
    by symmetry; general grids are reduced edge by edge.  Both paths agree
    with the independent graph-level reducer (see circuitarray.graphs).
    """
    if grid.m < 2:
        raise GridError("cannot reduce: grid size m >= 2 required")
    mc = grid.m - 1
    if grid.is_symmetric():
        out = determining_triangles(mc)
        child = _reduce_triangles(grid._tri, grid.m, out)
        partial = {EdgeRef(r, d, s): child[(r, d)][i]
                   for (r, d) in out for i, s in enumerate(SIDES)}
        return symmetry_complete(partial, mc, field=grid.field,
                                 reductions=grid.reductions + 1)
    out = [(r, d) for r in range(1, mc + 1) for d in range(1, r + 1)]
    child = _reduce_triangles(grid._tri, grid.m, out)
    return Grid(mc, child, field=grid.field, reductions=grid.reductions + 1)


def reduce_k(grid: Grid, k: int) -> Grid:
    """k-fold composition of reduce_once (k = 0 returns the grid unchanged)."""
    if k < 0:
        raise GridError(f"reduction count must be >= 0, got {k}")
    if k >= grid.m:
        raise GridError(f"cannot reduce a {grid.m}-grid {k} times (k < m required)")
    for _ in range(k):
        grid = reduce_once(grid)
    return grid


def reduce_window(j: int, n: int, read_dmax: int,
                  field: FieldContract | None = None) -> dict:
    """Row-(2j-1) label triples of the j-times-reduced all-one n-grid.

    Computes exactly the labels that repeated ``reduce_once`` would produce,
    restricted to the dependency cone of the read row: reading diagonals
    1..read_dmax of row 2j-1 after j reductions only requires, k steps
    before the end, triangles within 2k rows below the read row and k
    diagonals beyond it.  Within the cone, star legs and wye results are
    memoized by label value, which collapses the uniform interior bands of
    reduced grids to near-constant work.

    Returns {d: (L, R, B)} for d = 1..read_dmax.  ``field`` defaults to the
    fastest available exact rational backend.
    """
    if j < 1:
        raise GridError(f"column index must be >= 1, got {j}")
    if n < 3 * j - 1:
        raise GridError(f"read row 2j-1={2*j-1} needs n-j >= 2j-1, "
                        f"i.e. n >= {3*j-1}; got n={n}")
    if not 1 <= read_dmax <= j:
        raise GridError(f"read diagonals must lie in 1..j={j}, got {read_dmax}")
    if field is None:
        field = fast_rationals()
    one = field.one
    lo = 2 * j - 1

    def bounds(k):
        t = j - k
        return min(lo + 2 * t, n - k), read_dmax + t

    hi0, dmax0 = bounds(0)
    labels = {(r, d): (one, one, one)
              for r in range(lo, hi0 + 1)
              for d in range(1, min(dmax0, r) + 1)}

    leg_memo: dict = {}
    y_memo: dict = {}
    for k in range(j):
        m = n - k
        hi, dmax = bounds(k + 1)
        mc = m - 1
        legs = {}
        child = {}
        for r in range(lo, hi + 1):
            for d in range(1, min(dmax, r) + 1):
                # L edge
                if d == 1:
                    Lv = _leg(labels, legs, leg_memo, r, 1)[1] + \
                        _leg(labels, legs, leg_memo, r + 1, 1)[0]
                else:
                    a = _leg(labels, legs, leg_memo, r, d - 1)[2]
                    b = _leg(labels, legs, leg_memo, r, d)[1]
                    c = _leg(labels, legs, leg_memo, r + 1, d)[0]
                    key = (a, b, c)
                    Lv = y_memo.get(key)
                    if Lv is None:
                        Lv = b + c + b * c / a
                        y_memo[key] = Lv
                # R edge
                if d == r:
                    Rv = _leg(labels, legs, leg_memo, r, r)[2] + \
                        _leg(labels, legs, leg_memo, r + 1, r + 1)[0]
                else:
                    a = _leg(labels, legs, leg_memo, r, d + 1)[1]
                    b = _leg(labels, legs, leg_memo, r, d)[2]
                    c = _leg(labels, legs, leg_memo, r + 1, d + 1)[0]
                    key = (a, b, c)
                    Rv = y_memo.get(key)
                    if Rv is None:
                        Rv = b + c + b * c / a
                        y_memo[key] = Rv
                # B edge
                if r == mc:
                    Bv = _leg(labels, legs, leg_memo, m, d)[2] + \
                        _leg(labels, legs, leg_memo, m, d + 1)[1]
                else:
                    a = _leg(labels, legs, leg_memo, r + 2, d + 1)[0]
                    b = _leg(labels, legs, leg_memo, r + 1, d)[2]
                    c = _leg(labels, legs, leg_memo, r + 1, d + 1)[1]
                    key = (a, b, c)
                    Bv = y_memo.get(key)
                    if Bv is None:
                        Bv = b + c + b * c / a
                        y_memo[key] = Bv
                child[(r, d)] = (Lv, Rv, Bv)
        labels = child
    return {d: labels[(lo, d)] for d in range(1, read_dmax + 1)}


def _leg(labels, legs, leg_memo, r, d):
    v = legs.get((r, d))
    if v is None:
        triple = labels[(r, d)]
        v = leg_memo.get(triple)
        if v is None:
            L, R, B = triple
            s = L + R + B
            v = (L * R / s, B * L / s, R * B / s)
            leg_memo[triple] = v
        legs[(r, d)] = v
    return v
