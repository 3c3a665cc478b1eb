"""Seeded randomized property suites.

Each suite draws its cases from its own ``random.Random(seed)`` so runs are
reproducible from the CLI (--seed) and repeatable across seeds in tests.
Everything asserted here is exact; there are no tolerances.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .graphs import (WeightedGraph, delta_to_wye, effective_resistance,
                     graph_level_reduce, series, wye_to_delta)
from .grid import Grid, all_one_grid, edge_count, is_boundary, reflect_edge, rotate_edge
from .ratfunc import RationalFunction, Polynomial
from .reduction import reduce_once
from .reports import Report


def random_rational(rng: random.Random, span: int = 30) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_positive_rational(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(1, span), rng.randint(1, span))


def random_ratfunc(rng: random.Random, degree: int = 2) -> RationalFunction:
    def poly(allow_zero: bool) -> Polynomial:
        while True:
            p = Polynomial([rng.randint(-5, 5) for _ in range(degree + 1)])
            if allow_zero or not p.is_zero:
                return p
    return RationalFunction(poly(True), poly(False))


def random_grid(rng: random.Random, n: int) -> Grid:
    tri = {(r, d): tuple(random_positive_rational(rng) for _ in range(3))
           for r in range(1, n + 1) for d in range(1, r + 1)}
    return Grid(n, tri)


def random_connected_graph(rng: random.Random, max_vertices: int = 8) -> WeightedGraph:
    """Random spanning tree plus extra edges, positive rational resistances."""
    n = rng.randint(3, max_vertices)
    g = WeightedGraph()
    for v in range(n):
        g.add_vertex(v)
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge(order[i], rng.choice(order[:i]), random_positive_rational(rng))
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        if not g.has_edge(u, v):
            g.add_edge(u, v, random_positive_rational(rng))
    return g


# -- suites -------------------------------------------------------------------

def field_axiom_suite(kind: str = "rational", seed: int = 0,
                      rounds: int = 60) -> Report:
    """Field axioms on random scalars: associativity, commutativity,
    distributivity, identities, inverses, and sub/div consistency.

    For the symbolic kind, also checks that evaluation at a random non-pole
    point is a field homomorphism, and that (in)equality of rational
    functions agrees with values at 20 random points.
    """
    rng = random.Random(seed)
    report = Report(f"field-axioms[{kind}] seed={seed}")
    if kind == "rational":
        draw = lambda: random_rational(rng)
    elif kind == "symbolic":
        draw = lambda: random_ratfunc(rng)
    else:
        raise ValueError(f"unknown field kind {kind!r}")

    ok = {"assoc": True, "comm": True, "dist": True, "ident": True,
          "inverse": True, "subdiv": True}
    for _ in range(rounds):
        a, b, c = draw(), draw(), draw()
        ok["assoc"] &= (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
        ok["comm"] &= a + b == b + a and a * b == b * a
        ok["dist"] &= a * (b + c) == a * b + a * c
        ok["ident"] &= a + (a * 0) == a and a * (a * 0 + 1) == a
        if b != a * 0:
            ok["inverse"] &= (a / b) * b == a
            ok["subdiv"] &= a - b + b == a and (a + b) - b == a
    for name, passed in ok.items():
        report.add(f"{name} over {rounds} draws", passed)

    if kind == "symbolic":
        homo_ok = True
        eq_ok = True
        for _ in range(20):
            f, g = random_ratfunc(rng), random_ratfunc(rng)
            x0 = random_rational(rng)
            try:
                fv, gv = f.eval(x0), g.eval(x0)
            except ZeroDivisionError:
                continue
            homo_ok &= (f + g).eval(x0) == fv + gv
            homo_ok &= (f - g).eval(x0) == fv - gv
            homo_ok &= (f * g).eval(x0) == fv * gv
            if not g.is_zero and gv != 0:
                homo_ok &= (f / g).eval(x0) == fv / gv
            samples = []
            for _ in range(20):
                pt = random_rational(rng)
                try:
                    samples.append(f.eval(pt) == g.eval(pt))
                except ZeroDivisionError:
                    continue
            if f == g:
                eq_ok &= all(samples)
            elif samples:
                eq_ok &= not all(samples)
        report.add("evaluation is a field homomorphism", homo_ok)
        report.add("equality consistent with 20-point sampling", eq_ok)
    return report


def metric_suite(seed: int = 0, graphs: int = 25) -> Report:
    """Effective resistance behaves as a metric on random connected graphs:
    symmetric, positive, and satisfying the triangle inequality."""
    rng = random.Random(seed)
    report = Report(f"resistance-metric seed={seed}")
    sym_ok = pos_ok = tri_ok = True
    for _ in range(graphs):
        g = random_connected_graph(rng, 7)
        verts = g.vertices
        r = {}
        for u, v in combinations(verts, 2):
            r[(u, v)] = effective_resistance(g, u, v)
            sym_ok &= effective_resistance(g, v, u) == r[(u, v)]
            pos_ok &= r[(u, v)] > 0
        def dist(u, v):
            return r[(u, v)] if (u, v) in r else r[(v, u)]
        for u, v, w in combinations(verts, 3):
            tri_ok &= dist(u, w) <= dist(u, v) + dist(v, w)
    report.add(f"symmetry on {graphs} graphs", sym_ok)
    report.add("positivity", pos_ok)
    report.add("triangle inequality", tri_ok)
    return report


def symmetry_suite(seed: int = 0, rounds: int = 12) -> Report:
    """Grid symmetry machinery: involution/order-3 laws, boundary counts,
    and preservation of symmetry under reduction."""
    rng = random.Random(seed)
    report = Report(f"grid-symmetry seed={seed}")
    refl_ok = rot_ok = bnd_ok = cnt_ok = keep_ok = True
    for _ in range(rounds):
        m = rng.randint(2, 12)
        g = all_one_grid(m)
        refs = list(g.edge_refs())
        refl_ok &= all(reflect_edge(reflect_edge(e, m), m) == e for e in refs)
        rot_ok &= all(rotate_edge(rotate_edge(rotate_edge(e, m), m), m) == e
                      for e in refs)
        bnd_ok &= sum(is_boundary(e, m) for e in refs) == 3 * m
        cnt_ok &= len(refs) == edge_count(m)
        if m >= 3:
            # rebuild to drop the cached flag so symmetry is actually rechecked
            child = reduce_once(g)
            keep_ok &= Grid(child.m, child._tri,
                            reductions=child.reductions).is_symmetric()
            if m >= 4:
                grand = reduce_once(child)
                keep_ok &= Grid(grand.m, grand._tri,
                                reductions=grand.reductions).is_symmetric()
    report.add("reflection is an involution", refl_ok)
    report.add("rotation has order 3", rot_ok)
    report.add("boundary edge count is 3m", bnd_ok)
    report.add("edge count is 3m(m+1)/2", cnt_ok)
    report.add("reduction preserves symmetry", keep_ok)
    return report


def transform_soundness_suite(seed: int = 0, graphs: int = 100) -> Report:
    """Each applicable transform preserves every retained pairwise
    resistance exactly, over ``graphs`` random connected graphs."""
    rng = random.Random(seed)
    report = Report(f"transform-soundness seed={seed}")
    applied = {"delta_to_wye": 0, "wye_to_delta": 0, "series": 0}
    failures = []
    for idx in range(graphs):
        g = random_connected_graph(rng, 8)
        verts = g.vertices
        base = {(u, v): effective_resistance(g, u, v)
                for u, v in combinations(verts, 2)}

        candidates = []
        for u, v, w in combinations(verts, 3):
            if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w):
                candidates.append(("delta_to_wye", (u, v, w)))
        for v in verts:
            if g.degree(v) == 3:
                candidates.append(("wye_to_delta", v))
            elif g.degree(v) == 2:
                candidates.append(("series", v))
        if not candidates:
            continue
        kind, site = rng.choice(candidates)
        if kind == "delta_to_wye":
            h = delta_to_wye(g, site)
            retained = verts
        elif kind == "wye_to_delta":
            h = wye_to_delta(g, site)
            retained = [v for v in verts if v != site]
        else:
            h = series(g, site)
            retained = [v for v in verts if v != site]
        applied[kind] += 1
        for u, v in combinations(retained, 2):
            if effective_resistance(h, u, v) != base[(u, v)]:
                failures.append((idx, kind, site, u, v))
    for kind, count in applied.items():
        report.add(f"{kind}: {count} applications, resistances preserved",
                   not any(f[1] == kind for f in failures),
                   "" if not failures else f"failures {failures[:3]}")
    report.add(f"total graphs exercised: {graphs}", not failures)
    return report


def dual_pipeline_suite(seed: int = 0, random_grids: int = 25,
                        nmax_all_one: int = 8) -> Report:
    """Closed-form reduction agrees with the graph-level reducer label for
    label, on all-one grids and on random positive-rational grids."""
    rng = random.Random(seed)
    report = Report(f"dual-pipeline seed={seed}")
    bad = None
    for n in range(3, nmax_all_one + 1):
        g = all_one_grid(n)
        if reduce_once(g) != graph_level_reduce(g):
            bad = f"all-one {n}-grid"
            break
    report.add(f"all-one grids n = 3..{nmax_all_one}", bad is None,
               bad or "")
    bad = None
    for idx in range(random_grids):
        n = rng.choice([3, 4, 5])
        g = random_grid(rng, n)
        if reduce_once(g) != graph_level_reduce(g):
            bad = f"random grid #{idx} (n={n})"
            break
    report.add(f"{random_grids} random positive-rational grids (n = 3..5)",
               bad is None, bad or "")
    return report
