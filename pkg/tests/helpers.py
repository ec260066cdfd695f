"""Shared generators for randomized tests.

Random smooth fans are grown from the plane or product seed by repeated
star subdivisions at sums of adjacent rays, which keeps them smooth and
complete.  Random balanced dual graphs start from a seed whose residuals
vanish by construction and grow by crepant blow-ups, which preserve the
balance exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from cypair import boundary_graph as bg
from cypair import lattice_fan as lf

COEFFS = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


def random_smooth_fan(rng: random.Random, max_subdivisions: int = 6) -> lf.Fan2:
    fan = lf.make_fan(
        rng.choice(
            [
                [(1, 0), (0, 1), (-1, -1)],
                [(1, 0), (0, 1), (-1, 0), (0, -1)],
            ]
        )
    )
    for _ in range(rng.randrange(max_subdivisions + 1)):
        rays = fan.rays
        i = rng.randrange(len(rays))
        u, v = rays[i], rays[(i + 1) % len(rays)]
        fan = lf.star_subdivide(fan, (u.x + v.x, u.y + v.y))
    return fan


def _solved_sq(delta: int, coeff: Fraction, neighbor_sum: Fraction) -> Fraction:
    # residual (2*delta - 2 - s) + coeff*s + neighbor_sum = 0 solved for s
    return Fraction(2 * delta - 2 + neighbor_sum, 1 - coeff)


def random_balanced_seed(rng: random.Random) -> bg.BoundaryGraph:
    shape = rng.randrange(3)
    if shape == 0:
        # one curve; coefficient one forces exactly one node
        coeff = rng.choice(COEFFS)
        if coeff == 1:
            return bg.BoundaryGraph.build([("B", rng.randint(-2, 9), 1, 1)], rho=1)
        delta = rng.randrange(3)
        return bg.BoundaryGraph.build(
            [("B", _solved_sq(delta, coeff, Fraction(0)), coeff, delta)], rho=1
        )
    if shape == 1:
        # cycle of coefficient-one curves: balanced for any self-intersections
        k = rng.randint(3, 5)
        vs = [(f"C{i}", rng.randint(-3, 4), 1, 0) for i in range(k)]
        es = [(f"C{i}", f"C{(i + 1) % k}") for i in range(k)]
        return bg.BoundaryGraph.build(vs, es, rho=rng.randint(1, 4))
    # two curves with sub-one coefficients and a solved pair of self-intersections
    b1 = rng.choice(COEFFS[:-1])
    b2 = rng.choice(COEFFS[:-1])
    m = rng.randint(1, 3)
    d1, d2 = rng.randrange(2), rng.randrange(2)
    vs = [
        ("C1", _solved_sq(d1, b1, b2 * m), b1, d1),
        ("C2", _solved_sq(d2, b2, b1 * m), b2, d2),
    ]
    return bg.BoundaryGraph.build(vs, [("C1", "C2", m)], rho=rng.randint(1, 3))


def random_crepant_blowup(rng: random.Random, g: bg.BoundaryGraph):
    """One random crepant blow-up; returns (new graph, new vertex id)."""
    moves = []
    for e in g.edges:
        moves.append(("edge", (e.a, e.b)))
    for v in g.vertices:
        if v.nodes >= 1:
            moves.append(("node", v.id))
    for v in g.vertices:
        moves.append(("interior", v.id))
    kind, tgt = rng.choice(moves)
    eid = f"X{g.picard_rank}_{rng.randrange(10**6)}"
    if kind == "edge":
        return bg.blowup_corner(g, edge=tgt, new_id=eid), eid
    if kind == "node":
        return bg.blowup_corner(g, node=tgt, new_id=eid), eid
    return bg.blowup_interior(g, tgt, new_id=eid), eid
