"""Crepant surgery calculus on weighted dual graphs of surface pairs.

A pair (X, B) is recorded as its boundary dual graph: one vertex per curve
component carrying its exact self-intersection, its coefficient in B and
its number of nodes (self-crossings); one edge per pair of components
carrying the number of transverse intersection points; optional marked
points where three or more branches meet at one point.  The ambient Picard
rank is tracked explicitly, since a dual graph does not determine the
lattice.

All graphs are immutable values; every operation returns a new graph.
Self-nodes are vertex-local counters rather than loop edges, which keeps
the blow-down arithmetic (the m-choose-2 rule) explicit.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations

from .rationals import as_rational, rational_to_json


class GraphError(Exception):
    """Base class for dual-graph errors."""


class InvalidGraph(GraphError):
    pass


class NoSuchVertex(GraphError):
    pass


class NoSuchIntersection(GraphError):
    pass


class NotMinusOneCurve(GraphError):
    pass


class VertexHasNodes(GraphError):
    pass


class NotMinusTwoChain(GraphError):
    pass


class MarkedPointNotLC(GraphError):
    pass


class InvalidCoefficient(GraphError):
    pass


@dataclass(frozen=True, order=True)
class CurveVertex:
    """A rational boundary curve: self-intersection, coefficient, node count."""

    id: str
    self_int: Fraction
    coeff: Fraction
    nodes: int = 0
    rational: bool = True

    def __post_init__(self):
        if self.coeff > 1:
            raise InvalidGraph(f"coefficient of {self.id} exceeds 1")
        if self.nodes < 0:
            raise InvalidGraph(f"negative node count on {self.id}")


@dataclass(frozen=True, order=True)
class Edge:
    """Transverse intersection points between two distinct curves."""

    a: str
    b: str
    multiplicity: int = 1

    def __post_init__(self):
        if self.a == self.b:
            raise InvalidGraph("self-loops are vertex node counters, not edges")
        if self.multiplicity < 1:
            raise InvalidGraph("edge multiplicity must be positive")

    def other(self, v: str) -> str:
        return self.b if v == self.a else self.a


@dataclass(frozen=True, order=True)
class MarkedPoint:
    """A point where at least three boundary branches meet transversally."""

    branches: tuple[str, ...]

    def __post_init__(self):
        if len(self.branches) < 3:
            raise InvalidGraph("marked points need at least 3 branches")


@dataclass(frozen=True)
class BoundaryGraph:
    vertices: tuple[CurveVertex, ...]
    edges: tuple[Edge, ...]
    marked_points: tuple[MarkedPoint, ...] = ()
    picard_rank: int = 1
    dim: int = 2

    @staticmethod
    def build(vertices, edges=(), marked_points=(), rho: int = 1) -> "BoundaryGraph":
        """Normalized constructor.

        ``vertices`` is an iterable of (id, self_int, coeff[, nodes]) tuples
        or CurveVertex objects; ``edges`` of (a, b[, mult]) tuples or Edge
        objects; ``marked_points`` of branch-id tuples.  Vertices and edges
        are stored sorted so equal graphs compare equal.
        """
        vs = []
        for v in vertices:
            if isinstance(v, CurveVertex):
                vs.append(v)
            else:
                vid, sq, coeff, *rest = v
                nodes = rest[0] if rest else 0
                vs.append(CurveVertex(str(vid), as_rational(sq), as_rational(coeff), int(nodes)))
        ids = [v.id for v in vs]
        if len(set(ids)) != len(ids):
            raise InvalidGraph("duplicate vertex id")
        known = set(ids)
        es = []
        for e in edges:
            if not isinstance(e, Edge):
                a, b, *rest = e
                m = rest[0] if rest else 1
                a, b = str(a), str(b)
                if a > b:
                    a, b = b, a
                e = Edge(a, b, int(m))
            elif e.a > e.b:
                e = Edge(e.b, e.a, e.multiplicity)
            if e.a not in known or e.b not in known:
                raise InvalidGraph(f"edge {e.a}-{e.b} references a missing vertex")
            es.append(e)
        if len({(e.a, e.b) for e in es}) != len(es):
            raise InvalidGraph("duplicate edge; merge multiplicities instead")
        mps = []
        for p in marked_points:
            if not isinstance(p, MarkedPoint):
                p = MarkedPoint(tuple(str(b) for b in p))
            if any(b not in known for b in p.branches):
                raise InvalidGraph("marked point references a missing vertex")
            mps.append(p)
        if rho < 1:
            raise InvalidGraph("Picard rank must be positive")
        return BoundaryGraph(
            vertices=tuple(sorted(vs)),
            edges=tuple(sorted(es)),
            marked_points=tuple(sorted(mps)),
            picard_rank=int(rho),
        )

    # -- lookups ---------------------------------------------------------

    def vertex(self, vid: str) -> CurveVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise NoSuchVertex(f"no vertex {vid!r}")

    def has_vertex(self, vid: str) -> bool:
        return any(v.id == vid for v in self.vertices)

    def edge_between(self, a: str, b: str) -> Edge | None:
        a, b = (a, b) if a < b else (b, a)
        for e in self.edges:
            if (e.a, e.b) == (a, b):
                return e
        return None

    def edges_at(self, vid: str) -> list[Edge]:
        return [e for e in self.edges if vid in (e.a, e.b)]

    def intersection(self, a: str, b: str) -> int:
        """C_a . C_b for distinct curves (edge multiplicity, 0 if disjoint)."""
        e = self.edge_between(a, b)
        return e.multiplicity if e else 0

    def ids(self) -> list[str]:
        return [v.id for v in self.vertices]


# -- Calabi-Yau balance ---------------------------------------------------


def validate_cy(g: BoundaryGraph) -> list[tuple[str, Fraction]]:
    """Adjunction residual of each vertex, in id order.

    For a rational curve C with self-intersection c, coefficient b and
    delta nodes the residual is (2*delta - 2 - c) + b*c + sum over the
    other components of coeff * intersection.  The pair is Calabi-Yau iff
    every residual vanishes.  Marked points refine where intersections sit
    and contribute nothing here.
    """
    coeff = {v.id: v.coeff for v in g.vertices}
    out = []
    for v in g.vertices:
        if not v.rational:
            raise InvalidGraph(f"adjunction residuals assume rational curves; {v.id} is not")
        r = Fraction(2 * v.nodes - 2) - v.self_int + v.coeff * v.self_int
        for e in g.edges_at(v.id):
            r += coeff[e.other(v.id)] * e.multiplicity
        out.append((v.id, r))
    return out


def is_calabi_yau(g: BoundaryGraph) -> bool:
    return all(r == 0 for _, r in validate_cy(g))


# -- numerical invariants --------------------------------------------------


def complexity(g: BoundaryGraph) -> Fraction:
    """dim + Picard rank - sum of boundary coefficients."""
    return Fraction(g.dim + g.picard_rank) - sum((v.coeff for v in g.vertices), Fraction(0))


def coregularity(g: BoundaryGraph) -> int:
    """Coregularity in {0, 1, 2} of an SNC pair with ordinary marked points.

    0 when two coefficient-one curves meet, a coefficient-one curve is
    nodal, or the branch coefficients at a marked point sum to 2; else 1
    when some curve has coefficient one; else 2.
    """
    coeff = {v.id: v.coeff for v in g.vertices}
    for v in g.vertices:
        if v.coeff < 0:
            raise InvalidCoefficient("coregularity needs boundary coefficients in [0, 1]")
    for p in g.marked_points:
        s = sum(coeff[b] for b in p.branches)
        if s > 2:
            raise MarkedPointNotLC(f"branch coefficients at marked point sum to {s} > 2")
    for e in g.edges:
        if coeff[e.a] == 1 and coeff[e.b] == 1:
            return 0
    if any(v.coeff == 1 and v.nodes >= 1 for v in g.vertices):
        return 0
    if any(sum(coeff[b] for b in p.branches) == 2 for p in g.marked_points):
        return 0
    if any(v.coeff == 1 for v in g.vertices):
        return 1
    return 2


def index_integral(g: BoundaryGraph) -> bool:
    """Necessary condition for index one: every coefficient is an integer."""
    return all(v.coeff.denominator == 1 for v in g.vertices)


def reduced_volume(g: BoundaryGraph, components=None) -> Fraction:
    """Self-intersection of the sum of the given components.

    Defaults to the coefficient-one reduced part.  Under a blow-up at a
    point of multiplicity m of that part, the value drops by m^2 when
    restricted to the strict transforms of the same components.
    """
    if components is None:
        components = [v.id for v in g.vertices if v.coeff == 1]
    comp = set(components)
    total = sum((g.vertex(c).self_int for c in comp), Fraction(0))
    for a, b in combinations(sorted(comp), 2):
        total += 2 * g.intersection(a, b)
    return total


# -- exceptional ids -------------------------------------------------------


def _fresh_id(g: BoundaryGraph, prefix: str = "E") -> str:
    used = set(g.ids())
    k = 1
    while f"{prefix}{k}" in used:
        k += 1
    return f"{prefix}{k}"


def _with_vertex(vs, vid, **changes):
    return tuple(replace(v, **changes) if v.id == vid else v for v in vs)


# -- blow-ups and blow-downs ------------------------------------------------


def blowup_corner(g: BoundaryGraph, edge=None, node=None, new_id=None) -> BoundaryGraph:
    """Crepant blow-up of one intersection point of the boundary.

    Either one point of an edge (pass ``edge=(a, b)``) or one node of a
    single curve (pass ``node=vertex_id``).  The exceptional curve gets
    self-intersection -1 and the crepant coefficient: b_a + b_b - 1 at an
    edge point, 2*b_c - 1 at a node.  The Picard rank grows by one.
    """
    if (edge is None) == (node is None):
        raise NoSuchIntersection("pass exactly one of edge=(a, b) or node=vertex_id")
    eid = new_id or _fresh_id(g)
    if g.has_vertex(eid):
        raise InvalidGraph(f"vertex id {eid!r} already in use")
    if edge is not None:
        a, b = edge
        e = g.edge_between(a, b)
        if e is None:
            raise NoSuchIntersection(f"no intersection point between {a!r} and {b!r}")
        # crossings sitting at marked points are not ordinary corner points
        marked = sum(1 for p in g.marked_points if a in p.branches and b in p.branches)
        if e.multiplicity - marked < 1:
            raise NoSuchIntersection(
                f"every intersection point of {a!r} and {b!r} lies at a marked point"
            )
        va, vb = g.vertex(a), g.vertex(b)
        new_vertex = CurveVertex(eid, Fraction(-1), va.coeff + vb.coeff - 1)
        vs = _with_vertex(g.vertices, a, self_int=va.self_int - 1)
        vs = _with_vertex(vs, b, self_int=vb.self_int - 1)
        es = [x for x in g.edges if x != e]
        if e.multiplicity > 1:
            es.append(Edge(e.a, e.b, e.multiplicity - 1))
        es += [Edge(*sorted((eid, a))), Edge(*sorted((eid, b)))]
        return BoundaryGraph.build(vs + (new_vertex,), es, g.marked_points, g.picard_rank + 1)
    vc = g.vertex(node)
    if vc.nodes < 1:
        raise NoSuchIntersection(f"{node!r} has no nodes")
    new_vertex = CurveVertex(eid, Fraction(-1), 2 * vc.coeff - 1)
    vs = _with_vertex(g.vertices, node, self_int=vc.self_int - 4, nodes=vc.nodes - 1)
    es = list(g.edges) + [Edge(*sorted((eid, node)), multiplicity=2)]
    return BoundaryGraph.build(vs + (new_vertex,), es, g.marked_points, g.picard_rank + 1)


def blowup_interior(g: BoundaryGraph, vertex: str, new_id=None) -> BoundaryGraph:
    """Crepant blow-up of a smooth point of one component.

    The exceptional curve gets coefficient b_c - 1 (a sub-pair when b_c < 1)
    and meets the strict transform once.
    """
    vc = g.vertex(vertex)
    eid = new_id or _fresh_id(g)
    if g.has_vertex(eid):
        raise InvalidGraph(f"vertex id {eid!r} already in use")
    new_vertex = CurveVertex(eid, Fraction(-1), vc.coeff - 1)
    vs = _with_vertex(g.vertices, vertex, self_int=vc.self_int - 1)
    es = list(g.edges) + [Edge(*sorted((eid, vertex)))]
    return BoundaryGraph.build(vs + (new_vertex,), es, g.marked_points, g.picard_rank + 1)


def blowdown(g: BoundaryGraph, vertex: str) -> BoundaryGraph:
    """Contract a (-1)-curve without nodes.

    Each neighbour C with m intersection points gains m^2 on its
    self-intersection and m-choose-2 new nodes; every neighbour pair gains
    the product of their multiplicities in new intersection points.  The
    contracted coefficient is discarded: use is_crepant_blowdown to test
    whether the contraction preserves the log Calabi-Yau structure.
    """
    v = g.vertex(vertex)
    if v.self_int != -1:
        raise NotMinusOneCurve(f"{vertex!r} has self-intersection {v.self_int}, not -1")
    if v.nodes != 0:
        raise VertexHasNodes(f"{vertex!r} carries nodes and is not a smooth (-1)-curve")
    if any(vertex in p.branches for p in g.marked_points):
        raise InvalidGraph(f"{vertex!r} appears in a marked point")
    incident = g.edges_at(vertex)
    mults = {e.other(vertex): e.multiplicity for e in incident}
    vs = []
    for w in g.vertices:
        if w.id == vertex:
            continue
        m = mults.get(w.id, 0)
        vs.append(replace(w, self_int=w.self_int + m * m, nodes=w.nodes + m * (m - 1) // 2))
    pair_gain = {}
    for a, b in combinations(sorted(mults), 2):
        pair_gain[(a, b)] = mults[a] * mults[b]
    es = []
    for e in g.edges:
        if vertex in (e.a, e.b):
            continue
        gain = pair_gain.pop((e.a, e.b), 0)
        es.append(Edge(e.a, e.b, e.multiplicity + gain))
    for (a, b), m in pair_gain.items():
        es.append(Edge(a, b, m))
    return BoundaryGraph.build(vs, es, g.marked_points, g.picard_rank - 1)


def is_crepant_blowdown(g: BoundaryGraph, vertex: str) -> bool:
    """Whether contracting the (-1)-curve inverts a crepant blow-up.

    A contraction is crepant exactly when the coefficient equals the value
    a blow-up would assign, i.e. the sum over neighbours of coeff times
    multiplicity, minus one.
    """
    v = g.vertex(vertex)
    if v.self_int != -1 or v.nodes != 0:
        return False
    expected = sum(
        (g.vertex(e.other(vertex)).coeff * e.multiplicity for e in g.edges_at(vertex)),
        Fraction(-1),
    )
    return v.coeff == expected


# -- A_n arithmetic ---------------------------------------------------------


def resolve_An_at_node(B_sq, n: int, base_rank: int = 1) -> BoundaryGraph:
    """Minimal resolution of an A_n point sitting at the node of a curve B.

    Returns the dual graph of the resolved pair: the strict transform with
    self-intersection B^2 - 2 and no node, plus a chain E1..En of
    (-2)-curves, everything with coefficient one.  The two branches of the
    node hit the two chain ends (for n = 1, the single chain curve twice).
    The Picard rank is base_rank + n.
    """
    if n < 1:
        raise InvalidGraph("n must be at least 1")
    B_sq = as_rational(B_sq)
    vs = [("B", B_sq - 2, 1, 0)] + [(f"E{i}", -2, 1, 0) for i in range(1, n + 1)]
    if n == 1:
        es = [("B", "E1", 2)]
    else:
        es = [("B", "E1", 1), ("B", f"E{n}", 1)]
        es += [(f"E{i}", f"E{i+1}", 1) for i in range(1, n)]
    return BoundaryGraph.build(vs, es, rho=base_rank + n)


@dataclass(frozen=True)
class SingularityMark:
    """An A_k point left by contracting a chain of k (-2)-curves.

    ``incidence`` maps each surviving curve id to its intersection vector
    against the contracted chain, listed from one end to the other.
    """

    k: int
    incidence: tuple[tuple[str, tuple[int, ...]], ...] = ()


@dataclass(frozen=True)
class ChainContraction:
    singular: BoundaryGraph
    marks: tuple[SingularityMark, ...]
    resolved: BoundaryGraph

    @property
    def mark_ranks(self) -> list[int]:
        return sorted(m.k for m in self.marks)


def _minus2_components(g: BoundaryGraph) -> list[list[str]]:
    """Maximal chains of (-2)-vertices, each ordered along the path."""
    twos = {v.id for v in g.vertices if v.self_int == -2}
    adj = {v: set() for v in twos}
    for e in g.edges:
        if e.a in twos and e.b in twos:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
    chains = []
    seen = set()
    for start in sorted(twos):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        ends = sorted(x for x in comp if len(adj[x] & comp) <= 1)
        if not ends:
            raise NotMinusTwoChain(f"(-2)-curves {sorted(comp)} form a cycle, not a chain")
        chain = [ends[0]]
        while len(chain) < len(comp):
            nxt = [y for y in adj[chain[-1]] if y in comp and y not in chain]
            if len(nxt) != 1:
                raise NotMinusTwoChain(f"(-2)-curves {sorted(comp)} do not form a simple path")
            chain.append(nxt[0])
        chains.append(chain)
    return chains


def _check_chain(g: BoundaryGraph, chain: list[str]) -> None:
    if len(set(chain)) != len(chain) or not chain:
        raise NotMinusTwoChain("chain must list distinct vertices")
    coeffs = set()
    for vid in chain:
        v = g.vertex(vid)
        if v.self_int != -2:
            raise NotMinusTwoChain(f"{vid!r} has self-intersection {v.self_int}, not -2")
        if v.nodes:
            raise NotMinusTwoChain(f"{vid!r} carries nodes")
        coeffs.add(v.coeff)
    if len(coeffs) > 1:
        raise NotMinusTwoChain("chain coefficients differ")
    for a, b in zip(chain, chain[1:]):
        if g.intersection(a, b) != 1:
            raise NotMinusTwoChain(f"{a!r} and {b!r} are not chain neighbours")
    for a, b in combinations(chain, 2):
        if abs(chain.index(a) - chain.index(b)) > 1 and g.intersection(a, b) != 0:
            raise NotMinusTwoChain("chain has a chord")


def contract_minus2_chains(g: BoundaryGraph, chains=None) -> ChainContraction:
    """Contract chains of (-2)-curves to A_k singular-point marks.

    Without an explicit ``chains`` argument every maximal chain of
    (-2)-vertices is taken.  The returned singular model keeps the
    surviving curves with their self-intersections corrected by the
    rational pull-back contribution of each chain (so they may become
    non-integral); intersections among survivors at the new singular
    points are recorded on the marks, not as edges.  The resolved graph is
    returned alongside and stays the source of truth.
    """
    if chains is None:
        chains = _minus2_components(g)
    else:
        chains = [list(c) for c in chains]
    for chain in chains:
        _check_chain(g, chain)
    removed = set()
    for chain in chains:
        if removed & set(chain):
            raise NotMinusTwoChain("chains overlap")
        removed |= set(chain)
    marks = []
    sq_gain = {v.id: Fraction(0) for v in g.vertices}
    for chain in chains:
        k = len(chain)
        incidence = []
        for v in g.vertices:
            if v.id in removed:
                continue
            vec = tuple(g.intersection(v.id, c) for c in chain)
            if any(vec):
                incidence.append((v.id, vec))
                # rational self-intersection correction from the pull-back:
                # vec . M^{-1} . vec with M^{-1}_{ij} = min(i,j)(k+1-max(i,j))/(k+1)
                # in 1-based chain coordinates
                gain = Fraction(0)
                for i in range(k):
                    for j in range(k):
                        gain += (
                            vec[i]
                            * vec[j]
                            * Fraction((min(i, j) + 1) * (k - max(i, j)), k + 1)
                        )
                sq_gain[v.id] += gain
        marks.append(SingularityMark(k, tuple(sorted(incidence))))
    vs = [
        replace(v, self_int=v.self_int + sq_gain[v.id])
        for v in g.vertices
        if v.id not in removed
    ]
    es = [e for e in g.edges if e.a not in removed and e.b not in removed]
    mps = [p for p in g.marked_points if not (set(p.branches) & removed)]
    singular = BoundaryGraph.build(vs, es, mps, g.picard_rank - len(removed))
    return ChainContraction(singular, tuple(marks), g)


# -- isomorphism -------------------------------------------------------------


def weighted_isomorphic(g1: BoundaryGraph, g2: BoundaryGraph, with_coeff: bool = False) -> bool:
    """Graph isomorphism respecting self-intersections, nodes and edge
    multiplicities (and coefficients when ``with_coeff``)."""

    def label(v: CurveVertex):
        return (v.self_int, v.nodes, v.coeff) if with_coeff else (v.self_int, v.nodes)

    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    if sorted(map(label, g1.vertices)) != sorted(map(label, g2.vertices)):
        return False

    ids1 = g1.ids()
    cand = {
        a: [b for b in g2.ids() if label(g2.vertex(b)) == label(g1.vertex(a))] for a in ids1
    }
    ids1.sort(key=lambda a: len(cand[a]))

    def extend(assign: dict[str, str]) -> bool:
        if len(assign) == len(ids1):
            return True
        a = ids1[len(assign)]
        used = set(assign.values())
        for b in cand[a]:
            if b in used:
                continue
            if all(
                g1.intersection(a, x) == g2.intersection(b, y) for x, y in assign.items()
            ):
                assign[a] = b
                if extend(assign):
                    return True
                del assign[a]
        return False

    return extend({})


# -- JSON and serialization ---------------------------------------------------


def graph_to_json(g: BoundaryGraph) -> dict:
    out = {
        "rho": g.picard_rank,
        "vertices": [
            {
                "id": v.id,
                "sq": rational_to_json(v.self_int),
                "coeff": rational_to_json(v.coeff),
                "nodes": v.nodes,
            }
            for v in g.vertices
        ],
        "edges": [{"a": e.a, "b": e.b, "m": e.multiplicity} for e in g.edges],
    }
    if g.marked_points:
        out["marked_points"] = [{"branches": list(p.branches)} for p in g.marked_points]
    return out


def graph_from_json(data: dict) -> BoundaryGraph:
    if not isinstance(data, dict) or "vertices" not in data:
        raise InvalidGraph("graph JSON needs a 'vertices' array")
    try:
        vs = [
            (v["id"], as_rational(v["sq"]), as_rational(v.get("coeff", 1)), int(v.get("nodes", 0)))
            for v in data["vertices"]
        ]
        es = [(e["a"], e["b"], int(e.get("m", 1))) for e in data.get("edges", ())]
        mps = [tuple(p["branches"]) for p in data.get("marked_points", ())]
        rho = int(data.get("rho", 1))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGraph(f"malformed graph JSON: {exc}") from exc
    return BoundaryGraph.build(vs, es, mps, rho)
