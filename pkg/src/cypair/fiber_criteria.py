"""Cluster-type predicates for standard models over toric bases.

The log general fiber of a standard model is summarized by a FiberSpec:
its boundary components with exact self-intersections, whether each one is
irreducible over the base (the monodromy condition), the node data, the
fiber volume and the relative Picard rank.  check_pic2 and check_pic1 are
the two decision criteria; node_blowup_reduce implements the reduction
from relative rank one to rank two by blowing up the node of the fiber
boundary.

weighted_corner_numbers and obstruction_value carry the exact intersection
arithmetic of the weighted corner blow-up (x^alpha, y^beta) at a boundary
node, and prop51_witness_search is the bounded search for the divisorial
witness that a fiber of a cluster-type model must admit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import boundary_graph as bg
from .rationals import as_rational, rational_to_json


class FiberError(Exception):
    """Base class for fiber-criteria errors."""


class WrongRank(FiberError):
    pass


class BoundaryMeetsSingularities(FiberError):
    pass


class PreconditionFailed(FiberError):
    pass


SMOOTH_POINT = "smooth"


def node_location(text: str) -> str:
    """Validate a node location: "smooth" or "A<n>"."""
    if text == SMOOTH_POINT:
        return text
    if text.startswith("A") and text[1:].isdigit() and int(text[1:]) >= 1:
        return text
    raise FiberError(f"bad node location {text!r}; expected 'smooth' or 'A<n>'")


@dataclass(frozen=True)
class FiberComponent:
    self_int: Fraction
    irreducible_over_base: bool = True


@dataclass(frozen=True)
class FiberSpec:
    components: tuple[FiberComponent, ...]
    has_node: bool
    volume: Fraction
    rel_picard_rank: int
    boundary_in_smooth_locus: bool = True
    node_at: str = SMOOTH_POINT

    def __post_init__(self):
        if self.rel_picard_rank not in (1, 2):
            raise FiberError("relative Picard rank must be 1 or 2")
        # standard-model accounting: one horizontal component per unit of
        # relative rank below the relative dimension
        expected = 1 if self.rel_picard_rank == 1 else 2
        if len(self.components) != expected:
            raise FiberError(
                f"rank-{self.rel_picard_rank} fiber needs exactly {expected} boundary components"
            )
        if self.volume <= 0:
            raise FiberError("fiber volume must be positive")
        node_location(self.node_at)

    @staticmethod
    def build(components, has_node, volume, rank, smooth_locus=True, node_at=SMOOTH_POINT):
        comps = tuple(
            c
            if isinstance(c, FiberComponent)
            else FiberComponent(as_rational(c[0]), bool(c[1]))
            for c in components
        )
        return FiberSpec(
            comps, bool(has_node), as_rational(volume), int(rank), bool(smooth_locus), node_at
        )


@dataclass(frozen=True)
class Verdict:
    cluster_type: bool
    failed_conditions: tuple[int, ...] = ()


@dataclass(frozen=True)
class WeightedCornerData:
    """Intersection numbers after the (x^alpha, y^beta) corner blow-up."""

    c1_tilde_sq: Fraction
    c2_tilde_sq: Fraction
    c1_dot_e: Fraction
    c2_dot_e: Fraction
    c1_dot_c2: Fraction = Fraction(1)


def check_pic2(f: FiberSpec) -> Verdict:
    """Relative-rank-two criterion.

    Cluster type iff (1) the fiber boundary has a node, (2) every ambient
    boundary component restricts irreducibly to the fiber, and (3) some
    fiber component has positive self-intersection.
    """
    if f.rel_picard_rank != 2:
        raise WrongRank("check_pic2 needs relative Picard rank 2")
    if not f.boundary_in_smooth_locus:
        raise BoundaryMeetsSingularities(
            "standard models keep the fiber boundary in the smooth locus"
        )
    failed = []
    if not f.has_node:
        failed.append(1)
    if not all(c.irreducible_over_base for c in f.components):
        failed.append(2)
    if not any(c.self_int > 0 for c in f.components):
        failed.append(3)
    return Verdict(not failed, tuple(failed))


def check_pic1(f: FiberSpec) -> Verdict:
    """Relative-rank-one criterion.

    Cluster type iff the single boundary component is nodal, irreducible
    over the base, and the fiber volume is at least 5.
    """
    if f.rel_picard_rank != 1:
        raise WrongRank("check_pic1 needs relative Picard rank 1")
    if not f.boundary_in_smooth_locus:
        raise BoundaryMeetsSingularities(
            "standard models keep the fiber boundary in the smooth locus"
        )
    failed = []
    if not f.has_node:
        failed.append(1)
    if not f.components[0].irreducible_over_base:
        failed.append(2)
    if not f.volume >= 5:
        failed.append(3)
    return Verdict(not failed, tuple(failed))


def node_blowup_reduce(f: FiberSpec) -> FiberSpec:
    """Blow up the node of a rank-one fiber boundary, yielding a rank-two spec.

    The strict transform keeps the inherited irreducibility flag and drops
    its self-intersection from vol to vol - 4; the exceptional curve is a
    (-1)-curve meeting the strict transform twice, and those two crossings
    are the nodes of the new boundary.  The recorded volume is unchanged;
    rank-two checking does not consume it.

    check_pic1(f) == check_pic2(node_blowup_reduce(f)) on integral volumes.
    """
    if f.rel_picard_rank != 1 or not f.has_node or f.node_at != SMOOTH_POINT:
        raise PreconditionFailed(
            "node blow-up needs a rank-one spec with a node at a smooth point"
        )
    strict = FiberComponent(f.volume - 4, f.components[0].irreducible_over_base)
    exceptional = FiberComponent(Fraction(-1), True)
    return FiberSpec(
        components=(strict, exceptional),
        has_node=True,
        volume=f.volume,
        rel_picard_rank=2,
        boundary_in_smooth_locus=f.boundary_in_smooth_locus,
    )


def weighted_corner_numbers(c1_sq, c2_sq, alpha: int, beta: int) -> WeightedCornerData:
    """Exact numbers after blowing up the ideal (x^alpha, y^beta) at a corner.

    The strict transforms meet the exceptional curve with C1~.E = 1/beta and
    C2~.E = 1/alpha, still meet each other once, and their
    self-intersections drop by alpha/beta and beta/alpha.
    """
    if alpha < 1 or beta < 1:
        raise FiberError("weights must be positive integers")
    c1_sq, c2_sq = as_rational(c1_sq), as_rational(c2_sq)
    return WeightedCornerData(
        c1_tilde_sq=c1_sq - Fraction(alpha, beta),
        c2_tilde_sq=c2_sq - Fraction(beta, alpha),
        c1_dot_e=Fraction(1, beta),
        c2_dot_e=Fraction(1, alpha),
    )


def obstruction_value(m1: int, m2: int, data: WeightedCornerData) -> Fraction:
    """Self-intersection of m1*C1~ + m2*C2~ after a weighted corner blow-up.

    For nonpositive input self-intersections this is at most
    -(alpha*m1 - beta*m2)^2 / (alpha*beta) <= 0, the obstruction that rules
    out a nonnegative divisor supported on the two strict transforms.
    """
    c1, c2, cc = data.c1_tilde_sq, data.c2_tilde_sq, data.c1_dot_c2
    num = (
        m1 * m1 * c1.numerator * c2.denominator * cc.denominator
        + 2 * m1 * m2 * cc.numerator * c1.denominator * c2.denominator
        + m2 * m2 * c2.numerator * c1.denominator * cc.denominator
    )
    return Fraction(num, c1.denominator * c2.denominator * cc.denominator)


# -- witness search ----------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A depth-bounded certificate for the toric-blow-up criterion.

    ``script`` lists the corner blow-ups performed (("edge", a, b) or
    ("node", v)); ``divisor`` gives the multiplicity of each original
    component's strict transform in the nonnegative divisor; ``node``
    locates a boundary node outside the divisor's support.
    """

    script: tuple[tuple, ...]
    divisor: dict
    node: tuple


def _blowup_targets(g: bg.BoundaryGraph) -> list[tuple]:
    targets: list[tuple] = []
    for e in g.edges:
        targets.append(("edge", e.a, e.b))
    for v in g.vertices:
        if v.nodes >= 1:
            targets.append(("node", v.id))
    return sorted(targets)


def _boundary_nodes(g: bg.BoundaryGraph) -> list[tuple]:
    nodes: list[tuple] = []
    for e in g.edges:
        nodes.append(("edge", e.a, e.b))
    for v in g.vertices:
        if v.nodes >= 1:
            nodes.append(("node", v.id))
    return sorted(nodes)


def _divisor_witness(g: bg.BoundaryGraph, support_ids: list[str], cap: int):
    present = [i for i in support_ids if g.has_vertex(i)]
    for mults in product(range(cap + 1), repeat=len(present)):
        if not any(mults):
            continue
        m = dict(zip(present, mults))
        sq = Fraction(0)
        for vid, mv in m.items():
            sq += mv * mv * g.vertex(vid).self_int
        for i, a in enumerate(present):
            for b in present[i + 1 :]:
                sq += 2 * m[a] * m[b] * g.intersection(a, b)
        if sq < 0:
            continue
        for node in _boundary_nodes(g):
            if node[0] == "edge":
                _, a, b = node
                if m.get(a, 0) == 0 and m.get(b, 0) == 0:
                    return m, node
            else:
                if m.get(node[1], 0) == 0:
                    return m, node
    return None


def prop51_witness_search(
    fiber: bg.BoundaryGraph, max_blowups: int = 3, coeff_cap: int = 6
) -> Witness | None:
    """Search for a nonnegative divisor on a toric blow-up of the fiber.

    Breadth-first over corner blow-up scripts of length at most
    ``max_blowups`` (at boundary nodes and intersection points, in sorted
    order); on each resulting graph, effective divisors supported on the
    strict transforms of the original components with multiplicities up to
    ``coeff_cap`` are scanned for nonnegative self-intersection together
    with a boundary node outside their support.  Returns the first witness
    in this deterministic order, or None.

    The fiber must be an index-one Calabi-Yau boundary graph: every
    coefficient one and every adjunction residual zero.
    """
    if any(v.coeff != 1 for v in fiber.vertices):
        raise PreconditionFailed("witness search needs all boundary coefficients equal to 1")
    if not bg.is_calabi_yau(fiber):
        raise PreconditionFailed("witness search needs a Calabi-Yau balanced graph")
    original = fiber.ids()
    frontier: list[tuple[bg.BoundaryGraph, tuple]] = [(fiber, ())]
    for depth in range(max_blowups + 1):
        for g, script in frontier:
            found = _divisor_witness(g, original, coeff_cap)
            if found:
                m, node = found
                return Witness(script, m, node)
        if depth == max_blowups:
            break
        nxt = []
        for g, script in frontier:
            for target in _blowup_targets(g):
                if target[0] == "edge":
                    g2 = bg.blowup_corner(g, edge=(target[1], target[2]))
                else:
                    g2 = bg.blowup_corner(g, node=target[1])
                nxt.append((g2, script + (target,)))
        frontier = nxt
    return None


# -- JSON ---------------------------------------------------------------------


def fiber_to_json(f: FiberSpec) -> dict:
    return {
        "rank": f.rel_picard_rank,
        "components": [
            {"sq": rational_to_json(c.self_int), "irreducible": c.irreducible_over_base}
            for c in f.components
        ],
        "node": {"present": f.has_node, "at": f.node_at},
        "volume": rational_to_json(f.volume),
        "smooth_locus": f.boundary_in_smooth_locus,
    }


def fiber_from_json(data: dict) -> FiberSpec:
    if not isinstance(data, dict) or "rank" not in data:
        raise FiberError("fiber JSON needs a 'rank' field")
    try:
        node = data.get("node", {})
        return FiberSpec.build(
            components=[(c["sq"], c.get("irreducible", True)) for c in data["components"]],
            has_node=bool(node.get("present", False)),
            volume=data["volume"],
            rank=data["rank"],
            smooth_locus=bool(data.get("smooth_locus", True)),
            node_at=node_location(node.get("at", SMOOTH_POINT)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FiberError(f"malformed fiber JSON: {exc}") from exc
