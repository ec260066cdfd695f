"""
Crepant surgery on boundary dual graphs
=======================================

Dual graphs carry exact self-intersections, coefficients and node counts.
Crepant blow-ups preserve the Calabi-Yau balance on the nose, blow-downs
invert them, and chains of (-2)-curves contract to A_n points with exact
rational corrections.
"""

from cypair import boundary_graph as bg

# A nodal curve of self-intersection 9 with coefficient one: the adjunction
# residual (2*delta - 2 - C^2) + coeff*C^2 vanishes, so the pair balances.
cubic = bg.BoundaryGraph.build([("B", 9, 1, 1)], rho=1)
print("residuals:", bg.validate_cy(cubic))
print("complexity:", bg.complexity(cubic), " coregularity:", bg.coregularity(cubic))

# Blow up the node: the strict transform drops by 4, the exceptional curve
# meets it twice, and the balance is untouched.
up = bg.blowup_corner(cubic, node="B")
print("\nafter the node blow-up:", bg.graph_to_json(up))
assert bg.is_calabi_yau(up)
assert bg.blowdown(up, "E1") == cubic  # blow-downs invert blow-ups exactly

# An interior blow-up of a coefficient-one curve extracts a coefficient-0
# place and raises the complexity by exactly one.
interior = bg.blowup_interior(cubic, "B")
print("\ninterior blow-up raises complexity to:", bg.complexity(interior))

# The minimal resolution of an A_n point at the node of a curve B:
# strict transform B^2 - 2 plus a chain of n (-2)-curves.
res = bg.resolve_An_at_node(1, 5)
print("\nA5 resolution at a node:", [(_v.id, str(_v.self_int)) for _v in res.vertices])
assert bg.is_calabi_yau(res)

# Contract the strict transform and then four chain curves in turn; each
# becomes a (-1)-curve as its neighbour disappears. The final curve is
# nodal with self-intersection n + 1 = 6.
g = res
for vid in ("B", "E1", "E2", "E3", "E4"):
    g = bg.blowdown(g, vid)
(last,) = g.vertices
print("iterated blow-down ends at:", (last.id, str(last.self_int), last.nodes))
assert last.self_int == 6

# Chains of (-2)-curves contract back to A_n marks, with the rational
# pull-back correction restoring the original self-intersection.
marks = bg.contract_minus2_chains(res)
print("\ncontracting the chain gives marks:", [f"A{k}" for k in marks.mark_ranks])
print("strict transform back to:", str(marks.singular.vertex("B").self_int))
