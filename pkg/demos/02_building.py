"""Vertices of the building, their stabilizers and the boundary combinatorics.

Run with ``python3 demos/02_building.py``.
"""
import random

from slzt.building import (
    ApartmentVertex, LatticeVertex, b_translate, conjugated_root_valuation, fixes_vertex, oracle_suite,
    random_sl_poly, stabilizer_degree_bounds, verify_M_combinatorics,
)

v = ApartmentVertex((2, 1, 0))
shape = stabilizer_degree_bounds(v)
print("degree bounds for the stabilizer of", v.exponents, "->", shape.table)

# Shape membership and the valuation test agree on random polynomial matrices.
rng = random.Random(1)
g = random_sl_poly(rng, 3, shape=shape)
print("a random member of the shape:\n" + str(g))
print("fixes the vertex:", fixes_vertex(g, LatticeVertex.from_apartment(v)))
print(oracle_suite(random.Random(7), 3, matrices=40, vertices=5))

# b pushes vertices out of the sector and contracts the last-column root groups.
print("b translates (0,0,0) to", b_translate(ApartmentVertex((0, 0, 0)), 1).exponents)
print("valuation gained by the (1,3) entry under b^-k u b^k:",
      [conjugated_root_valuation(3, 1, k) for k in range(6)])

for n in range(2, 6):
    rep = verify_M_combinatorics(n)
    print(f"n={n}: fixed set at infinity has {len(rep.fixed_set)} vertices, checks passed: {rep.passed}")
