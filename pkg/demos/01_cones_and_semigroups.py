"""
Cones, term orders and a first C-semigroup
==========================================

Walks through the basic objects: an integer cone, its Hilbert basis, the
partial order it induces, and a semigroup with five gaps inside it.
"""

from conesemi import GREVLEX, GRLEX, LEX, cone_new, from_gaps

# a skew cone spanned by (4,1) and (5,3)
cone = cone_new(2, [(4, 1), (5, 3)])
print("cone:", cone)
print("facet normals:", cone.normals)
print("Hilbert basis:", cone.hilbert_basis)

# membership is decided by the normals, so (9,4) is in and (2,3) is out
for p in [(9, 4), (2, 3)]:
    print(p, "in cone:", cone.contains(p))

# the cone order: x <= y when y - x is again in the cone
print("interval below (9,4):", cone.interval((9, 4)))

# three term orders disagree on small vectors
pts = [(1, 2), (2, 1), (0, 3)]
for order in (LEX, GRLEX, GREVLEX):
    print(order.name.ljust(8), sorted(pts, key=order.key))

# remove five lattice points from the cone
s = from_gaps(cone, [(2, 1), (3, 1), (6, 2), (6, 3), (7, 2)])
print()
print("genus:", s.genus)
print("Frobenius (grlex):", s.frobenius(GRLEX))
print("minimal generators:", s.minimal_generators)
print("pseudo-Frobenius:", s.pseudo_frobenius)
print("special gaps:", s.special_gaps)
print("minimal elements of X_S:", s.x_minimals())

# adding a special gap back keeps a semigroup; here the result loses one gap
t = s.add_element(s.special_gaps[0])
print("after adding", s.special_gaps[0], "->", t.gaps)
