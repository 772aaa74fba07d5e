"""
Irreducible semigroups and direct construction
==============================================

Symmetric semigroups with a fixed Frobenius element are found by deciding,
for every pair {x, k - x}, which member is the gap. The same idea gives a
quick way to write down one primary positioned semigroup, and shows where
no such semigroup can exist.
"""

from conesemi import construct_primary, enumerate_irreducible, oracle_primary_set, orthant
from conesemi.errors import NoPrimaryExistsError
from conesemi.irreducible import PSEUDO_SYMMETRIC

# numerical case first: three symmetric semigroups have Frobenius number 7
for s in enumerate_irreducible(orthant(1), (7,)):
    print("gaps", [g[0] for g in s.gaps], "generators", [g[0] for g in s.minimal_generators])

# in N^2, with k = (2,3)
sym = enumerate_irreducible(orthant(2), (2, 3))
print(len(sym), "symmetric semigroups with Frobenius (2,3)")
pseudo = enumerate_irreducible(orthant(2), (2, 2), PSEUDO_SYMMETRIC)
print(len(pseudo), "pseudo-symmetric semigroups with Frobenius (2,2)")

# one primary positioned semigroup for several k
for k in [(2, 3), (3, 3), (5, 1), (4, 4)]:
    s = construct_primary(orthant(2), k)
    print(k, "->", s.gaps)

# small multiples of a unit vector have none; the oracle agrees
for k in [(1, 0), (2, 0), (4, 0), (6, 0)]:
    try:
        construct_primary(orthant(2), k)
    except NoPrimaryExistsError as exc:
        print(k, "none:", exc, "| oracle finds", len(oracle_primary_set(orthant(2), k)))
