"""
Checking a two-colour bound
===========================

A colouring of space is fixed by three numbers: a modulus p, a scale d and a
set S of residues. A point x is red when floor(d*|x|^2) mod p lands in S.
"""

from spherical_ramsey import ColoringSpec, PairClaim, covers, verify_pair

# residues 0..6 mod 29, scale 7
spec = ColoringSpec.of(29, 7, range(7))

# no red 3-term progression and no blue 20-term progression
verdict = verify_pair(PairClaim(spec, 3, 20))
print("l3/l20:", verdict.verified)
for check in verdict.checks:
    print("  ", check.name, check.holds)

# one shorter on the blue side and the claim breaks
verdict = verify_pair(PairClaim(spec, 3, 19))
print("l3/l19:", verdict.verified, verdict.counterexample)

# the raw finite check behind the blue side
print(covers(spec, 19).holds, covers(spec, 18).holds)
