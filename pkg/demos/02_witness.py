"""
Extracting a real witness
=========================

When the finite check fails it names a grid cell. That cell becomes an exact
rational pair (b, c) whose orbit floor(d(k^2 + b k + c)) misses S for every
k = 0..N.
"""

from spherical_ramsey.progression import (
    ColoringSpec,
    covers,
    min_cover_N,
    orbit_floors,
    real_witness,
    validate_witness,
)

spec = ColoringSpec.of(29, 7, range(7))

print("smallest N that always hits S:", min_cover_N(spec, 30))

outcome = covers(spec, 18)
print("failure:", outcome.counterexample)

w = real_witness(spec, 18, outcome.counterexample)
print("b =", w.b, " c =", w.c)

floors = orbit_floors(spec, 18, w.b, w.c)
print("floors mod 29:", [f % 29 for f in floors])
print("validated:", validate_witness(spec, w))
