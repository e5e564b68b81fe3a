"""
Searching for colourings
========================

Subsets grow one residue at a time. A set that already contains a red
progression is dropped together with all of its supersets.
"""

from spherical_ramsey import SearchSpace, search_multi, search_pairs

space = SearchSpace((5, 5), 2, red_length=5, n_cap=10)
for rec in search_pairs(space):
    print(rec.spec.p, rec.spec.d, rec.spec.S.members, "blue length", rec.best_s)

# three colours: red and green palettes, the rest blue
space = SearchSpace((10, 10), 3, d_values=(2,))
for rec in search_multi(space, (3, 3, 8)):
    print([pal.members for pal in rec.palettes], "blue length", rec.best_last)
