"""
Certificates for scaled progressions
====================================

For a rational alpha^2 = a/b we look for a prime p and a colouring with no
red l3 and no blue alpha*l_M. The certificate is checked with exact rationals.
"""

from fractions import Fraction

from spherical_ramsey import PALETTES, certify_alpha, shifted_residue_cover, verify_certificate

for p, pal in sorted(PALETTES.items()):
    print(p, pal.S.members, shifted_residue_cover(p, pal.S))

for value in ["1/1", "94", "2/3", "1/6314094315421"]:
    cert = certify_alpha(value)
    check = verify_certificate(cert)
    print(value, cert.case_tag, "p =", cert.p, "M =", cert.M, check.verified)

cert = certify_alpha(Fraction(1, 6314094315421))
print(cert.to_record())
