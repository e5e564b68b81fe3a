"""Spherical colorings of Euclidean space avoiding monochromatic progressions.

Exact-integer verification of non-arrow results ``E^n -/-> (l_r, l_s)`` for
colorings ``x -> floor(d|x|^2) mod p``, a pruned search over ``(p, d, S)``,
and certificates for ``E^n -/-> (l_3, alpha l_M)`` with rational ``alpha^2``.
"""

from .alpha import (
    PALETTES,
    AlphaCertificate,
    certify_alpha,
    certify_rational,
    red_interval_condition,
    shifted_residue_cover,
    verify_certificate,
)
from .errors import (
    ConstructionInvalid,
    DisjointnessViolated,
    IrrationalAlphaError,
    NotCoprime,
    NotOddPrime,
    OverflowEnvelopeExceeded,
    ParameterOutOfRange,
    SphericalRamseyError,
    WitnessConstructionFailed,
)
from .progression import (
    ColoringSpec,
    Counterexample,
    CoverOutcome,
    Failure,
    RealWitness,
    covers,
    k_sets,
    min_cover_N,
    real_witness,
)
from .residues import (
    RationalNumber,
    ResidueSet,
    canonical_translate,
    complement,
    floor_div,
    mod_inverse,
    quadratic_residues,
    translate,
)
from .search import SearchRecord, SearchSpace, search_multi, search_pairs
from .verifier import (
    PairClaim,
    ParallelogramFamily,
    parallelogram_free,
    red_l3_free_direct,
    verify_multi,
    verify_pair,
    verify_parallelogram_claim,
)

__version__ = "0.1.0"
