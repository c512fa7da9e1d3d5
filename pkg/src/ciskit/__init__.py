"""ciskit: complementary-information-set codes for leakage squeezing.

Construction, verification, and classification of rate one-half binary codes
with two disjoint information sets, their Z4 generalizations, and the
correlation-immunity certification of the permutations they induce.
"""

from .canonical import (
    CanonicalForm,
    are_equivalent,
    canonical_form,
    canonical_key,
    is_isodual_hint,
)
from .cis import (
    CisCertificate,
    GciReport,
    NotCisProof,
    PermutationTable,
    export_sbox,
    extract_permutation,
    find_cis_partition,
    gci_order_dual,
    gci_order_walsh,
    graph_code,
    is_cis_systematic,
    is_information_set,
    quick_reject,
    read_sbox,
    walsh,
)
from .classify import (
    ClassEntry,
    ClassificationReport,
    MassCheck,
    classify_buildup,
    classify_exhaustive,
    fsd_sd_buckets,
    mass_check,
    read_report,
    write_report,
)
from .codes import (
    DistanceDistribution,
    LinearCode,
    UnrestrictedCode,
    WeightDistribution,
    krawtchouk,
    macwilliams_transform,
)
from .constructions import (
    BuildUpResult,
    DoubleCirculantCode,
    SrgParams,
    brute_B,
    build_up,
    build_up_circulant,
    cyclic_code,
    double_circulant,
    e_n_upper,
    extend_parity,
    gl2_order,
    golay_code,
    paley_cis,
    paley_matrix,
    qr_generator_poly,
    reduce_code,
    shorten,
    srg_cis,
    vg_bound_M,
)
from .errors import (
    CiskitError,
    ConstructionError,
    DimensionError,
    NotCisError,
    SingularMatrixError,
    TooLargeError,
)
from .formats import read_code, write_code
from .gf2 import BitMatrix, BitVector, Gf2Poly, circulant, poly_gcd, x_pow_minus_one
from .z4 import (
    Z4FreeCode,
    Z4Matrix,
    binary_image,
    gray,
    hensel_lift,
    is_free_cis_z4,
    lee_weight,
    octacode,
    read_z4,
    sampled_lee_weight,
    write_z4,
    z4_permutation,
    z4_qr_code,
)

__version__ = "0.1.0"
