"""Twisted Reed-Solomon codes with one-dimensional hull.

Exact finite-field and linear-algebra kernels, generator constructions for
GRS / twisted RS codes and the two roots-of-unity hull families, analysis
(dual, hull, MDS, Schur square, non-GRS certification), eta sweeps, and
verification of the published reference examples.
"""

from .gf import (
    CONWAY_POLYNOMIALS,
    DivisionByZero,
    Element,
    Field,
    FieldError,
    FieldSpec,
    MixedFields,
    NonPrimeCharacteristic,
    NonPrimitiveModulus,
    NotASubfieldOrder,
    ReducibleModulus,
    make_field,
)
from .linalg import DimensionMismatch, Matrix, NonSquare, row_space_intersection
from .code import (
    CodeReport,
    LinearCode,
    MonomialTransform,
    NonRSCertificate,
    TooLargeToEnumerate,
    apply_monomial,
    compute_report,
    dual,
    hull_basis,
    hull_dimension,
    is_mds,
    min_distance_bruteforce,
    non_rs_certificate,
    schur_square,
)
from .trs import (
    BadDimension,
    NotADivisor,
    ParamViolation,
    RepeatedPoint,
    RootsOfUnityBlock,
    TwistedRSParams,
    ZeroMultiplier,
    code_from_recipe,
    construct_lemma31,
    construct_lemma32,
    grs_generator,
    power_sum,
    roots_of_unity_points,
    trs_generator,
)
from .search import (
    EXAMPLE_IDS,
    ExampleReport,
    FindResult,
    SearchResult,
    SearchSpec,
    find_non_rs_mds_one_hull,
    hull_family_census,
    sweep_eta,
    verify_example,
)

__version__ = "0.1.0"
