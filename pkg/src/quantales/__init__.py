'Workbench for finite coherent quantales and their reticulations.'

from quantales.lattices import (
    DistLattice,
    FiniteLattice,
    FinitePoset,
    LatticeError,
    LatticeIdeal,
    LatticeMorphism,
    NotALattice,
    NotAnIdeal,
    NotAPoset,
    Verdict,
    all_ideals,
    build_lattice,
    has_id_blp,
    is_distributive,
    lattice_boolean_center,
    lattice_is_b_normal,
    lattice_is_normal,
    prime_ideals,
    quotient_by_ideal,
)
from quantales.quantale import (
    AxiomError,
    IntervalQuantale,
    NotAssociative,
    NotCommutative,
    NotDistributive,
    NotUnital,
    PreconditionFailed,
    Quantale,
    QuantaleError,
    QuantaleMorphism,
    RadicalFrame,
    TrivialQuantale,
    boolean_center,
    build_quantale,
    decompose_by_elements,
    find_quantale_isomorphism,
    interval_quantale,
    is_isomorphic,
    jacobson_radical,
    kernel,
    m_primes,
    maximals,
    negation,
    product,
    radical,
    radical_by_powers,
    radical_frame,
    residuum,
)
from quantales.reticulation import (
    NotAReticulation,
    Reticulation,
    boolean_isos,
    check_unicity,
    frame_iso,
    interval_reticulation_iso,
    reticulate,
    spectrum_homeomorphism,
    star,
    unstar,
)
from quantales.properties import (
    Decomposition,
    PropertyReport,
    element_has_lp,
    has_lp,
    has_property_star,
    hyperarchimedean_equivalents,
    is_b_normal,
    is_hyperarchimedean,
    is_local,
    is_normal,
    is_semilocal,
    is_semiprime,
    local_decomposition,
)
from quantales.io import (
    InstanceError,
    InvalidParameter,
    ParseError,
    UnknownGenerator,
    ValidationError,
    emit_instance,
    export_dot,
    generate,
    parse_instance,
)
from quantales.suite import (
    BoundExceeded,
    Corpus,
    CorpusMember,
    VerificationReport,
    enumerate_quantales,
    enumerated,
    fixtures,
    replay,
    run_suite,
)

__all__ = [
    'AxiomError',
    'BoundExceeded',
    'Corpus',
    'CorpusMember',
    'Decomposition',
    'DistLattice',
    'FiniteLattice',
    'FinitePoset',
    'InstanceError',
    'IntervalQuantale',
    'InvalidParameter',
    'LatticeError',
    'LatticeIdeal',
    'LatticeMorphism',
    'NotALattice',
    'NotAPoset',
    'NotAReticulation',
    'NotAnIdeal',
    'NotAssociative',
    'NotCommutative',
    'NotDistributive',
    'NotUnital',
    'ParseError',
    'PreconditionFailed',
    'PropertyReport',
    'Quantale',
    'QuantaleError',
    'QuantaleMorphism',
    'RadicalFrame',
    'Reticulation',
    'TrivialQuantale',
    'UnknownGenerator',
    'ValidationError',
    'Verdict',
    'VerificationReport',
    'all_ideals',
    'boolean_center',
    'boolean_isos',
    'build_lattice',
    'build_quantale',
    'check_unicity',
    'decompose_by_elements',
    'element_has_lp',
    'emit_instance',
    'enumerate_quantales',
    'enumerated',
    'export_dot',
    'find_quantale_isomorphism',
    'fixtures',
    'frame_iso',
    'generate',
    'has_id_blp',
    'has_lp',
    'has_property_star',
    'hyperarchimedean_equivalents',
    'interval_quantale',
    'interval_reticulation_iso',
    'is_b_normal',
    'is_distributive',
    'is_hyperarchimedean',
    'is_isomorphic',
    'is_local',
    'is_normal',
    'is_semilocal',
    'is_semiprime',
    'jacobson_radical',
    'kernel',
    'lattice_boolean_center',
    'lattice_is_b_normal',
    'lattice_is_normal',
    'local_decomposition',
    'm_primes',
    'maximals',
    'negation',
    'parse_instance',
    'prime_ideals',
    'product',
    'quotient_by_ideal',
    'radical',
    'radical_by_powers',
    'radical_frame',
    'replay',
    'reticulate',
    'residuum',
    'run_suite',
    'spectrum_homeomorphism',
    'star',
    'unstar',
]
