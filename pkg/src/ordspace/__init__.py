"""Exact order computation in the bi-orderable groups G(n) = (P ⋊ A) ⋊ Z.

The library provides four layers:

  * exact        -- canonical dyadic/rational values and a guaranteed
                    sign engine for rational combinations of prime powers
                    with dyadic exponents;
  * group        -- normal-form element arithmetic and the defining
                    conjugation actions;
  * descriptor / oracle -- the finite invariant tuples naming every
                    bi-invariant order, and the decision procedure that
                    signs, compares, and classifies elements under them;
  * topology     -- sign certificates as basic open sets, isolation of
                    fully mixed orders, more-mixed limit witnesses, the
                    canonical positive strata, and the finite rank model
                    of the space of orders.
"""

from .errors import (
    ArityError,
    ArityMismatchError,
    ExprSyntaxError,
    IndexRangeError,
    InvalidDescriptorError,
    NotFullyMixedError,
    OrdspaceError,
    PrecisionExceededError,
    SingleBlockError,
    WitnessExhaustionError,
)
from .exact import (
    DEFAULT_PRECISION_CEILING,
    Dyadic,
    Rational,
    Sign,
    dyadic_floor_split,
    linear_comb_sign,
    prime_power,
    rational_sign,
)
from .group import (
    GroupElement,
    PElement,
    PIndex,
    conj_p_by_lambda,
    conj_p_by_zeta,
    conjugate,
    first_primes,
    gen_h,
    gen_lambda,
    gen_zeta,
    identity,
    invert,
    multiply,
    power,
)
from .parser import format_element, parse_element
from .descriptor import (
    MixShape,
    OrderDescriptor,
    descriptor_from_json_dict,
    descriptor_to_json_dict,
    dump_descriptor,
    enumerate_descriptors,
    enumerate_shapes,
    load_descriptor,
    more_mixed,
    reference_descriptor,
    set_partitions,
    shape_of,
    validate,
)
from .oracle import (
    ArchClass,
    ArchOrder,
    ClassKind,
    Comparison,
    IndexKey,
    abs_element,
    arch_class,
    arch_compare,
    compare,
    index_key,
    sign_of,
)
from .topology import (
    Certificate,
    RankReport,
    ShapeRanks,
    agrees,
    cb_model,
    certificate_from_json,
    certificate_to_json,
    in_ok,
    isolation_certificate,
    limit_witness,
)

__version__ = "0.1.0"
