"""Level sequences of Euler quotients: constructions and complexity analysis."""

from .complexity import (
    ComplexityReport,
    ErrorPattern,
    PatternBudgetExceeded,
    berlekamp_massey,
    check_poly_p_lemma,
    check_root_group_lemmas,
    constructive_error_pattern,
    kerror_lc_bruteforce,
    kerror_profile,
    lc_via_gcd,
    theorem_kerror_lc,
    two_is_primitive_root_mod_p2,
)
from .fieldarith import (
    PrimeField,
    Polynomial,
    mod_pow,
    multiplicative_order,
    poly_divrem,
    poly_gcd,
)
from .quotients import (
    PrimePowerModulus,
    QuotientDigits,
    euler_quotient,
    fermat_quotient_order,
    level_digits,
    new_quotient_h,
    verify_congruence_qrs,
)
from .sequences import (
    ClassPartition,
    PeriodicSequence,
    SequenceParseError,
    balanced_class_sequence,
    binary_class_sequence,
    class_partition,
    level_sequence,
    mary_sequence,
    order_i_binary_sequence,
    read_sequence,
    threshold_sequence,
    write_sequence,
)

__all__ = [
    "ComplexityReport",
    "ErrorPattern",
    "PatternBudgetExceeded",
    "berlekamp_massey",
    "check_poly_p_lemma",
    "check_root_group_lemmas",
    "constructive_error_pattern",
    "kerror_lc_bruteforce",
    "kerror_profile",
    "lc_via_gcd",
    "theorem_kerror_lc",
    "two_is_primitive_root_mod_p2",
    "PrimeField",
    "Polynomial",
    "mod_pow",
    "multiplicative_order",
    "poly_divrem",
    "poly_gcd",
    "PrimePowerModulus",
    "QuotientDigits",
    "euler_quotient",
    "fermat_quotient_order",
    "level_digits",
    "new_quotient_h",
    "verify_congruence_qrs",
    "ClassPartition",
    "PeriodicSequence",
    "SequenceParseError",
    "balanced_class_sequence",
    "binary_class_sequence",
    "class_partition",
    "level_sequence",
    "mary_sequence",
    "order_i_binary_sequence",
    "read_sequence",
    "threshold_sequence",
    "write_sequence",
]
