"""Long-period shift/xor random number generators with a Weyl output stage.

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from ._xorgens import (
    ArgumentError,
    CharPolyReport,
    FactorTable,
    Generator,
    Gf2Poly,
    IntegrityError,
    Params,
    Primitivity,
    SearchOutcome,
    UnlistedError,
    VerificationError,
    all_rows,
    char_poly,
    cofactor,
    gamma_for,
    gf2_add,
    gf2_gcd,
    gf2_modexp,
    gf2_mul,
    gf2_mulmod,
    hamming_bound_scan,
    is_irreducible,
    is_primitive,
    is_probable_prime,
    linearity_probe,
    load_table,
    lookup,
    low_weight_probability,
    monobit,
    omega_for,
    search_optimal,
    supported_exponents,
    validate,
    verify_row,
)

__all__ = [
    "ArgumentError",
    "CharPolyReport",
    "FactorTable",
    "Generator",
    "Gf2Poly",
    "IntegrityError",
    "Params",
    "Primitivity",
    "SearchOutcome",
    "UnlistedError",
    "VerificationError",
    "all_rows",
    "char_poly",
    "cofactor",
    "gamma_for",
    "gf2_add",
    "gf2_gcd",
    "gf2_modexp",
    "gf2_mul",
    "gf2_mulmod",
    "hamming_bound_scan",
    "is_irreducible",
    "is_primitive",
    "is_probable_prime",
    "linearity_probe",
    "load_table",
    "lookup",
    "low_weight_probability",
    "monobit",
    "omega_for",
    "search_optimal",
    "supported_exponents",
    "validate",
    "verify_row",
]

__version__ = "1.0.0"
