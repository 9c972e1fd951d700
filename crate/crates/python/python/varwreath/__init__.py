from ._varwreath import (
    AbelianGroup,
    BudgetExceededError,
    Decision,
    Fingerprint,
    ParseError,
    PassiveGroup,
    ShieldCheck,
    ShieldParams,
    VarwreathError,
    Witness,
    baumslag_obstruction,
    decide,
    fingerprint,
    kp_series,
    separation_witness,
    shield_class,
    shield_params,
    verify_shield,
    wreath_exponent,
)

__all__ = [
    "AbelianGroup",
    "BudgetExceededError",
    "Decision",
    "Fingerprint",
    "ParseError",
    "PassiveGroup",
    "ShieldCheck",
    "ShieldParams",
    "VarwreathError",
    "Witness",
    "baumslag_obstruction",
    "decide",
    "fingerprint",
    "kp_series",
    "separation_witness",
    "shield_class",
    "shield_params",
    "verify_shield",
    "wreath_exponent",
]
