"""Construction pipeline: hypotheses, build, comparators, presets, certificates."""
from .certificate import (claim_from_certificate, conventions, conventions_hash, dump_certificate,
                          ks_certificate, meets_claim, theorem1_certificate, verify)
from .ks import KSBuild, carlet_check, kurosawa_satoh
from .presets import PRESET_NAMES, is_ks, params_from_json, presets
from .theorem1 import (Claim, ConstructionError, Theorem1Build, Theorem1Params, ValidationError,
                       ValidationReport, binary_image, build_theorem1, claimed_parameters,
                       coset_audit, select_v, validate_params)

__all__ = [
    "Claim", "ConstructionError", "KSBuild", "PRESET_NAMES", "Theorem1Build", "Theorem1Params",
    "ValidationError", "ValidationReport", "binary_image", "build_theorem1", "carlet_check",
    "claim_from_certificate", "claimed_parameters", "conventions", "conventions_hash",
    "coset_audit", "dump_certificate", "is_ks", "kurosawa_satoh", "ks_certificate",
    "meets_claim", "params_from_json", "presets", "select_v", "theorem1_certificate", "validate_params", "verify",
]
