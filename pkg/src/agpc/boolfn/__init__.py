"""Boolean and vectorial Boolean functions with their cryptographic criteria."""
from .bftt import BFTTError, read_bftt, write_bftt
from .criteria import CombinationReport, CriteriaReport, vectorial_criteria
from .mm import (AffineMap, MMStructure, VectorialFunction, evaluate, materialize,
                 mm_build, mm_exact_resiliency)
from .truthtable import (DEFAULT_MAT_BUDGET, DEFAULT_SUBFUNCTION_BUDGET,
                         MaterializationBudgetExceeded, TruthTable, anf, anf_text,
                         anf_to_table, autocorrelation, correlation_immunity_by_fixing,
                         derivative, derivative_weights, fwht, nonlinearity, parse_anf,
                         pc_check, pc_degree, pc_degree_at_order, pc_order_check,
                         pc_order_check_bruteforce, resiliency_order, walsh_spectrum)

__all__ = [
    "AffineMap", "BFTTError", "CombinationReport", "CriteriaReport", "DEFAULT_MAT_BUDGET",
    "DEFAULT_SUBFUNCTION_BUDGET", "MMStructure", "MaterializationBudgetExceeded",
    "TruthTable", "VectorialFunction", "anf", "anf_text", "anf_to_table", "autocorrelation",
    "correlation_immunity_by_fixing", "derivative", "derivative_weights", "evaluate", "fwht",
    "materialize", "mm_build", "mm_exact_resiliency", "nonlinearity", "parse_anf",
    "pc_check", "pc_degree", "pc_degree_at_order", "pc_order_check",
    "pc_order_check_bruteforce", "read_bftt", "resiliency_order", "vectorial_criteria",
    "walsh_spectrum", "write_bftt",
]
