"""Nonlinear deformed su(2) algebras, their finite unirreps and the
two-colour quasitriangular Hopf structure of A+_q(1)."""

from qdef.qarith import QContext, q_number, q_factorial, raise_map, lower_map
from qdef.algebra import AlgebraSpec, make_catalog_algebra, check_consistency
from qdef.reps import Unirrep, build_aq1_unirrep, build_suq2_unirrep
from qdef.hopf import RSeries, r_matrix, coproduct_matrix, antipode_matrix, counit
from qdef.coupling import WignerTable, qcg, couple

__all__ = [
    "QContext", "q_number", "q_factorial", "raise_map", "lower_map",
    "AlgebraSpec", "make_catalog_algebra", "check_consistency",
    "Unirrep", "build_aq1_unirrep", "build_suq2_unirrep",
    "RSeries", "r_matrix", "coproduct_matrix", "antipode_matrix", "counit",
    "WignerTable", "qcg", "couple",
]

__version__ = "0.1.0"
