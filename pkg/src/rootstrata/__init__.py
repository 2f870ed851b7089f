"""Exact equivariant classes of coincident root strata of binary forms.

The central objects are the strata Y_lam of degree-d binary forms whose
root multiplicities follow a partition lam, their classes in the Schur
basis with polynomial dependence on d, and the enumerative counts
(generalized Plucker numbers, flexes, hyperflexes, lines on
hypersurfaces) those classes specialize to.  All arithmetic is exact.
"""

from .combinat import catalan, kostka, riordan, stirling_first
from .crs import (CRSClass, crs_class, crs_class_at, crs_m_closed, euler_pol,
                  euler_identity_check, leading_term, weighted_product)
from .dpoly import D, DFrac, DPoly, interpolate
from .errors import (DegreeMismatch, DegreeTooSmall, InconsistentSamples,
                     InvalidPartition, NotSymmetric, OutOfRange, PoleAtD,
                     PolynomialityViolation, RootStrataError, ZeroDenominator)
from .flagcalc import (FlagClass, GrassClass, ProjClass,
                       flex_point_locus_class, incidence_class, p_push,
                       q_push, tangency_class_resolution)
from .multipoly import MultiPoly, substitute_homogeneous
from .partitions import Partition, stratum_partitions, validate_stratum
from .plucker import (AsymptoticTable, PluckerTable, asymptotic_plucker,
                      degree_table, euler_schur_relation, hyperflex_count,
                      lines_on_hypersurface, mflex_coefficient,
                      mflex_polynomial, plucker_point, plucker_table,
                      zagier_lines)
from .schur import (SchurExpansion, chern_to_schur, complete_h_expand,
                    divided_difference, schur_expand, schur_to_chern,
                    schur_to_roots)
from .universal import (UniversalClass, hilbert_degree, pencil_locus_class,
                        universal_class, universal_incidence_class)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticTable", "CRSClass", "D", "DFrac", "DPoly", "DegreeMismatch",
    "DegreeTooSmall", "FlagClass", "GrassClass", "InconsistentSamples",
    "InvalidPartition", "MultiPoly", "NotSymmetric", "OutOfRange",
    "Partition", "PluckerTable", "PoleAtD", "PolynomialityViolation",
    "ProjClass", "RootStrataError", "SchurExpansion", "UniversalClass",
    "ZeroDenominator", "asymptotic_plucker", "catalan", "chern_to_schur",
    "complete_h_expand", "crs_class", "crs_class_at", "crs_m_closed",
    "degree_table", "divided_difference", "euler_identity_check",
    "euler_pol", "euler_schur_relation", "flex_point_locus_class",
    "hilbert_degree", "hyperflex_count", "incidence_class", "interpolate",
    "kostka", "leading_term", "lines_on_hypersurface", "mflex_coefficient",
    "mflex_polynomial", "p_push", "pencil_locus_class", "plucker_point",
    "plucker_table", "q_push", "riordan", "schur_expand", "schur_to_chern",
    "schur_to_roots", "stirling_first", "stratum_partitions",
    "substitute_homogeneous", "tangency_class_resolution",
    "universal_class", "universal_incidence_class", "validate_stratum",
    "weighted_product", "zagier_lines",
]
