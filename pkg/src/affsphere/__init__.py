"""Improper affine spheres from polynomial curve data.

Synthesis via para-holomorphic / holomorphic representation formulas,
singularity detection and classification, and residual verification of the
underlying identities.
"""

from .conversions import (
    blaschke_to_curve,
    cls_to_curve,
    cortes_to_holo,
    curve_to_blaschke,
)
from .io import CurveParseError, load_curve, save_curve, write_grid
from .paracomplex import (
    ComplexPoly,
    ComplexScalar,
    DAlembertPair,
    ParaComplex,
    ParaPoly,
    Poly1,
    dalembert_to_para,
    para_cr_residual,
    para_to_dalembert,
)
from .residuals import (
    PatchNotGraph,
    ResidualReport,
    ccr_residual,
    duality_residual,
    lift_residual,
    metric_conformality,
    monge_ampere_residual,
    regular_graph_patch,
    two_form_residual,
)
from .singularities import (
    BranchPointError,
    Evidence,
    NotSingular,
    SingularClass,
    SingularCurve,
    Tolerances,
    TraceRequired,
    area_density,
    ccr_psi,
    ccr_psi_control,
    classification_report,
    classify_point,
    grad_density,
    lift_rank,
    locate_swallowtails,
    null_vector,
    tolerances_for,
    trace_singular_curves,
)
from .surfaces import (
    ClosednessViolation,
    Domain,
    HoloCurve,
    InvalidDomain,
    Jet2,
    ParaCurve,
    Surface,
    SurfaceGrid,
    SurfaceSample,
    compile_surface,
    graph_potential,
    jet,
    sample_grid,
    synth_indefinite,
    synth_lsc,
)

__all__ = [
    "BranchPointError",
    "ClosednessViolation",
    "ComplexPoly",
    "ComplexScalar",
    "CurveParseError",
    "DAlembertPair",
    "Domain",
    "Evidence",
    "HoloCurve",
    "InvalidDomain",
    "Jet2",
    "NotSingular",
    "ParaComplex",
    "ParaCurve",
    "ParaPoly",
    "PatchNotGraph",
    "Poly1",
    "ResidualReport",
    "SingularClass",
    "SingularCurve",
    "Surface",
    "SurfaceGrid",
    "SurfaceSample",
    "Tolerances",
    "TraceRequired",
    "area_density",
    "blaschke_to_curve",
    "ccr_psi",
    "ccr_psi_control",
    "ccr_residual",
    "classification_report",
    "classify_point",
    "cls_to_curve",
    "compile_surface",
    "cortes_to_holo",
    "curve_to_blaschke",
    "dalembert_to_para",
    "duality_residual",
    "grad_density",
    "graph_potential",
    "jet",
    "lift_rank",
    "lift_residual",
    "load_curve",
    "locate_swallowtails",
    "metric_conformality",
    "monge_ampere_residual",
    "null_vector",
    "para_cr_residual",
    "para_to_dalembert",
    "regular_graph_patch",
    "sample_grid",
    "save_curve",
    "synth_indefinite",
    "synth_lsc",
    "tolerances_for",
    "trace_singular_curves",
    "two_form_residual",
    "write_grid",
]
