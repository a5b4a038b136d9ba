"""Finite models of equivariant classifying categories."""

from ._core import (
    FiniteGroup,
    __version__,
    conjugacy_class_count,
    corpus_group_names,
    fixed_decomposition,
    gl_model_report,
    h1_table,
    hilbert90,
    isomorphic,
    make_named,
    nerve_levels,
    orbit_compare,
    sigma_model_report,
    subgroup_count,
    verify_chaotic_contraction,
    verify_classifying_diagram,
    verify_fixed_decomposition,
    verify_h1_lambda_bijection,
    verify_module_correspondence,
)

__all__ = [
    "FiniteGroup",
    "__version__",
    "conjugacy_class_count",
    "corpus_group_names",
    "fixed_decomposition",
    "gl_model_report",
    "h1_table",
    "hilbert90",
    "isomorphic",
    "make_named",
    "nerve_levels",
    "orbit_compare",
    "sigma_model_report",
    "subgroup_count",
    "verify_chaotic_contraction",
    "verify_classifying_diagram",
    "verify_fixed_decomposition",
    "verify_h1_lambda_bijection",
    "verify_module_correspondence",
]
