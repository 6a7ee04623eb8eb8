"""Exact verification of restriction and induction functors between
module categories of weighted projective line coordinate algebras.

The package computes with L(p)-graded modules on finite height windows:
every object is finitely many exact matrices, every claim reduces to row
reduction, and every verdict carries a replayable witness.
"""

from .grading import (
    EmbeddingSpec,
    GradingElement,
    HeightWindow,
    InsufficientWindowError,
    WeightSequence,
    cvec,
    element_str,
    embed,
    enumerate_window,
    parse_element,
    preimage,
    torsion_classes,
    xgen,
    zero,
)
from .linalg import Matrix, QQ, PrimeField, field_from_name, field_name
from .algebra import AlgebraSpec, component_basis, component_dim, core_algebra
from .modules import (
    GradedMorphism,
    WindowedModule,
    composition_factors,
    direct_sum,
    free_module,
    hom_space,
    is_cohen_macaulay,
    is_isomorphic,
    kernel,
    cokernel,
    minimal_generators,
    module_from_doc,
    module_to_doc,
    modules_equal,
    monomial_quotient,
    ses_exact,
    shift_module,
    simple_module,
    syzygy,
    zero_module,
)
from .functors import (
    Composite,
    InduceLeft,
    InduceRight,
    Restrict,
    Twist,
    named_functor,
    second_embedding,
)
from .verify import (
    CheckReport,
    ConfigError,
    VerifyConfig,
    make_config,
    run_suite,
    run_sweep,
)

__version__ = "0.1.0"
