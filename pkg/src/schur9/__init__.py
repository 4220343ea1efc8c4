"""schur9: exact ninth-variation skew Schur and Q-functions from tableaux,
with outside-decomposition determinant and Pfaffian identities verified as
exact polynomial equalities.
"""

from .shapes import (
    ContainmentError,
    FrobeniusCoords,
    Partition,
    ShiftedSkewShape,
    SkewShape,
    StrictPartition,
    conjugate,
    frobenius,
    from_frobenius,
    reflect_antidiagonal,
    shifted_skew_shape,
    skew_shape,
)
from .weights import (
    ONE,
    SpecScheme,
    UnboundVariable,
    WeightPolynomial,
    ZERO,
    classical,
    content_factorial,
    content_factorial_q,
    generalised_q,
    poly_add,
    poly_eq,
    poly_json,
    poly_mul,
    poly_str,
    shift,
    specialize,
    substitution,
)
from .tableaux import (
    PrimedTableau,
    SignedLabel,
    Tableau,
    enumerate_primed,
    enumerate_ssyt,
    qfun9,
    regularize_frobenius,
    regularize_strict,
    schur9,
    strip_q,
    strip_schur,
)
from .strips import (
    CuttingStrip,
    OutsideDecomposition,
    ProfileMismatch,
    StripRef,
    StripSpec,
    UndefinedShift,
    bar,
    canonical_cutting_strip,
    decompose,
    double_strip,
    hash_op,
    realize_strip,
    shift_param,
)
from .identities import (
    PolyMatrix,
    ShapeError,
    VerifyReport,
    det_eval,
    ham_matrix,
    hg_matrix,
    pf_eval,
    verify_q,
    verify_schur,
)
from .corollaries import (
    BracketPairing,
    MergeSequence,
    bracket_pairs,
    dual_jacobi_trudi,
    epsilon,
    frobenius_pairs,
    giambelli,
    jacobi_trudi,
    jpn_row,
    lascoux_pragacz_outer,
    okada_inner,
    q_column,
    q_inner,
    q_outer,
    reflection_lemma_holds,
)
from .lgv import (
    FIRST,
    NINTH,
    TENTH,
    Lattice,
    PathTuple,
    ShapeMismatch,
    WeightMode,
    build_lattice,
    is_nonintersecting,
    lgv_swap,
    path_weight,
    paths_to_tableau,
    tableau_to_paths,
)

__version__ = "0.1.0"
