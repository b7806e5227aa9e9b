"""Byzantine-robust coded computation of Boolean functions and multivariate
polynomials: threshold-function representations, MDS/Lagrange coding with
error-correcting decoders, and a seeded master-worker simulator."""

from .boolfn import (
    AnfForm,
    BooleanFunction,
    DnfSupport,
    anf_from_truth_table,
    dnf_from_truth_table,
)
from .codes import (
    ConsensusAmbiguity,
    DecodeFailure,
    LccCode,
    MdsCode,
    lcc_decode,
    lcc_encode,
    mds_encode,
    real_consensus_decode,
    rs_decode,
)
from .exactfield import (
    BinaryField,
    Poly,
    PrimeField,
    lagrange_interpolate,
    lift_signed,
    modulus_for_bound,
    poly_eval_batch,
)
from .schemes import (
    AugmentedInput,
    LogarithmicInput,
    MultivariatePolynomial,
    SchemeInstance,
    Threshold,
    matrix_square_polynomials,
    outer_bound,
    security_threshold,
)
from .simulator import (
    AdversaryModel,
    ExperimentReport,
    TrialOutcome,
    run_trial,
    sbox_casestudy,
    sweep_threshold,
)
from .threshold import (
    DecisionList,
    LinearThresholdFunction,
    PolynomialThresholdFunction,
    build_decision_tree,
    build_ptf,
    ltf_for_clause,
    ltf_for_monomial,
    partition_dnf,
    tree_to_decision_list,
)

__version__ = "0.1.0"
