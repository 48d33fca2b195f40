"""Exact arithmetic for h-fold sumset sizes, coefficient-lattice L1
minima, explicit extremal constructions, and type-preserving transport
between additive and multiplicative tables."""

from .core import (
    CapExceeded,
    IntegerSet,
    RationalSet,
    binomial,
    composition_count,
    enumerate_compositions,
    normalize,
)
from .sumset import SumsetProfile, h_fold_sumset, sumset_profile
from .lattice import (
    LatticeBasis,
    MinimaReport,
    coefficient_lattice_basis,
    find_minima,
    successive_minima,
)
from .theory import (
    MinimaTruncatedError,
    VerificationReport,
    construct_cute_set,
    construct_lemma_set,
    extreme_and_realizable,
    popular_sizes,
    predicted_size,
    verify_main_theorem,
)
from .types import (
    EmbeddingTrace,
    PrecisionExhaustedError,
    TypePartition,
    embed_real_to_integers,
    h_type,
    product_to_sum,
    product_type,
    separation,
    sum_to_product,
)
from .experiments import (
    ExperimentConfig,
    Histogram,
    exhaustive_scan,
    minima_statistics,
    random_subset_experiment,
    type_census,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "IntegerSet",
    "RationalSet",
    "binomial",
    "composition_count",
    "enumerate_compositions",
    "normalize",
    "SumsetProfile",
    "h_fold_sumset",
    "sumset_profile",
    "LatticeBasis",
    "MinimaReport",
    "coefficient_lattice_basis",
    "find_minima",
    "successive_minima",
    "MinimaTruncatedError",
    "VerificationReport",
    "construct_cute_set",
    "construct_lemma_set",
    "extreme_and_realizable",
    "popular_sizes",
    "predicted_size",
    "verify_main_theorem",
    "EmbeddingTrace",
    "PrecisionExhaustedError",
    "TypePartition",
    "embed_real_to_integers",
    "h_type",
    "product_to_sum",
    "product_type",
    "separation",
    "sum_to_product",
    "ExperimentConfig",
    "Histogram",
    "exhaustive_scan",
    "minima_statistics",
    "random_subset_experiment",
    "type_census",
]
