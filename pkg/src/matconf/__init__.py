"""Exact computations for matroid configurations: Stanley-Reisner ideals of
matroids, their symbolic powers and specializations, Hilbert functions,
Betti tables, Waldschmidt constants and resurgence searches."""

from .ideals import (
    BudgetExceeded,
    DimensionMismatch,
    MonomialIdeal,
    VariableContext,
    colon,
    contains,
    intersect,
    minimalize,
    power,
    product,
    weighted_alpha,
)
from .complexes import (
    MatroidComplex,
    SimplicialComplex,
    alexander_dual,
    deletion,
    facet_primes,
    is_matroid,
    link,
    stanley_reisner,
    uniform_matroid,
)
from .symbolic import (
    ContainmentCertificate,
    is_contained,
    resurgence_search,
    symbolic_power,
    waldschmidt,
)
from .hilbert import LambdaConfig, h_vector, hilbert_numerator, lambda_degree, lambda_hvector
from .resolution import BettiTable, betti_table, is_cohen_macaulay, projective_dimension
from .configurations import (
    HypergraphSpec,
    MonomialSubstitution,
    TetrahedralExponents,
    hypergraph_equals_lambda,
    hypergraph_ideal,
    lambda_config_ideal,
    specialize,
    tetrahedral_ideal,
    tetrahedral_is_acm,
    tetrahedral_oracle,
)

__version__ = "0.1.0"
