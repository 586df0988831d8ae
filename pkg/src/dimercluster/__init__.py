"""Dimer-configuration model for cluster variables of acyclic type-D quivers.

The package computes F-polynomials, g-vectors, and Laurent expansions of
non-initial cluster variables three independent ways and cross-checks them:

* a constructive model (weighted base graph + flip lattice of mixed
  configurations), in :mod:`dimercluster.base_graph`,
  :mod:`dimercluster.mixed_dimer`, :mod:`dimercluster.flip_poset`, and
  :mod:`dimercluster.cluster_invariants`;
* closed-form acceptability conditions on exponent vectors, in
  :mod:`dimercluster.tran_oracle`;
* direct seed mutation with principal coefficients, in
  :mod:`dimercluster.mutation_oracle`.
"""

from dimercluster.laurent_poly import LaurentPolynomial, divide_exact, u_context, xy_context
from dimercluster.quiver_core import (
    Quiver,
    all_orientations,
    dynkin_edges,
    parse_quiver,
    positive_roots,
)

__all__ = [
    "LaurentPolynomial",
    "Quiver",
    "all_orientations",
    "divide_exact",
    "dynkin_edges",
    "parse_quiver",
    "positive_roots",
    "u_context",
    "xy_context",
]

__version__ = "0.1.0"
