#pragma once

#include <random>

#include "conifold/degeneration.hpp"
#include "conifold/zigzag.hpp"

// Deterministic generators for randomized properties: everything is driven
// by a caller-supplied mt19937_64, so suite verdicts are reproducible for a
// fixed seed.

namespace conifold {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long bound = 6);

/// Integer-entry matrix with entries in [-bound, bound].
MatrixQ random_integer_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long bound = 4);

/// Determinant +-1: a product of unit triangular matrices.
MatrixQ random_unimodular(Rng& rng, Eigen::Index n, long bound = 3);

/// Random Jordan type of total size n, conjugated by a unimodular matrix.
MatrixQ random_nilpotent(Rng& rng, Eigen::Index n);

/// Unit upper triangular with random entries above the diagonal.
MatrixQ random_unipotent_upper(Rng& rng, Eigen::Index n, long bound = 4);

/// Base change at all four levels; preserves the isomorphism class.
ZigZag transform_zigzag(const ZigZag& z, const MatrixQ& p_hm, const MatrixQ& p_a,
                        const MatrixQ& p_b, const MatrixQ& p_h0);

/// Random valid tuple: a direct sum of the interval building blocks
/// (boundary simples and the three identity intervals) in random
/// multiplicities, conjugated at every level. Exact by construction.
ZigZag random_valid_zigzag(Rng& rng, Eigen::Index max_multiplicity = 2);

/// Witness of a genuinely exact three-periodic complex: random ranks give
/// the dimensions, the maps are materialized through random base changes,
/// and the recorded ranks are computed from those matrices.
LESWitness random_exact_les_witness(Rng& rng, int lo = 0, int periods = 3,
                                    Eigen::Index max_rank = 3);

}  // namespace conifold
