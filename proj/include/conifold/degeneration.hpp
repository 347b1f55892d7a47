#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conifold/monodromy.hpp"
#include "conifold/zigzag.hpp"

namespace conifold {

struct Stratum {
    std::string label;
    int dim = 0;                   // stratum dimension; only 0 is in scope
    Eigen::Index milnor_rank = 0;  // rank of the local vanishing contribution
};

// One-parameter degeneration data: fiber dimension, the singular strata of
// the central fiber, and optionally the vanishing-cycle lattice of the
// nearby fiber. milnor_rank is input data, not computed; a node carries
// exactly 1.
struct DegenerationSpec {
    int fiber_dim = 3;
    std::vector<Stratum> strata;
    std::optional<VanishingConfig> lattice_config;
    std::optional<std::vector<Eigen::Index>> smooth_betti;

    Eigen::Index node_count() const { return static_cast<Eigen::Index>(strata.size()); }
};

/// Thrown when the input involves positive-dimensional singular strata:
/// only zero-dimensional (point) strata are implemented.
struct UnsupportedStratumError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Total vanishing rank: sum of milnor_rank over the point strata
/// (= r when every stratum is a node). Throws UnsupportedStratumError if a
/// positive-dimensional stratum is present.
Eigen::Index vanishing_rank(const DegenerationSpec& spec);

struct ExactSequenceReport {
    ZigZag sub;    // minimal extension part
    ZigZag total;  // corrected object
    ZigZag quot;   // r-fold point-supported sum
    Eigen::Index pointwise_defect = 0;
    bool verdict = false;
    std::vector<std::string> failures;
};

/// Builds the corrected tuple together with the short exact sequence data
/// sub -> total -> quot and verifies, slot by slot, dimension additivity,
/// that inclusion and projection are valid morphisms, injectivity and
/// surjectivity, and ker(projection) = im(inclusion). Requires every
/// stratum to be a node (dim 0, milnor_rank 1).
ExactSequenceReport build_corrected(const DegenerationSpec& spec);

// Graded dimension/rank bookkeeping for the three-periodic long exact
// sequence  ... -> special^m -> psi^m -> phi^m -> special^{m+1} -> ... .
// Sequences share one index window starting at `lo`; everything outside is
// zero. The rank of phi^m -> special^{m+1} is determined by the others and
// is derived, not stored.
struct LESWitness {
    int lo = 0;
    std::vector<Eigen::Index> h_special;
    std::vector<Eigen::Index> h_psi;
    std::vector<Eigen::Index> h_phi;
    std::vector<Eigen::Index> rank_special_psi;
    std::vector<Eigen::Index> rank_psi_phi;
};

struct LESReport {
    bool exact = false;
    std::optional<std::string> first_failure;
    std::vector<Eigen::Index> rank_phi_special;  // derived third rank sequence
    long alternating_sum = 0;                    // sum (-1)^m (h_special - h_psi + h_phi)
};

/// Verifies dim C = rank(in) + rank(out) at every position and the global
/// alternating-sum identity. Throws std::invalid_argument on negative
/// entries or ranks exceeding adjacent dimensions.
LESReport check_les(const LESWitness& w);

/// T = total monodromy, N = log T, W = weight filtration centered at
/// `center` (default: fiber_dim); returns the graded dimensions after the
/// induced-map bijectivity check passes. Throws std::domain_error when the
/// total monodromy is not unipotent (power up by its quasi-unipotence order
/// first).
std::map<int, Eigen::Index> limiting_graded_dims(const DegenerationSpec& spec,
                                                 std::optional<int> center = std::nullopt);

struct StratifiedReport {
    std::vector<Eigen::Index> multiplicities;  // milnor_rank per point stratum
    ZigZag quotient;                           // direct sum of skyscrapers
};

/// Quotient description for zero-dimensional strata of arbitrary
/// milnor_rank >= 0. Positive-dimensional strata raise
/// UnsupportedStratumError.
StratifiedReport stratified_quotient(const DegenerationSpec& spec);

}  // namespace conifold
