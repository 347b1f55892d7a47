#pragma once

#include <optional>
#include <vector>

#include "conifold/linalg.hpp"

namespace conifold {

enum class Symmetry { symmetric, skew };

// Integral middle-homology lattice with intersection form
// <x, y> = x^T . gram . y. The pairing convention (row vector on the left)
// is fixed here and documented; results are invariant under the transposed
// convention up to relabeling.
class Lattice {
  public:
    Lattice(MatrixZ gram, Symmetry symmetry);

    Eigen::Index rank() const { return gram_.rows(); }
    const MatrixZ& gram() const { return gram_; }
    Symmetry symmetry() const { return symmetry_; }

    Integer pairing(const VectorZ& x, const VectorZ& y) const;

    /// Intersection form over Q, for monodromy matrices acting on H tensor Q.
    MatrixQ gram_q() const;

  private:
    MatrixZ gram_;
    Symmetry symmetry_;
};

// A lattice together with an ordered list of vanishing cycles delta_1..delta_r.
struct VanishingConfig {
    Lattice lattice;
    std::vector<VectorZ> cycles;

    static VanishingConfig make(Lattice lattice, std::vector<VectorZ> cycles);
    Eigen::Index node_count() const { return static_cast<Eigen::Index>(cycles.size()); }
};

/// Transvection T(x) = x + <x, delta_k> delta_k as a matrix on column
/// vectors; always rank(T - id) <= 1, and for skew lattices (T - id)^2 = 0.
/// `index` is 1-based following the cycle numbering.
MatrixQ pl_transvection(const VanishingConfig& cfg, Eigen::Index index);

/// T_r . ... . T_1, i.e. the cycle-list order transvection applied first.
MatrixQ total_monodromy(const VanishingConfig& cfg);

// The monodromy weight filtration of a nilpotent operator, centered at k:
// the unique increasing filtration with N W_l <= W_{l-2} and
// N^j : gr_{k+j} -> gr_{k-j} bijective for all j >= 0.
class WeightFiltration {
  public:
    WeightFiltration(Filtration filtration, MatrixQ op);

    const Filtration& filtration() const { return filtration_; }
    const MatrixQ& op() const { return op_; }
    int center() const { return filtration_.center(); }
    std::map<int, Eigen::Index> graded_dims() const { return filtration_.graded_dims(); }

  private:
    Filtration filtration_;
    MatrixQ op_;
};

/// Kernel/image recursion on the outer subquotient (not Jordan-based);
/// the result is re-verified against both characterizing conditions.
WeightFiltration weight_filtration(const MatrixQ& n, int center);

/// Independent oracle: a Jordan chain of length s contributes one basis
/// vector at each of the weights k+s-1, k+s-3, ..., k-s+1. Must agree with
/// weight_filtration subspace by subspace.
WeightFiltration jordan_weight_oracle(const MatrixQ& n, int center);

/// Jordan chains of a nilpotent matrix, each listed top down
/// (chain[0] generates; chain.back() lies in ker n).
std::vector<std::vector<VectorQ>> jordan_chains(const MatrixQ& n);

struct HardLefschetzEntry {
    int j = 0;
    Eigen::Index dim_up = 0;    // dim gr_{k+j}
    Eigen::Index dim_down = 0;  // dim gr_{k-j}
    bool bijective = false;
};

struct HardLefschetzReport {
    std::vector<HardLefschetzEntry> entries;  // j = 1, 2, ...
    bool all_pass = true;
    std::optional<int> first_failing_j;
};

/// For each j >= 1, the map induced by N^j on gr_{k+j} -> gr_{k-j}:
/// well-definedness, injectivity and surjectivity by exact subspace
/// computations.
HardLefschetzReport check_hard_lefschetz(const WeightFiltration& w);

struct WeightConditionReport {
    bool shift_ok = false;  // N W_l <= W_{l-2} for all l
    HardLefschetzReport lefschetz;
    bool ok() const { return shift_ok && lefschetz.all_pass; }
};

/// Both characterizing conditions for an arbitrary candidate filtration,
/// independent of how it was constructed.
WeightConditionReport check_weight_conditions(const MatrixQ& n, const Filtration& w);

// Divisor-type gluing datum (M', M'', u, v) subject to v.u = n on M'.
struct GluingDatum {
    MatrixQ u;  // M'  -> M''
    MatrixQ v;  // M'' -> M'
    MatrixQ n;  // M'  -> M'

    Eigen::Index mprime_dim() const { return u.cols(); }
    Eigen::Index mdprime_dim() const { return u.rows(); }
};

/// True iff v.u = n exactly. Throws std::invalid_argument on shape mismatch.
bool validate_gluing(const GluingDatum& g);

}  // namespace conifold
