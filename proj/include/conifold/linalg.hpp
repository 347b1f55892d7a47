#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <vector>

#include "conifold/rational.hpp"

namespace conifold {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VectorZ = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

bool is_zero(const MatrixQ& m);
bool is_identity(const MatrixQ& m);

MatrixQ matrix_power(MatrixQ base, unsigned long exponent);

/// Exact determinant by fraction-aware Gaussian elimination.
Rational determinant(MatrixQ m);

/// Exact inverse; std::nullopt when singular.
std::optional<MatrixQ> inverse(const MatrixQ& m);

MatrixQ kronecker(const MatrixQ& a, const MatrixQ& b);

struct RrefResult {
    MatrixQ reduced;
    Eigen::Index rank = 0;
};

/// Reduced row-echelon form. Idempotent on its own output.
RrefResult rref(MatrixQ m);

Eigen::Index rank(const MatrixQ& m);

/// Canonical reduced column-echelon basis of the column span; zero columns
/// dropped. Two column spans are equal iff these forms are bitwise equal.
MatrixQ column_echelon(const MatrixQ& m);

/// Canonical basis of ker(m), one column per free variable.
MatrixQ kernel_basis(const MatrixQ& m);

/// Solve a X = rhs column by column; std::nullopt when inconsistent.
std::optional<MatrixQ> solve(const MatrixQ& a, const MatrixQ& rhs);

// A linear subspace of Q^n held in canonical reduced column-echelon form,
// so equality and golden-file comparisons are bit-exact.
class Subspace {
  public:
    /// The zero subspace of Q^ambient.
    explicit Subspace(Eigen::Index ambient_dim);

    /// Column span of `vectors` (ambient dimension = row count).
    static Subspace span(const MatrixQ& vectors);
    static Subspace full(Eigen::Index ambient_dim);

    Eigen::Index ambient_dim() const { return ambient_; }
    Eigen::Index dim() const { return basis_.cols(); }
    const MatrixQ& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    bool contains(const VectorQ& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_.cols() == b.basis_.cols() && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    Eigen::Index ambient_;
    MatrixQ basis_;  // canonical, full column rank
};

Subspace kernel(const MatrixQ& m);
Subspace image(const MatrixQ& m);

Subspace subspace_sum(const Subspace& s1, const Subspace& s2);
Subspace subspace_intersect(const Subspace& s1, const Subspace& s2);

/// {x : m x in s}; m maps Q^cols -> Q^rows, s lives in the codomain.
Subspace preimage(const MatrixQ& m, const Subspace& s);

/// Apply m to a subspace of its domain.
Subspace map_subspace(const MatrixQ& m, const Subspace& s);

/// Columns extending a basis of `inside` to one of `target`
/// (inside must be contained in target).
MatrixQ extend_basis(const Subspace& inside, const Subspace& target);

// An increasing filtration of Q^n indexed by a finite window of integers,
// bottom step zero and top step full, together with a distinguished center.
class Filtration {
  public:
    Filtration(int center, std::map<int, Subspace> steps);

    int center() const { return center_; }
    Eigen::Index ambient_dim() const { return ambient_; }
    int lowest_index() const { return steps_.begin()->first; }
    int highest_index() const { return steps_.rbegin()->first; }

    /// Step at `ell`, clamped to zero below and the full space above the window.
    const Subspace& step(int ell) const;

    const std::map<int, Subspace>& steps() const { return steps_; }

    /// dim gr_ell = dim W_ell - dim W_{ell-1}; nonzero entries only.
    std::map<int, Eigen::Index> graded_dims() const;

    friend bool operator==(const Filtration& a, const Filtration& b);
    friend bool operator!=(const Filtration& a, const Filtration& b) { return !(a == b); }

  private:
    int center_;
    Eigen::Index ambient_;
    std::map<int, Subspace> steps_;
};

bool is_nilpotent(const MatrixQ& n);

/// Smallest m >= 1 with n^m = 0; 0 for the empty matrix. Throws on
/// non-nilpotent input.
Eigen::Index nilpotency_index(const MatrixQ& n);

/// log of a unipotent matrix via the terminating series in (t - id).
/// Inverse of exp_nilpotent, exactly.
MatrixQ log_unipotent(const MatrixQ& t);

/// Terminating exponential series of a nilpotent matrix.
MatrixQ exp_nilpotent(const MatrixQ& n);

struct QuasiUnipotence {
    bool quasi_unipotent = false;
    std::optional<unsigned long> order;  // least m with t^m unipotent
};

/// True iff the characteristic polynomial is a product of cyclotomic
/// polynomials over Q (checked by exact division, no eigenvalue numerics).
/// Throws std::domain_error on singular input.
QuasiUnipotence is_quasi_unipotent(const MatrixQ& t);

// Dense univariate polynomials over Q, ascending coefficients. Just enough
// for the cyclotomic factor test.
using Poly = std::vector<Rational>;

Poly characteristic_polynomial(const MatrixQ& m);  // monic, det(xI - m)
Poly cyclotomic_polynomial(unsigned long n);

namespace poly {
Poly trim(Poly p);
Poly mul(const Poly& a, const Poly& b);
/// Quotient and remainder; second divisor coefficient must be invertible (it is, over Q).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
int degree(const Poly& p);  // -1 for the zero polynomial
}  // namespace poly

}  // namespace conifold
