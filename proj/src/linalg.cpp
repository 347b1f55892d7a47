#include "conifold/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace conifold {

bool is_zero(const MatrixQ& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) return false;
    return true;
}

bool is_identity(const MatrixQ& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

MatrixQ matrix_power(MatrixQ base, unsigned long exponent) {
    if (base.rows() != base.cols()) throw std::invalid_argument("matrix_power: non-square matrix");
    MatrixQ result = MatrixQ::Identity(base.rows(), base.rows());
    while (exponent > 0) {
        if (exponent & 1) result = (result * base).eval();
        base = (base * base).eval();
        exponent >>= 1;
    }
    return result;
}

Rational determinant(MatrixQ m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const Eigen::Index n = m.rows();
    Rational det(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index row = col; row < n; ++row)
            if (m(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            m.row(pivot).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        for (Eigen::Index row = col + 1; row < n; ++row) {
            if (m(row, col) == 0) continue;
            const Rational factor = m(row, col) / m(col, col);
            for (Eigen::Index j = col; j < n; ++j) m(row, j) -= factor * m(col, j);
        }
    }
    return det;
}

RrefResult rref(MatrixQ m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index lead = 0;
    for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index row = lead; row < rows; ++row)
            if (m(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead) m.row(pivot).swap(m.row(lead));
        const Rational inv = 1 / m(lead, col);
        for (Eigen::Index j = col; j < cols; ++j) m(lead, j) *= inv;
        for (Eigen::Index row = 0; row < rows; ++row) {
            if (row == lead || m(row, col) == 0) continue;
            const Rational factor = m(row, col);
            for (Eigen::Index j = col; j < cols; ++j) m(row, j) -= factor * m(lead, j);
        }
        ++lead;
    }
    return RrefResult{std::move(m), lead};
}

Eigen::Index rank(const MatrixQ& m) { return rref(m).rank; }

MatrixQ column_echelon(const MatrixQ& m) {
    const RrefResult r = rref(m.transpose());
    MatrixQ basis = r.reduced.topRows(r.rank).transpose();
    return basis;
}

MatrixQ kernel_basis(const MatrixQ& m) {
    const Eigen::Index cols = m.cols();
    const RrefResult r = rref(m);
    // pivot of row i = first nonzero column of row i
    std::vector<Eigen::Index> pivot_cols;
    pivot_cols.reserve(r.rank);
    for (Eigen::Index row = 0; row < r.rank; ++row)
        for (Eigen::Index col = 0; col < cols; ++col)
            if (r.reduced(row, col) != 0) {
                pivot_cols.push_back(col);
                break;
            }
    std::vector<bool> is_pivot(cols, false);
    for (Eigen::Index c : pivot_cols) is_pivot[c] = true;

    MatrixQ basis(cols, cols - r.rank);
    Eigen::Index out = 0;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        VectorQ v = VectorQ::Zero(cols);
        v(free_col) = 1;
        for (Eigen::Index row = 0; row < static_cast<Eigen::Index>(pivot_cols.size()); ++row)
            v(pivot_cols[row]) = -r.reduced(row, free_col);
        basis.col(out++) = v;
    }
    return column_echelon(basis);
}

std::optional<MatrixQ> inverse(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const Eigen::Index n = m.rows();
    MatrixQ aug(n, 2 * n);
    aug << m, MatrixQ::Identity(n, n);
    const RrefResult r = rref(aug);
    // m is invertible iff its block reduced all the way to the identity
    if (!is_identity(r.reduced.leftCols(n))) return std::nullopt;
    return MatrixQ(r.reduced.rightCols(n));
}

std::optional<MatrixQ> solve(const MatrixQ& a, const MatrixQ& rhs) {
    if (a.rows() != rhs.rows()) throw std::invalid_argument("solve: row mismatch");
    const Eigen::Index base_rank = rank(a);
    MatrixQ x(a.cols(), rhs.cols());
    for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
        MatrixQ aug(a.rows(), a.cols() + 1);
        aug << a, rhs.col(j);
        const RrefResult r = rref(aug);
        if (r.rank != base_rank) return std::nullopt;
        VectorQ sol = VectorQ::Zero(a.cols());
        for (Eigen::Index row = 0; row < r.rank; ++row) {
            Eigen::Index lead = -1;
            for (Eigen::Index col = 0; col < a.cols(); ++col)
                if (r.reduced(row, col) != 0) {
                    lead = col;
                    break;
                }
            if (lead >= 0) sol(lead) = r.reduced(row, a.cols());
        }
        x.col(j) = sol;
    }
    return x;
}

MatrixQ kronecker(const MatrixQ& a, const MatrixQ& b) {
    MatrixQ k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return k;
}

// --- Subspace ------------------------------------------------------------

Subspace::Subspace(Eigen::Index ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {
    if (ambient_dim < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
}

Subspace Subspace::span(const MatrixQ& vectors) {
    Subspace s(vectors.rows());
    s.basis_ = column_echelon(vectors);
    return s;
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
    return span(MatrixQ::Identity(ambient_dim, ambient_dim));
}

bool Subspace::contains(const VectorQ& v) const {
    if (v.rows() != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    return solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    if (other.dim() > dim()) return false;
    return solve(basis_, other.basis_).has_value();
}

Subspace kernel(const MatrixQ& m) { return Subspace::span(kernel_basis(m)); }

Subspace image(const MatrixQ& m) { return Subspace::span(m); }

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim())
        throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
    MatrixQ joined(s1.ambient_dim(), s1.dim() + s2.dim());
    joined << s1.basis(), s2.basis();
    return Subspace::span(joined);
}

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim())
        throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
    // (x; y) in ker [B1 B2]  <=>  B1 x = -B2 y lies in the intersection
    MatrixQ joined(s1.ambient_dim(), s1.dim() + s2.dim());
    joined << s1.basis(), s2.basis();
    const MatrixQ k = kernel_basis(joined);
    return Subspace::span(s1.basis() * k.topRows(s1.dim()));
}

Subspace preimage(const MatrixQ& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw std::invalid_argument("preimage: codomain mismatch");
    // m x = B y  <=>  (x; -y) in ker [m B]
    MatrixQ joined(m.rows(), m.cols() + s.dim());
    joined << m, s.basis();
    const MatrixQ k = kernel_basis(joined);
    return Subspace::span(k.topRows(m.cols()));
}

Subspace map_subspace(const MatrixQ& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw std::invalid_argument("map_subspace: domain mismatch");
    return Subspace::span(m * s.basis());
}

MatrixQ extend_basis(const Subspace& inside, const Subspace& target) {
    if (!target.contains(inside)) throw std::invalid_argument("extend_basis: not a subspace of target");
    MatrixQ current = inside.basis();
    Eigen::Index current_rank = current.cols();
    MatrixQ extra(inside.ambient_dim(), target.dim() - inside.dim());
    Eigen::Index added = 0;
    for (Eigen::Index j = 0; j < target.dim() && added < extra.cols(); ++j) {
        MatrixQ trial(inside.ambient_dim(), current.cols() + 1);
        trial << current, target.basis().col(j);
        if (rank(trial) > current_rank) {
            extra.col(added++) = target.basis().col(j);
            current = std::move(trial);
            ++current_rank;
        }
    }
    return extra;
}

// --- Filtration -----------------------------------------------------------

Filtration::Filtration(int center, std::map<int, Subspace> steps)
    : center_(center), ambient_(0), steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("Filtration: no steps");
    ambient_ = steps_.begin()->second.ambient_dim();
    const Subspace* prev = nullptr;
    for (const auto& [index, sub] : steps_) {
        if (sub.ambient_dim() != ambient_)
            throw std::invalid_argument("Filtration: inconsistent ambient dimension");
        if (prev && !sub.contains(*prev))
            throw std::invalid_argument("Filtration: steps not increasing at index " + std::to_string(index));
        prev = &sub;
    }
    if (!steps_.begin()->second.is_zero())
        throw std::invalid_argument("Filtration: bottom step must be the zero subspace");
    if (!steps_.rbegin()->second.is_full())
        throw std::invalid_argument("Filtration: top step must be the full space");
}

const Subspace& Filtration::step(int ell) const {
    auto it = steps_.upper_bound(ell);
    if (it == steps_.begin()) return steps_.begin()->second;  // below window: zero step
    return std::prev(it)->second;
}

std::map<int, Eigen::Index> Filtration::graded_dims() const {
    std::map<int, Eigen::Index> dims;
    for (int ell = lowest_index() + 1; ell <= highest_index(); ++ell) {
        const Eigen::Index d = step(ell).dim() - step(ell - 1).dim();
        if (d != 0) dims[ell] = d;
    }
    return dims;
}

bool operator==(const Filtration& a, const Filtration& b) {
    if (a.center_ != b.center_ || a.ambient_ != b.ambient_) return false;
    const int lo = std::min(a.lowest_index(), b.lowest_index());
    const int hi = std::max(a.highest_index(), b.highest_index());
    for (int ell = lo; ell <= hi; ++ell)
        if (a.step(ell) != b.step(ell)) return false;
    return true;
}

// --- nilpotent / unipotent calculus ----------------------------------------

bool is_nilpotent(const MatrixQ& n) {
    if (n.rows() != n.cols()) throw std::invalid_argument("is_nilpotent: non-square matrix");
    if (n.rows() == 0) return true;
    return is_zero(matrix_power(n, static_cast<unsigned long>(n.rows())));
}

Eigen::Index nilpotency_index(const MatrixQ& n) {
    if (!is_nilpotent(n)) throw std::domain_error("nilpotency_index: matrix is not nilpotent");
    if (n.rows() == 0) return 0;
    MatrixQ power = MatrixQ::Identity(n.rows(), n.rows());
    for (Eigen::Index m = 1; m <= n.rows(); ++m) {
        power = (power * n).eval();
        if (is_zero(power)) return m;
    }
    return n.rows();  // unreachable for nilpotent input
}

MatrixQ log_unipotent(const MatrixQ& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("log_unipotent: non-square matrix");
    const MatrixQ j = t - MatrixQ::Identity(t.rows(), t.rows());
    if (!is_nilpotent(j)) throw std::domain_error("log_unipotent: matrix is not unipotent");
    MatrixQ result = MatrixQ::Zero(t.rows(), t.rows());
    MatrixQ power = MatrixQ::Identity(t.rows(), t.rows());
    for (long k = 1; k <= t.rows(); ++k) {
        power = (power * j).eval();
        if (is_zero(power)) break;
        const Rational coeff = (k % 2 == 1) ? Rational(1, k) : Rational(-1, k);
        result += coeff * power;
    }
    return result;
}

MatrixQ exp_nilpotent(const MatrixQ& n) {
    if (n.rows() != n.cols()) throw std::invalid_argument("exp_nilpotent: non-square matrix");
    if (!is_nilpotent(n)) throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
    MatrixQ result = MatrixQ::Identity(n.rows(), n.rows());
    MatrixQ power = MatrixQ::Identity(n.rows(), n.rows());
    Rational factorial(1);
    for (long k = 1; k <= n.rows(); ++k) {
        power = (power * n).eval();
        if (is_zero(power)) break;
        factorial *= k;
        const Rational coeff = 1 / factorial;
        result += coeff * power;
    }
    return result;
}

// --- polynomials ------------------------------------------------------------

namespace poly {

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const Poly& p) {
    for (auto i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return static_cast<int>(i);
    return -1;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return trim(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    const Poly divisor = trim(b);
    if (divisor.empty()) throw std::invalid_argument("poly::divmod: division by zero polynomial");
    Poly rem = trim(a);
    const int db = degree(divisor);
    if (degree(rem) < db) return {Poly{}, rem};
    Poly quot(static_cast<std::size_t>(degree(rem) - db + 1), Rational(0));
    while (degree(rem) >= db) {
        const int dr = degree(rem);
        const Rational coeff = rem[static_cast<std::size_t>(dr)] / divisor[static_cast<std::size_t>(db)];
        quot[static_cast<std::size_t>(dr - db)] = coeff;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] -= coeff * divisor[static_cast<std::size_t>(i)];
        rem = trim(std::move(rem));
    }
    return {trim(std::move(quot)), rem};
}

}  // namespace poly

Poly characteristic_polynomial(const MatrixQ& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("characteristic_polynomial: non-square matrix");
    const Eigen::Index n = m.rows();
    Poly coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(n)] = 1;
    // Faddeev-LeVerrier: exact over Q, divisions are by integers
    MatrixQ mk = MatrixQ::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk = (m * (mk + coeffs[static_cast<std::size_t>(n - k + 1)] * MatrixQ::Identity(n, n))).eval();
        Rational trace(0);
        for (Eigen::Index i = 0; i < n; ++i) trace += mk(i, i);
        coeffs[static_cast<std::size_t>(n - k)] = -trace / k;
    }
    return coeffs;
}

namespace {

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

Poly cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly numerator(static_cast<std::size_t>(n) + 1, Rational(0));
    numerator[0] = -1;
    numerator[static_cast<std::size_t>(n)] = 1;
    for (unsigned long d : divisors(n)) {
        if (d == n) continue;
        auto [quot, rem] = poly::divmod(numerator, cyclotomic_polynomial(d));
        if (poly::degree(rem) >= 0)
            throw std::logic_error("cyclotomic_polynomial: inexact division");
        numerator = std::move(quot);
    }
    return numerator;
}

QuasiUnipotence is_quasi_unipotent(const MatrixQ& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("is_quasi_unipotent: non-square matrix");
    const Eigen::Index n = t.rows();
    if (n == 0) return QuasiUnipotence{true, 1};
    const Poly char_poly = characteristic_polynomial(t);
    if (char_poly[0] == 0) throw std::domain_error("is_quasi_unipotent: singular matrix");

    // phi(k) >= sqrt(k/2), so phi(k) <= n forces k <= 2 n^2
    const auto bound = static_cast<unsigned long>(2 * n * n + 1);
    Poly residual = char_poly;
    unsigned long order = 1;
    for (unsigned long k = 1; k <= bound && poly::degree(residual) > 0; ++k) {
        if (euler_phi(k) > static_cast<unsigned long>(n)) continue;
        const Poly phi_k = cyclotomic_polynomial(k);
        bool divided = false;
        while (poly::degree(residual) >= poly::degree(phi_k)) {
            auto [quot, rem] = poly::divmod(residual, phi_k);
            if (poly::degree(rem) >= 0) break;
            residual = std::move(quot);
            divided = true;
        }
        if (divided) order = std::lcm(order, k);
    }
    if (poly::degree(residual) > 0) return QuasiUnipotence{false, std::nullopt};
    return QuasiUnipotence{true, order};
}

}  // namespace conifold
