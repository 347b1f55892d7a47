#include "conifold/monodromy.hpp"

namespace conifold {

Lattice::Lattice(MatrixZ gram, Symmetry symmetry) : gram_(std::move(gram)), symmetry_(symmetry) {
    if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Lattice: gram matrix not square");
    for (Eigen::Index i = 0; i < gram_.rows(); ++i)
        for (Eigen::Index j = 0; j < gram_.cols(); ++j) {
            const Integer mirror = symmetry_ == Symmetry::symmetric ? gram_(j, i) : -gram_(j, i);
            if (gram_(i, j) != mirror)
                throw std::invalid_argument("Lattice: gram matrix does not match declared symmetry");
        }
}

Integer Lattice::pairing(const VectorZ& x, const VectorZ& y) const {
    if (x.rows() != rank() || y.rows() != rank())
        throw std::invalid_argument("Lattice::pairing: vector length mismatch");
    return (x.transpose() * gram_ * y)(0, 0);
}

MatrixQ Lattice::gram_q() const { return gram_.cast<Rational>(); }

VanishingConfig VanishingConfig::make(Lattice lattice, std::vector<VectorZ> cycles) {
    for (const auto& c : cycles)
        if (c.rows() != lattice.rank())
            throw std::invalid_argument("VanishingConfig: cycle length does not match lattice rank");
    return VanishingConfig{std::move(lattice), std::move(cycles)};
}

MatrixQ pl_transvection(const VanishingConfig& cfg, Eigen::Index index) {
    if (index < 1 || index > cfg.node_count())
        throw std::invalid_argument("pl_transvection: cycle index out of range");
    const Eigen::Index n = cfg.lattice.rank();
    const VectorQ delta = cfg.cycles[static_cast<std::size_t>(index - 1)].cast<Rational>();
    // T(x) = x + (x^T G delta) delta = (I + delta (G delta)^T) x
    const VectorQ g_delta = cfg.lattice.gram_q() * delta;
    return MatrixQ::Identity(n, n) + delta * g_delta.transpose();
}

MatrixQ total_monodromy(const VanishingConfig& cfg) {
    if (cfg.cycles.empty()) throw std::invalid_argument("total_monodromy: empty cycle list");
    MatrixQ t = MatrixQ::Identity(cfg.lattice.rank(), cfg.lattice.rank());
    for (Eigen::Index k = 1; k <= cfg.node_count(); ++k) t = (pl_transvection(cfg, k) * t).eval();
    return t;
}

// --- weight filtration ------------------------------------------------------

namespace {

// Recursion centered at 0. With nilpotency index m:
//   W_{m-1} = V, W_{m-2} = ker N^{m-1}, W_{-(m-1)} = im N^{m-1}, W_{-m} = 0,
// and the middle indices come from the filtration of the induced operator
// on ker N^{m-1} / im N^{m-1}.
std::map<int, Subspace> weight_steps_centered(const MatrixQ& n) {
    const Eigen::Index dim = n.rows();
    std::map<int, Subspace> steps;
    if (dim == 0) {
        steps.emplace(0, Subspace(0));
        return steps;
    }
    const Eigen::Index m = nilpotency_index(n);
    if (m <= 1) {  // n = 0: single jump at the center
        steps.emplace(-1, Subspace(dim));
        steps.emplace(0, Subspace::full(dim));
        return steps;
    }

    const MatrixQ n_top = matrix_power(n, static_cast<unsigned long>(m - 1));
    const Subspace k_top = kernel(n_top);
    const Subspace i_top = image(n_top);

    // induced operator on K/I in the coordinates of a lift basis
    const MatrixQ lift = extend_basis(i_top, k_top);
    const Eigen::Index quot_dim = lift.cols();
    MatrixQ combined(dim, i_top.dim() + quot_dim);
    combined << i_top.basis(), lift;
    MatrixQ induced(quot_dim, quot_dim);
    if (quot_dim > 0) {
        const auto coords = solve(combined, n * lift);
        if (!coords) throw std::logic_error("weight_filtration: induced operator does not preserve K");
        induced = coords->bottomRows(quot_dim);
    }

    const std::map<int, Subspace> inner = weight_steps_centered(induced);
    const auto inner_step = [&](int ell) -> const Subspace& {
        auto it = inner.upper_bound(ell);
        if (it == inner.begin()) return inner.begin()->second;
        return std::prev(it)->second;
    };

    const int top = static_cast<int>(m) - 1;
    steps.emplace(-top - 1, Subspace(dim));
    steps.emplace(-top, i_top);
    for (int ell = -top + 1; ell <= top - 1; ++ell) {
        const Subspace& w_inner = inner_step(ell);
        MatrixQ span(dim, i_top.dim() + w_inner.dim());
        span << i_top.basis(), lift * w_inner.basis();
        steps.emplace(ell, Subspace::span(span));
    }
    steps.emplace(top, Subspace::full(dim));
    return steps;
}

std::map<int, Subspace> shift_steps(std::map<int, Subspace> steps, int center) {
    std::map<int, Subspace> shifted;
    for (auto& [ell, sub] : steps) shifted.emplace(ell + center, std::move(sub));
    return shifted;
}

}  // namespace

WeightFiltration::WeightFiltration(Filtration filtration, MatrixQ op)
    : filtration_(std::move(filtration)), op_(std::move(op)) {
    if (op_.rows() != op_.cols() || op_.rows() != filtration_.ambient_dim())
        throw std::invalid_argument("WeightFiltration: operator does not act on the ambient space");
}

WeightFiltration weight_filtration(const MatrixQ& n, int center) {
    if (n.rows() != n.cols()) throw std::invalid_argument("weight_filtration: non-square matrix");
    if (!is_nilpotent(n)) throw std::domain_error("weight_filtration: operator is not nilpotent");
    Filtration f(center, shift_steps(weight_steps_centered(n), center));
    const WeightConditionReport check = check_weight_conditions(n, f);
    if (!check.ok())
        throw std::logic_error("weight_filtration: constructed filtration fails a characterizing condition");
    return WeightFiltration(std::move(f), n);
}

std::vector<std::vector<VectorQ>> jordan_chains(const MatrixQ& n) {
    if (!is_nilpotent(n)) throw std::domain_error("jordan_chains: operator is not nilpotent");
    const Eigen::Index dim = n.rows();
    std::vector<std::vector<VectorQ>> chains;
    if (dim == 0) return chains;
    const Eigen::Index m = nilpotency_index(n);

    std::vector<Subspace> ker_powers;  // ker n^i for i = 0..m
    ker_powers.emplace_back(dim);
    for (Eigen::Index i = 1; i <= m; ++i)
        ker_powers.push_back(kernel(matrix_power(n, static_cast<unsigned long>(i))));

    for (Eigen::Index height = m; height >= 1; --height) {
        // span of ker n^{height-1} plus the descents of taller chains
        MatrixQ occupied(dim, 0);
        {
            std::vector<VectorQ> cols;
            for (const auto& chain : chains) {
                const auto s = static_cast<Eigen::Index>(chain.size());
                if (s > height) cols.push_back(chain[static_cast<std::size_t>(s - height)]);
            }
            occupied.resize(dim, ker_powers[static_cast<std::size_t>(height - 1)].dim() +
                                     static_cast<Eigen::Index>(cols.size()));
            occupied.leftCols(ker_powers[static_cast<std::size_t>(height - 1)].dim()) =
                ker_powers[static_cast<std::size_t>(height - 1)].basis();
            for (std::size_t i = 0; i < cols.size(); ++i)
                occupied.col(ker_powers[static_cast<std::size_t>(height - 1)].dim() +
                             static_cast<Eigen::Index>(i)) = cols[i];
        }
        Subspace blocked = Subspace::span(occupied);
        const Subspace& level = ker_powers[static_cast<std::size_t>(height)];
        for (Eigen::Index j = 0; j < level.dim(); ++j) {
            const VectorQ candidate = level.basis().col(j);
            if (blocked.contains(candidate)) continue;
            std::vector<VectorQ> chain;
            chain.push_back(candidate);
            for (Eigen::Index step = 1; step < height; ++step)
                chain.push_back(n * chain.back());
            chains.push_back(std::move(chain));
            MatrixQ widened(dim, blocked.dim() + 1);
            widened << blocked.basis(), candidate;
            blocked = Subspace::span(widened);
        }
    }
    return chains;
}

WeightFiltration jordan_weight_oracle(const MatrixQ& n, int center) {
    if (n.rows() != n.cols()) throw std::invalid_argument("jordan_weight_oracle: non-square matrix");
    if (!is_nilpotent(n)) throw std::domain_error("jordan_weight_oracle: operator is not nilpotent");
    const Eigen::Index dim = n.rows();
    std::map<int, Subspace> steps;
    if (dim == 0) {
        steps.emplace(center, Subspace(0));
        return WeightFiltration(Filtration(center, std::move(steps)), n);
    }
    const auto chains = jordan_chains(n);
    const Eigen::Index m = nilpotency_index(n);
    const int top = center + static_cast<int>(m) - 1;
    const int bottom = center - static_cast<int>(m);

    // weight of chain element j-from-top in a chain of length s: s - 1 - 2j
    std::map<int, std::vector<VectorQ>> by_weight;
    for (const auto& chain : chains) {
        const auto s = static_cast<int>(chain.size());
        for (int j = 0; j < s; ++j)
            by_weight[center + s - 1 - 2 * j].push_back(chain[static_cast<std::size_t>(j)]);
    }

    MatrixQ accumulated(dim, 0);
    steps.emplace(bottom, Subspace(dim));
    for (int ell = bottom + 1; ell <= top; ++ell) {
        if (auto it = by_weight.find(ell); it != by_weight.end()) {
            MatrixQ widened(dim, accumulated.cols() + static_cast<Eigen::Index>(it->second.size()));
            widened.leftCols(accumulated.cols()) = accumulated;
            for (std::size_t i = 0; i < it->second.size(); ++i)
                widened.col(accumulated.cols() + static_cast<Eigen::Index>(i)) = it->second[i];
            accumulated = std::move(widened);
        }
        steps.emplace(ell, Subspace::span(accumulated));
    }
    return WeightFiltration(Filtration(center, std::move(steps)), n);
}

namespace {

// The induced map gr_{k+j} -> gr_{k-j} of n^j is bijective iff
//   n^j W_{k+j} + W_{k-j-1} = W_{k-j}            (surjective) and
//   { x in W_{k+j} : n^j x in W_{k-j-1} } = W_{k+j-1}   (injective).
bool induced_bijective(const MatrixQ& n_power, const Filtration& w, int up, int down) {
    const Subspace mapped = map_subspace(n_power, w.step(up));
    if (!w.step(down).contains(mapped)) return false;  // not even well-defined into W_{k-j}
    const bool surjective = subspace_sum(mapped, w.step(down - 1)) == w.step(down);
    const Subspace pulled = subspace_intersect(preimage(n_power, w.step(down - 1)), w.step(up));
    const bool injective = pulled == w.step(up - 1);
    return surjective && injective;
}

}  // namespace

HardLefschetzReport check_hard_lefschetz(const WeightFiltration& w) {
    HardLefschetzReport report;
    const Filtration& f = w.filtration();
    const int k = f.center();
    const int reach = std::max(f.highest_index() - k, k - f.lowest_index());
    MatrixQ n_power = w.op();
    for (int j = 1; j <= reach; ++j) {
        HardLefschetzEntry entry;
        entry.j = j;
        entry.dim_up = f.step(k + j).dim() - f.step(k + j - 1).dim();
        entry.dim_down = f.step(k - j).dim() - f.step(k - j - 1).dim();
        entry.bijective = entry.dim_up == entry.dim_down && induced_bijective(n_power, f, k + j, k - j);
        if (!entry.bijective && !report.first_failing_j) report.first_failing_j = j;
        report.all_pass = report.all_pass && entry.bijective;
        report.entries.push_back(entry);
        n_power = (n_power * w.op()).eval();
    }
    return report;
}

WeightConditionReport check_weight_conditions(const MatrixQ& n, const Filtration& w) {
    WeightConditionReport report;
    if (n.rows() != w.ambient_dim())
        throw std::invalid_argument("check_weight_conditions: operator/filtration mismatch");
    report.shift_ok = true;
    for (int ell = w.lowest_index(); ell <= w.highest_index() + 1; ++ell)
        if (!w.step(ell - 2).contains(map_subspace(n, w.step(ell)))) {
            report.shift_ok = false;
            break;
        }
    report.lefschetz = check_hard_lefschetz(WeightFiltration(w, n));
    return report;
}

bool validate_gluing(const GluingDatum& g) {
    if (g.v.rows() != g.u.cols() || g.v.cols() != g.u.rows())
        throw std::invalid_argument("validate_gluing: u and v shapes are not composable");
    if (g.n.rows() != g.u.cols() || g.n.cols() != g.u.cols())
        throw std::invalid_argument("validate_gluing: n must act on M'");
    return g.v * g.u == g.n;
}

}  // namespace conifold
