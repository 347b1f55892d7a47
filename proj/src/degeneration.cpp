#include "conifold/degeneration.hpp"

#include <array>
#include <utility>

namespace conifold {

namespace {

void require_point_strata(const DegenerationSpec& spec) {
    for (const auto& s : spec.strata)
        if (s.dim != 0)
            throw UnsupportedStratumError(
                "stratum '" + s.label +
                "' has positive dimension; only zero-dimensional (point) strata are implemented");
}

}  // namespace

Eigen::Index vanishing_rank(const DegenerationSpec& spec) {
    require_point_strata(spec);
    Eigen::Index total = 0;
    for (const auto& s : spec.strata) {
        if (s.milnor_rank < 0) throw std::invalid_argument("vanishing_rank: negative milnor_rank");
        total += s.milnor_rank;
    }
    return total;
}

ExactSequenceReport build_corrected(const DegenerationSpec& spec) {
    require_point_strata(spec);
    for (const auto& s : spec.strata)
        if (s.milnor_rank != 1)
            throw std::invalid_argument("build_corrected: stratum '" + s.label +
                                        "' has milnor_rank != 1; only ordinary double points are covered");
    const Eigen::Index r = spec.node_count();
    const ZigZag sub = mu_ic(1, 1);
    ZigZag quot = zero_zigzag();
    for (Eigen::Index k = 0; k < r; ++k) quot = direct_sum(quot, mu_skyscraper(1));
    const ZigZag total = r == 0 ? sub : mu_corrected(r).tuple;

    ExactSequenceReport report{sub, total, quot, vanishing_rank(spec), false, {}};

    const auto check = [&report](bool ok, const std::string& what) {
        if (!ok) report.failures.push_back(what);
    };

    check(total.hm_dim() == sub.hm_dim() + quot.hm_dim(), "dimension additivity at Hm");
    check(total.a_dim() == sub.a_dim() + quot.a_dim(), "dimension additivity at A");
    check(total.b_dim() == sub.b_dim() + quot.b_dim(), "dimension additivity at B");
    check(total.h0_dim() == sub.h0_dim() + quot.h0_dim(), "dimension additivity at H0");
    check(quot == (r == 0 ? zero_zigzag() : mu_skyscraper(r)),
          "quotient equals the r-fold skyscraper sum");

    if (report.failures.empty()) {
        // inclusion sub -> total and projection total -> quot as block maps
        const auto include = [](Eigen::Index sub_dim, Eigen::Index total_dim) {
            MatrixQ m = MatrixQ::Zero(total_dim, sub_dim);
            m.topLeftCorner(sub_dim, sub_dim) = MatrixQ::Identity(sub_dim, sub_dim);
            return m;
        };
        const auto project = [](Eigen::Index total_dim, Eigen::Index quot_dim) {
            MatrixQ m = MatrixQ::Zero(quot_dim, total_dim);
            m.rightCols(quot_dim) = MatrixQ::Identity(quot_dim, quot_dim);
            return m;
        };
        const ZigZagMorphism inclusion{include(sub.hm_dim(), total.hm_dim()),
                                       include(sub.a_dim(), total.a_dim()),
                                       include(sub.b_dim(), total.b_dim()),
                                       include(sub.h0_dim(), total.h0_dim())};
        const ZigZagMorphism projection{project(total.hm_dim(), quot.hm_dim()),
                                        project(total.a_dim(), quot.a_dim()),
                                        project(total.b_dim(), quot.b_dim()),
                                        project(total.h0_dim(), quot.h0_dim())};
        check(is_morphism(sub, total, inclusion), "inclusion is a zig-zag morphism");
        check(is_morphism(total, quot, projection), "projection is a zig-zag morphism");

        const std::array<std::pair<const MatrixQ*, const MatrixQ*>, 4> slots = {
            std::pair{&inclusion.f_hm, &projection.f_hm}, std::pair{&inclusion.f_a, &projection.f_a},
            std::pair{&inclusion.f_b, &projection.f_b}, std::pair{&inclusion.f_h0, &projection.f_h0}};
        const char* names[] = {"Hm", "A", "B", "H0"};
        for (std::size_t i = 0; i < slots.size(); ++i) {
            const MatrixQ& inc = *slots[i].first;
            const MatrixQ& proj = *slots[i].second;
            check(rank(inc) == inc.cols(), std::string("inclusion injective at ") + names[i]);
            check(rank(proj) == proj.rows(), std::string("projection surjective at ") + names[i]);
            check(image(inc) == kernel(proj), std::string("exactness at ") + names[i]);
        }
    }

    report.verdict = report.failures.empty() && report.pointwise_defect == r;
    return report;
}

LESReport check_les(const LESWitness& w) {
    const std::size_t len = w.h_special.size();
    if (w.h_psi.size() != len || w.h_phi.size() != len || w.rank_special_psi.size() != len ||
        w.rank_psi_phi.size() != len)
        throw std::invalid_argument("check_les: sequences must share one window");

    const auto at = [](const std::vector<Eigen::Index>& v, long i) -> Eigen::Index {
        return (i < 0 || i >= static_cast<long>(v.size())) ? 0 : v[static_cast<std::size_t>(i)];
    };

    for (std::size_t i = 0; i < len; ++i) {
        if (w.h_special[i] < 0 || w.h_psi[i] < 0 || w.h_phi[i] < 0)
            throw std::invalid_argument("check_les: negative dimension");
        if (w.rank_special_psi[i] < 0 || w.rank_psi_phi[i] < 0)
            throw std::invalid_argument("check_les: negative rank");
        if (w.rank_special_psi[i] > std::min(w.h_special[i], w.h_psi[i]))
            throw std::invalid_argument("check_les: rank special->psi exceeds adjacent dimension at degree " +
                                        std::to_string(w.lo + static_cast<int>(i)));
        if (w.rank_psi_phi[i] > std::min(w.h_psi[i], w.h_phi[i]))
            throw std::invalid_argument("check_les: rank psi->phi exceeds adjacent dimension at degree " +
                                        std::to_string(w.lo + static_cast<int>(i)));
    }

    LESReport report;
    report.rank_phi_special.resize(len);
    for (std::size_t i = 0; i < len; ++i)
        report.rank_phi_special[i] = w.h_phi[i] - w.rank_psi_phi[i];

    const auto derived_rank = [&](long i) { return at(report.rank_phi_special, i); };

    report.exact = true;
    const auto fail = [&](const std::string& where) {
        if (report.exact) report.first_failure = where;
        report.exact = false;
    };

    // exactness at each node of ... -> special^m -> psi^m -> phi^m -> ...
    for (long i = 0; i <= static_cast<long>(len); ++i) {
        const int degree = w.lo + static_cast<int>(i);
        if (at(w.h_special, i) != derived_rank(i - 1) + at(w.rank_special_psi, i))
            fail("special at degree " + std::to_string(degree));
        if (i < static_cast<long>(len) &&
            at(w.h_psi, i) != at(w.rank_special_psi, i) + at(w.rank_psi_phi, i))
            fail("psi at degree " + std::to_string(degree));
        // the identity at phi holds by construction of the derived rank
    }

    long alternating = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int degree = w.lo + static_cast<int>(i);
        const long term = static_cast<long>(w.h_special[i] - w.h_psi[i] + w.h_phi[i]);
        alternating += (degree % 2 == 0) ? term : -term;
    }
    report.alternating_sum = alternating;
    if (alternating != 0) fail("alternating sum");
    return report;
}

std::map<int, Eigen::Index> limiting_graded_dims(const DegenerationSpec& spec,
                                                 std::optional<int> center) {
    if (!spec.lattice_config)
        throw std::invalid_argument(
            "limiting_graded_dims: degeneration data carries no vanishing-cycle lattice");
    const MatrixQ t = total_monodromy(*spec.lattice_config);
    const MatrixQ j = t - MatrixQ::Identity(t.rows(), t.cols());
    if (!is_nilpotent(j))
        throw std::domain_error(
            "limiting_graded_dims: total monodromy is not unipotent; apply a base change t -> t^m "
            "with m its quasi-unipotence order first");
    const MatrixQ n = log_unipotent(t);
    const WeightFiltration w = weight_filtration(n, center.value_or(spec.fiber_dim));
    const HardLefschetzReport hl = check_hard_lefschetz(w);
    if (!hl.all_pass)
        throw std::logic_error("limiting_graded_dims: induced-map bijectivity check failed");
    return w.graded_dims();
}

StratifiedReport stratified_quotient(const DegenerationSpec& spec) {
    require_point_strata(spec);
    std::vector<Eigen::Index> multiplicities;
    ZigZag quotient = zero_zigzag();
    for (const auto& s : spec.strata) {
        if (s.milnor_rank < 0)
            throw std::invalid_argument("stratified_quotient: negative milnor_rank");
        multiplicities.push_back(s.milnor_rank);
        if (s.milnor_rank > 0) quotient = direct_sum(quotient, mu_skyscraper(s.milnor_rank));
    }
    return StratifiedReport{std::move(multiplicities), std::move(quotient)};
}

}  // namespace conifold
