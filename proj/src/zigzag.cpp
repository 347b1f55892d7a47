#include "conifold/zigzag.hpp"

#include <random>
#include <sstream>

namespace conifold {

namespace {

void require_shapes(const ZigZagData& d) {
    if (d.alpha.rows() != d.beta.cols())
        throw std::invalid_argument("zigzag: alpha codomain does not match beta domain (A)");
    if (d.beta.rows() != d.gamma.cols())
        throw std::invalid_argument("zigzag: beta codomain does not match gamma domain (B)");
}

std::string join_labels(const std::string& l1, const std::string& l2) {
    if (l1.empty()) return l2;
    if (l2.empty()) return l1;
    return l1 + " ⊕ " + l2;
}

MatrixQ block_2x2(const MatrixQ& top_left, const MatrixQ& top_right, const MatrixQ& bottom_right) {
    MatrixQ out = MatrixQ::Zero(top_left.rows() + bottom_right.rows(),
                                top_left.cols() + bottom_right.cols());
    out.topLeftCorner(top_left.rows(), top_left.cols()) = top_left;
    out.topRightCorner(top_right.rows(), top_right.cols()) = top_right;
    out.bottomRightCorner(bottom_right.rows(), bottom_right.cols()) = bottom_right;
    return out;
}

}  // namespace

ZigZagValidation validate(const ZigZagData& d) {
    require_shapes(d);
    ZigZagValidation v;
    v.complex_a_to_b = is_zero(d.beta * d.alpha);
    v.complex_b_to_h0 = is_zero(d.gamma * d.beta);
    v.exact_at_a = image(d.alpha) == kernel(d.beta);
    v.exact_at_b = image(d.beta) == kernel(d.gamma);
    if (!v.complex_a_to_b) v.failures.push_back("A→B: beta∘alpha ≠ 0");
    if (!v.complex_b_to_h0) v.failures.push_back("B→H0: gamma∘beta ≠ 0");
    if (!v.exact_at_a) v.failures.push_back("A: im alpha ≠ ker beta");
    if (!v.exact_at_b) v.failures.push_back("B: im beta ≠ ker gamma");
    return v;
}

ZigZag::ZigZag(ZigZagData data) : data_(std::move(data)) {
    const ZigZagValidation v = validate(data_);
    if (!v.ok()) {
        std::ostringstream msg;
        msg << "zigzag: invalid tuple:";
        for (const auto& f : v.failures) msg << " [" << f << "]";
        throw std::invalid_argument(msg.str());
    }
}

ZigZag::ZigZag(MatrixQ alpha, MatrixQ beta, MatrixQ gamma, std::string label)
    : ZigZag(ZigZagData{std::move(alpha), std::move(beta), std::move(gamma), std::move(label)}) {}

ZigZag zero_zigzag() { return ZigZag(MatrixQ(0, 0), MatrixQ(0, 0), MatrixQ(0, 0), ""); }

ZigZag dual(const ZigZag& z) {
    return ZigZag(z.gamma().transpose(), z.beta().transpose(), z.alpha().transpose(), z.label());
}

ZigZag direct_sum(const ZigZag& z1, const ZigZag& z2) {
    return ZigZag(block_2x2(z1.alpha(), MatrixQ::Zero(z1.a_dim(), z2.hm_dim()), z2.alpha()),
                  block_2x2(z1.beta(), MatrixQ::Zero(z1.b_dim(), z2.a_dim()), z2.beta()),
                  block_2x2(z1.gamma(), MatrixQ::Zero(z1.h0_dim(), z2.b_dim()), z2.gamma()),
                  join_labels(z1.label(), z2.label()));
}

bool is_morphism(const ZigZag& source, const ZigZag& target, const ZigZagMorphism& f) {
    if (f.f_hm.rows() != target.hm_dim() || f.f_hm.cols() != source.hm_dim()) return false;
    if (f.f_a.rows() != target.a_dim() || f.f_a.cols() != source.a_dim()) return false;
    if (f.f_b.rows() != target.b_dim() || f.f_b.cols() != source.b_dim()) return false;
    if (f.f_h0.rows() != target.h0_dim() || f.f_h0.cols() != source.h0_dim()) return false;
    return is_zero(target.alpha() * f.f_hm - f.f_a * source.alpha()) &&
           is_zero(target.beta() * f.f_a - f.f_b * source.beta()) &&
           is_zero(target.gamma() * f.f_b - f.f_h0 * source.gamma());
}

namespace {

struct HomShape {
    Eigen::Index hm, a, b, h0;  // unknown block sizes (target_dim x source_dim)
    Eigen::Index total;
};

HomShape hom_shape(const ZigZag& s, const ZigZag& t) {
    HomShape sh;
    sh.hm = t.hm_dim() * s.hm_dim();
    sh.a = t.a_dim() * s.a_dim();
    sh.b = t.b_dim() * s.b_dim();
    sh.h0 = t.h0_dim() * s.h0_dim();
    sh.total = sh.hm + sh.a + sh.b + sh.h0;
    return sh;
}

MatrixQ unvec(const VectorQ& v, Eigen::Index offset, Eigen::Index rows, Eigen::Index cols) {
    MatrixQ m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = v(offset + j * rows + i);
    return m;
}

ZigZagMorphism unpack_morphism(const ZigZag& s, const ZigZag& t, const VectorQ& v) {
    const HomShape sh = hom_shape(s, t);
    ZigZagMorphism f;
    f.f_hm = unvec(v, 0, t.hm_dim(), s.hm_dim());
    f.f_a = unvec(v, sh.hm, t.a_dim(), s.a_dim());
    f.f_b = unvec(v, sh.hm + sh.a, t.b_dim(), s.b_dim());
    f.f_h0 = unvec(v, sh.hm + sh.a + sh.b, t.h0_dim(), s.h0_dim());
    return f;
}

// Coefficient matrix of the commuting-square system, using
// vec(A X B) = (B^T kron A) vec(X).
MatrixQ hom_system(const ZigZag& s, const ZigZag& t) {
    const HomShape sh = hom_shape(s, t);
    const Eigen::Index rows_1 = t.a_dim() * s.hm_dim();
    const Eigen::Index rows_2 = t.b_dim() * s.a_dim();
    const Eigen::Index rows_3 = t.h0_dim() * s.b_dim();
    MatrixQ sys = MatrixQ::Zero(rows_1 + rows_2 + rows_3, sh.total);

    const auto id = [](Eigen::Index n) { return MatrixQ::Identity(n, n); };
    // alpha_t f_hm = f_a alpha_s
    sys.block(0, 0, rows_1, sh.hm) = kronecker(id(s.hm_dim()), t.alpha());
    sys.block(0, sh.hm, rows_1, sh.a) = -kronecker(s.alpha().transpose(), id(t.a_dim()));
    // beta_t f_a = f_b beta_s
    sys.block(rows_1, sh.hm, rows_2, sh.a) = kronecker(id(s.a_dim()), t.beta());
    sys.block(rows_1, sh.hm + sh.a, rows_2, sh.b) = -kronecker(s.beta().transpose(), id(t.b_dim()));
    // gamma_t f_b = f_h0 gamma_s
    sys.block(rows_1 + rows_2, sh.hm + sh.a, rows_3, sh.b) = kronecker(id(s.b_dim()), t.gamma());
    sys.block(rows_1 + rows_2, sh.hm + sh.a + sh.b, rows_3, sh.h0) =
        -kronecker(s.gamma().transpose(), id(t.h0_dim()));
    return sys;
}

bool invertible_at_all_levels(const ZigZagMorphism& f) {
    return f.f_hm.rows() == f.f_hm.cols() && f.f_a.rows() == f.f_a.cols() &&
           f.f_b.rows() == f.f_b.cols() && f.f_h0.rows() == f.f_h0.cols() &&
           determinant(f.f_hm) != 0 && determinant(f.f_a) != 0 && determinant(f.f_b) != 0 &&
           determinant(f.f_h0) != 0;
}

ZigZagMorphism combine(const std::vector<ZigZagMorphism>& basis, const std::vector<Rational>& c) {
    ZigZagMorphism f;
    f.f_hm = MatrixQ::Zero(basis[0].f_hm.rows(), basis[0].f_hm.cols());
    f.f_a = MatrixQ::Zero(basis[0].f_a.rows(), basis[0].f_a.cols());
    f.f_b = MatrixQ::Zero(basis[0].f_b.rows(), basis[0].f_b.cols());
    f.f_h0 = MatrixQ::Zero(basis[0].f_h0.rows(), basis[0].f_h0.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        f.f_hm += c[i] * basis[i].f_hm;
        f.f_a += c[i] * basis[i].f_a;
        f.f_b += c[i] * basis[i].f_b;
        f.f_h0 += c[i] * basis[i].f_h0;
    }
    return f;
}

Rational level_det_product(const ZigZagMorphism& f) {
    return determinant(f.f_hm) * determinant(f.f_a) * determinant(f.f_b) * determinant(f.f_h0);
}

}  // namespace

std::vector<ZigZagMorphism> hom_basis(const ZigZag& source, const ZigZag& target) {
    const HomShape sh = hom_shape(source, target);
    if (sh.total == 0) return {};
    const MatrixQ k = kernel_basis(hom_system(source, target));
    std::vector<ZigZagMorphism> basis;
    basis.reserve(static_cast<std::size_t>(k.cols()));
    for (Eigen::Index j = 0; j < k.cols(); ++j)
        basis.push_back(unpack_morphism(source, target, k.col(j)));
    return basis;
}

std::array<Eigen::Index, 7> iso_invariant(const ZigZag& z) {
    return {z.hm_dim(), z.a_dim(), z.b_dim(), z.h0_dim(),
            rank(z.alpha()), rank(z.beta()), rank(z.gamma())};
}

bool is_isomorphic(const ZigZag& z1, const ZigZag& z2, std::uint64_t seed) {
    if (z1.hm_dim() != z2.hm_dim() || z1.a_dim() != z2.a_dim() || z1.b_dim() != z2.b_dim() ||
        z1.h0_dim() != z2.h0_dim())
        return false;
    const Eigen::Index total_dim = z1.hm_dim() + z1.a_dim() + z1.b_dim() + z1.h0_dim();
    if (total_dim == 0) return true;

    const auto basis = hom_basis(z1, z2);
    if (basis.empty()) return false;
    const bool invariants_equal = iso_invariant(z1) == iso_invariant(z2);

    std::mt19937_64 rng(seed ^ 0x5a11ad00c0ffeeULL);
    std::uniform_int_distribution<long> small(-8, 8);
    const auto random_coeffs = [&] {
        std::vector<Rational> c(basis.size());
        for (auto& x : c) x = Rational(small(rng));
        return c;
    };

    // Positive route: any invertible sample certifies the isomorphism.
    const int direct_probes = invariants_equal ? 64 : 8;
    for (int probe = 0; probe < direct_probes; ++probe) {
        const ZigZagMorphism f = combine(basis, random_coeffs());
        if (!invertible_at_all_levels(f)) continue;
        ZigZagMorphism inv{*inverse(f.f_hm), *inverse(f.f_a), *inverse(f.f_b), *inverse(f.f_h0)};
        if (!is_morphism(z2, z1, inv))
            throw std::logic_error("is_isomorphic: inverse of an invertible morphism must commute");
        return true;
    }

    // Negative route: the product of the four level determinants is a
    // polynomial of total degree <= total_dim in the hom coordinates;
    // restricted to a line it is univariate of the same degree bound, so
    // vanishing at total_dim + 1 points makes the restriction identically
    // zero. Confirmed against the exact invariant.
    for (int line = 0; line < 3; ++line) {
        const auto base = random_coeffs();
        const auto direction = random_coeffs();
        for (long tpar = 0; tpar <= static_cast<long>(total_dim); ++tpar) {
            std::vector<Rational> c(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) c[i] = base[i] + Rational(tpar) * direction[i];
            const ZigZagMorphism f = combine(basis, c);
            if (level_det_product(f) != 0) {
                ZigZagMorphism inv{*inverse(f.f_hm), *inverse(f.f_a), *inverse(f.f_b),
                                   *inverse(f.f_h0)};
                if (!is_morphism(z2, z1, inv))
                    throw std::logic_error(
                        "is_isomorphic: inverse of an invertible morphism must commute");
                return true;
            }
        }
    }
    if (invariants_equal)
        throw std::logic_error("is_isomorphic: invariant says isomorphic but no invertible sample found");
    return false;
}

ZigZag mu_ic(Eigen::Index hm_dim, Eigen::Index h0_dim, std::string label) {
    return ZigZag(MatrixQ::Zero(0, hm_dim), MatrixQ(0, 0), MatrixQ::Zero(h0_dim, 0),
                  std::move(label));
}

ZigZag mu_skyscraper(Eigen::Index mult) {
    if (mult < 1) throw std::invalid_argument("mu_skyscraper: multiplicity must be >= 1");
    return ZigZag(MatrixQ::Zero(mult, 0), MatrixQ::Identity(mult, mult), MatrixQ::Zero(0, mult), "");
}

Eigen::Index point_summand_count(const ZigZag& z) { return rank(z.beta()); }

PresentationCheck check_presentation(const ExtensionPresentation& e) {
    PresentationCheck c;
    c.shapes_ok = e.u_alpha.rows() == e.sub.a_dim() && e.u_alpha.cols() == e.quot.hm_dim() &&
                  e.u_beta.rows() == e.sub.b_dim() && e.u_beta.cols() == e.quot.a_dim() &&
                  e.u_gamma.rows() == e.sub.h0_dim() && e.u_gamma.cols() == e.quot.b_dim();
    if (!c.shapes_ok) {
        c.failures.push_back("gluing block shapes do not match sub/quot dimensions");
        return c;
    }
    c.relation_a_to_b = is_zero(e.sub.beta() * e.u_alpha + e.u_beta * e.quot.alpha());
    c.relation_b_to_h0 = is_zero(e.sub.gamma() * e.u_beta + e.u_gamma * e.quot.beta());
    c.params_length_ok =
        static_cast<Eigen::Index>(e.class_params.size()) == point_summand_count(e.quot);
    if (!c.relation_a_to_b) c.failures.push_back("A→B: sub.beta∘u_alpha + u_beta∘quot.alpha ≠ 0");
    if (!c.relation_b_to_h0) c.failures.push_back("B→H0: sub.gamma∘u_beta + u_gamma∘quot.beta ≠ 0");
    if (!c.params_length_ok)
        c.failures.push_back("class_params length does not match the point summands of quot");
    return c;
}

ExtensionPresentation split_presentation(const ZigZag& sub, const ZigZag& quot,
                                         std::vector<Rational> class_params) {
    if (class_params.empty())
        class_params.assign(static_cast<std::size_t>(point_summand_count(quot)), Rational(0));
    return ExtensionPresentation{sub,
                                 quot,
                                 MatrixQ::Zero(sub.a_dim(), quot.hm_dim()),
                                 MatrixQ::Zero(sub.b_dim(), quot.a_dim()),
                                 MatrixQ::Zero(sub.h0_dim(), quot.b_dim()),
                                 std::move(class_params)};
}

CorrectedObject mu_corrected(Eigen::Index r) {
    if (r < 1) throw std::invalid_argument("mu_corrected: node count must be >= 1");
    ZigZag tuple(MatrixQ::Zero(r, 1), MatrixQ::Identity(r, r), MatrixQ::Zero(1, r), "Q_U[3]");
    ExtensionPresentation pres = split_presentation(
        mu_ic(1, 1), mu_skyscraper(r), std::vector<Rational>(static_cast<std::size_t>(r), Rational(1)));
    return CorrectedObject{std::move(tuple), std::move(pres)};
}

AssembledZigZag assemble(const ExtensionPresentation& e) {
    const PresentationCheck c = check_presentation(e);
    if (!c.shapes_ok) throw std::invalid_argument("assemble: " + c.failures.front());
    if (!c.relation_a_to_b || !c.relation_b_to_h0) {
        std::ostringstream msg;
        msg << "assemble: block relations violated:";
        for (const auto& f : c.failures) msg << " [" << f << "]";
        throw std::invalid_argument(msg.str());
    }
    ZigZagData d{block_2x2(e.sub.alpha(), e.u_alpha, e.quot.alpha()),
                 block_2x2(e.sub.beta(), e.u_beta, e.quot.beta()),
                 block_2x2(e.sub.gamma(), e.u_gamma, e.quot.gamma()),
                 join_labels(e.sub.label(), e.quot.label())};
    ZigZagValidation v = validate(d);
    return AssembledZigZag{std::move(d), std::move(v)};
}

ZigZag assemble_checked(const ExtensionPresentation& e) { return ZigZag(assemble(e).data); }

ExtensionPresentation dual_presentation(const ExtensionPresentation& e) {
    return ExtensionPresentation{dual(e.quot),          dual(e.sub),
                                 e.u_gamma.transpose(), e.u_beta.transpose(),
                                 e.u_alpha.transpose(), e.class_params};
}

std::vector<bool> class_param_support(const std::vector<Rational>& params) {
    std::vector<bool> support(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) support[i] = params[i] != 0;
    return support;
}

bool presentations_isomorphic(const ExtensionPresentation& e1, const ExtensionPresentation& e2,
                              std::uint64_t seed) {
    return is_isomorphic(e1.sub, e2.sub, seed) && is_isomorphic(e1.quot, e2.quot, seed) &&
           class_param_support(e1.class_params) == class_param_support(e2.class_params);
}

bool presentation_self_dual(const ExtensionPresentation& e, std::uint64_t seed) {
    const ExtensionPresentation d = dual_presentation(e);
    // The dual sequence runs in the opposite direction, so endpoints are
    // compared cross-wise: sub against d.quot and quot against d.sub.
    return is_isomorphic(e.sub, d.quot, seed) && is_isomorphic(e.quot, d.sub, seed) &&
           class_param_support(e.class_params) == class_param_support(d.class_params);
}

ParamNormalization normalize_class_params(const std::vector<Rational>& params) {
    const auto r = static_cast<Eigen::Index>(params.size());
    ParamNormalization out;
    out.normalized.reserve(params.size());
    MatrixQ scale = MatrixQ::Identity(r, r);
    for (Eigen::Index k = 0; k < r; ++k) {
        const Rational& lambda = params[static_cast<std::size_t>(k)];
        if (lambda == 0) {
            out.normalized.emplace_back(0);
        } else {
            out.normalized.emplace_back(1);
            scale(k, k) = 1 / lambda;
        }
    }
    // Automorphism of the r-fold skyscraper rescaling each factor; the
    // skyscraper beta is the identity, so f_a = f_b is a valid morphism.
    out.automorphism = ZigZagMorphism{MatrixQ(0, 0), scale, scale, MatrixQ(0, 0)};
    return out;
}

ClassificationReport classify_self_dual_extensions(Eigen::Index r, std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("classify_self_dual_extensions: node count must be >= 1");
    if (r > 20) throw std::invalid_argument("classify_self_dual_extensions: node count too large");
    const ZigZag sub = mu_ic(1, 1);
    const ZigZag quot = mu_skyscraper(r);

    std::vector<std::vector<bool>> supports;
    supports.reserve(1u << r);
    for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
        std::vector<bool> s(static_cast<std::size_t>(r));
        for (Eigen::Index k = 0; k < r; ++k) s[static_cast<std::size_t>(k)] = (mask >> k) & 1;
        supports.push_back(std::move(s));
    }
    std::sort(supports.begin(), supports.end());

    ClassificationReport report;
    report.node_count = r;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        const auto& s = supports[i];
        ExtensionOrbit orbit;
        orbit.support = s;
        orbit.class_params.reserve(s.size());
        for (bool on : s) orbit.class_params.emplace_back(on ? 1 : 0);
        const ExtensionPresentation e = split_presentation(sub, quot, orbit.class_params);
        orbit.self_dual = presentation_self_dual(e, seed);
        orbit.full_support = std::all_of(s.begin(), s.end(), [](bool b) { return b; });
        if (orbit.full_support) report.corrected_index = i;
        report.orbits.push_back(std::move(orbit));
    }
    const auto full_count = std::count_if(report.orbits.begin(), report.orbits.end(),
                                          [](const ExtensionOrbit& o) { return o.full_support; });
    report.corrected_unique_full_support = full_count == 1;
    const auto& corrected = report.orbits[report.corrected_index];
    report.corrected_nontrivial_at_every_node =
        std::all_of(corrected.support.begin(), corrected.support.end(), [](bool b) { return b; });
    return report;
}

}  // namespace conifold
