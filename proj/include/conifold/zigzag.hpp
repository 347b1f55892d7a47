#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "conifold/linalg.hpp"

namespace conifold {

// Raw zig-zag tuple data: an exact sequence
//
//     Hm --alpha--> A --beta--> B --gamma--> H0
//
// of finite-dimensional Q-vector spaces attached to one isolated singular
// point, with Hm and H0 the boundary stalk spaces of the open-stratum part
// (tagged by `label`). Dimensions are carried by the matrix shapes:
// alpha is a x hm, beta is b x a, gamma is h0 x b.
struct ZigZagData {
    MatrixQ alpha;
    MatrixQ beta;
    MatrixQ gamma;
    std::string label;

    Eigen::Index hm_dim() const { return alpha.cols(); }
    Eigen::Index a_dim() const { return alpha.rows(); }
    Eigen::Index b_dim() const { return beta.rows(); }
    Eigen::Index h0_dim() const { return gamma.rows(); }

    friend bool operator==(const ZigZagData& x, const ZigZagData& y) {
        return x.hm_dim() == y.hm_dim() && x.a_dim() == y.a_dim() && x.b_dim() == y.b_dim() &&
               x.h0_dim() == y.h0_dim() && x.alpha == y.alpha && x.beta == y.beta &&
               x.gamma == y.gamma && x.label == y.label;
    }
    friend bool operator!=(const ZigZagData& x, const ZigZagData& y) { return !(x == y); }
};

// Relation names follow the target arrow of the failing condition, so a
// gamma.beta != 0 violation reports position "B→H0".
struct ZigZagValidation {
    bool complex_a_to_b = false;   // beta . alpha = 0
    bool complex_b_to_h0 = false;  // gamma . beta = 0
    bool exact_at_a = false;       // im alpha = ker beta
    bool exact_at_b = false;       // im beta = ker gamma
    std::vector<std::string> failures;

    bool ok() const { return complex_a_to_b && complex_b_to_h0 && exact_at_a && exact_at_b; }
};

/// Re-verifies the complex relations and exactness at A and B on raw tuple
/// data. Throws std::invalid_argument on matrix shape mismatches.
ZigZagValidation validate(const ZigZagData& data);

// A zig-zag that is known valid: construction goes through the checking
// constructor, so every held tuple satisfies beta.alpha = 0, gamma.beta = 0,
// im alpha = ker beta and im beta = ker gamma.
class ZigZag {
  public:
    explicit ZigZag(ZigZagData data);
    ZigZag(MatrixQ alpha, MatrixQ beta, MatrixQ gamma, std::string label = "");

    const ZigZagData& data() const { return data_; }
    const MatrixQ& alpha() const { return data_.alpha; }
    const MatrixQ& beta() const { return data_.beta; }
    const MatrixQ& gamma() const { return data_.gamma; }
    const std::string& label() const { return data_.label; }

    Eigen::Index hm_dim() const { return data_.hm_dim(); }
    Eigen::Index a_dim() const { return data_.a_dim(); }
    Eigen::Index b_dim() const { return data_.b_dim(); }
    Eigen::Index h0_dim() const { return data_.h0_dim(); }

    friend bool operator==(const ZigZag& x, const ZigZag& y) { return x.data_ == y.data_; }
    friend bool operator!=(const ZigZag& x, const ZigZag& y) { return !(x == y); }

  private:
    ZigZagData data_;
};

/// Zero-dimensional tuple; the unit for direct_sum.
ZigZag zero_zigzag();

/// (h0*, hm*, B*, A*, gamma^T, beta^T, alpha^T): reverses the zig-zag and
/// transposes the maps. A strict involution on tuples; exchanges the
/// pushforward- and extension-by-zero-shaped tuples and fixes the minimal
/// extension, skyscraper and corrected tuples.
ZigZag dual(const ZigZag& z);

/// Componentwise direct sum with block-diagonal maps. Labels join with
/// " ⊕ ", empty labels (zero open part) dropping out.
ZigZag direct_sum(const ZigZag& z1, const ZigZag& z2);

// Quadruple of maps between the four levels of two zig-zags.
struct ZigZagMorphism {
    MatrixQ f_hm;
    MatrixQ f_a;
    MatrixQ f_b;
    MatrixQ f_h0;
};

/// All three commuting squares hold exactly.
bool is_morphism(const ZigZag& source, const ZigZag& target, const ZigZagMorphism& f);

/// Basis of the space of morphisms source -> target (solution space of the
/// commuting-square linear system).
std::vector<ZigZagMorphism> hom_basis(const ZigZag& source, const ZigZag& target);

/// Complete isomorphism invariant: (dim vector; rank alpha, rank beta,
/// rank gamma). Zig-zag tuples are complexes of vector spaces, and chain
/// isomorphism classes are exactly these numbers.
std::array<Eigen::Index, 7> iso_invariant(const ZigZag& z);

/// Decides existence of an invertible morphism: a generic element of the
/// hom space is probed at random rational points (any hit is certified by an
/// exact inverse); a negative answer is certified by the exact invariant and
/// by degree-bounded interpolation of the determinant polynomial along
/// random lines. Labels are inert and ignored.
bool is_isomorphic(const ZigZag& z1, const ZigZag& z2, std::uint64_t seed = 0);

/// Minimal-extension tuple (hm, h0, 0, 0, 0, 0, 0).
ZigZag mu_ic(Eigen::Index hm_dim, Eigen::Index h0_dim, std::string label = "Q_U[3]");

/// Point-supported tuple (0, Q^mult, Q^mult, 0, id, 0); mult >= 1.
ZigZag mu_skyscraper(Eigen::Index mult);

// A sub/quotient pair with gluing blocks. Assembling gives the ambient
// tuple with spaces sub (+) quot and upper-triangular block maps; the
// extension class itself is invisible at that level and is carried by
// class_params, one scalar per rank-one point summand of quot.
struct ExtensionPresentation {
    ZigZag sub;
    ZigZag quot;
    MatrixQ u_alpha;  // quot.hm -> sub.a
    MatrixQ u_beta;   // quot.a  -> sub.b
    MatrixQ u_gamma;  // quot.b  -> sub.h0
    std::vector<Rational> class_params;
};

struct PresentationCheck {
    bool shapes_ok = false;
    bool relation_a_to_b = false;   // sub.beta.u_alpha + u_beta.quot.alpha = 0
    bool relation_b_to_h0 = false;  // sub.gamma.u_beta + u_gamma.quot.beta = 0
    bool params_length_ok = false;  // class_params count = point summands of quot
    std::vector<std::string> failures;

    bool ok() const { return shapes_ok && relation_a_to_b && relation_b_to_h0 && params_length_ok; }
};

PresentationCheck check_presentation(const ExtensionPresentation& e);

/// Number of rank-one point summands (skyscraper factors) of z: rank(beta).
Eigen::Index point_summand_count(const ZigZag& z);

/// Presentation with all gluing blocks zero and the given class parameters
/// (defaults to all zero: the split extension).
ExtensionPresentation split_presentation(const ZigZag& sub, const ZigZag& quot,
                                         std::vector<Rational> class_params = {});

struct CorrectedObject {
    ZigZag tuple;
    ExtensionPresentation presentation;
};

/// Corrected tuple (1, 1, Q^r, Q^r, 0, id_r, 0) with its defining
/// presentation: sub = mu_ic(1,1), quot = r-fold skyscraper, zero gluing
/// blocks, class parameters all 1. r >= 1.
CorrectedObject mu_corrected(Eigen::Index r);

struct AssembledZigZag {
    ZigZagData data;             // block tuple, satisfies the complex relations
    ZigZagValidation exactness;  // may fail for raw presentations
};

/// Block assembly of a presentation. Throws on shape mismatch or
/// block-relation violation; exactness of the result is reported, not
/// assumed.
AssembledZigZag assemble(const ExtensionPresentation& e);

/// Checked variant for presentations whose assembly is exact.
ZigZag assemble_checked(const ExtensionPresentation& e);

/// Formal mirror: sub' = dual(quot), quot' = dual(sub), gluing blocks
/// transposed into the mirrored slots, class parameters preserved entrywise.
ExtensionPresentation dual_presentation(const ExtensionPresentation& e);

/// A presentation is self-dual when its dual is isomorphic to it as a
/// presentation: endpoint isomorphisms (matching the reversed roles, i.e.
/// sub against dual(e).quot and quot against dual(e).sub) plus equal
/// class-parameter support pattern up to per-node scaling.
bool presentation_self_dual(const ExtensionPresentation& e, std::uint64_t seed = 0);

/// Endpoint isomorphisms plus equal class-parameter support patterns.
bool presentations_isomorphic(const ExtensionPresentation& e1, const ExtensionPresentation& e2,
                              std::uint64_t seed = 0);

/// Zero-vs-nonzero pattern of class parameters (per-node scaling kills
/// everything else: the per-node Ext space is one-dimensional).
std::vector<bool> class_param_support(const std::vector<Rational>& params);

/// Per-node scaling normalization of class parameters to {0,1}, with the
/// witnessing automorphism of the r-fold skyscraper.
struct ParamNormalization {
    std::vector<Rational> normalized;  // entries 0 or 1
    ZigZagMorphism automorphism;       // of mu_skyscraper(r), sends params to normalized
};

ParamNormalization normalize_class_params(const std::vector<Rational>& params);

struct ExtensionOrbit {
    std::vector<bool> support;          // true where the class parameter is nonzero
    std::vector<Rational> class_params; // representative, entries in {0,1}
    bool self_dual = false;
    bool full_support = false;
};

struct ClassificationReport {
    Eigen::Index node_count = 0;
    std::vector<ExtensionOrbit> orbits;  // lexicographic on support, 2^r of them
    std::size_t corrected_index = 0;     // the full-support orbit
    bool corrected_unique_full_support = false;
    bool corrected_nontrivial_at_every_node = false;
};

/// Enumerates extension presentations of the r-fold skyscraper by
/// mu_ic(1,1) with class parameters in {0,1}^r (after per-node scaling
/// normalization), grouped into 2^r orbits by support; flags self-duality
/// per orbit and identifies the full-support orbit as the corrected object.
ClassificationReport classify_self_dual_extensions(Eigen::Index r, std::uint64_t seed = 0);

}  // namespace conifold
