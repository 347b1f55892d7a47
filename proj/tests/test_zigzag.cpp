#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/random_corpus.hpp"
#include "conifold/serialize.hpp"
#include "test_support.hpp"

using namespace conifold;
using testing::mat;

namespace {

ZigZag j_star() { return ZigZag(MatrixQ(0, 1), MatrixQ(1, 0), MatrixQ::Identity(1, 1), ""); }
ZigZag j_shriek() { return ZigZag(MatrixQ::Identity(1, 1), MatrixQ(0, 1), MatrixQ(1, 0), ""); }

}  // namespace

TEST_CASE("validation of the stated tuples") {
    // the minimal-extension node tuple is valid with all maps zero
    const ZigZagData ic{MatrixQ(0, 1), MatrixQ(0, 0), MatrixQ(1, 0), "Q_U[3]"};
    CHECK(validate(ic).ok());

    // gamma.beta != 0 at position B->H0
    const ZigZagData broken{MatrixQ::Zero(1, 1), MatrixQ::Identity(1, 1), MatrixQ::Identity(1, 1),
                            ""};
    const auto v = validate(broken);
    CHECK_FALSE(v.ok());
    CHECK_FALSE(v.complex_b_to_h0);
    REQUIRE_FALSE(v.failures.empty());
    CHECK(v.failures.front().starts_with("B→H0"));
    CHECK_THROWS_AS(ZigZag{broken}, std::invalid_argument);

    // (0,0,Q,Q, alpha=0, beta=0, gamma=0): ker beta = Q but im alpha = 0
    const ZigZagData inexact{MatrixQ(1, 0), MatrixQ::Zero(1, 1), MatrixQ(0, 1), ""};
    const auto w = validate(inexact);
    CHECK(w.complex_a_to_b);
    CHECK_FALSE(w.exact_at_a);
    CHECK_FALSE(w.exact_at_b);

    // shape mismatch is an error, not a report
    const ZigZagData misshapen{MatrixQ(2, 1), MatrixQ(1, 1), MatrixQ(1, 1), ""};
    CHECK_THROWS_AS(validate(misshapen), std::invalid_argument);
}

TEST_CASE("builders produce the stated shapes") {
    const ZigZag ic = mu_ic(1, 1);
    CHECK(ic.hm_dim() == 1);
    CHECK(ic.a_dim() == 0);
    CHECK(ic.b_dim() == 0);
    CHECK(ic.h0_dim() == 1);
    CHECK(ic.label() == "Q_U[3]");

    // all exactness conditions are vacuous for any stalk dimensions
    CHECK_NOTHROW(mu_ic(0, 0));
    CHECK_NOTHROW(mu_ic(3, 2));

    const ZigZag sky = mu_skyscraper(1);
    CHECK(sky.a_dim() == 1);
    CHECK(sky.b_dim() == 1);
    CHECK(is_identity(sky.beta()));
    CHECK(mu_skyscraper(2).beta() == MatrixQ::Identity(2, 2));
    CHECK_THROWS_AS(mu_skyscraper(0), std::invalid_argument);

    const CorrectedObject c1 = mu_corrected(1);
    CHECK(c1.tuple.hm_dim() == 1);
    CHECK(c1.tuple.a_dim() == 1);
    CHECK(c1.tuple.b_dim() == 1);
    CHECK(c1.tuple.h0_dim() == 1);
    CHECK(is_identity(c1.tuple.beta()));
    CHECK(c1.presentation.class_params == std::vector<Rational>{Rational(1)});

    const CorrectedObject c3 = mu_corrected(3);
    CHECK(c3.tuple.a_dim() == 3);
    CHECK(c3.tuple.b_dim() == 3);
    CHECK_THROWS_AS(mu_corrected(0), std::invalid_argument);
}

TEST_CASE("duality fixes the standard tuples and swaps the one-sided shapes") {
    CHECK(dual(mu_ic(1, 1)) == mu_ic(1, 1));
    CHECK(dual(mu_skyscraper(2)) == mu_skyscraper(2));
    CHECK(dual(mu_corrected(1).tuple) == mu_corrected(1).tuple);

    CHECK(dual(j_star()) == j_shriek());
    CHECK(dual(j_shriek()) == j_star());
    CHECK_FALSE(is_isomorphic(j_star(), j_shriek()));
}

TEST_CASE("duality is a strict involution and preserves validity") {
    Rng rng(101);
    for (int i = 0; i < 30; ++i) {
        const ZigZag z = random_valid_zigzag(rng);
        const ZigZag dd = dual(dual(z));
        CHECK(dd == z);
        CHECK(is_isomorphic(dd, z));
        CHECK(validate(dual(z).data()).ok());
    }
}

TEST_CASE("direct sum: units, associativity, skyscraper stacking") {
    const ZigZag z = mu_corrected(2).tuple;
    CHECK(direct_sum(z, zero_zigzag()) == z);
    CHECK(direct_sum(zero_zigzag(), z) == z);

    CHECK(direct_sum(mu_skyscraper(1), mu_skyscraper(1)) == mu_skyscraper(2));

    const ZigZag a = mu_ic(1, 1), b = mu_skyscraper(1), c = j_star();
    CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
    CHECK(is_isomorphic(direct_sum(a, b), direct_sum(b, a)));
}

TEST_CASE("the compressed tuple hides the extension class") {
    // the tuple-level coincidence: IC (+) sky equals the corrected tuple bit for bit
    const ZigZag summed = direct_sum(mu_ic(1, 1), mu_skyscraper(1));
    const ZigZag corrected = mu_corrected(1).tuple;
    CHECK(summed == corrected);
    CHECK(canonical_dump(to_json(summed)) == canonical_dump(to_json(corrected)));
}

TEST_CASE("morphisms and hom spaces") {
    const ZigZag sky = mu_skyscraper(1);
    // End(sky) is the scalars: f_a = f_b
    const auto endos = hom_basis(sky, sky);
    CHECK(endos.size() == 1);
    CHECK(endos[0].f_a == endos[0].f_b);

    const ZigZagMorphism identity{MatrixQ::Identity(0, 0), MatrixQ::Identity(1, 1),
                                  MatrixQ::Identity(1, 1), MatrixQ::Identity(0, 0)};
    CHECK(is_morphism(sky, sky, identity));

    const ZigZagMorphism skewed{MatrixQ::Identity(0, 0), MatrixQ::Identity(1, 1),
                                Rational(2) * MatrixQ::Identity(1, 1), MatrixQ::Identity(0, 0)};
    CHECK_FALSE(is_morphism(sky, sky, skewed));

    // Hom(IC, sky) = 0: nothing connects the boundary stalks to the point data
    CHECK(hom_basis(mu_ic(1, 1), sky).empty());
}

TEST_CASE("is_isomorphic on the stated pairs") {
    const ZigZag sky = mu_skyscraper(1);
    CHECK(is_isomorphic(sky, sky));
    CHECK_FALSE(is_isomorphic(sky, mu_ic(1, 1)));
    CHECK_FALSE(is_isomorphic(j_star(), j_shriek()));
    CHECK(is_isomorphic(zero_zigzag(), zero_zigzag()));

    // same dimension vector but different ranks: the corrected tuple vs the
    // sum of the two length-two boundary intervals
    const ZigZag corrected = mu_corrected(1).tuple;  // ranks (0, 1, 0)
    const ZigZag sum_of_intervals =
        direct_sum(ZigZag(MatrixQ::Identity(1, 1), MatrixQ(0, 1), MatrixQ(0, 0), ""),
                   ZigZag(MatrixQ(0, 0), MatrixQ(1, 0), MatrixQ::Identity(1, 1), ""));
    REQUIRE(sum_of_intervals.hm_dim() == corrected.hm_dim());
    REQUIRE(sum_of_intervals.a_dim() == corrected.a_dim());
    REQUIRE(sum_of_intervals.b_dim() == corrected.b_dim());
    REQUIRE(sum_of_intervals.h0_dim() == corrected.h0_dim());
    CHECK_FALSE(is_isomorphic(sum_of_intervals, corrected));
}

TEST_CASE("is_isomorphic is invariant under base change and matches the rank oracle") {
    Rng rng(202);
    for (int i = 0; i < 25; ++i) {
        const ZigZag z = random_valid_zigzag(rng);
        const ZigZag moved =
            transform_zigzag(z, random_unimodular(rng, z.hm_dim()), random_unimodular(rng, z.a_dim()),
                             random_unimodular(rng, z.b_dim()), random_unimodular(rng, z.h0_dim()));
        CHECK(is_isomorphic(z, moved));

        // oracle: for complexes of vector spaces, (dims, ranks) is complete
        const ZigZag other = random_valid_zigzag(rng);
        CHECK(is_isomorphic(z, other) == (iso_invariant(z) == iso_invariant(other)));
    }
}

TEST_CASE("is_isomorphic is an equivalence relation on the shipped corpus") {
    const std::vector<ZigZag> corpus = {mu_ic(1, 1),    mu_skyscraper(1), mu_corrected(1).tuple,
                                        j_star(),       j_shriek(),       mu_skyscraper(2),
                                        zero_zigzag()};
    for (const auto& a : corpus) CHECK(is_isomorphic(a, a));
    for (const auto& a : corpus)
        for (const auto& b : corpus) CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (const auto& c : corpus)
                if (is_isomorphic(a, b) && is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
}

TEST_CASE("assembly of presentations") {
    // split case: assemble equals the direct sum bit for bit
    Rng rng(303);
    for (int i = 0; i < 10; ++i) {
        const ZigZag sub = random_valid_zigzag(rng);
        const ZigZag quot = random_valid_zigzag(rng);
        const auto assembled = assemble(split_presentation(sub, quot));
        CHECK(assembled.exactness.ok());
        CHECK(assembled.data == direct_sum(sub, quot).data());
    }

    // corrected presentation assembles to the corrected tuple
    const CorrectedObject c = mu_corrected(1);
    CHECK(assemble_checked(c.presentation) == c.tuple);

    // presentations differing only in class parameters assemble equal
    ExtensionPresentation other = c.presentation;
    other.class_params = {Rational(7)};
    CHECK(assemble_checked(other) == c.tuple);

    // shape mismatch
    ExtensionPresentation bad = c.presentation;
    bad.u_gamma = MatrixQ::Zero(2, 2);
    CHECK_THROWS_AS(assemble(bad), std::invalid_argument);

    // block-relation violation: u_gamma != 0 against the skyscraper beta
    ExtensionPresentation violated = c.presentation;
    violated.u_gamma = MatrixQ::Identity(1, 1);
    CHECK_THROWS_AS(assemble(violated), std::invalid_argument);
}

TEST_CASE("presentation checks") {
    const auto ok = check_presentation(mu_corrected(2).presentation);
    CHECK(ok.ok());

    ExtensionPresentation wrong_len = mu_corrected(2).presentation;
    wrong_len.class_params.pop_back();
    const auto len = check_presentation(wrong_len);
    CHECK_FALSE(len.params_length_ok);
    CHECK_FALSE(len.ok());

    CHECK(point_summand_count(mu_skyscraper(3)) == 3);
    CHECK(point_summand_count(mu_ic(1, 1)) == 0);
    CHECK(point_summand_count(mu_corrected(2).tuple) == 2);
}

TEST_CASE("dual presentations and self-duality") {
    // split presentation of sky by IC: both endpoints self-dual, zero gluing
    const ExtensionPresentation split = split_presentation(mu_ic(1, 1), mu_skyscraper(1));
    CHECK(presentation_self_dual(split));

    // corrected presentation (class parameter 1)
    CHECK(presentation_self_dual(mu_corrected(1).presentation));
    CHECK(presentation_self_dual(mu_corrected(3).presentation));

    // presentation of the j_*-shape with gamma carrying the class:
    // sub = the (B -> H0) identity interval, quot = the Hm-simple
    const ZigZag gamma_interval(MatrixQ(0, 0), MatrixQ(1, 0), MatrixQ::Identity(1, 1), "");
    const ZigZag hm_simple(MatrixQ(0, 1), MatrixQ(0, 0), MatrixQ(0, 0), "");
    const ExtensionPresentation jstar_pres = split_presentation(gamma_interval, hm_simple);
    CHECK(assemble_checked(jstar_pres) == j_star());
    CHECK_FALSE(presentation_self_dual(jstar_pres));

    // its dual assembles to the j_!-shape
    const ExtensionPresentation dualized = dual_presentation(jstar_pres);
    CHECK(assemble_checked(dualized) == j_shriek());
}

TEST_CASE("class parameter normalization") {
    const auto norm = normalize_class_params({Rational(5), Rational(0), rational(-2, 3)});
    CHECK(norm.normalized == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    const ZigZag sky3 = mu_skyscraper(3);
    CHECK(is_morphism(sky3, sky3, norm.automorphism));
    CHECK(determinant(norm.automorphism.f_a) != 0);
    // the automorphism scales each parameter onto its normal form
    CHECK(Rational(5) * norm.automorphism.f_a(0, 0) == norm.normalized[0]);
    CHECK(rational(-2, 3) * norm.automorphism.f_a(2, 2) == norm.normalized[2]);
}

TEST_CASE("classification of extensions by support") {
    const auto r1 = classify_self_dual_extensions(1);
    CHECK(r1.node_count == 1);
    CHECK(r1.orbits.size() == 2);
    CHECK(r1.corrected_unique_full_support);
    CHECK(r1.corrected_nontrivial_at_every_node);
    CHECK(r1.orbits[r1.corrected_index].self_dual);

    const auto r2 = classify_self_dual_extensions(2);
    CHECK(r2.orbits.size() == 4);
    // lexicographic on support vectors
    CHECK(r2.orbits[0].support == std::vector<bool>{false, false});
    CHECK(r2.orbits[1].support == std::vector<bool>{false, true});
    CHECK(r2.orbits[2].support == std::vector<bool>{true, false});
    CHECK(r2.orbits[3].support == std::vector<bool>{true, true});
    CHECK(r2.corrected_index == 3);

    for (Eigen::Index r = 3; r <= 4; ++r) {
        const auto report = classify_self_dual_extensions(r);
        CHECK(report.orbits.size() == (1u << r));
        CHECK(report.corrected_unique_full_support);
        std::size_t full = 0;
        for (const auto& orbit : report.orbits)
            if (orbit.full_support) ++full;
        CHECK(full == 1);
    }
    CHECK_THROWS_AS(classify_self_dual_extensions(0), std::invalid_argument);
}

TEST_CASE("presentations isomorphic iff endpoints and support agree") {
    const auto corrected = mu_corrected(1).presentation;
    const auto split = split_presentation(mu_ic(1, 1), mu_skyscraper(1));
    CHECK_FALSE(presentations_isomorphic(split, corrected));

    ExtensionPresentation scaled = corrected;
    scaled.class_params = {Rational(9)};
    CHECK(presentations_isomorphic(scaled, corrected));
    CHECK(presentations_isomorphic(split, split));
}
