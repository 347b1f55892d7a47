#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/monodromy.hpp"
#include "conifold/random_corpus.hpp"
#include "test_support.hpp"

using namespace conifold;
using testing::imat;
using testing::ivec;
using testing::mat;

namespace {

VanishingConfig skew_rank2(std::vector<VectorZ> cycles) {
    return VanishingConfig::make(Lattice(imat({{0, 1}, {-1, 0}}), Symmetry::skew),
                                 std::move(cycles));
}

}  // namespace

TEST_CASE("lattice symmetry is validated") {
    CHECK_NOTHROW(Lattice(imat({{2, 1}, {1, -2}}), Symmetry::symmetric));
    CHECK_NOTHROW(Lattice(imat({{0, 3}, {-3, 0}}), Symmetry::skew));
    CHECK_THROWS_AS(Lattice(imat({{0, 1}, {1, 0}}), Symmetry::skew), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(imat({{0, 1}, {-2, 0}}), Symmetry::symmetric), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(imat({{0, 1}}), Symmetry::skew), std::invalid_argument);

    const Lattice l(imat({{0, 1}, {-1, 0}}), Symmetry::skew);
    CHECK(l.pairing(ivec({0, 1}), ivec({1, 0})) == Integer(-1));
    CHECK(l.pairing(ivec({1, 0}), ivec({1, 0})) == Integer(0));
}

TEST_CASE("transvection on the stated examples") {
    // delta = 0 gives the identity
    const auto zero_cfg = skew_rank2({ivec({0, 0})});
    CHECK(is_identity(pl_transvection(zero_cfg, 1)));

    // skew gram [[0,1],[-1,0]], delta = e1: T(e1) = e1, T(e2) = e2 - e1
    const auto cfg = skew_rank2({ivec({1, 0})});
    const MatrixQ t = pl_transvection(cfg, 1);
    CHECK(t * testing::vec({1, 0}) == testing::vec({1, 0}));
    CHECK(t * testing::vec({0, 1}) == mat({{-1}, {1}}));

    CHECK_THROWS_AS(pl_transvection(cfg, 0), std::invalid_argument);
    CHECK_THROWS_AS(pl_transvection(cfg, 2), std::invalid_argument);
}

TEST_CASE("transvections have rank one and square to zero on skew lattices") {
    Rng rng(31);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 2 + trial % 4;
        MatrixZ gram(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            gram(i, i) = 0;
            for (Eigen::Index j = i + 1; j < n; ++j) {
                gram(i, j) = entry(rng);
                gram(j, i) = -gram(i, j);
            }
        }
        VectorZ delta(n);
        for (Eigen::Index i = 0; i < n; ++i) delta(i) = entry(rng);
        const auto cfg = VanishingConfig::make(Lattice(gram, Symmetry::skew), {delta});
        const MatrixQ j = pl_transvection(cfg, 1) - MatrixQ::Identity(n, n);
        CHECK(rank(j) <= 1);
        CHECK(is_zero(j * j));  // delta.delta = 0 forces (T - id)^2 = 0
    }
}

TEST_CASE("total monodromy composes in cycle-list order") {
    const auto single = skew_rank2({ivec({1, 0})});
    CHECK(total_monodromy(single) == pl_transvection(single, 1));

    // orthogonal cycles commute
    MatrixZ gram4 = MatrixZ::Zero(4, 4);
    gram4(0, 1) = 1; gram4(1, 0) = -1;
    gram4(2, 3) = 1; gram4(3, 2) = -1;
    const Lattice l4(gram4, Symmetry::skew);
    const auto forward = VanishingConfig::make(l4, {ivec({1, 0, 0, 0}), ivec({0, 0, 1, 0})});
    const auto backward = VanishingConfig::make(l4, {ivec({0, 0, 1, 0}), ivec({1, 0, 0, 0})});
    CHECK(total_monodromy(forward) == total_monodromy(backward));
    CHECK(rank(total_monodromy(forward) - MatrixQ::Identity(4, 4)) == 2);

    // non-orthogonal cycles do not commute: the order is the cycle-list order
    const auto pair = skew_rank2({ivec({1, 0}), ivec({0, 1})});
    const MatrixQ t1 = pl_transvection(pair, 1);
    const MatrixQ t2 = pl_transvection(pair, 2);
    CHECK(total_monodromy(pair) == t2 * t1);
    CHECK(t2 * t1 != t1 * t2);

    CHECK_THROWS_AS(total_monodromy(VanishingConfig::make(l4, {})), std::invalid_argument);
}

TEST_CASE("weight filtration on the stated examples") {
    // N = 0: a single jump at the center
    const WeightFiltration trivial = weight_filtration(MatrixQ::Zero(3, 3), 5);
    CHECK(trivial.graded_dims() == std::map<int, Eigen::Index>{{5, 3}});

    // single Jordan 2-block, center 1: gr_2 = gr_0 = 1, W_0 = im N = ker N
    const MatrixQ jordan2 = mat({{0, 1}, {0, 0}});
    const WeightFiltration two = weight_filtration(jordan2, 1);
    CHECK(two.graded_dims() == std::map<int, Eigen::Index>{{0, 1}, {2, 1}});
    CHECK(two.filtration().step(0) == image(jordan2));
    CHECK(two.filtration().step(0) == kernel(jordan2));

    // rank-1 N with N^2 = 0 on Q^3, center 3: graded dims (1,1,1) at 2,3,4
    const MatrixQ rank1 = mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    const WeightFiltration three = weight_filtration(rank1, 3);
    CHECK(three.graded_dims() == std::map<int, Eigen::Index>{{2, 1}, {3, 1}, {4, 1}});

    CHECK_THROWS_AS(weight_filtration(MatrixQ::Identity(2, 2), 0), std::domain_error);
    CHECK_THROWS_AS(weight_filtration(MatrixQ::Zero(2, 3), 0), std::invalid_argument);
}

TEST_CASE("jordan chains recover the block structure") {
    // Jordan type (3, 2, 1)
    MatrixQ n = MatrixQ::Zero(6, 6);
    n(0, 1) = 1; n(1, 2) = 1;
    n(3, 4) = 1;
    const auto chains = jordan_chains(n);
    std::vector<std::size_t> sizes;
    for (const auto& chain : chains) sizes.push_back(chain.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

    // each chain element maps to the next one down
    for (const auto& chain : chains) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(n * chain[i] == chain[i + 1]);
        CHECK(is_zero(n * chain.back()));
    }
}

TEST_CASE("jordan oracle agrees with the recursive construction") {
    // oracle example: Jordan type (3), center 0: gr dims 1,0,1,0,1 at -2..2
    MatrixQ block3 = MatrixQ::Zero(3, 3);
    block3(0, 1) = 1;
    block3(1, 2) = 1;
    const WeightFiltration oracle = jordan_weight_oracle(block3, 0);
    CHECK(oracle.graded_dims() == std::map<int, Eigen::Index>{{-2, 1}, {0, 1}, {2, 1}});
    CHECK(weight_filtration(block3, 0).filtration() == oracle.filtration());

    Rng rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<Eigen::Index> dim_dist(1, 6);
        const MatrixQ n = random_nilpotent(rng, dim_dist(rng));
        const WeightFiltration primary = weight_filtration(n, 0);
        const WeightFiltration jordan = jordan_weight_oracle(n, 0);
        CHECK(primary.filtration() == jordan.filtration());
    }
}

TEST_CASE("weight filtration agrees with the closed intersection-sum formula") {
    // third route: W_l = sum over a >= 0 of  im N^a  ∩  ker N^{a+l+1}
    // (one term per Jordan chain element of weight <= l)
    Rng rng(39);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<Eigen::Index> dim_dist(1, 5);
        const Eigen::Index dim = dim_dist(rng);
        const MatrixQ n = random_nilpotent(rng, dim);
        const Filtration w = weight_filtration(n, 0).filtration();
        const Eigen::Index m = nilpotency_index(n);

        std::vector<MatrixQ> powers{MatrixQ::Identity(dim, dim)};
        for (Eigen::Index a = 1; a <= m; ++a) powers.push_back(powers.back() * n);

        for (int ell = -static_cast<int>(m); ell <= static_cast<int>(m) - 1; ++ell) {
            Subspace closed(dim);
            for (Eigen::Index a = 0; a <= m; ++a) {
                const long ker_power = a + ell + 1;
                if (ker_power <= 0) continue;
                const Subspace term = subspace_intersect(
                    image(powers[static_cast<std::size_t>(a)]),
                    kernel(matrix_power(n, static_cast<unsigned long>(std::min<long>(ker_power, m)))));
                closed = subspace_sum(closed, term);
            }
            CHECK(closed == w.step(ell));
        }
    }
}

TEST_CASE("characterizing conditions and the shifted negative") {
    const MatrixQ jordan2 = mat({{0, 1}, {0, 0}});
    const WeightFiltration w = weight_filtration(jordan2, 1);

    const auto good = check_weight_conditions(jordan2, w.filtration());
    CHECK(good.ok());

    const auto hl = check_hard_lefschetz(w);
    CHECK(hl.all_pass);
    REQUIRE_FALSE(hl.entries.empty());
    CHECK(hl.entries[0].j == 1);
    CHECK(hl.entries[0].dim_up == 1);
    CHECK(hl.entries[0].dim_down == 1);

    // deliberately shifted filtration: same steps, center moved by one
    std::map<int, Subspace> shifted;
    for (const auto& [index, sub] : w.filtration().steps()) shifted.emplace(index + 1, sub);
    const Filtration wrong(1, std::move(shifted));
    const auto bad = check_hard_lefschetz(WeightFiltration(wrong, jordan2));
    CHECK_FALSE(bad.all_pass);
    REQUIRE(bad.first_failing_j.has_value());
    // at j = 1 both graded pieces of the shifted filtration are zero, so the
    // first detectable failure is the asymmetric pair at j = 2
    CHECK(*bad.first_failing_j == 2);
    CHECK_FALSE(check_weight_conditions(jordan2, wrong).ok());
}

TEST_CASE("gluing data") {
    CHECK(validate_gluing(GluingDatum{MatrixQ::Zero(2, 1), MatrixQ::Zero(1, 2), MatrixQ::Zero(1, 1)}));

    // 1-dimensional: u = (1), v = (lambda) validates iff n = (lambda)
    for (long lambda : {0L, 1L, -4L}) {
        GluingDatum g{MatrixQ::Identity(1, 1), Rational(lambda) * MatrixQ::Identity(1, 1),
                      Rational(lambda) * MatrixQ::Identity(1, 1)};
        CHECK(validate_gluing(g));
    }
    GluingDatum wrong{MatrixQ::Identity(1, 1), MatrixQ::Identity(1, 1), MatrixQ::Zero(1, 1)};
    CHECK_FALSE(validate_gluing(wrong));

    CHECK_THROWS_AS(
        validate_gluing(GluingDatum{MatrixQ::Zero(2, 1), MatrixQ::Zero(2, 1), MatrixQ::Zero(1, 1)}),
        std::invalid_argument);
}

TEST_CASE("log of a unipotent total monodromy is nilpotent of small rank") {
    Rng rng(41);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 4;
        MatrixZ gram = MatrixZ::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i + 1; j < n; ++j) {
                gram(i, j) = entry(rng);
                gram(j, i) = -gram(i, j);
            }
        std::vector<VectorZ> cycles;
        const auto r = 1 + trial % 3;
        for (int k = 0; k < r; ++k) {
            VectorZ delta(n);
            for (Eigen::Index i = 0; i < n; ++i) delta(i) = entry(rng);
            cycles.push_back(delta);
        }
        const auto cfg = VanishingConfig::make(Lattice(gram, Symmetry::skew), cycles);
        const MatrixQ t = total_monodromy(cfg);
        if (!is_nilpotent(t - MatrixQ::Identity(n, n))) continue;  // only unipotent products
        const MatrixQ log_t = log_unipotent(t);
        CHECK(is_nilpotent(log_t));
        CHECK(rank(log_t) <= r);
    }
}
