#include "conifold/random_corpus.hpp"

namespace conifold {

Rational random_rational(Rng& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return rational(num(rng), den(rng));
}

MatrixQ random_integer_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    MatrixQ m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rational(entry(rng));
    return m;
}

MatrixQ random_unimodular(Rng& rng, Eigen::Index n, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    MatrixQ upper = MatrixQ::Identity(n, n);
    MatrixQ lower = MatrixQ::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            upper(i, j) = Rational(entry(rng));
            lower(j, i) = Rational(entry(rng));
        }
    return lower * upper;
}

MatrixQ random_nilpotent(Rng& rng, Eigen::Index n) {
    if (n == 0) return MatrixQ(0, 0);
    // random partition of n into Jordan block sizes
    std::vector<Eigen::Index> blocks;
    Eigen::Index remaining = n;
    while (remaining > 0) {
        std::uniform_int_distribution<Eigen::Index> size(1, remaining);
        const Eigen::Index s = size(rng);
        blocks.push_back(s);
        remaining -= s;
    }
    MatrixQ j = MatrixQ::Zero(n, n);
    Eigen::Index offset = 0;
    for (const Eigen::Index s : blocks) {
        for (Eigen::Index i = 0; i + 1 < s; ++i) j(offset + i, offset + i + 1) = 1;
        offset += s;
    }
    const MatrixQ p = random_unimodular(rng, n);
    return p * j * *inverse(p);
}

MatrixQ random_unipotent_upper(Rng& rng, Eigen::Index n, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    MatrixQ m = MatrixQ::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) m(i, j) = Rational(entry(rng));
    return m;
}

ZigZag transform_zigzag(const ZigZag& z, const MatrixQ& p_hm, const MatrixQ& p_a,
                        const MatrixQ& p_b, const MatrixQ& p_h0) {
    const auto inv = [](const MatrixQ& p) {
        auto i = inverse(p);
        if (!i) throw std::invalid_argument("transform_zigzag: singular base change");
        return *i;
    };
    return ZigZag(p_a * z.alpha() * inv(p_hm), p_b * z.beta() * inv(p_a),
                  p_h0 * z.gamma() * inv(p_b), z.label());
}

ZigZag random_valid_zigzag(Rng& rng, Eigen::Index max_multiplicity) {
    std::uniform_int_distribution<Eigen::Index> mult(0, max_multiplicity);
    // boundary simples and identity intervals; the two middle simples are
    // excluded because they break exactness
    const ZigZag simple_hm(MatrixQ(0, 1), MatrixQ(0, 0), MatrixQ(0, 0), "");
    const ZigZag simple_h0(MatrixQ(0, 0), MatrixQ(0, 0), MatrixQ(1, 0), "");
    const ZigZag interval_hm_a(MatrixQ::Identity(1, 1), MatrixQ(0, 1), MatrixQ(0, 0), "");
    const ZigZag interval_b_h0(MatrixQ(0, 0), MatrixQ(1, 0), MatrixQ::Identity(1, 1), "");

    ZigZag z = zero_zigzag();
    const ZigZag* pieces[] = {&simple_hm, &simple_h0, &interval_hm_a, &interval_b_h0};
    for (const ZigZag* piece : pieces) {
        const Eigen::Index count = mult(rng);
        for (Eigen::Index i = 0; i < count; ++i) z = direct_sum(z, *piece);
    }
    const Eigen::Index sky_count = mult(rng);
    if (sky_count > 0) z = direct_sum(z, mu_skyscraper(sky_count));

    return transform_zigzag(z, random_unimodular(rng, z.hm_dim()), random_unimodular(rng, z.a_dim()),
                            random_unimodular(rng, z.b_dim()), random_unimodular(rng, z.h0_dim()));
}

LESWitness random_exact_les_witness(Rng& rng, int lo, int periods, Eigen::Index max_rank) {
    const int terms = 3 * periods;
    std::uniform_int_distribution<Eigen::Index> rank_dist(0, max_rank);

    // connecting ranks rho_i for d_i : C_i -> C_{i+1}; zero at both ends,
    // dims C_i = rho_{i-1} + rho_i make the complex exact everywhere
    std::vector<Eigen::Index> rho(static_cast<std::size_t>(terms), 0);
    for (int i = 0; i + 1 < terms; ++i) rho[static_cast<std::size_t>(i)] = rank_dist(rng);

    const auto rho_at = [&](int i) -> Eigen::Index {
        return (i < 0 || i >= terms) ? 0 : rho[static_cast<std::size_t>(i)];
    };
    std::vector<Eigen::Index> dims(static_cast<std::size_t>(terms));
    for (int i = 0; i < terms; ++i) dims[static_cast<std::size_t>(i)] = rho_at(i - 1) + rho_at(i);

    // materialize d_i = P_{i+1}^{-1} . shift . P_i with random base changes
    std::vector<MatrixQ> base_changes;
    base_changes.reserve(static_cast<std::size_t>(terms));
    for (int i = 0; i < terms; ++i)
        base_changes.push_back(random_unimodular(rng, dims[static_cast<std::size_t>(i)]));
    std::vector<MatrixQ> maps;
    for (int i = 0; i + 1 < terms; ++i) {
        // shift (x, y) -> (y, 0) in the split coordinates of C_i and C_{i+1}
        MatrixQ shift = MatrixQ::Zero(dims[static_cast<std::size_t>(i + 1)],
                                      dims[static_cast<std::size_t>(i)]);
        shift.topRightCorner(rho_at(i), rho_at(i)) = MatrixQ::Identity(rho_at(i), rho_at(i));
        maps.push_back(*inverse(base_changes[static_cast<std::size_t>(i + 1)]) * shift *
                       base_changes[static_cast<std::size_t>(i)]);
    }

    LESWitness w;
    w.lo = lo;
    for (int k = 0; k < periods; ++k) {
        w.h_special.push_back(dims[static_cast<std::size_t>(3 * k)]);
        w.h_psi.push_back(dims[static_cast<std::size_t>(3 * k + 1)]);
        w.h_phi.push_back(dims[static_cast<std::size_t>(3 * k + 2)]);
        w.rank_special_psi.push_back(rank(maps[static_cast<std::size_t>(3 * k)]));
        w.rank_psi_phi.push_back(rank(maps[static_cast<std::size_t>(3 * k + 1)]));
    }
    return w;
}

}  // namespace conifold
