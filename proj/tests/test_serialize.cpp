#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/random_corpus.hpp"
#include "conifold/serialize.hpp"
#include "conifold/tables.hpp"
#include "test_support.hpp"

using namespace conifold;
using testing::imat;
using testing::ivec;
using testing::mat;

TEST_CASE("matrix round trip keeps exact values and zero dimensions") {
    const MatrixQ m = mat({{1, -2}, {0, 7}}) / Rational(3);
    const json j = to_json(m);
    CHECK(matrix_from_json(j, 2, 2, "m") == m);

    const MatrixQ empty(0, 3);
    CHECK(matrix_from_json(to_json(empty), 0, 3, "m").cols() == 3);
    const MatrixQ narrow(3, 0);
    CHECK(matrix_from_json(to_json(narrow), 3, 0, "m").rows() == 3);

    CHECK_THROWS_AS(matrix_from_json(j, 3, 2, "m"), SchemaError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"1/0\"]]"), 1, 1, "m"), SchemaError);
}

TEST_CASE("zigzag round trip on random valid tuples") {
    Rng rng(51);
    for (int i = 0; i < 20; ++i) {
        const ZigZag z = random_valid_zigzag(rng);
        const ZigZag back = zigzag_from_json(to_json(z), "z");
        CHECK(back == z);
        // canonical serialization is stable under reparsing
        CHECK(canonical_dump(to_json(back)) == canonical_dump(to_json(z)));
    }
}

TEST_CASE("presentation round trip") {
    const ExtensionPresentation e = mu_corrected(2).presentation;
    const ExtensionPresentation back = presentation_from_json(to_json(e), "e");
    CHECK(back.sub == e.sub);
    CHECK(back.quot == e.quot);
    CHECK(back.class_params == e.class_params);
    CHECK(back.u_gamma == e.u_gamma);
}

TEST_CASE("vanishing config and gluing round trip") {
    const auto cfg = VanishingConfig::make(Lattice(imat({{0, 2}, {-2, 0}}), Symmetry::skew),
                                           {ivec({1, 0}), ivec({3, -1})});
    const auto back = vanishing_config_from_json(to_json(cfg), "cfg");
    CHECK(back.lattice.gram() == cfg.lattice.gram());
    CHECK(back.cycles.size() == 2);
    CHECK(back.cycles[1] == cfg.cycles[1]);

    const GluingDatum g{mat({{1}, {2}}), mat({{3, 4}}), mat({{11}})};
    const GluingDatum gback = gluing_from_json(to_json(g), "g");
    CHECK(gback.u == g.u);
    CHECK(gback.v == g.v);
    CHECK(gback.n == g.n);
    CHECK(validate_gluing(gback));
}

TEST_CASE("degeneration spec round trip") {
    DegenerationSpec spec;
    spec.fiber_dim = 3;
    spec.strata = {Stratum{"p1", 0, 1}, Stratum{"p2", 0, 1}};
    spec.lattice_config = VanishingConfig::make(
        Lattice(imat({{0, 1}, {-1, 0}}), Symmetry::skew), {ivec({1, 0})});
    spec.smooth_betti = std::vector<Eigen::Index>{1, 0, 1, 2};

    const DegenerationSpec back = degeneration_spec_from_json(to_json(spec), "spec");
    CHECK(back.fiber_dim == 3);
    CHECK(back.strata.size() == 2);
    CHECK(back.strata[1].label == "p2");
    REQUIRE(back.lattice_config.has_value());
    CHECK(back.lattice_config->cycles.size() == 1);
    CHECK(back.smooth_betti == spec.smooth_betti);
}

TEST_CASE("les witness round trip") {
    Rng rng(53);
    const LESWitness w = random_exact_les_witness(rng);
    const LESWitness back = les_witness_from_json(to_json(w), "w");
    CHECK(back.lo == w.lo);
    CHECK(back.h_special == w.h_special);
    CHECK(back.rank_psi_phi == w.rank_psi_phi);
}

TEST_CASE("schema errors name the offending field") {
    const json missing = json::parse(R"({"hm": 1, "h0": 1, "a": 0, "b": 0})");
    try {
        zigzag_data_from_json(missing, "zigzag");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("alpha") != std::string::npos);
    }

    const json badcell = json::parse(R"({"hm":0,"h0":0,"a":1,"b":1,
        "alpha": [[]], "beta": [["x"]], "gamma": []})");
    try {
        zigzag_data_from_json(badcell, "zigzag");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("beta") != std::string::npos);
    }
}

TEST_CASE("hostile inputs fail with schema errors, not crashes") {
    CHECK_THROWS_AS(zigzag_data_from_json(json::parse(R"({"hm": -1, "h0": 0, "a": 0, "b": 0,
        "alpha": [], "beta": [], "gamma": []})"), "z"), SchemaError);
    CHECK_THROWS_AS(zigzag_data_from_json(json::parse("[]"), "z"), SchemaError);
    CHECK_THROWS_AS(zigzag_data_from_json(json::parse(R"({"hm": "x"})"), "z"), SchemaError);

    // cycle of the wrong length
    CHECK_THROWS_AS(vanishing_config_from_json(json::parse(R"({"rank": 2,
        "gram": [[0, 1], [-1, 0]], "symmetry": "skew", "cycles": [[1]]})"), "c"), SchemaError);
    // symmetry mismatch surfaces as an input error too
    CHECK_THROWS_AS(vanishing_config_from_json(json::parse(R"({"rank": 2,
        "gram": [[0, 1], [1, 0]], "symmetry": "skew", "cycles": []})"), "c"),
                    std::invalid_argument);

    CHECK_THROWS_AS(les_witness_from_json(json::parse(R"({"lo": 0, "h_special": [1],
        "h_psi": [1], "h_phi": [1], "rank_special_psi": [0],
        "rank_psi_phi": ["x"]})"), "w"), SchemaError);
}

TEST_CASE("frozen canonical serialization of the corrected tuple") {
    const std::string expected = R"({
  "a": 1,
  "alpha": [
    [
      "0"
    ]
  ],
  "b": 1,
  "beta": [
    [
      "1"
    ]
  ],
  "gamma": [
    [
      "0"
    ]
  ],
  "h0": 1,
  "hm": 1,
  "label": "Q_U[3]"
}
)";
    CHECK(canonical_dump(to_json(mu_corrected(1).tuple)) == expected);
}

TEST_CASE("display strings for tables") {
    CHECK(display_tuple(mu_ic(1, 1).data()) == "(Q_U[3], 0, 0, 0, 0, 0)");
    CHECK(display_tuple(mu_skyscraper(1).data()) == "(0, Q, Q, 0, id, 0)");
    CHECK(display_tuple(mu_corrected(1).tuple.data()) == "(Q_U[3], Q, Q, 0, id, 0)");
    CHECK(display_tuple(mu_skyscraper(3).data()) == "(0, Q^3, Q^3, 0, id_3, 0)");
    CHECK(display_matrix(mat({{1, 1}, {0, 1}})) == "[[1, 1], [0, 1]]");
}

TEST_CASE("filtration serialization carries graded dimensions") {
    const MatrixQ n = mat({{0, 1}, {0, 0}});
    const json j = to_json(weight_filtration(n, 1));
    CHECK(j["center"] == 1);
    CHECK(j["graded_dims"]["0"] == 1);
    CHECK(j["graded_dims"]["2"] == 1);
    CHECK(j["steps"].is_array());
}

TEST_CASE("table output contains the stated rows") {
    const json t = tables_json();
    REQUIRE(t["table1"].size() == 4);
    CHECK(t["table1"][0]["object"] == "IC");
    CHECK(t["table1"][0]["display"] == "(Q_U[3], 0, 0, 0, 0, 0)");
    CHECK(t["table1"][1]["display"] == "(0, Q, Q, 0, id, 0)");
    CHECK(t["table1"][2]["display"] == "(Q_U[3], Q, Q, 0, id, 0)");
    CHECK(t["table1"][3]["display"] == "(0, Q^3, Q^3, 0, id_3, 0)");

    REQUIRE(t["table2"].size() == 3);
    CHECK(t["table2"][0]["class_params"] == json::array({"0"}));
    CHECK(t["table2"][0]["comment"] == "trivial extension class");
    // the block template shows the off-diagonal u inside beta
    CHECK(t["table2"][1]["display"] == "(0, Q^2, Q^2, 0, [[1, 1], [0, 1]], 0)");
    CHECK(t["table2"][2]["class_params"] == json::array({"1"}));

    // split and corrected rows share one zigzag serialization
    CHECK(t["table2"][0]["zigzag"] == t["table2"][2]["zigzag"]);
}
