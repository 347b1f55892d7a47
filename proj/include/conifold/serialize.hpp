#pragma once

#include <json.hpp>

#include "conifold/degeneration.hpp"
#include "conifold/monodromy.hpp"
#include "conifold/zigzag.hpp"

// All of the library's file formats in one place. Canonical serialization:
// object keys sorted (nlohmann default), rationals as lowest-terms "p/q"
// strings ("p" when integral), two-space indentation, trailing newline.
// Golden files use exactly this form.

namespace conifold {

using json = nlohmann::json;

struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string canonical_dump(const json& j);

json to_json(const Rational& q);
json to_json(const MatrixQ& m);
json to_json(const MatrixZ& m);
json to_json(const Subspace& s);
json to_json(const Filtration& f);
json to_json(const ZigZagData& z);
json to_json(const ZigZag& z);
json to_json(const ExtensionPresentation& e);
json to_json(const Lattice& lattice);
json to_json(const VanishingConfig& cfg);
json to_json(const GluingDatum& g);
json to_json(const DegenerationSpec& spec);
json to_json(const LESWitness& w);
json to_json(const WeightFiltration& w);

json to_json(const ZigZagValidation& v);
json to_json(const HardLefschetzReport& r);
json to_json(const LESReport& r);
json to_json(const ClassificationReport& r);
json to_json(const ExactSequenceReport& r);
json to_json(const QuasiUnipotence& q);

// Parsers throw SchemaError naming the offending field. Matrix parsers take
// expected dimensions because a matrix with zero rows serializes as [].
Rational rational_from_json(const json& j, const std::string& where);
MatrixQ matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols,
                         const std::string& where);
MatrixQ square_matrix_from_json(const json& j, const std::string& where);
MatrixZ int_matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols,
                             const std::string& where);

ZigZagData zigzag_data_from_json(const json& j, const std::string& where = "zigzag");
ZigZag zigzag_from_json(const json& j, const std::string& where = "zigzag");
ExtensionPresentation presentation_from_json(const json& j,
                                             const std::string& where = "presentation");
VanishingConfig vanishing_config_from_json(const json& j, const std::string& where = "config");
GluingDatum gluing_from_json(const json& j, const std::string& where = "gluing");
DegenerationSpec degeneration_spec_from_json(const json& j, const std::string& where = "spec");
LESWitness les_witness_from_json(const json& j, const std::string& where = "witness");

/// Compact one-line tuple display "(L, Q^a, Q^b, alpha, beta, gamma)" used
/// in the rendered tables.
std::string display_tuple(const ZigZagData& z);
std::string display_matrix(const MatrixQ& m);

}  // namespace conifold
