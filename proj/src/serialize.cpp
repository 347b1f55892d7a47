#include "conifold/serialize.hpp"

#include <sstream>

namespace conifold {

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

// --- writers ---------------------------------------------------------------

json to_json(const Rational& q) { return to_string(q); }

json to_json(const MatrixQ& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const MatrixZ& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Integer& v = m(i, j);
            if (v.fits_slong_p())
                row.push_back(v.get_si());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Subspace& s) {
    return json{{"ambient_dim", s.ambient_dim()}, {"basis", to_json(s.basis())}};
}

json to_json(const Filtration& f) {
    json steps = json::array();
    for (const auto& [index, sub] : f.steps())
        steps.push_back(json{{"basis", to_json(sub.basis())}, {"index", index}});
    return json{{"ambient_dim", f.ambient_dim()}, {"center", f.center()}, {"steps", std::move(steps)}};
}

json to_json(const ZigZagData& z) {
    return json{{"hm", z.hm_dim()},          {"h0", z.h0_dim()},
                {"a", z.a_dim()},            {"b", z.b_dim()},
                {"alpha", to_json(z.alpha)}, {"beta", to_json(z.beta)},
                {"gamma", to_json(z.gamma)}, {"label", z.label}};
}

json to_json(const ZigZag& z) { return to_json(z.data()); }

json to_json(const ExtensionPresentation& e) {
    json params = json::array();
    for (const auto& p : e.class_params) params.push_back(to_string(p));
    return json{{"sub", to_json(e.sub)},         {"quot", to_json(e.quot)},
                {"u_alpha", to_json(e.u_alpha)}, {"u_beta", to_json(e.u_beta)},
                {"u_gamma", to_json(e.u_gamma)}, {"class_params", std::move(params)}};
}

json to_json(const Lattice& lattice) {
    return json{{"rank", lattice.rank()},
                {"gram", to_json(lattice.gram())},
                {"symmetry", lattice.symmetry() == Symmetry::symmetric ? "symmetric" : "skew"}};
}

json to_json(const VanishingConfig& cfg) {
    json j = to_json(cfg.lattice);
    json cycles = json::array();
    for (const auto& c : cfg.cycles) {
        json row = json::array();
        for (Eigen::Index i = 0; i < c.rows(); ++i) row.push_back(c(i).get_str());
        cycles.push_back(std::move(row));
    }
    j["cycles"] = std::move(cycles);
    return j;
}

json to_json(const GluingDatum& g) {
    return json{{"mprime_dim", g.mprime_dim()},
                {"mdprime_dim", g.mdprime_dim()},
                {"u", to_json(g.u)},
                {"v", to_json(g.v)},
                {"n", to_json(g.n)}};
}

json to_json(const DegenerationSpec& spec) {
    json strata = json::array();
    for (const auto& s : spec.strata)
        strata.push_back(json{{"label", s.label}, {"dim", s.dim}, {"milnor_rank", s.milnor_rank}});
    json j{{"fiber_dim", spec.fiber_dim}, {"strata", std::move(strata)}};
    if (spec.lattice_config) {
        json cfg = to_json(*spec.lattice_config);
        j["cycles"] = cfg["cycles"];
        cfg.erase("cycles");
        j["lattice"] = std::move(cfg);
    }
    if (spec.smooth_betti) j["smooth_betti"] = *spec.smooth_betti;
    return j;
}

json to_json(const LESWitness& w) {
    return json{{"lo", w.lo},
                {"h_special", w.h_special},
                {"h_psi", w.h_psi},
                {"h_phi", w.h_phi},
                {"rank_special_psi", w.rank_special_psi},
                {"rank_psi_phi", w.rank_psi_phi}};
}

json to_json(const WeightFiltration& w) {
    json graded = json::object();
    for (const auto& [weight, dim] : w.graded_dims()) graded[std::to_string(weight)] = dim;
    json j = to_json(w.filtration());
    j["graded_dims"] = std::move(graded);
    return j;
}

json to_json(const ZigZagValidation& v) {
    return json{{"complex_a_to_b", v.complex_a_to_b},
                {"complex_b_to_h0", v.complex_b_to_h0},
                {"exact_at_a", v.exact_at_a},
                {"exact_at_b", v.exact_at_b},
                {"failures", v.failures},
                {"valid", v.ok()}};
}

json to_json(const HardLefschetzReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"j", e.j},
                               {"dim_up", e.dim_up},
                               {"dim_down", e.dim_down},
                               {"bijective", e.bijective}});
    json j{{"entries", std::move(entries)}, {"all_pass", r.all_pass}};
    if (r.first_failing_j) j["first_failing_j"] = *r.first_failing_j;
    return j;
}

json to_json(const LESReport& r) {
    json j{{"exact", r.exact},
           {"rank_phi_special", r.rank_phi_special},
           {"alternating_sum", r.alternating_sum}};
    if (r.first_failure) j["first_failure"] = *r.first_failure;
    return j;
}

json to_json(const ClassificationReport& r) {
    json orbits = json::array();
    for (const auto& o : r.orbits) {
        json params = json::array();
        for (const auto& p : o.class_params) params.push_back(to_string(p));
        json support = json::array();
        for (std::size_t k = 0; k < o.support.size(); ++k)
            if (o.support[k]) support.push_back(k + 1);
        orbits.push_back(json{{"support", std::move(support)},
                              {"class_params", std::move(params)},
                              {"self_dual", o.self_dual},
                              {"full_support", o.full_support}});
    }
    return json{{"node_count", r.node_count},
                {"orbits", std::move(orbits)},
                {"orbit_count", r.orbits.size()},
                {"corrected_index", r.corrected_index},
                {"corrected_unique_full_support", r.corrected_unique_full_support},
                {"corrected_nontrivial_at_every_node", r.corrected_nontrivial_at_every_node}};
}

json to_json(const ExactSequenceReport& r) {
    return json{{"sub", to_json(r.sub)},
                {"total", to_json(r.total)},
                {"quot", to_json(r.quot)},
                {"pointwise_defect", r.pointwise_defect},
                {"verdict", r.verdict},
                {"failures", r.failures}};
}

json to_json(const QuasiUnipotence& q) {
    json j{{"quasi_unipotent", q.quasi_unipotent}};
    if (q.order) j["order"] = *q.order;
    return j;
}

// --- readers ---------------------------------------------------------------

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw SchemaError(where + ": missing field '" + name + "'");
    return *it;
}

long int_field(const json& j, const char* name, const std::string& where) {
    const json& f = field(j, name, where);
    if (!f.is_number_integer()) throw SchemaError(where + "." + name + ": expected an integer");
    return f.get<long>();
}

std::string string_field(const json& j, const char* name, const std::string& where) {
    const json& f = field(j, name, where);
    if (!f.is_string()) throw SchemaError(where + "." + name + ": expected a string");
    return f.get<std::string>();
}

std::vector<Eigen::Index> index_vector(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of integers");
    std::vector<Eigen::Index> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw SchemaError(where + ": expected an array of integers");
        out.push_back(v.get<long>());
    }
    return out;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where + ": " + e.what());
    }
    throw SchemaError(where + ": expected an integer or a 'p/q' string");
}

MatrixQ matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols,
                         const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
    if (static_cast<Eigen::Index>(j.size()) != rows)
        throw SchemaError(where + ": expected " + std::to_string(rows) + " rows, got " +
                          std::to_string(j.size()));
    MatrixQ m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw SchemaError(where + "[" + std::to_string(i) + "]: expected " +
                              std::to_string(cols) + " entries");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(i, c) = rational_from_json(row[static_cast<std::size_t>(c)],
                                         where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return m;
}

MatrixQ square_matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    return matrix_from_json(j, n, n, where);
}

MatrixZ int_matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols,
                             const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
    if (static_cast<Eigen::Index>(j.size()) != rows)
        throw SchemaError(where + ": expected " + std::to_string(rows) + " rows");
    MatrixZ m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw SchemaError(where + "[" + std::to_string(i) + "]: expected " +
                              std::to_string(cols) + " entries");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json& v = row[static_cast<std::size_t>(c)];
            const std::string cell =
                where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]";
            try {
                if (v.is_number_integer())
                    m(i, c) = Integer(v.get<long>());
                else if (v.is_string())
                    m(i, c) = parse_integer(v.get<std::string>());
                else
                    throw SchemaError(cell + ": expected an integer");
            } catch (const std::invalid_argument& e) {
                throw SchemaError(cell + ": " + e.what());
            }
        }
    }
    return m;
}

ZigZagData zigzag_data_from_json(const json& j, const std::string& where) {
    const long hm = int_field(j, "hm", where);
    const long h0 = int_field(j, "h0", where);
    const long a = int_field(j, "a", where);
    const long b = int_field(j, "b", where);
    if (hm < 0 || h0 < 0 || a < 0 || b < 0)
        throw SchemaError(where + ": negative dimension");
    ZigZagData d;
    d.alpha = matrix_from_json(field(j, "alpha", where), a, hm, where + ".alpha");
    d.beta = matrix_from_json(field(j, "beta", where), b, a, where + ".beta");
    d.gamma = matrix_from_json(field(j, "gamma", where), h0, b, where + ".gamma");
    d.label = j.contains("label") ? string_field(j, "label", where) : "";
    return d;
}

ZigZag zigzag_from_json(const json& j, const std::string& where) {
    return ZigZag(zigzag_data_from_json(j, where));
}

ExtensionPresentation presentation_from_json(const json& j, const std::string& where) {
    ExtensionPresentation e{zigzag_from_json(field(j, "sub", where), where + ".sub"),
                            zigzag_from_json(field(j, "quot", where), where + ".quot"),
                            MatrixQ(),
                            MatrixQ(),
                            MatrixQ(),
                            {}};
    e.u_alpha = matrix_from_json(field(j, "u_alpha", where), e.sub.a_dim(), e.quot.hm_dim(),
                                 where + ".u_alpha");
    e.u_beta = matrix_from_json(field(j, "u_beta", where), e.sub.b_dim(), e.quot.a_dim(),
                                where + ".u_beta");
    e.u_gamma = matrix_from_json(field(j, "u_gamma", where), e.sub.h0_dim(), e.quot.b_dim(),
                                 where + ".u_gamma");
    const json& params = field(j, "class_params", where);
    if (!params.is_array()) throw SchemaError(where + ".class_params: expected an array");
    for (std::size_t i = 0; i < params.size(); ++i)
        e.class_params.push_back(
            rational_from_json(params[i], where + ".class_params[" + std::to_string(i) + "]"));
    return e;
}

VanishingConfig vanishing_config_from_json(const json& j, const std::string& where) {
    const long rank = int_field(j, "rank", where);
    if (rank < 0) throw SchemaError(where + ".rank: negative");
    const std::string sym = string_field(j, "symmetry", where);
    if (sym != "symmetric" && sym != "skew")
        throw SchemaError(where + ".symmetry: expected 'symmetric' or 'skew'");
    MatrixZ gram = int_matrix_from_json(field(j, "gram", where), rank, rank, where + ".gram");
    Lattice lattice(std::move(gram), sym == "symmetric" ? Symmetry::symmetric : Symmetry::skew);

    std::vector<VectorZ> cycles;
    const json& jc = field(j, "cycles", where);
    if (!jc.is_array()) throw SchemaError(where + ".cycles: expected an array");
    for (std::size_t i = 0; i < jc.size(); ++i) {
        const MatrixZ row = int_matrix_from_json(json::array({jc[i]}), 1, rank,
                                                 where + ".cycles[" + std::to_string(i) + "]");
        cycles.push_back(row.transpose());
    }
    return VanishingConfig::make(std::move(lattice), std::move(cycles));
}

GluingDatum gluing_from_json(const json& j, const std::string& where) {
    const long mprime = int_field(j, "mprime_dim", where);
    const long mdprime = int_field(j, "mdprime_dim", where);
    if (mprime < 0 || mdprime < 0) throw SchemaError(where + ": negative dimension");
    GluingDatum g;
    g.u = matrix_from_json(field(j, "u", where), mdprime, mprime, where + ".u");
    g.v = matrix_from_json(field(j, "v", where), mprime, mdprime, where + ".v");
    g.n = matrix_from_json(field(j, "n", where), mprime, mprime, where + ".n");
    return g;
}

DegenerationSpec degeneration_spec_from_json(const json& j, const std::string& where) {
    DegenerationSpec spec;
    spec.fiber_dim = static_cast<int>(int_field(j, "fiber_dim", where));
    const json& strata = field(j, "strata", where);
    if (!strata.is_array()) throw SchemaError(where + ".strata: expected an array");
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const std::string swhere = where + ".strata[" + std::to_string(i) + "]";
        Stratum s;
        s.label = strata[i].contains("label") ? string_field(strata[i], "label", swhere) : "";
        s.dim = static_cast<int>(int_field(strata[i], "dim", swhere));
        s.milnor_rank = int_field(strata[i], "milnor_rank", swhere);
        spec.strata.push_back(std::move(s));
    }
    if (j.contains("lattice")) {
        // nested lattice object + top-level cycle list
        json flat = field(j, "lattice", where);
        flat["cycles"] = field(j, "cycles", where);
        spec.lattice_config = vanishing_config_from_json(flat, where + ".lattice");
    } else if (j.contains("gram")) {
        spec.lattice_config = vanishing_config_from_json(j, where);
    }
    if (j.contains("smooth_betti"))
        spec.smooth_betti = index_vector(j["smooth_betti"], where + ".smooth_betti");
    return spec;
}

LESWitness les_witness_from_json(const json& j, const std::string& where) {
    LESWitness w;
    w.lo = static_cast<int>(int_field(j, "lo", where));
    w.h_special = index_vector(field(j, "h_special", where), where + ".h_special");
    w.h_psi = index_vector(field(j, "h_psi", where), where + ".h_psi");
    w.h_phi = index_vector(field(j, "h_phi", where), where + ".h_phi");
    w.rank_special_psi =
        index_vector(field(j, "rank_special_psi", where), where + ".rank_special_psi");
    w.rank_psi_phi = index_vector(field(j, "rank_psi_phi", where), where + ".rank_psi_phi");
    if (w.h_psi.size() != w.h_special.size() || w.h_phi.size() != w.h_special.size() ||
        w.rank_special_psi.size() != w.h_special.size() ||
        w.rank_psi_phi.size() != w.h_special.size())
        throw SchemaError(where + ": all sequences must have the same length");
    return w;
}

// --- display ---------------------------------------------------------------

std::string display_matrix(const MatrixQ& m) {
    if (m.rows() == 0 || m.cols() == 0 || is_zero(m)) return "0";
    if (is_identity(m)) return m.rows() == 1 ? "id" : "id_" + std::to_string(m.rows());
    std::ostringstream out;
    out << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i) out << ", ";
        out << "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ", ";
            out << to_string(m(i, j));
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

namespace {

std::string display_space(Eigen::Index dim) {
    if (dim == 0) return "0";
    if (dim == 1) return "Q";
    return "Q^" + std::to_string(dim);
}

}  // namespace

std::string display_tuple(const ZigZagData& z) {
    std::ostringstream out;
    out << "(" << (z.label.empty() ? "0" : z.label) << ", " << display_space(z.a_dim()) << ", "
        << display_space(z.b_dim()) << ", " << display_matrix(z.alpha) << ", "
        << display_matrix(z.beta) << ", " << display_matrix(z.gamma) << ")";
    return out.str();
}

}  // namespace conifold
