#include "conifold/tables.hpp"

#include <fstream>
#include <sstream>

namespace conifold {

std::vector<TableRow> standard_zigzag_table() {
    std::vector<TableRow> rows;

    const ZigZag ic = mu_ic(1, 1);
    rows.push_back({"IC", ic.data(), display_tuple(ic.data()), std::nullopt, "minimal extension"});

    const ZigZag sky = mu_skyscraper(1);
    rows.push_back(
        {"skyscraper", sky.data(), display_tuple(sky.data()), std::nullopt, "point-supported rank-one object"});

    const CorrectedObject corrected = mu_corrected(1);
    rows.push_back({"corrected", corrected.tuple.data(), display_tuple(corrected.tuple.data()),
                    std::nullopt, "unique corrected non-split class"});

    ZigZag multi = direct_sum(mu_skyscraper(1), direct_sum(mu_skyscraper(1), mu_skyscraper(1)));
    rows.push_back({"r-fold sum", multi.data(), display_tuple(multi.data()), std::nullopt,
                    "multi-node point sum (r = 3)"});
    return rows;
}

std::vector<TableRow> extension_template_table() {
    std::vector<TableRow> rows;

    const ExtensionPresentation split = split_presentation(mu_ic(1, 1), mu_skyscraper(1));
    const ZigZag split_tuple = assemble_checked(split);
    rows.push_back({"split extension", split_tuple.data(), display_tuple(split_tuple.data()),
                    split.class_params, "trivial extension class"});

    // smallest template whose beta block actually shows the off-diagonal u
    ExtensionPresentation blocky = split_presentation(mu_skyscraper(1), mu_skyscraper(1),
                                                      std::vector<Rational>{Rational(1)});
    blocky.u_beta = MatrixQ::Identity(1, 1);
    const ZigZag block_tuple = assemble_checked(blocky);
    rows.push_back({"general extension", block_tuple.data(), display_tuple(block_tuple.data()),
                    blocky.class_params,
                    "u in the beta block records the extension class modulo im beta"});

    const CorrectedObject corrected = mu_corrected(1);
    rows.push_back({"corrected non-split extension", corrected.tuple.data(),
                    display_tuple(corrected.tuple.data()), corrected.presentation.class_params,
                    "unique nontrivial self-dual class"});
    return rows;
}

namespace {

json rows_to_json(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json j{{"object", row.object},
               {"zigzag", to_json(row.zigzag)},
               {"display", row.display},
               {"comment", row.comment}};
        if (row.class_params) {
            json params = json::array();
            for (const auto& p : *row.class_params) params.push_back(to_string(p));
            j["class_params"] = std::move(params);
        }
        out.push_back(std::move(j));
    }
    return out;
}

void render_markdown_table(std::ostream& out, const std::string& title,
                           const std::vector<TableRow>& rows, bool with_params) {
    out << "## " << title << "\n\n";
    if (with_params)
        out << "| Object | Zig-zag | Class | Comments |\n|---|---|---|---|\n";
    else
        out << "| Object | Zig-zag | Comments |\n|---|---|---|\n";
    for (const auto& row : rows) {
        out << "| " << row.object << " | " << row.display << " | ";
        if (with_params) {
            if (row.class_params) {
                out << "(";
                for (std::size_t i = 0; i < row.class_params->size(); ++i) {
                    if (i) out << ", ";
                    out << to_string((*row.class_params)[i]);
                }
                out << ")";
            } else {
                out << "—";
            }
            out << " | ";
        }
        out << row.comment << " |\n";
    }
    out << "\n";
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// first row whose serialization differs, by object name
std::string first_differing_row(const json& expected, const json& actual) {
    for (const auto& key : {"table1", "table2"}) {
        if (!expected.contains(key) || !actual.contains(key)) return std::string("table ") + key;
        const json& e = expected[key];
        const json& a = actual[key];
        for (std::size_t i = 0; i < std::max(e.size(), a.size()); ++i) {
            if (i >= e.size() || i >= a.size()) return std::string(key) + " row count";
            if (e[i] != a[i]) {
                std::string name = e[i].contains("object") ? e[i]["object"].get<std::string>()
                                                           : std::to_string(i);
                return std::string(key) + " row '" + name + "'";
            }
        }
    }
    return "file-level difference";
}

}  // namespace

json tables_json() {
    return json{{"table1", rows_to_json(standard_zigzag_table())},
                {"table2", rows_to_json(extension_template_table())}};
}

std::string tables_markdown() {
    std::ostringstream out;
    render_markdown_table(out, "Standard zig-zags at an ordinary double point",
                          standard_zigzag_table(), false);
    render_markdown_table(out, "Extension presentations in block form", extension_template_table(),
                          true);
    return out.str();
}

std::optional<GoldenMismatch> compare_tables_to_golden(const std::string& golden_dir) {
    const std::string json_path = golden_dir + "/tables.json";
    const std::string md_path = golden_dir + "/tables.md";

    const auto golden_json = read_file(json_path);
    if (!golden_json) return GoldenMismatch{json_path, "missing file"};
    const std::string live_json = canonical_dump(tables_json());
    if (*golden_json != live_json) {
        std::string row = "unparseable golden file";
        try {
            row = first_differing_row(json::parse(*golden_json), tables_json());
        } catch (const json::parse_error&) {
        }
        return GoldenMismatch{json_path, row};
    }

    const auto golden_md = read_file(md_path);
    if (!golden_md) return GoldenMismatch{md_path, "missing file"};
    if (*golden_md != tables_markdown()) return GoldenMismatch{md_path, "markdown differs"};
    return std::nullopt;
}

}  // namespace conifold
