#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conifold/serialize.hpp"

namespace conifold {

struct TableRow {
    std::string object;
    ZigZagData zigzag;
    std::string display;
    std::optional<std::vector<Rational>> class_params;
    std::string comment;
};

/// Standard zig-zags at an ordinary double point: minimal extension,
/// skyscraper, corrected object, r-fold point sum (rendered at r = 3).
/// Every row comes from a live library call.
std::vector<TableRow> standard_zigzag_table();

/// Extension templates: split, the block template with off-diagonal u in
/// the beta slot, and the corrected non-split class.
std::vector<TableRow> extension_template_table();

json tables_json();
std::string tables_markdown();

struct GoldenMismatch {
    std::string file;
    std::string row;  // first differing row, when identifiable
};

/// Compares the live table output against golden/tables.json and
/// golden/tables.md, bit-exact. Returns std::nullopt on a perfect match.
std::optional<GoldenMismatch> compare_tables_to_golden(const std::string& golden_dir);

}  // namespace conifold
