#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "alopc/pc_matrix.hpp"

namespace alopc {

/// Parses an entry token: a decimal number or an exact fraction like "5/2".
double parse_entry_token(std::string_view token);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

/// { "group": "...", "labels": ["..."], "entries": [[...]] }.
/// Entries may be numbers or strings; strings may carry fractions. Labels
/// are optional.
PcMatrix parse_json_matrix(std::string_view text);

/// First line "group,<id>", then one comma-separated row per alternative.
/// Fractions allowed.
PcMatrix parse_csv_matrix(std::string_view text);

std::string to_json(const PcMatrix& matrix);
std::string to_csv(const PcMatrix& matrix);

/// Dispatches on the .json / .csv extension.
PcMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const PcMatrix& matrix, const std::filesystem::path& path);

}  // namespace alopc
