#include "alopc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alopc/errors.hpp"

namespace alopc {

namespace {

using nlohmann::json;

double parse_number(std::string_view token) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("cannot parse \"" + std::string(token) + "\" as a number");
  }
  return value;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_entry_token(std::string_view token) {
  token = trimmed(token);
  if (token.empty()) throw ParseError("empty matrix entry");
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return parse_number(token);
  const double num = parse_number(trimmed(token.substr(0, slash)));
  const double den = parse_number(trimmed(token.substr(slash + 1)));
  if (den == 0.0) {
    throw ParseError("zero denominator in fraction \"" + std::string(token) + "\"");
  }
  return num / den;
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

PcMatrix parse_json_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object at the top level");
  if (!doc.contains("group") || !doc["group"].is_string()) {
    throw ParseError("missing string field \"group\"");
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("missing array field \"entries\"");
  }
  const AloGroup& group = AloGroup::of(doc["group"].get<std::string>());

  std::vector<std::vector<double>> entries;
  for (const auto& row : doc["entries"]) {
    if (!row.is_array()) throw ParseError("\"entries\" must be an array of arrays");
    std::vector<double> values;
    for (const auto& cell : row) {
      if (cell.is_number()) {
        values.push_back(cell.get<double>());
      } else if (cell.is_string()) {
        values.push_back(parse_entry_token(cell.get<std::string>()));
      } else {
        throw ParseError("matrix entries must be numbers or fraction strings");
      }
    }
    entries.push_back(std::move(values));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("\"labels\" must be an array");
    for (const auto& label : doc["labels"]) {
      if (!label.is_string()) throw ParseError("labels must be strings");
      labels.push_back(label.get<std::string>());
    }
  }
  return PcMatrix::build(group, entries, std::move(labels));
}

PcMatrix parse_csv_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = text.find('\n', start);
    const std::string_view line =
        trimmed(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (!line.empty()) lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("empty CSV input");

  auto split = [](std::string_view line) {
    std::vector<std::string_view> cells;
    size_t from = 0;
    while (true) {
      const size_t comma = line.find(',', from);
      cells.push_back(trimmed(line.substr(
          from, comma == std::string_view::npos ? comma : comma - from)));
      if (comma == std::string_view::npos) break;
      from = comma + 1;
    }
    return cells;
  };

  const auto header = split(lines[0]);
  if (header.size() != 2 || header[0] != "group") {
    throw ParseError("CSV line 1 must be \"group,<id>\"");
  }
  const AloGroup& group = AloGroup::of(header[1]);

  std::vector<std::vector<double>> entries;
  for (size_t li = 1; li < lines.size(); ++li) {
    std::vector<double> row;
    for (const auto& cell : split(lines[li])) {
      try {
        row.push_back(parse_entry_token(cell));
      } catch (const ParseError& e) {
        throw ParseError("CSV line " + std::to_string(li + 1) + ": " + e.what());
      }
    }
    entries.push_back(std::move(row));
  }
  return PcMatrix::build(group, entries);
}

std::string to_json(const PcMatrix& matrix) {
  json doc;
  doc["group"] = std::string(matrix.group().name());
  doc["labels"] = matrix.labels();
  json rows = json::array();
  for (int i = 0; i < matrix.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < matrix.size(); ++j) row.push_back(matrix.at(i, j));
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string to_csv(const PcMatrix& matrix) {
  std::ostringstream out;
  out << "group," << matrix.group().name() << "\n";
  for (int i = 0; i < matrix.size(); ++i) {
    for (int j = 0; j < matrix.size(); ++j) {
      if (j > 0) out << ",";
      out << format_double(matrix.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path.string() + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

PcMatrix load_matrix(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  const std::string text = read_file(path);
  try {
    if (ext == ".json") return parse_json_matrix(text);
    if (ext == ".csv") return parse_csv_matrix(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  throw ParseError("unsupported matrix file extension \"" + ext +
                   "\" (expected .json or .csv)");
}

void save_matrix(const PcMatrix& matrix, const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  std::string payload;
  if (ext == ".json") {
    payload = to_json(matrix);
  } else if (ext == ".csv") {
    payload = to_csv(matrix);
  } else {
    throw ParseError("unsupported matrix file extension \"" + ext +
                     "\" (expected .json or .csv)");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open \"" + path.string() + "\" for writing");
  out << payload;
}

}  // namespace alopc
