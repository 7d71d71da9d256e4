#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"

namespace nhho::cli {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// A command's result in both serializations.
struct Document {
  Json json;
  std::vector<Table> tables;
};

// "%.17g"; non-finite values print as nan / inf / -inf.
std::string format_number(double v);

std::string to_csv(const Table& table);

// JSON numbers are written at round-trip precision; NaN becomes null.
std::string to_json_text(const Json& json);

// Writes to `output` (resolved via resolve_output_path) or to `out` when empty.
// Multi-table CSV to a file is split into <stem>_<table><ext>.
void emit(const Document& doc, Format format, const std::string& output, std::ostream& out);

}  // namespace nhho::cli
