#include "cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace nhho::cli {
namespace {

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

void write_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw UsageError("cannot open output file: " + path);
  os << text;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i > 0) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const Json& json) { return json.dump(2) + "\n"; }

void emit(const Document& doc, Format format, const std::string& output, std::ostream& out) {
  const std::string path = resolve_output_path(output);
  if (format == Format::kJson) {
    const std::string text = to_json_text(doc.json);
    if (path.empty()) {
      out << text;
    } else {
      write_file(path, text);
    }
    return;
  }

  if (path.empty()) {
    for (std::size_t i = 0; i < doc.tables.size(); ++i) {
      if (i > 0) out << '\n';
      if (doc.tables.size() > 1) out << "# " << doc.tables[i].name << '\n';
      out << to_csv(doc.tables[i]);
    }
    return;
  }
  if (doc.tables.size() == 1) {
    write_file(path, to_csv(doc.tables.front()));
    return;
  }
  const std::filesystem::path base(path);
  for (const auto& table : doc.tables) {
    auto p = base.parent_path() /
             (base.stem().string() + "_" + table.name + base.extension().string());
    write_file(p.string(), to_csv(table));
  }
}

}  // namespace nhho::cli
