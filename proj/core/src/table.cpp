#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "moddev/experiment.hpp"

namespace moddev {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

Cell linearized(const Table& table, std::size_t col, const Cell& cell, bool linear) {
  if (!linear || !table.log_probability[col]) return cell;
  if (const double* v = std::get_if<double>(&cell)) return Cell{std::exp(*v)};
  return cell;
}

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string render_csv(const Table& table, bool linear) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += csv_field(linearized(table, c, row[c], linear));
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, bool linear) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Cell cell = linearized(table, c, row[c], linear);
      struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        // nlohmann serializes non-finite numbers as null, which keeps the
        // document valid JSON.
        nlohmann::ordered_json operator()(double v) const { return v; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
      };
      obj[table.columns[c]] = std::visit(Visitor{}, cell);
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

void write_output(const Table& table, const OutputSpec& output, bool linear) {
  const std::string rendered = output.format == OutputFormat::Csv
                                   ? render_csv(table, linear)
                                   : render_json(table, linear);
  if (output.path.empty()) {
    std::cout << rendered;
    return;
  }
  std::ofstream file(output.path, std::ios::binary);
  if (!file) fail(errc::config_error, "cannot open output path " + output.path);
  file << rendered;
  if (!file) fail(errc::config_error, "failed writing output path " + output.path);
}

}  // namespace moddev
