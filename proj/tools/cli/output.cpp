#include "output.hpp"

#include <fmt/format.h>

namespace wigflow::cli {

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> header)
    : out_(path, std::ios::binary), columns_(header.size()) {
  if (!out_) throw IoError("cannot open " + path.string() + " for writing");
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (k > 0) out_ << ',';
    out_ << header[k];
  }
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != columns_) throw Error("CsvWriter: row width does not match header");
  line_.clear();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) line_ += ',';
    fmt::format_to(std::back_inserter(line_), "{:.17g}", values[k]);
  }
  line_ += '\n';
  out_ << line_;
  if (!out_) throw IoError("write failed");
}

void write_field_csv(const std::filesystem::path& path, const Field2D& field, const std::string& value_name) {
  CsvWriter csv(path, {"q", "p", value_name});
  for (std::size_t i = 0; i < field.rows(); ++i) {
    for (std::size_t k = 0; k < field.cols(); ++k) csv.row({field.qgrid()[i], field.pgrid()[k], field(i, k)});
  }
}

Manifest::Manifest(const std::string& command, const RunConfig& cfg) {
  doc_["version"] = kVersion;
  doc_["command"] = command;
  doc_["hbar"] = cfg.hbar;
  doc_["mass"] = cfg.mass;
  doc_["grid"] = {{"n", cfg.grid_n}, {"q_span", cfg.q_span}};
  doc_["parameters"] = nlohmann::ordered_json::object();
  doc_["files"] = nlohmann::ordered_json::array();
}

void Manifest::write(const std::filesystem::path& dir) const { write_json(dir / "manifest.json", doc_); }

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
}

}  // namespace wigflow::cli
