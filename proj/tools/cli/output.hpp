#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "wigflow/grid.hpp"

namespace wigflow::cli {

/// Round-trip decimal form with 17 significant digits.
std::string format_number(double x);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);

  void row(std::span<const double> values);
  void row(std::initializer_list<double> values) { row(std::span<const double>(values.begin(), values.size())); }

 private:
  std::ofstream out_;
  std::size_t columns_;
  std::string line_;
};

/// One "q,p,W" row per node, q outer.
void write_field_csv(const std::filesystem::path& path, const Field2D& field, const std::string& value_name);

/// Parameters and file list of one output set, written as manifest.json.
class Manifest {
 public:
  Manifest(const std::string& command, const RunConfig& cfg);

  nlohmann::ordered_json& params() { return doc_["parameters"]; }
  void add_file(const std::string& name) { doc_["files"].push_back(name); }
  void write(const std::filesystem::path& dir) const;

 private:
  nlohmann::ordered_json doc_;
};

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

}  // namespace wigflow::cli
