#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "rch/fit.hpp"

namespace rch {

/// Numeric table with named columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add(std::vector<double> row);
  std::vector<double> column(const std::string& name) const;
  std::string to_csv() const;
};

struct Verdict {
  bool pass = false;
  /// Measured quantity the verdict is about.
  double value = 0.0;
  /// Human-readable threshold, e.g. "slope <= -0.2".
  std::string criterion;
  std::string detail;
};

struct NamedFit {
  std::string name;
  LineFit fit;
  std::string description;
};

struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  Table table;
  std::vector<NamedFit> fits;
  std::vector<std::pair<std::string, Verdict>> verdicts;

  void param(const std::string& key, double value);
  void param(const std::string& key, const std::string& value);
  void add_fit(const std::string& name, const LineFit& fit, const std::string& description);
  const Verdict& verdict(const std::string& key) const;
  void add_verdict(const std::string& key, Verdict v);
  bool all_pass() const;

  std::string to_json() const;
  /// Writes report.json, table.csv and plot.gp into `dir`.
  void write(const std::filesystem::path& dir, const std::string& plot_x = "", const std::string& plot_y = "") const;
};

}  // namespace rch
