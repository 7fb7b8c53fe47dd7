#include "rch/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rch/error.hpp"

namespace rch {
namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

void Table::add(std::vector<double> row) {
  if (row.size() != columns.size()) throw InvalidParameter("table row width differs from column count");
  rows.push_back(std::move(row));
}

std::vector<double> Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidParameter("no table column named " + name);
  const std::size_t c = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

std::string Table::to_csv() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << number(r[c]);
    os << '\n';
  }
  return os.str();
}

void ExperimentReport::param(const std::string& key, double value) { parameters.emplace_back(key, number(value)); }

void ExperimentReport::param(const std::string& key, const std::string& value) {
  parameters.emplace_back(key, value);
}

void ExperimentReport::add_fit(const std::string& name, const LineFit& fit, const std::string& description) {
  fits.push_back({name, fit, description});
}

const Verdict& ExperimentReport::verdict(const std::string& key) const {
  for (const auto& [k, v] : verdicts)
    if (k == key) return v;
  throw InvalidParameter("no verdict named " + key);
}

void ExperimentReport::add_verdict(const std::string& key, Verdict v) { verdicts.emplace_back(key, std::move(v)); }

bool ExperimentReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.pass; });
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["table"]["columns"] = table.columns;
  auto& rows = j["table"]["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    auto row = nlohmann::ordered_json::array();
    for (double v : r) row.push_back(json_number(v));
    rows.push_back(row);
  }
  auto& fits_json = j["fits"] = nlohmann::ordered_json::object();
  for (const auto& f : fits) {
    fits_json[f.name] = {{"slope", json_number(f.fit.slope)},
                         {"slope_stderr", json_number(f.fit.slope_stderr)},
                         {"intercept", json_number(f.fit.intercept)},
                         {"points", f.fit.points},
                         {"description", f.description}};
  }
  auto& verdicts_json = j["verdicts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : verdicts) {
    verdicts_json[k] = {{"pass", v.pass}, {"value", json_number(v.value)}, {"criterion", v.criterion},
                        {"detail", v.detail}};
  }
  j["all_pass"] = all_pass();
  return j.dump(2);
}

void ExperimentReport::write(const std::filesystem::path& dir, const std::string& plot_x,
                             const std::string& plot_y) const {
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "report.json") << to_json() << '\n';
  std::ofstream(dir / "table.csv") << table.to_csv();
  if (plot_x.empty() || plot_y.empty()) return;
  const auto xi = std::find(table.columns.begin(), table.columns.end(), plot_x);
  const auto yi = std::find(table.columns.begin(), table.columns.end(), plot_y);
  if (xi == table.columns.end() || yi == table.columns.end()) return;
  std::ofstream gp(dir / "plot.gp");
  gp << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set logscale y\n"
     << "set xlabel '" << plot_x << "'\n"
     << "set ylabel '" << plot_y << "'\n"
     << "set title '" << name << "'\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output 'plot.png'\n"
     << "plot 'table.csv' using " << (xi - table.columns.begin() + 1) << ":" << (yi - table.columns.begin() + 1)
     << " with linespoints\n";
}

}  // namespace rch
