#include "rch/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rch/error.hpp"

namespace rch::io {
namespace {

static_assert(std::endian::native == std::endian::little, "binary field format assumes a little-endian host");

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, mode);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_csv(const Field& f, const std::filesystem::path& path) {
  auto out = open_out(path, std::ios::out);
  out << "x,value\n";
  char buf[64];
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", f.grid().x(i), f[i]);
    out << buf;
  }
}

Field read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
    std::istringstream row(line);
    double x = 0.0, v = 0.0;
    char comma = 0;
    if (!(row >> x >> comma >> v) || comma != ',') throw Error("malformed CSV row: " + line);
    xs.push_back(x);
    vs.push_back(v);
  }
  if (xs.empty()) throw Error("empty field file " + path.string());
  const PeriodicGrid grid(-2.0 * xs.front(), vs.size());
  return Field(grid, std::move(vs));
}

void write_binary(const Field& f, const std::filesystem::path& path) {
  auto out = open_out(path, std::ios::out | std::ios::binary);
  const double length = f.grid().length();
  const std::uint64_t n = f.size();
  out.write(reinterpret_cast<const char*>(&length), sizeof length);
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(f.values().data()), static_cast<std::streamsize>(n * sizeof(double)));
}

Field read_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  double length = 0.0;
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&length), sizeof length);
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!in || n == 0 || n > (1ull << 32)) throw Error("malformed binary field header in " + path.string());
  std::vector<double> values(n);
  in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(n * sizeof(double)));
  if (!in) throw Error("truncated binary field " + path.string());
  return Field(PeriodicGrid(length, n), std::move(values));
}

Field read_field(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? read_csv(path) : read_binary(path);
}

}  // namespace rch::io
