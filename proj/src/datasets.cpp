#include "hitcalc/datasets.hpp"

#include <cstdlib>
#include <fstream>

namespace hitcalc {

namespace {

std::vector<std::string> content_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

template <class P>
void check(const P& p, const std::string& name, std::size_t terms, std::uint64_t degree) {
  if (p.size() != terms)
    throw DataError(name + ": expected " + std::to_string(terms) + " distinct terms, found " + std::to_string(p.size()));
  if (p.degree() != degree) throw DataError(name + ": expected degree " + std::to_string(degree));
}

std::string path_of(const char* file) { return data_dir() + "/" + file; }

Polynomial single(const char* file, std::size_t terms, std::uint64_t degree) {
  auto polys = read_polynomial_file(path_of(file), 5);
  if (polys.size() != 1) throw DataError(std::string(file) + ": expected one polynomial");
  check(polys[0], file, terms, degree);
  return polys[0];
}

}  // namespace

std::vector<Polynomial> read_polynomial_file(const std::string& path, int nvars) {
  std::vector<Polynomial> out;
  for (const auto& line : content_lines(path)) out.push_back(parse_polynomial(line, nvars));
  return out;
}

std::vector<DualPolynomial> read_dual_file(const std::string& path, int nvars) {
  std::vector<DualPolynomial> out;
  for (const auto& line : content_lines(path)) out.push_back(parse_dual(line, nvars));
  return out;
}

std::string data_dir() {
  if (const char* env = std::getenv("HITCALC_DATA"); env && *env) return env;
  return HITCALC_DATA_DIR;
}

Polynomial zeta() { return single("zeta.poly", 22, 14); }
Polynomial xi() { return single("xi.poly", 184, 33); }
Polynomial xi_tilde() { return single("xi_tilde.poly", 193, 71); }

DualPolynomial zeta0() {
  auto polys = read_dual_file(path_of("zeta0.dp"), 5);
  if (polys.size() != 1) throw DataError("zeta0.dp: expected one polynomial");
  check(polys[0], "zeta0.dp", 36, 33);
  return polys[0];
}

std::vector<Polynomial> sigma5_w3() {
  static const std::size_t terms[] = {2, 42, 15, 53, 45, 107, 69, 87, 40, 20, 45, 60, 80, 40, 120, 30, 30, 30};
  auto polys = read_polynomial_file(path_of("sigma5_w3.poly"), 5);
  if (polys.size() != std::size(terms)) throw DataError("sigma5_w3.poly: expected 18 polynomials");
  for (std::size_t i = 0; i < polys.size(); ++i)
    check(polys[i], "sigma5_w3.poly line " + std::to_string(i + 1), terms[i], 33);
  return polys;
}

}  // namespace hitcalc
