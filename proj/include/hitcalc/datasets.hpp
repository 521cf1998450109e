#pragma once

#include <string>
#include <vector>

#include "hitcalc/dual.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One polynomial per non-comment line ('#' starts a comment line).
std::vector<Polynomial> read_polynomial_file(const std::string& path, int nvars);
std::vector<DualPolynomial> read_dual_file(const std::string& path, int nvars);

// Directory holding the shipped data files: $HITCALC_DATA if set, else the
// source tree's data/.
std::string data_dir();

// Shipped polynomials in P_5. Each loader checks term counts and degree,
// so a damaged file fails loudly rather than silently changing results.
Polynomial zeta();        // degree 14
Polynomial xi();          // degree 33
Polynomial xi_tilde();    // degree 71
DualPolynomial zeta0();   // degree 33
std::vector<Polynomial> sigma5_w3();  // degree 33, 18 classes

}  // namespace hitcalc
