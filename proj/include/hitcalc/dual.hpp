#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

// Element of the divided power algebra Γ(a_1..a_n). A term a_1^(t_1)..a_n^(t_n)
// is stored as the Monomial with exponents t_j; it is the dual basis
// element to u_1^t_1..u_n^t_n.
class DualPolynomial {
 public:
  DualPolynomial() = default;
  explicit DualPolynomial(int nvars) : p_(nvars) {}
  DualPolynomial(int nvars, std::vector<Monomial> terms) : p_(nvars, std::move(terms)) {}

  int nvars() const { return p_.nvars(); }
  const std::vector<Monomial>& terms() const { return p_.terms(); }
  std::size_t size() const { return p_.size(); }
  bool is_zero() const { return p_.is_zero(); }
  std::uint64_t degree() const { return p_.degree(); }

  DualPolynomial& operator+=(const DualPolynomial& o) {
    p_ += o.p_;
    return *this;
  }
  friend bool operator==(const DualPolynomial&, const DualPolynomial&) = default;

 private:
  Polynomial p_;
};

// Text form "a1^(3)*a2^(11) + ...". A bare a_j means a_j^(1).
DualPolynomial parse_dual(std::string_view text, int nvars);
std::string format_dual(const DualPolynomial& f);

// (a^(t))Sq^k = C(t-k, k) a^(t-k), extended by the Cartan formula.
DualPolynomial right_sq(std::uint64_t k, const DualPolynomial& f);

// True when every Sq^k with 1 <= k <= deg(f) kills f.
bool is_annihilated(const DualPolynomial& f);

// Number of exponent tuples common to f and g, mod 2.
bool pairing(const DualPolynomial& f, const Polynomial& g);

}  // namespace hitcalc
