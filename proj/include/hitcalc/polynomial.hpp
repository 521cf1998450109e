#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/monomial.hpp"

namespace hitcalc {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonHomogeneous : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Element of F_2[u_1..u_n]: a set of monomials kept sorted in descending
// order. Addition is symmetric difference.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : n_(nvars) {}
  Polynomial(const Monomial& m);  // NOLINT(google-explicit-constructor)
  // Terms may repeat; repeated pairs cancel.
  Polynomial(int nvars, std::vector<Monomial> terms);

  int nvars() const { return n_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const Monomial& m) const;

  bool is_homogeneous() const;
  // Degree of a homogeneous nonzero polynomial; throws NonHomogeneous otherwise.
  std::uint64_t degree() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  int n_ = 0;
  std::vector<Monomial> terms_;
};

// Sorts descending and cancels repeated terms in pairs.
void cancel_pairs(std::vector<Monomial>& terms);

// Text form "u1^3*u2^5*u5^25 + u1*u2": whitespace insensitive, exponent 1
// may be omitted, "0" is the empty sum and "1" the unit.
Polynomial parse_polynomial(std::string_view text, int nvars);
std::string format_polynomial(const Polynomial& p);

}  // namespace hitcalc
