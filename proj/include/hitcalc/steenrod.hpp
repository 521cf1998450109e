#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

// C(a, b) mod 2 by Lucas: odd iff b is a bitwise submask of a.
constexpr bool binom_parity(std::uint64_t a, std::uint64_t b) { return b <= a && (a & b) == b; }

// Calls emit(term) for every term of Sq^k(m). Distinct compositions of k
// give distinct exponent vectors, so no term repeats.
template <class Emit>
void sq_monomial(std::uint64_t k, const Monomial& m, Emit&& emit) {
  const int n = m.nvars();
  Monomial out = m;
  // Depth-first over variables; only submasks of each exponent survive.
  auto rec = [&](auto&& self, int var, std::uint64_t remaining) -> void {
    const Exponent a = m[var];
    if (var == n - 1) {
      if (binom_parity(a, remaining)) {
        out[var] = a + static_cast<Exponent>(remaining);
        emit(static_cast<const Monomial&>(out));
      }
      return;
    }
    // Submasks of a not exceeding `remaining`, including 0.
    std::uint64_t b = a;
    for (;;) {
      if (b <= remaining) {
        out[var] = a + static_cast<Exponent>(b);
        self(self, var + 1, remaining - b);
      }
      if (b == 0) break;
      b = (b - 1) & a;
    }
    out[var] = a;
  };
  if (n == 0) {
    if (k == 0) emit(static_cast<const Monomial&>(out));
    return;
  }
  rec(rec, 0, k);
}

Polynomial sq(std::uint64_t k, const Polynomial& f);
Polynomial sq(std::uint64_t k, const Monomial& m);

struct MalformedImage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Linear substitution u_i -> sum of distinct target variables. images[i] is
// a bitmask over the target variables (bit j = u_{j+1}).
class Substitution {
 public:
  Substitution() = default;
  Substitution(int target_vars, std::vector<std::uint32_t> images);
  // Each image must be a sum of distinct degree-one variables.
  static Substitution from_polynomials(const std::vector<Polynomial>& images, int target_vars);
  static Substitution identity(int n);

  int source_vars() const { return static_cast<int>(images_.size()); }
  int target_vars() const { return target_; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_permutation() const;

  Polynomial apply(const Polynomial& f) const;
  Polynomial apply(const Monomial& m) const;
  // Accumulates terms of the image of m into out (repeats cancel later).
  void apply_into(const Monomial& m, std::vector<Monomial>& out) const;

 private:
  int target_ = 0;
  std::vector<std::uint32_t> images_;
};

Polynomial substitute(const Polynomial& f, const Substitution& s);

}  // namespace hitcalc
