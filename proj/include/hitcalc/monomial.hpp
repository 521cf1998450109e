#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hitcalc {

constexpr int kMaxVars = 8;

using Exponent = std::uint32_t;

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Trailing zeros are trimmed on construction; comparisons pad with zeros.
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(std::initializer_list<std::uint32_t> entries);
  explicit WeightVector(std::vector<std::uint32_t> entries);

  const std::vector<std::uint32_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // 1-based, zero past the end.
  std::uint32_t operator[](std::size_t i) const {
    return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0;
  }
  std::uint64_t degree() const;
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b);

 private:
  void trim();
  std::vector<std::uint32_t> entries_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  int nvars() const { return n_; }
  Exponent operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  Exponent& operator[](int i) { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), static_cast<std::size_t>(n_)}; }
  std::uint64_t degree() const;

  bool all_positive() const;
  bool has_zero_exponent() const { return !all_positive(); }

  // Packs exponents 8 bits each; requires every exponent < 256.
  std::uint64_t key() const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.exps_ == b.exps_;
  }

 private:
  std::array<Exponent, kMaxVars> exps_{};
  int n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

WeightVector weight_vector(const Monomial& m);

// Order by weight vector, then exponent vector, both left-lexicographic.
// Throws DegreeMismatch for monomials of different degree or variable count.
std::strong_ordering compare(const Monomial& u, const Monomial& y);

// Same order without the degree check; callers guarantee equal degree.
std::strong_ordering compare_unchecked(const Monomial& u, const Monomial& y);

int alpha(std::uint64_t d);

// Smallest n with alpha(d + n) <= n. Requires d >= 1.
int mu(std::uint64_t d);

bool is_spike(const Monomial& m);
bool is_minimal_spike(const Monomial& m);
std::optional<Monomial> minimal_spike(int n, std::uint64_t d);

enum class WeightFilter { All, Equal, Below, AtLeast };

enum class Part { Full, Zero, Positive };

const char* to_string(Part p);
Part parse_part(const std::string& s);

bool in_part(const Monomial& m, Part p);

// Every monomial of degree d in n variables (optionally filtered by weight
// relative to omega and by part), sorted in descending order.
std::vector<Monomial> enumerate_monomials(int n, std::uint64_t d,
                                          const WeightVector* omega = nullptr,
                                          WeightFilter filter = WeightFilter::All,
                                          Part part = Part::Full);

// Count of degree-d monomials in n variables, C(d+n-1, n-1).
std::uint64_t monomial_count(int n, std::uint64_t d);

std::string to_string(const Monomial& m);

}  // namespace hitcalc
