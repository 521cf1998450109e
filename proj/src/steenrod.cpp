#include "hitcalc/steenrod.hpp"

#include <bit>

namespace hitcalc {

Polynomial sq(std::uint64_t k, const Monomial& m) {
  std::vector<Monomial> terms;
  sq_monomial(k, m, [&](const Monomial& t) { terms.push_back(t); });
  return Polynomial(m.nvars(), std::move(terms));
}

Polynomial sq(std::uint64_t k, const Polynomial& f) {
  std::vector<Monomial> terms;
  for (const auto& m : f.terms()) sq_monomial(k, m, [&](const Monomial& t) { terms.push_back(t); });
  return Polynomial(f.nvars(), std::move(terms));
}

Substitution::Substitution(int target_vars, std::vector<std::uint32_t> images)
    : target_(target_vars), images_(std::move(images)) {
  if (target_vars < 1 || target_vars > kMaxVars || images_.size() > static_cast<std::size_t>(kMaxVars))
    throw MalformedImage("variable count out of range");
  for (auto img : images_) {
    if (img == 0 || (img >> target_vars) != 0) throw MalformedImage("image is not a nonzero sum of target variables");
  }
}

Substitution Substitution::from_polynomials(const std::vector<Polynomial>& images, int target_vars) {
  std::vector<std::uint32_t> masks;
  for (const auto& p : images) {
    std::uint32_t mask = 0;
    if (p.is_zero()) throw MalformedImage("image is zero");
    for (const auto& t : p.terms()) {
      if (t.degree() != 1) throw MalformedImage("image term is not a single variable");
      for (int j = 0; j < t.nvars(); ++j)
        if (t[j] == 1) mask |= 1u << j;
    }
    if (static_cast<std::size_t>(std::popcount(mask)) != p.size())
      throw MalformedImage("image repeats a variable");
    masks.push_back(mask);
  }
  return Substitution(target_vars, std::move(masks));
}

Substitution Substitution::identity(int n) {
  std::vector<std::uint32_t> masks;
  for (int i = 0; i < n; ++i) masks.push_back(1u << i);
  return Substitution(n, std::move(masks));
}

bool Substitution::is_permutation() const {
  if (source_vars() != target_) return false;
  std::uint32_t seen = 0;
  for (auto img : images_) {
    if (std::popcount(img) != 1 || (seen & img)) return false;
    seen |= img;
  }
  return true;
}

void Substitution::apply_into(const Monomial& m, std::vector<Monomial>& out) const {
  if (m.nvars() != source_vars()) throw std::invalid_argument("monomial has wrong variable count");
  // (x_1 + ... + x_r)^a mod 2 distributes each binary digit of a to one of
  // the x_j; iterate over source variables and all such distributions.
  Monomial cur(target_);
  auto rec = [&](auto&& self, int var) -> void {
    if (var == source_vars()) {
      out.push_back(cur);
      return;
    }
    const std::uint32_t img = images_[static_cast<std::size_t>(var)];
    const Exponent a = m[var];
    if (std::popcount(img) == 1) {
      const int j = std::countr_zero(img);
      cur[j] += a;
      self(self, var + 1);
      cur[j] -= a;
      return;
    }
    // Assign digits of a one at a time.
    std::vector<int> targets;
    for (std::uint32_t t = img; t; t &= t - 1) targets.push_back(std::countr_zero(t));
    std::vector<Exponent> digits;
    for (Exponent rest = a; rest; rest &= rest - 1) digits.push_back(rest & (~rest + 1));
    auto assign = [&](auto&& again, std::size_t d) -> void {
      if (d == digits.size()) {
        self(self, var + 1);
        return;
      }
      for (int j : targets) {
        cur[j] += digits[d];
        again(again, d + 1);
        cur[j] -= digits[d];
      }
    };
    assign(assign, 0);
  };
  rec(rec, 0);
}

Polynomial Substitution::apply(const Monomial& m) const {
  std::vector<Monomial> terms;
  apply_into(m, terms);
  return Polynomial(target_, std::move(terms));
}

Polynomial Substitution::apply(const Polynomial& f) const {
  std::vector<Monomial> terms;
  for (const auto& m : f.terms()) apply_into(m, terms);
  return Polynomial(target_, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const Substitution& s) { return s.apply(f); }

}  // namespace hitcalc
