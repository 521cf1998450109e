#include "hitcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hitcalc {

namespace {

bool desc(const Monomial& a, const Monomial& b) { return compare_unchecked(a, b) > 0; }

// Degree first so mixed-degree sets still sort totally.
bool desc_any(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return desc(a, b);
}

}  // namespace

void cancel_pairs(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), desc_any);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms[out++] = terms[i];
    i = j;
  }
  terms.resize(out);
}

Polynomial::Polynomial(const Monomial& m) : n_(m.nvars()), terms_{m} {}

Polynomial::Polynomial(int nvars, std::vector<Monomial> terms) : n_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.nvars() != n_) throw std::invalid_argument("term has wrong variable count");
  normalize();
}

void Polynomial::normalize() { cancel_pairs(terms_); }

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, desc_any);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().degree() == terms_.back().degree();
}

std::uint64_t Polynomial::degree() const {
  if (terms_.empty()) throw NonHomogeneous("zero polynomial has no degree");
  if (!is_homogeneous()) throw NonHomogeneous("polynomial is not homogeneous");
  return terms_.front().degree();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty() && n_ == 0) n_ = other.n_;
  if (other.n_ != n_) throw std::invalid_argument("variable count mismatch");
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(merged), desc_any);
  terms_ = std::move(merged);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.n_ ? a.n_ : b.n_);
  if (a.n_ != b.n_) throw std::invalid_argument("variable count mismatch");
  std::vector<Monomial> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back(x * y);
  return Polynomial(a.n_, std::move(prod));
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip_ws();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    i_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(i_));
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
  Cursor cur(text);
  std::vector<Monomial> terms;
  if (cur.done()) cur.fail("empty polynomial");
  if (cur.peek() == '0') {
    cur.number();
    if (!cur.done()) cur.fail("trailing input after 0");
    return Polynomial(nvars);
  }
  for (;;) {
    Monomial m(nvars);
    bool any = false;
    for (;;) {
      const char c = cur.peek();
      if (c == 'u' || c == 'x') {
        cur.accept(c);
        cur.accept('_');
        const bool braced = cur.accept('{');
        const std::uint64_t var = cur.number();
        if (braced) cur.expect('}');
        if (var < 1 || var > static_cast<std::uint64_t>(nvars)) cur.fail("variable index out of range");
        std::uint64_t e = 1;
        if (cur.accept('^')) {
          const bool b = cur.accept('{');
          e = cur.number();
          if (b) cur.expect('}');
        }
        m[static_cast<int>(var - 1)] += static_cast<Exponent>(e);
        any = true;
      } else if (c == '1' && !any) {
        cur.number();
        any = true;
      } else {
        break;
      }
      if (!cur.accept('*')) {
        const char n = cur.peek();
        if (n != 'u' && n != 'x') break;
      }
    }
    if (!any) cur.fail("expected a monomial");
    terms.push_back(m);
    if (cur.done()) break;
    cur.expect('+');
  }
  return Polynomial(nvars, std::move(terms));
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(t);
  }
  return out;
}

}  // namespace hitcalc
