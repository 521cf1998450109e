#include "hitcalc/dual.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hitcalc/steenrod.hpp"

namespace hitcalc {

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

[[noreturn]] void fail(const std::string& what, std::size_t at) {
  throw ParseError(what + " at offset " + std::to_string(at));
}

std::uint64_t number(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
  if (ec != std::errc()) fail("expected a number", i);
  i = static_cast<std::size_t>(p - s.data());
  return v;
}

bool accept(std::string_view s, std::size_t& i, char c) {
  skip_ws(s, i);
  if (i < s.size() && s[i] == c) {
    ++i;
    return true;
  }
  return false;
}

}  // namespace

DualPolynomial parse_dual(std::string_view s, int nvars) {
  std::size_t i = 0;
  skip_ws(s, i);
  if (i == s.size()) fail("empty divided-power polynomial", i);
  if (s[i] == '0') {
    number(s, i);
    skip_ws(s, i);
    if (i != s.size()) fail("trailing input after 0", i);
    return DualPolynomial(nvars);
  }
  std::vector<Monomial> terms;
  for (;;) {
    Monomial m(nvars);
    bool any = false;
    for (;;) {
      skip_ws(s, i);
      if (i < s.size() && s[i] == 'a') {
        ++i;
        accept(s, i, '_');
        const bool braced = accept(s, i, '{');
        const auto var = number(s, i);
        if (braced && !accept(s, i, '}')) fail("expected '}'", i);
        if (var < 1 || var > static_cast<std::uint64_t>(nvars)) fail("variable index out of range", i);
        std::uint64_t t = 1;
        if (accept(s, i, '^')) {
          const bool b = accept(s, i, '{');
          if (!accept(s, i, '(')) fail("divided power needs parentheses, as in a1^(3)", i);
          t = number(s, i);
          if (!accept(s, i, ')')) fail("expected ')'", i);
          if (b && !accept(s, i, '}')) fail("expected '}'", i);
        }
        if (m[static_cast<int>(var - 1)] != 0) fail("variable repeated within a term", i);
        m[static_cast<int>(var - 1)] = static_cast<Exponent>(t);
        any = true;
      } else if (i < s.size() && s[i] == '1' && !any) {
        number(s, i);
        any = true;
      } else {
        break;
      }
      if (!accept(s, i, '*')) {
        skip_ws(s, i);
        if (i >= s.size() || s[i] != 'a') break;
      }
    }
    if (!any) fail("expected a divided-power monomial", i);
    terms.push_back(m);
    skip_ws(s, i);
    if (i == s.size()) break;
    if (!accept(s, i, '+')) fail("expected '+'", i);
  }
  return DualPolynomial(nvars, std::move(terms));
}

std::string format_dual(const DualPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string term;
    for (int j = 0; j < t.nvars(); ++j) {
      if (t[j] == 0) continue;
      if (!term.empty()) term += '*';
      term += "a" + std::to_string(j + 1) + "^(" + std::to_string(t[j]) + ")";
    }
    out += term.empty() ? "1" : term;
  }
  return out;
}

DualPolynomial right_sq(std::uint64_t k, const DualPolynomial& f) {
  std::vector<Monomial> out;
  for (const auto& m : f.terms()) {
    const int n = m.nvars();
    Monomial cur = m;
    auto rec = [&](auto&& self, int var, std::uint64_t rest) -> void {
      if (var == n) {
        if (rest == 0) out.push_back(cur);
        return;
      }
      const std::uint64_t t = m[var];
      // C(t - j, j) needs 2j <= t.
      for (std::uint64_t j = 0; j <= rest && 2 * j <= t; ++j) {
        if (!binom_parity(t - j, j)) continue;
        cur[var] = static_cast<Exponent>(t - j);
        self(self, var + 1, rest - j);
      }
      cur[var] = static_cast<Exponent>(t);
    };
    rec(rec, 0, k);
  }
  return DualPolynomial(f.nvars(), std::move(out));
}

bool is_annihilated(const DualPolynomial& f) {
  if (f.is_zero()) return true;
  const auto d = f.degree();
  for (std::uint64_t k = 1; k <= d; ++k)
    if (!right_sq(k, f).is_zero()) return false;
  return true;
}

bool pairing(const DualPolynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return false;
  if (f.nvars() != g.nvars()) throw std::invalid_argument("variable counts differ");
  if (f.degree() != g.degree()) throw DegreeMismatch("pairing needs equal degrees");
  std::size_t common = 0;
  for (const auto& t : f.terms()) common += g.contains(t) ? 1 : 0;
  return common % 2 == 1;
}

}  // namespace hitcalc
