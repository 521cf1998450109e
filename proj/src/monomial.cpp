#include "hitcalc/monomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace hitcalc {

WeightVector::WeightVector(std::initializer_list<std::uint32_t> entries) : entries_(entries) {
  trim();
}

WeightVector::WeightVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  trim();
}

void WeightVector::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

std::uint64_t WeightVector::degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) d += std::uint64_t{entries_[i]} << i;
  return d;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 1; i <= len; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Monomial::Monomial(int nvars) : n_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
}

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const Exponent> exps) : Monomial(static_cast<int>(exps.size())) {
  std::copy(exps.begin(), exps.end(), exps_.begin());
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (int i = 0; i < n_; ++i) d += exps_[static_cast<std::size_t>(i)];
  return d;
}

bool Monomial::all_positive() const {
  for (int i = 0; i < n_; ++i)
    if (exps_[static_cast<std::size_t>(i)] == 0) return false;
  return true;
}

std::uint64_t Monomial::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) {
    const Exponent e = exps_[static_cast<std::size_t>(i)];
    if (e > 0xff) throw std::out_of_range("exponent too large for packed key");
    k |= std::uint64_t{e} << (8 * i);
  }
  return k;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.n_ != n_) throw std::invalid_argument("variable count mismatch");
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r[i] = (*this)[i] + other[i];
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = static_cast<std::size_t>(m.nvars());
  for (Exponent e : m.exponents()) h = h * 1000003u ^ std::hash<Exponent>{}(e);
  return h;
}

WeightVector weight_vector(const Monomial& m) {
  std::vector<std::uint32_t> w;
  for (Exponent e : m.exponents()) {
    for (std::size_t bit = 0; e != 0; ++bit, e >>= 1) {
      if (w.size() <= bit) w.resize(bit + 1, 0);
      w[bit] += e & 1u;
    }
  }
  return WeightVector(std::move(w));
}

std::strong_ordering compare_unchecked(const Monomial& u, const Monomial& y) {
  // Weight comparison bit-plane by bit-plane without allocating.
  Exponent maxe = 0;
  for (int i = 0; i < u.nvars(); ++i) maxe = std::max({maxe, u[i], y[i]});
  for (unsigned bit = 0; (maxe >> bit) != 0; ++bit) {
    int wu = 0, wy = 0;
    for (int i = 0; i < u.nvars(); ++i) {
      wu += static_cast<int>((u[i] >> bit) & 1u);
      wy += static_cast<int>((y[i] >> bit) & 1u);
    }
    if (wu != wy) return wu <=> wy;
  }
  for (int i = 0; i < u.nvars(); ++i) {
    if (u[i] != y[i]) return u[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial& u, const Monomial& y) {
  if (u.nvars() != y.nvars()) throw DegreeMismatch("monomials have different variable counts");
  if (u.degree() != y.degree()) throw DegreeMismatch("monomials have different degrees");
  return compare_unchecked(u, y);
}

int alpha(std::uint64_t d) { return std::popcount(d); }

int mu(std::uint64_t d) {
  if (d == 0) return 0;
  for (int n = 1;; ++n) {
    if (alpha(d + static_cast<std::uint64_t>(n)) <= n) return n;
  }
}

namespace {

bool all_ones(Exponent e) { return (e & (e + 1)) == 0; }

// Non-increasing exponent sequences 2^c - 1 (c >= 1) summing to the
// remaining degree using at most `slots` terms.
void spike_search(std::uint64_t remaining, int slots, int cap, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int c = cap; c >= 1; --c) {
    const std::uint64_t v = (std::uint64_t{1} << c) - 1;
    if (v > remaining) continue;
    cur.push_back(c);
    spike_search(remaining - v, slots - 1, c, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_spike(const Monomial& m) {
  for (Exponent e : m.exponents())
    if (!all_ones(e)) return false;
  return true;
}

bool is_minimal_spike(const Monomial& m) {
  if (!is_spike(m)) return false;
  std::vector<int> cs;
  for (Exponent e : m.exponents()) cs.push_back(std::popcount(e));
  std::size_t r = 0;
  while (r < cs.size() && cs[r] > 0) ++r;
  for (std::size_t j = r; j < cs.size(); ++j)
    if (cs[j] != 0) return false;
  if (r == 0) return true;
  for (std::size_t j = 0; j + 2 < r; ++j)
    if (cs[j] <= cs[j + 1]) return false;
  if (r >= 2 && cs[r - 2] < cs[r - 1]) return false;
  return true;
}

std::optional<Monomial> minimal_spike(int n, std::uint64_t d) {
  Monomial m(n);
  if (d == 0) return m;
  if (mu(d) > n) return std::nullopt;
  std::vector<std::vector<int>> found;
  std::vector<int> cur;
  spike_search(d, n, static_cast<int>(std::bit_width(d)), cur, found);
  std::optional<Monomial> best;
  for (const auto& cs : found) {
    if (static_cast<int>(cs.size()) > n) continue;
    Monomial cand(n);
    for (std::size_t j = 0; j < cs.size(); ++j)
      cand[static_cast<int>(j)] = (Exponent{1} << cs[j]) - 1;
    if (!is_minimal_spike(cand)) continue;
    if (!best || compare_unchecked(cand, *best) < 0) best = cand;
  }
  return best;
}

const char* to_string(Part p) {
  switch (p) {
    case Part::Full: return "full";
    case Part::Zero: return "zero";
    case Part::Positive: return "positive";
  }
  return "full";
}

Part parse_part(const std::string& s) {
  if (s == "full") return Part::Full;
  if (s == "zero") return Part::Zero;
  if (s == "positive") return Part::Positive;
  throw std::invalid_argument("unknown part: " + s);
}

bool in_part(const Monomial& m, Part p) {
  switch (p) {
    case Part::Full: return true;
    case Part::Zero: return m.has_zero_exponent();
    case Part::Positive: return m.all_positive();
  }
  return true;
}

namespace {

template <class F>
void for_each_composition(int n, std::uint64_t d, Monomial& cur, int pos, F&& f) {
  if (pos == n - 1) {
    cur[pos] = static_cast<Exponent>(d);
    f(cur);
    return;
  }
  for (std::uint64_t e = 0; e <= d; ++e) {
    cur[pos] = static_cast<Exponent>(e);
    for_each_composition(n, d - e, cur, pos + 1, f);
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int n, std::uint64_t d, const WeightVector* omega,
                                          WeightFilter filter, Part part) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
  std::vector<Monomial> out;
  Monomial cur(n);
  for_each_composition(n, d, cur, 0, [&](const Monomial& m) {
    if (!in_part(m, part)) return;
    if (omega && filter != WeightFilter::All) {
      const auto c = weight_vector(m) <=> *omega;
      if (filter == WeightFilter::Equal && c != 0) return;
      if (filter == WeightFilter::Below && c >= 0) return;
      if (filter == WeightFilter::AtLeast && c < 0) return;
    }
    out.push_back(m);
  });
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_unchecked(a, b) > 0; });
  return out;
}

std::uint64_t monomial_count(int n, std::uint64_t d) {
  // C(d+n-1, n-1), computed incrementally to stay exact.
  std::uint64_t r = 1;
  for (int i = 1; i < n; ++i) r = r * (d + static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i);
  return r;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'u' << (i + 1);
    if (m[i] != 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

}  // namespace hitcalc
