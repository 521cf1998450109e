#include "property_checks.hpp"

#include <random>

#include "hitcalc/dual.hpp"
#include "hitcalc/steenrod.hpp"
#include "oracle/oracle.hpp"

namespace checks {

using namespace hitcalc;

namespace {

std::string at(int n, std::uint64_t d) { return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")"; }

oracle::Mono to_oracle(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

oracle::Poly to_oracle(const Polynomial& f) {
  oracle::Poly p;
  for (const auto& t : f.terms()) oracle::toggle(p, to_oracle(t));
  return p;
}

Monomial random_monomial(std::mt19937_64& rng, int n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  Monomial m(n);
  for (int j = 0; j < n; ++j) m[j] = static_cast<Exponent>(e(rng));
  return m;
}

// Homogeneous random polynomial: random monomials of one degree.
Polynomial random_polynomial(std::mt19937_64& rng, int n, std::uint64_t d, int terms) {
  const auto all = enumerate_monomials(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<Monomial> out;
  for (int i = 0; i < terms; ++i) out.push_back(all[pick(rng)]);
  return Polynomial(n, std::move(out));
}

}  // namespace

Result span_equivalence(int max_n, int max_d) {
  Result r;
  for (int n = 1; n <= max_n; ++n)
    for (int d = 1; d <= max_d; ++d) {
      ++r.cases;
      const auto all = oracle::cohit_dim(n, d, oracle::Part::Full, oracle::Ops::AllSquares);
      const auto pow2 = oracle::cohit_dim(n, d, oracle::Part::Full, oracle::Ops::PowersOfTwo);
      const auto main = cohit_basis(n, static_cast<std::uint64_t>(d)).dim();
      if (all != pow2 || all != main)
        r.fail(at(n, static_cast<std::uint64_t>(d)) + ": all squares " + std::to_string(all) + ", powers of two " +
               std::to_string(pow2) + ", engine " + std::to_string(main));
    }
  return r;
}

Result wood_and_spikes(int max_n, int max_d, const HitOptions& opts) {
  Result r;
  HitOptions raw = opts;
  raw.singer_filter = false;
  for (int n = 1; n <= max_n; ++n)
    for (std::uint64_t d = 1; d <= static_cast<std::uint64_t>(max_d); ++d) {
      ++r.cases;
      const auto b = cohit_basis(n, d, Part::Full, raw);
      if (mu(d) > n && b.dim() != 0) r.fail(at(n, d) + ": mu(d) > n but dim " + std::to_string(b.dim()));
      for (const auto& m : enumerate_monomials(n, d)) {
        if (!is_spike(m)) continue;
        const auto& adm = b.admissibles();
        if (std::find(adm.begin(), adm.end(), m) == adm.end()) r.fail(at(n, d) + ": spike " + to_string(m) + " not admissible");
      }
      // The filtered engine must agree with the unfiltered one.
      const auto filtered = cohit_basis(n, d, Part::Full, opts).dim();
      if (filtered != b.dim())
        r.fail(at(n, d) + ": filtered dim " + std::to_string(filtered) + " vs unfiltered " + std::to_string(b.dim()));
    }
  return r;
}

Result cartan(std::size_t cases, std::uint64_t seed) {
  Result r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nvars(1, 5), kdist(0, 14);
  for (std::size_t c = 0; c < cases; ++c) {
    ++r.cases;
    const int n = nvars(rng);
    const Monomial a = random_monomial(rng, n, 9), b = random_monomial(rng, n, 9);
    const std::uint64_t k = static_cast<std::uint64_t>(kdist(rng));
    const Polynomial lhs = sq(k, a * b);
    Polynomial rhs(n);
    for (std::uint64_t i = 0; i <= k; ++i) rhs += sq(i, a) * sq(k - i, b);
    if (!(lhs == rhs)) r.fail("Cartan fails for " + to_string(a) + ", " + to_string(b) + ", k=" + std::to_string(k));
    if (to_oracle(lhs) != oracle::sq(static_cast<int>(k), to_oracle(a * b)))
      r.fail("engine Sq^" + std::to_string(k) + " differs from the oracle on " + to_string(a * b));
  }
  return r;
}

Result adjointness(std::size_t cases, std::uint64_t seed) {
  Result r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nvars(1, 5), kdist(1, 10), ddist(0, 14), tdist(1, 6);
  for (std::size_t c = 0; c < cases; ++c) {
    ++r.cases;
    const int n = nvars(rng);
    const std::uint64_t k = static_cast<std::uint64_t>(kdist(rng));
    const std::uint64_t d = static_cast<std::uint64_t>(ddist(rng));
    const Polynomial f = random_polynomial(rng, n, d, tdist(rng));
    const Polynomial a_poly = random_polynomial(rng, n, d + k, tdist(rng));
    const DualPolynomial a(n, a_poly.terms());
    const bool lhs = pairing(right_sq(k, a), f);
    const bool rhs = pairing(a, sq(k, f));
    if (lhs != rhs) r.fail("adjointness fails for k=" + std::to_string(k) + ", f=" + format_polynomial(f));
    oracle::Poly ra;
    for (const auto& t : a.terms())
      for (const auto& [m, one] : oracle::right_sq(static_cast<int>(k), to_oracle(t))) {
        (void)one;
        oracle::toggle(ra, m);
      }
    oracle::Poly mine;
    const DualPolynomial image = right_sq(k, a);
    for (const auto& t : image.terms()) oracle::toggle(mine, to_oracle(t));
    if (ra != mine) r.fail("engine right Sq^" + std::to_string(k) + " differs from the oracle");
  }
  return r;
}

Result direct_sum(int n, std::uint64_t d, const HitOptions& opts) {
  Result r;
  ++r.cases;
  const auto rep = check_direct_sum(n, d, opts);
  if (!rep.equal) r.fail(at(n, d) + ": weight pieces sum to " + std::to_string(rep.sum) + ", total " + std::to_string(rep.total));
  return r;
}

Result thread_determinism(int n, std::uint64_t d, const std::vector<int>& threads) {
  Result r;
  std::optional<NormalForm> ref;
  for (int t : threads) {
    ++r.cases;
    HitOptions o;
    o.threads = t;
    o.batch = 1024;
    const auto b = cohit_basis(n, d, Part::Full, o);
    const auto& nf = b.normal_form();
    if (!ref) {
      ref = nf;
      continue;
    }
    if (nf.pivot_columns() != ref->pivot_columns() || nf.table() != ref->table())
      r.fail(at(n, d) + ": normal form with " + std::to_string(t) + " threads differs from " + std::to_string(threads[0]));
  }
  return r;
}

}  // namespace checks
