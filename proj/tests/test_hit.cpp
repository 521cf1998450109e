#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "hitcalc/cache.hpp"
#include "hitcalc/hit.hpp"
#include "hitcalc/steenrod.hpp"
#include "oracle/oracle.hpp"

using namespace hitcalc;

namespace {

oracle::Part to_oracle(Part p) {
  return p == Part::Full ? oracle::Part::Full : p == Part::Zero ? oracle::Part::Zero : oracle::Part::Positive;
}

std::vector<int> to_oracle(const WeightVector& w) { return {w.entries().begin(), w.entries().end()}; }

std::filesystem::path fresh_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("hitcalc_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("cohit dimensions match the oracle for n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= (n == 4 ? 18 : 24); ++d)
      for (Part p : {Part::Full, Part::Zero, Part::Positive}) {
        CAPTURE(n);
        CAPTURE(d);
        CHECK(cohit_basis(n, static_cast<std::uint64_t>(d), p).dim() == oracle::cohit_dim(n, d, to_oracle(p)));
      }
}

TEST_CASE("weight subquotients match the oracle") {
  for (auto [n, d] : {std::pair{3, 15}, {3, 21}, {4, 13}, {4, 17}, {5, 14}}) {
    for (const auto& w : achieved_weights(n, static_cast<std::uint64_t>(d))) {
      CAPTURE(n);
      CAPTURE(d);
      CAPTURE(w.to_string());
      CHECK(weight_subquotient(n, static_cast<std::uint64_t>(d), w).dim() ==
            oracle::cohit_dim(n, d, oracle::Part::Full, oracle::Ops::AllSquares, to_oracle(w)));
    }
  }
  CHECK(weight_subquotient(4, 13, WeightVector{3, 1, 2}, Part::Positive).dim() ==
        oracle::cohit_dim(4, 13, oracle::Part::Positive, oracle::Ops::AllSquares, std::vector<int>{3, 1, 2}));
}

TEST_CASE("(QP_5)_14 has dimension 320, confirmed by the oracle") {
  const auto b = cohit_basis(5, 14);
  CHECK(b.dim() == 320);
  CHECK(oracle::cohit_dim(5, 14) == 320);
  const auto rep = check_direct_sum(5, 14);
  CHECK(rep.equal);
  CHECK(rep.total == 320);
}

TEST_CASE("admissibles are descending and reduce to unit vectors") {
  const auto b = cohit_basis(4, 13);
  const auto& adm = b.admissibles();
  for (std::size_t i = 1; i < adm.size(); ++i) CHECK(compare(adm[i - 1], adm[i]) > 0);
  for (std::size_t i = 0; i < adm.size(); ++i) CHECK(b.reduce(adm[i]) == BitRow::unit(adm.size(), i));
  std::mt19937_64 rng(1);
  const auto all = enumerate_monomials(4, 13);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const Polynomial f(4, {all[pick(rng)], all[pick(rng)], all[pick(rng)]});
    const BitRow c = b.reduce(f);
    // f minus its admissible representative is hit.
    CHECK(b.is_hit(f + b.representative(c)));
    const Polynomial diff = f + b.representative(c);
    oracle::Poly p;
    for (const auto& m : diff.terms()) oracle::toggle(p, {m.exponents().begin(), m.exponents().end()});
    CHECK(oracle::is_hit(4, p));
  }
  // Sq images are hit.
  for (const auto& x : enumerate_monomials(4, 11)) CHECK(b.is_hit(sq(2, x)));
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(weight_subquotient(5, 33, WeightVector{3, 1, 1}), DegreeWeightMismatch);
  CHECK_THROWS_AS(cohit_basis(9, 4), std::invalid_argument);
  const auto w = weight_subquotient(5, 14, WeightVector{2, 2, 2});
  CHECK_THROWS_AS(w.reduce(Polynomial(Monomial{1, 1, 1, 11, 0})), ModeViolation);
  // Terms below omega are zero in the subquotient.
  CHECK(w.reduce(Polynomial(Monomial{2, 4, 8, 0, 0})).is_zero());
  const auto pos = cohit_basis(5, 14, Part::Positive);
  CHECK_THROWS_AS(pos.reduce(Polynomial(Monomial{14, 0, 0, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(pos.reduce(Polynomial(Monomial{1, 1, 1, 1, 1})), NonHomogeneous);
}

TEST_CASE("degree zero") {
  const auto b = cohit_basis(3, 0);
  CHECK(b.dim() == 1);
  CHECK(!b.is_hit(Polynomial(Monomial{0, 0, 0})));
}

TEST_CASE("Wood vanishing and the Singer filter") {
  // mu(14) = 2 > 1 and mu(33) = 3 > 2.
  CHECK(cohit_basis(1, 14).dim() == 0);
  CHECK(cohit_basis(2, 33).dim() == 0);
  HitOptions raw;
  raw.singer_filter = false;
  CHECK(cohit_basis(2, 33, Part::Full, raw).dim() == 0);
  CHECK(cohit_basis(4, 17, Part::Full, raw).dim() == cohit_basis(4, 17).dim());
}

TEST_CASE("memory guard") {
  HitOptions o;
  o.memory_limit = 1024;
  CHECK_THROWS_AS(cohit_basis(5, 14, Part::Full, o), ComputationTooLarge);
  try {
    cohit_basis(5, 14, Part::Full, o);
  } catch (const ComputationTooLarge& e) {
    CHECK(e.estimate > 1024);
  }
}

TEST_CASE("cache round trip, mismatch and corruption") {
  const auto dir = fresh_dir("cache");
  HitOptions o;
  o.cache_dir = dir.string();
  const auto cold = cohit_basis(5, 14, Part::Full, o);
  CHECK(!cold.loaded_from_cache());
  const auto warm = cohit_basis(5, 14, Part::Full, o);
  CHECK(warm.loaded_from_cache());
  CHECK(warm.admissibles() == cold.admissibles());
  CHECK(warm.normal_form().table() == cold.normal_form().table());

  const CacheKey key{5, 14, std::nullopt, Part::Full, cold.column_hash(), cold.columns().size()};
  const auto path = (dir / cache_file_name(key)).string();
  REQUIRE(std::filesystem::exists(path));
  CHECK(cache_file_name(CacheKey{5, 33, WeightVector{3, 1, 1, 1, 1}, Part::Positive, 0, 0}) == "hit_n5_d33_w3-1-1-1-1_positive.hitc");

  CacheKey other = key;
  other.column_hash ^= 1;
  CHECK_THROWS_AS(load_normal_form(path, other), CacheError);
  other = key;
  other.part = Part::Zero;
  CHECK_THROWS_AS(load_normal_form(path, other), CacheError);
  CHECK(!load_normal_form((dir / "missing.hitc").string(), key).has_value());

  // Truncate: the loader refuses, compute_cohit recomputes with a warning.
  std::filesystem::resize_file(path, std::filesystem::file_size(path) / 2);
  CHECK_THROWS_AS(load_normal_form(path, key), CacheError);
  const auto again = cohit_basis(5, 14, Part::Full, o);
  CHECK(!again.loaded_from_cache());
  CHECK(again.admissibles() == cold.admissibles());
  // Trailing garbage is refused too.
  {
    std::ofstream os(path, std::ios::binary | std::ios::app);
    os << "x";
  }
  CHECK_THROWS_AS(load_normal_form(path, key), CacheError);
  std::filesystem::remove_all(dir);
}
