#include "doctest.h"

#include "hitcalc/monomial.hpp"
#include "oracle/oracle.hpp"

using namespace hitcalc;

TEST_CASE("weight vectors trim and compare with zero padding") {
  CHECK(weight_vector(Monomial{1, 1, 1, 0, 30}) == WeightVector{3, 1, 1, 1, 1});
  CHECK(WeightVector{3, 1, 0} == WeightVector{3, 1});
  CHECK(WeightVector{3, 1} < WeightVector{3, 1, 1});
  CHECK(WeightVector{3, 3, 2, 2} > WeightVector{3, 1, 1, 3});
  CHECK(WeightVector{3, 1, 1, 1, 1}.degree() == 33);
  CHECK(WeightVector{3, 1, 1, 1, 1}[1] == 3);
  CHECK(WeightVector{3, 1, 1, 1, 1}[9] == 0);
}

TEST_CASE("weights agree with the oracle") {
  for (const auto& m : enumerate_monomials(4, 19)) {
    const auto wv = weight_vector(m);
    const std::vector<int> w(wv.entries().begin(), wv.entries().end());
    CHECK(w == oracle::weight({m.exponents().begin(), m.exponents().end()}));
  }
}

TEST_CASE("order puts weight before exponents") {
  // Same weight (2,1): exponents decide.
  CHECK(compare(Monomial{3, 1}, Monomial{1, 3}) > 0);
  // Weight decides before exponents.
  CHECK(compare(Monomial{1, 1, 2}, Monomial{0, 0, 4}) > 0);
  CHECK_THROWS_AS(compare(Monomial{1, 1}, Monomial{1, 2}), DegreeMismatch);
}

TEST_CASE("enumeration is complete, distinct and descending") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t d = 0; d <= 12; ++d) {
      const auto all = enumerate_monomials(n, d);
      REQUIRE(all.size() == monomial_count(n, d));
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(compare(all[i - 1], all[i]) > 0);
    }
  CHECK(monomial_count(5, 33) == 66045);
}

TEST_CASE("weight and part filters") {
  const WeightVector w{3, 1, 1, 1, 1};
  const auto eq = enumerate_monomials(5, 33, &w, WeightFilter::Equal);
  const auto ge = enumerate_monomials(5, 33, &w, WeightFilter::AtLeast);
  const auto lt = enumerate_monomials(5, 33, &w, WeightFilter::Below);
  CHECK(ge.size() + lt.size() == 66045);
  for (const auto& m : eq) CHECK(weight_vector(m) == w);
  const auto zero = enumerate_monomials(5, 14, nullptr, WeightFilter::All, Part::Zero);
  const auto pos = enumerate_monomials(5, 14, nullptr, WeightFilter::All, Part::Positive);
  CHECK(zero.size() + pos.size() == monomial_count(5, 14));
  for (const auto& m : pos) CHECK(m.all_positive());
  CHECK(parse_part("positive") == Part::Positive);
  CHECK_THROWS_AS(parse_part("half"), std::invalid_argument);
}

TEST_CASE("alpha, mu and minimal spikes") {
  CHECK(alpha(33) == 2);
  CHECK(mu(33) == 3);
  CHECK(mu(14) == 2);
  CHECK(mu(71) == 3);
  CHECK(*minimal_spike(5, 33) == Monomial{31, 1, 1, 0, 0});
  CHECK(*minimal_spike(5, 71) == Monomial{63, 7, 1, 0, 0});
  CHECK(!minimal_spike(1, 14).has_value());
  CHECK(is_spike(Monomial{7, 3, 1}));
  CHECK(!is_spike(Monomial{7, 2, 1}));
}
