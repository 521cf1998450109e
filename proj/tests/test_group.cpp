#include "doctest.h"

#include "hitcalc/datasets.hpp"
#include "hitcalc/group.hpp"
#include "hitcalc/kameko.hpp"
#include "oracle/oracle.hpp"

using namespace hitcalc;

TEST_CASE("standard generators") {
  const auto s = standard_generators(5, Group::Symmetric);
  CHECK(s.size() == 4);
  for (const auto& g : s) CHECK(g.is_permutation());
  const auto gl = standard_generators(5, Group::GeneralLinear);
  REQUIRE(gl.size() == 5);
  CHECK(!gl.back().is_permutation());
  CHECK(gl.back().apply(Monomial{0, 0, 0, 0, 1}) == parse_polynomial("u4 + u5", 5));
  CHECK(parse_group("sigma") == Group::Symmetric);
  CHECK_THROWS_AS(parse_group("sl"), std::invalid_argument);
  CHECK_THROWS_AS(standard_generators(1, Group::Symmetric), std::invalid_argument);
}

TEST_CASE("induced operators are representations") {
  const auto b = cohit_basis(4, 13);
  for (const auto& g : standard_generators(4, Group::GeneralLinear)) {
    const auto m = induced_operator(g, b);
    CHECK(m.nrows == b.dim());
    // Swaps are involutions on the quotient.
    if (g.is_permutation()) CHECK(m * m == BitMatrix::identity(b.dim()));
  }
  // Thread count does not change the operator.
  const auto t = standard_generators(4, Group::GeneralLinear).back();
  CHECK(induced_operator(t, b, 1) == induced_operator(t, b, 4));
}

TEST_CASE("invariant dimensions match the oracle") {
  for (auto [n, d] : {std::pair{3, 15}, {3, 10}, {4, 13}, {4, 11}, {5, 14}}) {
    for (bool gl : {false, true}) {
      CAPTURE(n);
      CAPTURE(d);
      CAPTURE(gl);
      const auto inv = invariants(cohit_basis(n, static_cast<std::uint64_t>(d)), gl ? Group::GeneralLinear : Group::Symmetric);
      CHECK(inv.dim == oracle::invariant_dim(n, d, oracle::generators(n, gl)));
    }
  }
  for (const WeightVector& w : {WeightVector{2, 2, 2}, WeightVector{4, 3, 1}, WeightVector{2, 4, 1}}) {
    CAPTURE(w.to_string());
    const auto b = weight_subquotient(5, 14, w);
    std::vector<int> ow(w.entries().begin(), w.entries().end());
    CHECK(invariants(b, Group::Symmetric).dim == oracle::invariant_dim(5, 14, oracle::generators(5, false), ow));
    CHECK(invariants(b, Group::GeneralLinear).dim == oracle::invariant_dim(5, 14, oracle::generators(5, true), ow));
  }
}

TEST_CASE("generators of the fixed space are fixed") {
  const auto b = cohit_basis(5, 14);
  const auto inv = invariants(b, Group::GeneralLinear);
  REQUIRE(inv.dim == 1);
  CHECK(verify_invariant_class(inv.generators[0], b, Group::GeneralLinear));
  CHECK(verify_invariant_class(zeta(), b, Group::GeneralLinear));
  CHECK(!b.is_hit(zeta()));
  // The class of zeta is the fixed class.
  CHECK(b.reduce(zeta()) == inv.coordinates[0]);
  CHECK(!verify_invariant_class(Polynomial(Monomial{7, 7, 0, 0, 0}), b, Group::Symmetric));
}

TEST_CASE("transvections leave parts") {
  const auto pos = cohit_basis(5, 14, Part::Positive);
  CHECK_THROWS_AS(induced_operator(standard_generators(5, Group::GeneralLinear).back(), pos), ModeViolation);
  CHECK_NOTHROW(invariants(pos, Group::Symmetric));
}

TEST_CASE("projections P_5 -> P_4") {
  const auto p = projection(5, 2, 4);
  CHECK(p.target_vars() == 4);
  // u2 goes to u3, u3..u5 shift down.
  CHECK(p.apply(Monomial{1, 2, 3, 4, 5}) == Polynomial(Monomial{1, 3, 6, 5}));
  CHECK_THROWS_AS(projection(5, 3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(projection(5, 0, 3), IndexOutOfRange);
  CHECK(project_p(1, 5, parse_polynomial("u1*u5", 5)) == parse_polynomial("u4^2", 4));
}
