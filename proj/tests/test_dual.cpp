#include "doctest.h"

#include "hitcalc/datasets.hpp"
#include "hitcalc/dual.hpp"
#include "hitcalc/kameko.hpp"

using namespace hitcalc;

TEST_CASE("divided power syntax") {
  const auto a = parse_dual("a1^(3)*a2^(11) + a2", 2);
  CHECK(a.size() == 2);
  CHECK(parse_dual(format_dual(parse_dual("a1^(3)*a2^(11)", 2)), 2) == parse_dual("a1^(3)*a2^(11)", 2));
  CHECK(parse_dual("0", 3).is_zero());
  CHECK(parse_dual("1", 3).terms().front() == Monomial{0, 0, 0});
  CHECK_THROWS_AS(parse_dual("a1^3", 2), ParseError);
  CHECK_THROWS_AS(parse_dual("a3^(1)", 2), ParseError);
}

TEST_CASE("right action of squares") {
  // (a^(t)) Sq^k = C(t-k, k) a^(t-k).
  CHECK(right_sq(1, parse_dual("a1^(3)", 1)).is_zero());
  CHECK(right_sq(1, parse_dual("a1^(2)", 1)) == parse_dual("a1", 1));
  CHECK(right_sq(2, parse_dual("a1^(3)", 1)).is_zero());
  CHECK(right_sq(2, parse_dual("a1^(4)", 1)) == parse_dual("a1^(2)", 1));
  // Spike duals are annihilated.
  CHECK(is_annihilated(parse_dual("a1^(7)*a2^(3)*a3", 3)));
  CHECK(!is_annihilated(parse_dual("a1^(2)", 1)));
  CHECK(right_sq(2, parse_dual("a1^(5)", 1)) == parse_dual("a1^(3)", 1));
}

TEST_CASE("pairing") {
  const auto f = parse_polynomial("u1^3*u2 + u1*u2^3", 2);
  CHECK(pairing(parse_dual("a1^(3)*a2", 2), f));
  CHECK(!pairing(parse_dual("a1^(3)*a2 + a1*a2^(3)", 2), f));
  CHECK(!pairing(parse_dual("a1^(2)*a2^(2)", 2), f));
  CHECK_THROWS_AS(pairing(parse_dual("a1", 2), f), DegreeMismatch);
}

TEST_CASE("the degree-33 dual class") {
  const auto z0 = zeta0();
  CHECK(z0.degree() == 33);
  CHECK(is_annihilated(z0));
  CHECK(pairing(z0, kameko_up(zeta())));
  // Annihilated classes vanish on hit polynomials.
  for (const auto& x : enumerate_monomials(5, 31)) CHECK(!pairing(z0, sq(2, x)));
}
