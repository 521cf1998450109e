#pragma once

// Property suites shared by the doctest runner and the acceptance binary.
// Each returns the number of failed cases and appends details to `log`.

#include <cstdint>
#include <string>
#include <vector>

#include "hitcalc/hit.hpp"

namespace checks {

struct Result {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> log;
  bool ok() const { return cases > 0 && failures == 0; }
  void fail(std::string what) {
    ++failures;
    if (log.size() < 20) log.push_back(std::move(what));
  }
};

// Sq^{2^s} span vs span of every Sq^i (oracle), and the main engine, for
// n <= max_n, d <= max_d.
Result span_equivalence(int max_n, int max_d);

// Unfiltered elimination: dim 0 whenever mu(d) > n, and every spike is an
// admissible monomial, for n <= max_n, d <= max_d.
Result wood_and_spikes(int max_n, int max_d, const hitcalc::HitOptions& opts = {});

// Random Cartan formula cases, checked against the oracle's squares too.
Result cartan(std::size_t cases, std::uint64_t seed);

// Random <a Sq^k, f> = <a, Sq^k f> cases.
Result adjointness(std::size_t cases, std::uint64_t seed);

// Weight pieces of (QP_n)_d sum to the total.
Result direct_sum(int n, std::uint64_t d, const hitcalc::HitOptions& opts = {});

// Normal forms bit-identical across thread counts.
Result thread_determinism(int n, std::uint64_t d, const std::vector<int>& threads);

}  // namespace checks
