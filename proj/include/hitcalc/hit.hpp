#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hitcalc/gf2.hpp"
#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

struct DegreeWeightMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a polynomial handed to a weight-mode basis has a term of
// weight above the basis weight.
struct ModeViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The dense elimination would need more memory than HitOptions allows.
struct ComputationTooLarge : std::runtime_error {
  ComputationTooLarge(const std::string& what, std::uint64_t bytes) : std::runtime_error(what), estimate(bytes) {}
  std::uint64_t estimate;
};

struct HitContext {
  int n = 0;
  std::uint64_t d = 0;
  std::optional<WeightVector> omega;
  Part part = Part::Full;

  std::string describe() const;
};

struct HitOptions {
  int threads = 1;
  std::size_t batch = 4096;
  // Empty means no caching.
  std::string cache_dir;
  // Refuse eliminations whose row storage estimate exceeds this; 0 = no limit.
  std::uint64_t memory_limit = 0;
  // Drop columns below the minimal spike weight (and short-circuit Wood's
  // vanishing). Turning it off is only useful for checking both facts.
  bool singer_filter = true;
};

// Row storage of a dense elimination over ncols columns, assuming nearly
// full rank (rows are kept from their pivot word on).
std::uint64_t elimination_memory_estimate(std::size_t ncols);

// A finite quotient of P_n with a monomial basis and a reduction map.
// Group actions and invariant checks only need this much.
class QuotientSpace {
 public:
  virtual ~QuotientSpace() = default;
  virtual const HitContext& context() const = 0;
  virtual const std::vector<Monomial>& admissibles() const = 0;
  // Coordinates of [f] over admissibles().
  virtual BitRow reduce(const Polynomial& f) const = 0;

  std::size_t dim() const { return admissibles().size(); }
  bool is_hit(const Polynomial& f) const { return reduce(f).is_zero(); }
  Polynomial representative(const BitRow& coords) const;
};

// Admissible basis of (QP_n)_d or of a weight subquotient, with the
// reduction map from polynomials to admissible coordinates.
class CohitBasis : public QuotientSpace {
 public:
  CohitBasis() = default;

  const HitContext& context() const override { return ctx_; }
  const std::vector<Monomial>& admissibles() const override { return admissibles_; }
  // Retained columns, descending. Monomials below the Singer bound (and
  // below omega in weight mode) are quotiented out up front.
  const std::vector<Monomial>& columns() const { return columns_; }
  std::size_t rank() const { return nf_.rank(); }
  const NormalForm& normal_form() const { return nf_; }
  std::uint64_t column_hash() const { return hash_; }
  bool loaded_from_cache() const { return from_cache_; }

  // Coordinates of [f] over admissibles(). Terms outside the part, or of the
  // wrong degree, are rejected.
  BitRow reduce(const Polynomial& f) const override;
  std::optional<std::uint32_t> column_of(const Monomial& m) const;

 private:
  friend CohitBasis compute_cohit(const HitContext&, const HitOptions&);
  void index();

  HitContext ctx_;
  std::vector<Monomial> columns_;
  std::unordered_map<std::uint64_t, std::uint32_t> col_of_;
  NormalForm nf_;
  std::vector<Monomial> admissibles_;
  // Admissibles are the free columns from this free slot on.
  std::size_t adm_offset_ = 0;
  std::uint64_t hash_ = 0;
  bool from_cache_ = false;
  std::optional<WeightVector> spike_weight_;
};

// Sq^{2^s}(x) for every s with 2^s <= d and every monomial x of degree
// d - 2^s in the given part; s descending, then x descending.
template <class Emit>
void hit_generators(int n, std::uint64_t d, Part part, Emit&& emit);

std::uint64_t hit_generator_count(int n, std::uint64_t d);

CohitBasis compute_cohit(const HitContext& ctx, const HitOptions& opts = {});
CohitBasis cohit_basis(int n, std::uint64_t d, Part part = Part::Full, const HitOptions& opts = {});
CohitBasis weight_subquotient(int n, std::uint64_t d, const WeightVector& omega,
                              Part part = Part::Full, const HitOptions& opts = {});

bool is_hit(const Polynomial& f, const HitOptions& opts = {});
BitRow reduce_to_admissible(const CohitBasis& basis, const Polynomial& f);

struct ZeroPositiveSplit {
  CohitBasis zero;
  CohitBasis positive;
};
ZeroPositiveSplit split_zero_positive(int n, std::uint64_t d, const HitOptions& opts = {});

// Weight vectors of degree-d monomials in n variables, descending.
std::vector<WeightVector> achieved_weights(int n, std::uint64_t d);

struct DirectSumReport {
  std::size_t total = 0;
  std::size_t sum = 0;
  bool equal = false;
  std::vector<std::pair<WeightVector, std::size_t>> pieces;
};
DirectSumReport check_direct_sum(int n, std::uint64_t d, const HitOptions& opts = {});

// FNV-1a over the column list; identifies a column order in cache files.
std::uint64_t column_order_hash(int n, std::uint64_t d, const std::vector<Monomial>& cols);

}  // namespace hitcalc

#include "hitcalc/steenrod.hpp"

namespace hitcalc {

template <class Emit>
void hit_generators(int n, std::uint64_t d, Part part, Emit&& emit) {
  if (d == 0) return;
  int top = 0;
  while ((std::uint64_t{2} << top) <= d) ++top;
  for (int s = top; s >= 0; --s) {
    const std::uint64_t k = std::uint64_t{1} << s;
    for (const auto& x : enumerate_monomials(n, d - k, nullptr, WeightFilter::All, part)) {
      std::vector<Monomial> terms;
      sq_monomial(k, x, [&](const Monomial& t) { terms.push_back(t); });
      if (!terms.empty()) emit(Polynomial(n, std::move(terms)));
    }
  }
}

}  // namespace hitcalc
