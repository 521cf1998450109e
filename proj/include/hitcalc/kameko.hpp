#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hitcalc/hit.hpp"

namespace hitcalc {

struct MuTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// u_1..u_n y^2 -> y; anything with an even exponent -> zero.
std::optional<Monomial> kameko_down(const Monomial& m);
Polynomial kameko_down(const Polynomial& f);

// t -> u_1..u_n t^2, termwise.
Monomial kameko_up(const Monomial& t);
Polynomial kameko_up(const Polynomial& f);

// (QP_n)_D worked out through the odd-exponent structure of monomials, for
// degrees whose minimal spike has exactly n - 2 odd exponents. Every class
// then lives on monomials with n odd exponents (the top block, which is
// u_1..u_n P^2) or n - 2 odd exponents (X_I w^2 with |I| = n - 2).
//
// Modulo lower weights, Sq^{2k} X_I w^2 = X_I (Sq^k w)^2, so relations from
// sources with n - 2 odd exponents are the degree-m hit space placed in each
// X_I block (m = (D - n + 2) / 2). One dense elimination in degree m thus
// replaces all of them; what is left are Sq^1 images of sources with n - 1
// odd exponents and Sq^{2^s} images of top-block sources, eliminated over
// the top block plus the reduced X_I coordinates.
class OddSplit {
 public:
  // Throws std::invalid_argument when the spike condition fails.
  static OddSplit build(int n, std::uint64_t D, const HitOptions& opts = {});
  static bool applicable(int n, std::uint64_t D);

  int n() const { return n_; }
  std::uint64_t degree() const { return D_; }
  // dim (QP_n)_D.
  std::size_t dim() const { return nf_.nfree(); }
  std::size_t top_dim() const { return nf_.nfree() - kernel_dim(); }
  std::size_t kernel_dim() const;
  // Kernel pieces by weight, descending, including zero pieces of
  // achieved weights.
  std::vector<std::pair<WeightVector, std::size_t>> kernel_pieces() const;
  std::size_t inner_dim() const { return inner_free_; }
  std::size_t outer_columns() const { return nf_.ncols(); }

  // (QP_n)_D itself.
  std::unique_ptr<QuotientSpace> full() const;
  // QP_n(omega) for a weight with omega_1 = n - 2 at or above the spike's.
  std::unique_ptr<QuotientSpace> piece(const WeightVector& omega) const;
  // Kernel of the down map as a subspace of (QP_n)_D. reduce() rejects
  // classes outside it.
  std::unique_ptr<QuotientSpace> kernel() const;

  // Coordinates over all free outer columns.
  BitRow full_coordinates(const Polynomial& f) const;
  const std::vector<Monomial>& free_monomials() const { return free_mono_; }
  bool free_is_top(std::size_t i) const { return i < top_free_; }

 private:
  // Adds the outer coordinates of m to row (by toggling); false when m is
  // neither in the top block nor an X_I w^2 above the floor.
  void scatter(const Monomial& m, std::vector<std::uint32_t>& toggles) const;

  int n_ = 0;
  std::uint64_t D_ = 0;
  WeightVector floor_;
  std::size_t ntop_ = 0;
  std::unordered_map<std::uint64_t, std::uint32_t> top_col_;
  // Odd-set mask -> block index.
  std::vector<int> block_of_mask_;
  CohitBasis inner_;
  std::size_t inner_free_ = 0;
  // For each inner column, its free coordinates.
  std::vector<std::vector<std::uint32_t>> inner_coords_;
  // (block * inner_free + free index) -> outer column.
  std::vector<std::uint32_t> outer_of_;
  std::vector<Monomial> outer_mono_;
  NormalForm nf_;
  std::vector<Monomial> free_mono_;
  std::size_t top_free_ = 0;
};

enum class KernelMethod { Auto, Dense, Split };

struct KamekoKernel {
  int n = 0;
  std::uint64_t degree = 0;
  std::size_t total = 0;
  std::vector<std::pair<WeightVector, std::size_t>> pieces;
};

// Weight vectors that can carry kernel classes at source degree D:
// achieved weights at or above the minimal spike's, with omega_1 < n.
std::vector<WeightVector> kameko_kernel_weights(int n, std::uint64_t D);

// The kernel of the down map on (QP_n)_D as the direct sum of its weight
// pieces. Restricting to `weights` (when non-empty) computes only those.
// Auto uses OddSplit when it applies and dense weight eliminations otherwise.
KamekoKernel kameko_kernel(int n, std::uint64_t D, const HitOptions& opts = {},
                           const std::vector<WeightVector>& weights = {},
                           KernelMethod method = KernelMethod::Auto);

// mu(2d + n) == n, confirmed by comparing the two cohit dimensions.
struct KamekoIsoReport {
  bool mu_condition = false;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool consistent = false;
};
KamekoIsoReport kameko_iso_check(int n, std::uint64_t d, const HitOptions& opts = {});

}  // namespace hitcalc
