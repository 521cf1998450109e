#include "hitcalc/kameko.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <iostream>
#include <map>

#include "hitcalc/cache.hpp"
#include "hitcalc/steenrod.hpp"

namespace hitcalc {

std::optional<Monomial> kameko_down(const Monomial& m) {
  Monomial y(m.nvars());
  for (int j = 0; j < m.nvars(); ++j) {
    if (m[j] % 2 == 0) return std::nullopt;
    y[j] = (m[j] - 1) / 2;
  }
  return y;
}

Polynomial kameko_down(const Polynomial& f) {
  std::vector<Monomial> out;
  for (const auto& t : f.terms())
    if (auto y = kameko_down(t)) out.push_back(*y);
  return Polynomial(f.nvars(), std::move(out));
}

Monomial kameko_up(const Monomial& t) {
  Monomial m(t.nvars());
  for (int j = 0; j < t.nvars(); ++j) m[j] = 2 * t[j] + 1;
  return m;
}

Polynomial kameko_up(const Polynomial& f) {
  std::vector<Monomial> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(kameko_up(t));
  return Polynomial(f.nvars(), std::move(out));
}

std::vector<WeightVector> kameko_kernel_weights(int n, std::uint64_t D) {
  const auto spike = minimal_spike(n, D);
  if (!spike) throw MuTooLarge("mu(" + std::to_string(D) + ") exceeds " + std::to_string(n));
  const auto bound = weight_vector(*spike);
  std::vector<WeightVector> out;
  for (const auto& w : achieved_weights(n, D))
    if (w >= bound && w[1] < static_cast<std::uint32_t>(n)) out.push_back(w);
  return out;
}

KamekoKernel kameko_kernel(int n, std::uint64_t D, const HitOptions& opts,
                           const std::vector<WeightVector>& weights, KernelMethod method) {
  KamekoKernel k;
  k.n = n;
  k.degree = D;
  const auto ws = weights.empty() ? kameko_kernel_weights(n, D) : weights;
  for (const auto& w : ws)
    if (w.degree() != D) throw DegreeWeightMismatch("weight " + w.to_string() + " is not of degree " + std::to_string(D));
  if (method == KernelMethod::Auto) method = OddSplit::applicable(n, D) ? KernelMethod::Split : KernelMethod::Dense;
  if (method == KernelMethod::Split) {
    const auto split = OddSplit::build(n, D, opts);
    std::map<WeightVector, std::size_t> dims;
    for (const auto& [w, dim] : split.kernel_pieces()) dims[w] = dim;
    for (const auto& w : ws) {
      // Weights outside the split's range carry nothing: their omega_1
      // differs from n - 2 or they sit below the spike.
      const auto it = dims.find(w);
      const std::size_t dim = it == dims.end() ? 0 : it->second;
      k.pieces.emplace_back(w, dim);
      k.total += dim;
    }
    return k;
  }
  for (const auto& w : ws) {
    const auto dim = weight_subquotient(n, D, w, Part::Full, opts).dim();
    k.pieces.emplace_back(w, dim);
    k.total += dim;
  }
  return k;
}

namespace {

int odd_mask(const Monomial& m) {
  int mask = 0;
  for (int j = 0; j < m.nvars(); ++j)
    if (m[j] & 1u) mask |= 1 << j;
  return mask;
}

// X_J z^2 for every z of degree deg in n variables, descending in z.
std::vector<Monomial> with_odd_set(int n, int mask, std::uint64_t deg) {
  std::vector<Monomial> out;
  for (auto z : enumerate_monomials(n, deg)) {
    for (int j = 0; j < n; ++j) z[j] = 2 * z[j] + ((mask >> j) & 1);
    out.push_back(z);
  }
  return out;
}

// The top block and the kept X_I w^2 coordinates are read off one list, so
// every view shares the same code path.
class SplitView : public QuotientSpace {
 public:
  enum class Kind { Full, Piece, Kernel };
  SplitView(const OddSplit& s, Kind kind, std::optional<WeightVector> omega)
      : split_(s), kind_(kind) {
    ctx_ = HitContext{s.n(), s.degree(), std::move(omega), Part::Full};
    const auto& mono = s.free_monomials();
    for (std::size_t i = 0; i < mono.size(); ++i) {
      bool keep = kind == Kind::Full || (kind == Kind::Kernel && !s.free_is_top(i)) ||
                  (kind == Kind::Piece && !s.free_is_top(i) && weight_vector(mono[i]) == *ctx_.omega);
      if (keep) {
        slots_.push_back(i);
        adm_.push_back(mono[i]);
      }
    }
  }
  const HitContext& context() const override { return ctx_; }
  const std::vector<Monomial>& admissibles() const override { return adm_; }

  BitRow reduce(const Polynomial& f) const override {
    Polynomial g = f;
    if (kind_ == Kind::Piece) {
      std::vector<Monomial> keep;
      for (const auto& t : f.terms()) {
        if (t.nvars() != ctx_.n) throw std::invalid_argument("polynomial has wrong variable count");
        const auto w = weight_vector(t);
        if (w > *ctx_.omega) throw ModeViolation("term " + to_string(t) + " has weight above " + ctx_.omega->to_string());
        if (w == *ctx_.omega) keep.push_back(t);
      }
      g = Polynomial(ctx_.n, std::move(keep));
    }
    const BitRow full = split_.full_coordinates(g);
    if (kind_ == Kind::Full) return full;
    if (kind_ == Kind::Kernel) {
      for (std::size_t i = 0; i < full.ncols() && split_.free_is_top(i); ++i)
        if (full.test(i)) throw ModeViolation("class is not in the kernel of the down map");
    }
    BitRow out(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (full.test(slots_[i])) out.set(i);
    return out;
  }

 private:
  const OddSplit& split_;
  Kind kind_;
  HitContext ctx_;
  std::vector<std::size_t> slots_;
  std::vector<Monomial> adm_;
};

}  // namespace

bool OddSplit::applicable(int n, std::uint64_t D) {
  if (n < 2 || n > kMaxVars || D < static_cast<std::uint64_t>(n) || D > 255) return false;
  const auto spike = minimal_spike(n, D);
  return spike && weight_vector(*spike)[1] == static_cast<std::uint32_t>(n - 2);
}

void OddSplit::scatter(const Monomial& m, std::vector<std::uint32_t>& toggles) const {
  const int mask = odd_mask(m);
  const int pc = std::popcount(static_cast<unsigned>(mask));
  if (pc == n_) {
    toggles.push_back(top_col_.at(m.key()));
    return;
  }
  if (pc != n_ - 2) return;  // below the spike weight: hit
  Monomial w(n_);
  for (int j = 0; j < n_; ++j) w[j] = m[j] / 2;
  const auto c = inner_.column_of(w);
  if (!c) return;  // below the floor or Singer-hit in degree m
  const std::size_t base = static_cast<std::size_t>(block_of_mask_[static_cast<std::size_t>(mask)]) * inner_free_;
  for (auto f : inner_coords_[*c]) toggles.push_back(outer_of_[base + f]);
}

OddSplit OddSplit::build(int n, std::uint64_t D, const HitOptions& opts) {
  if (!applicable(n, D))
    throw std::invalid_argument("odd split needs a minimal spike with exactly n-2 odd exponents (n=" +
                                std::to_string(n) + ", D=" + std::to_string(D) + ")");
  OddSplit s;
  s.n_ = n;
  s.D_ = D;
  const int k = n - 2;
  s.floor_ = weight_vector(*minimal_spike(n, D));
  const std::uint64_t m = (D - static_cast<std::uint64_t>(k)) / 2;
  const std::uint64_t mt = (D - static_cast<std::uint64_t>(n)) / 2;
  std::vector<std::uint32_t> tail(s.floor_.entries().begin() + 1, s.floor_.entries().end());
  s.inner_ = compute_cohit(HitContext{n, m, WeightVector(tail), Part::Full}, opts);
  const auto& inf = s.inner_.normal_form();
  s.inner_free_ = inf.nfree();
  s.inner_coords_.resize(s.inner_.columns().size());
  for (std::uint32_t c = 0; c < s.inner_coords_.size(); ++c) s.inner_coords_[c] = inf.coordinates(std::span(&c, 1)).indices();

  // Top block first: it is the largest in the monomial order.
  for (auto y : enumerate_monomials(n, mt)) s.outer_mono_.push_back(kameko_up(y));
  s.ntop_ = s.outer_mono_.size();
  for (std::uint32_t i = 0; i < s.ntop_; ++i) s.top_col_.emplace(s.outer_mono_[i].key(), i);

  s.block_of_mask_.assign(std::size_t{1} << n, -1);
  std::vector<int> masks;
  for (int mask = 0; mask < (1 << n); ++mask)
    if (std::popcount(static_cast<unsigned>(mask)) == k) {
      s.block_of_mask_[static_cast<std::size_t>(mask)] = static_cast<int>(masks.size());
      masks.push_back(mask);
    }
  struct Coord {
    Monomial mono;
    std::size_t slot;
  };
  std::vector<Coord> coords;
  const auto& free = inf.free_columns();
  for (std::size_t b = 0; b < masks.size(); ++b)
    for (std::size_t f = 0; f < free.size(); ++f) {
      Monomial u = s.inner_.columns()[free[f]];
      for (int j = 0; j < n; ++j) u[j] = 2 * u[j] + ((masks[b] >> j) & 1);
      coords.push_back({u, b * s.inner_free_ + f});
    }
  std::sort(coords.begin(), coords.end(),
            [](const Coord& a, const Coord& b) { return compare_unchecked(a.mono, b.mono) > 0; });
  s.outer_of_.assign(coords.size(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    s.outer_of_[coords[i].slot] = static_cast<std::uint32_t>(s.ntop_ + i);
    s.outer_mono_.push_back(coords[i].mono);
  }
  const std::size_t ncols = s.outer_mono_.size();

  const CacheKey key{n, D, s.floor_, Part::Full, column_order_hash(n, D, s.outer_mono_), ncols};
  std::string path;
  bool have = false;
  if (!opts.cache_dir.empty()) {
    path = (std::filesystem::path(opts.cache_dir) / ("split_" + cache_file_name(key))).string();
    try {
      if (auto nf = load_normal_form(path, key)) {
        s.nf_ = std::move(*nf);
        have = true;
      }
    } catch (const CacheError& e) {
      std::cerr << "warning: ignoring cache " << path << ": " << e.what() << ", recomputing\n";
    }
  }
  if (!have) {
    const auto need = elimination_memory_estimate(ncols);
    if (opts.memory_limit && need > opts.memory_limit)
      throw ComputationTooLarge("odd split at (n=" + std::to_string(n) + ", D=" + std::to_string(D) + ") needs about " +
                                    std::to_string(need >> 20) + " MiB for " + std::to_string(ncols) + " columns",
                                need);
    EchelonBasis ech(ncols);
    std::vector<std::vector<std::uint32_t>> batch;
    auto flush = [&] {
      if (opts.threads > 1)
        ech.insert_batch_parallel(batch, opts.threads);
      else
        ech.insert_batch_serial(batch);
      batch.clear();
    };
    auto push = [&](std::uint64_t sqk, const Monomial& x) {
      std::vector<std::uint32_t> row;
      sq_monomial(sqk, x, [&](const Monomial& t) { s.scatter(t, row); });
      if (row.empty()) return;
      batch.push_back(std::move(row));
      if (batch.size() >= opts.batch) flush();
    };
    // Images of top-block sources, s descending.
    int top = 0;
    while ((std::uint64_t{2} << top) <= D) ++top;
    for (int e = top; e >= 1; --e) {
      const std::uint64_t sqk = std::uint64_t{1} << e;
      if (sqk + static_cast<std::uint64_t>(n) > D) continue;
      for (const auto& x : with_odd_set(n, (1 << n) - 1, (D - sqk - static_cast<std::uint64_t>(n)) / 2)) push(sqk, x);
    }
    // Sq^1 of sources with n - 1 odd exponents.
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != n - 1) continue;
      if (D < static_cast<std::uint64_t>(n)) continue;
      for (const auto& x : with_odd_set(n, mask, (D - static_cast<std::uint64_t>(n)) / 2)) push(1, x);
    }
    if (!batch.empty()) flush();
    s.nf_ = NormalForm(ech);
    if (!path.empty()) {
      try {
        save_normal_form(path, key, s.nf_);
      } catch (const std::exception& e) {
        std::cerr << "warning: could not write cache " << path << ": " << e.what() << "\n";
      }
    }
  }
  for (auto c : s.nf_.free_columns()) {
    s.free_mono_.push_back(s.outer_mono_[c]);
    if (c < s.ntop_) ++s.top_free_;
  }
  return s;
}

std::size_t OddSplit::kernel_dim() const { return free_mono_.size() - top_free_; }

std::vector<std::pair<WeightVector, std::size_t>> OddSplit::kernel_pieces() const {
  std::map<WeightVector, std::size_t, std::greater<>> count;
  for (const auto& w : achieved_weights(n_, D_))
    if (w >= floor_ && w[1] == static_cast<std::uint32_t>(n_ - 2)) count[w] = 0;
  for (std::size_t i = top_free_; i < free_mono_.size(); ++i) ++count[weight_vector(free_mono_[i])];
  return {count.begin(), count.end()};
}

BitRow OddSplit::full_coordinates(const Polynomial& f) const {
  std::vector<std::uint32_t> toggles;
  for (const auto& t : f.terms()) {
    if (t.nvars() != n_) throw std::invalid_argument("polynomial has wrong variable count");
    if (t.degree() != D_) throw NonHomogeneous("term " + to_string(t) + " has degree other than " + std::to_string(D_));
    scatter(t, toggles);
  }
  return nf_.coordinates(std::span<const std::uint32_t>(toggles));
}

std::unique_ptr<QuotientSpace> OddSplit::full() const {
  return std::make_unique<SplitView>(*this, SplitView::Kind::Full, std::nullopt);
}

std::unique_ptr<QuotientSpace> OddSplit::piece(const WeightVector& omega) const {
  if (omega.degree() != D_) throw DegreeWeightMismatch("weight " + omega.to_string() + " is not of degree " + std::to_string(D_));
  if (omega[1] != static_cast<std::uint32_t>(n_ - 2) || omega < floor_)
    throw std::invalid_argument("weight " + omega.to_string() + " is outside the odd split's range");
  return std::make_unique<SplitView>(*this, SplitView::Kind::Piece, omega);
}

std::unique_ptr<QuotientSpace> OddSplit::kernel() const {
  return std::make_unique<SplitView>(*this, SplitView::Kind::Kernel, std::nullopt);
}

KamekoIsoReport kameko_iso_check(int n, std::uint64_t d, const HitOptions& opts) {
  KamekoIsoReport r;
  const std::uint64_t D = 2 * d + static_cast<std::uint64_t>(n);
  r.mu_condition = mu(D) == n;
  r.source_dim = cohit_basis(n, D, Part::Full, opts).dim();
  r.target_dim = cohit_basis(n, d, Part::Full, opts).dim();
  // The down map is onto; it is injective exactly when mu(D) = n.
  r.consistent = r.mu_condition ? r.source_dim == r.target_dim : r.source_dim >= r.target_dim;
  return r;
}

}  // namespace hitcalc
