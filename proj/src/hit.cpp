#include "hitcalc/hit.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <set>

#include "hitcalc/cache.hpp"
#include "hitcalc/steenrod.hpp"

namespace hitcalc {

std::string HitContext::describe() const {
  std::string s = "(n=" + std::to_string(n) + ", d=" + std::to_string(d);
  if (omega) s += ", omega=" + omega->to_string();
  s += ", part=";
  s += to_string(part);
  return s + ")";
}

std::uint64_t column_order_hash(int n, std::uint64_t d, const std::vector<Monomial>& cols) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  mix(d);
  mix(cols.size());
  for (const auto& m : cols)
    for (auto e : m.exponents()) mix(e);
  return h;
}

std::uint64_t hit_generator_count(int n, std::uint64_t d) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= d; k <<= 1) total += monomial_count(n, d - k);
  return total;
}

std::uint64_t elimination_memory_estimate(std::size_t ncols) {
  const std::uint64_t words = words_for(ncols);
  return static_cast<std::uint64_t>(ncols) * (words / 2 + 1) * sizeof(Word);
}

void CohitBasis::index() {
  col_of_.clear();
  col_of_.reserve(columns_.size() * 2);
  for (std::size_t i = 0; i < columns_.size(); ++i) col_of_.emplace(columns_[i].key(), static_cast<std::uint32_t>(i));
}

std::optional<std::uint32_t> CohitBasis::column_of(const Monomial& m) const {
  auto it = col_of_.find(m.key());
  if (it == col_of_.end()) return std::nullopt;
  return it->second;
}

BitRow CohitBasis::reduce(const Polynomial& f) const {
  std::vector<std::uint32_t> cols;
  for (const auto& t : f.terms()) {
    if (t.nvars() != ctx_.n) throw std::invalid_argument("polynomial has wrong variable count");
    if (t.degree() != ctx_.d) throw NonHomogeneous("term " + to_string(t) + " has degree other than " + std::to_string(ctx_.d));
    if (!in_part(t, ctx_.part)) throw std::invalid_argument("term " + to_string(t) + " lies outside the " + to_string(ctx_.part) + " part");
    if (ctx_.omega && weight_vector(t) > *ctx_.omega)
      throw ModeViolation("term " + to_string(t) + " has weight above " + ctx_.omega->to_string());
    if (auto c = column_of(t)) cols.push_back(*c);
    // Anything else is below the Singer bound or below omega: zero here.
  }
  const BitRow full = nf_.coordinates(std::span<const std::uint32_t>(cols));
  BitRow out(admissibles_.size());
  for (std::size_t i = 0; i < admissibles_.size(); ++i)
    if (full.test(adm_offset_ + i)) out.set(i);
  for (std::size_t i = 0; i < adm_offset_; ++i)
    if (full.test(i)) throw ModeViolation("class has a component above the basis weight");
  return out;
}

Polynomial QuotientSpace::representative(const BitRow& coords) const {
  const auto& adm = admissibles();
  if (coords.ncols() != adm.size()) throw DimensionMismatch("coordinate vector has wrong length");
  std::vector<Monomial> terms;
  for (auto i : coords.indices()) terms.push_back(adm[i]);
  return Polynomial(context().n, std::move(terms));
}

namespace {

void validate(const HitContext& ctx) {
  if (ctx.n < 1 || ctx.n > kMaxVars) throw std::invalid_argument("n must be between 1 and " + std::to_string(kMaxVars));
  if (ctx.d > 255) throw std::invalid_argument("degree above 255 is not supported");
  if (ctx.omega && ctx.omega->degree() != ctx.d)
    throw DegreeWeightMismatch("weight vector " + ctx.omega->to_string() + " has degree " +
                               std::to_string(ctx.omega->degree()) + ", not " + std::to_string(ctx.d));
}

// Streams generator rows into the echelon, batch by batch.
void eliminate(const CohitBasis& shell, const HitContext& ctx, const HitOptions& opts, EchelonBasis& ech) {
  if (ctx.d == 0) return;  // nothing is hit in degree 0
  std::vector<std::vector<std::uint32_t>> batch;
  batch.reserve(opts.batch);
  auto flush = [&] {
    if (opts.threads > 1)
      ech.insert_batch_parallel(batch, opts.threads);
    else
      ech.insert_batch_serial(batch);
    batch.clear();
  };
  int top = 0;
  while ((std::uint64_t{2} << top) <= ctx.d) ++top;
  for (int s = top; s >= 0; --s) {
    const std::uint64_t k = std::uint64_t{1} << s;
    for (const auto& x : enumerate_monomials(ctx.n, ctx.d - k, nullptr, WeightFilter::All, ctx.part)) {
      std::vector<std::uint32_t> row;
      sq_monomial(k, x, [&](const Monomial& t) {
        if (auto c = shell.column_of(t)) row.push_back(*c);
      });
      if (row.empty()) continue;
      batch.push_back(std::move(row));
      if (batch.size() >= opts.batch) flush();
    }
  }
  if (!batch.empty()) flush();
}

}  // namespace

CohitBasis compute_cohit(const HitContext& ctx, const HitOptions& opts) {
  validate(ctx);
  CohitBasis b;
  b.ctx_ = ctx;
  if (ctx.d > 0) {
    if (auto spike = minimal_spike(ctx.n, ctx.d)) b.spike_weight_ = weight_vector(*spike);
  }
  if (!opts.singer_filter) b.spike_weight_.reset();
  const bool wood_zero = opts.singer_filter && ctx.d > 0 && !b.spike_weight_;
  if (!wood_zero) {
    auto cols = ctx.omega ? enumerate_monomials(ctx.n, ctx.d, &*ctx.omega, WeightFilter::AtLeast, ctx.part)
                          : enumerate_monomials(ctx.n, ctx.d, nullptr, WeightFilter::All, ctx.part);
    if (b.spike_weight_) {
      const WeightVector& bound = *b.spike_weight_;
      std::erase_if(cols, [&](const Monomial& m) { return weight_vector(m) < bound; });
    }
    b.columns_ = std::move(cols);
  }
  b.index();
  b.hash_ = column_order_hash(ctx.n, ctx.d, b.columns_);

  const CacheKey key{ctx.n, ctx.d, ctx.omega, ctx.part, b.hash_, b.columns_.size()};
  std::string path;
  bool have = false;
  if (ctx.omega && std::none_of(b.columns_.begin(), b.columns_.end(),
                                [&](const Monomial& m) { return weight_vector(m) == *ctx.omega; })) {
    // Nothing of weight omega survives: the subquotient is zero.
    b.nf_ = NormalForm(b.columns_.size(), {}, {});
    have = true;
  }
  if (!have && !opts.cache_dir.empty()) {
    path = (std::filesystem::path(opts.cache_dir) / ((opts.singer_filter ? "" : "nofilter_") + cache_file_name(key))).string();
    try {
      if (auto nf = load_normal_form(path, key)) {
        b.nf_ = std::move(*nf);
        b.from_cache_ = true;
        have = true;
      }
    } catch (const CacheError& e) {
      std::cerr << "warning: ignoring cache " << path << ": " << e.what() << ", recomputing\n";
    }
  }
  if (!have) {
    const auto need = elimination_memory_estimate(b.columns_.size());
    if (opts.memory_limit && need > opts.memory_limit)
      throw ComputationTooLarge(ctx.describe() + " needs about " + std::to_string(need >> 20) + " MiB for " +
                                    std::to_string(b.columns_.size()) + " columns",
                                need);
    EchelonBasis ech(b.columns_.size());
    eliminate(b, ctx, opts, ech);
    b.nf_ = NormalForm(ech);
    if (!path.empty()) {
      try {
        save_normal_form(path, key, b.nf_);
      } catch (const std::exception& e) {
        std::cerr << "warning: could not write cache " << path << ": " << e.what() << "\n";
      }
    }
  }

  const auto& free = b.nf_.free_columns();
  b.adm_offset_ = 0;
  if (ctx.omega) {
    while (b.adm_offset_ < free.size() && weight_vector(b.columns_[free[b.adm_offset_]]) != *ctx.omega) ++b.adm_offset_;
  }
  for (std::size_t i = b.adm_offset_; i < free.size(); ++i) b.admissibles_.push_back(b.columns_[free[i]]);
  return b;
}

CohitBasis cohit_basis(int n, std::uint64_t d, Part part, const HitOptions& opts) {
  return compute_cohit(HitContext{n, d, std::nullopt, part}, opts);
}

CohitBasis weight_subquotient(int n, std::uint64_t d, const WeightVector& omega, Part part,
                              const HitOptions& opts) {
  return compute_cohit(HitContext{n, d, omega, part}, opts);
}

bool is_hit(const Polynomial& f, const HitOptions& opts) {
  if (f.is_zero()) return true;
  const auto d = f.degree();
  return cohit_basis(f.nvars(), d, Part::Full, opts).is_hit(f);
}

BitRow reduce_to_admissible(const CohitBasis& basis, const Polynomial& f) { return basis.reduce(f); }

ZeroPositiveSplit split_zero_positive(int n, std::uint64_t d, const HitOptions& opts) {
  return {cohit_basis(n, d, Part::Zero, opts), cohit_basis(n, d, Part::Positive, opts)};
}

std::vector<WeightVector> achieved_weights(int n, std::uint64_t d) {
  std::set<WeightVector, std::greater<>> seen;
  for (const auto& m : enumerate_monomials(n, d)) seen.insert(weight_vector(m));
  return {seen.begin(), seen.end()};
}

DirectSumReport check_direct_sum(int n, std::uint64_t d, const HitOptions& opts) {
  DirectSumReport r;
  r.total = cohit_basis(n, d, Part::Full, opts).dim();
  for (const auto& w : achieved_weights(n, d)) {
    const auto dim = weight_subquotient(n, d, w, Part::Full, opts).dim();
    r.pieces.emplace_back(w, dim);
    r.sum += dim;
  }
  r.equal = r.sum == r.total;
  return r;
}

}  // namespace hitcalc
