#include "hitcalc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hitcalc {

namespace {

inline void xor_words(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

}  // namespace

BitRow BitRow::unit(std::size_t ncols, std::size_t col) {
  BitRow r(ncols);
  r.set(col);
  return r;
}

BitRow BitRow::from_indices(std::size_t ncols, std::span<const std::uint32_t> cols) {
  BitRow r(ncols);
  for (auto c : cols) {
    if (c >= ncols) throw DimensionMismatch("column index out of range");
    r.flip(c);
  }
  return r;
}

bool BitRow::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::int64_t BitRow::leading() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<std::int64_t>(w * kWordBits + std::countr_zero(words_[w]));
  return -1;
}

std::size_t BitRow::popcount() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::uint32_t> BitRow::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (Word x = words_[w]; x; x &= x - 1)
      out.push_back(static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(x)));
  return out;
}

BitRow& BitRow::operator^=(const BitRow& other) {
  if (other.ncols_ != ncols_) throw DimensionMismatch("row widths differ");
  xor_words(words_.data(), other.words_.data(), words_.size());
  return *this;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows[i].set(i);
  return m;
}

BitMatrix BitMatrix::from_columns(std::size_t nrows, const std::vector<BitRow>& cols) {
  BitMatrix m(nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].ncols() != nrows) throw DimensionMismatch("column length differs from row count");
    for (auto i : cols[j].indices()) m.rows[i].set(j);
  }
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(ncols, nrows);
  for (std::size_t i = 0; i < nrows; ++i)
    for (auto j : rows[i].indices()) t.rows[j].set(i);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (ncols != other.nrows) throw DimensionMismatch("inner dimensions differ");
  BitMatrix out(nrows, other.ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (auto k : rows[i].indices()) out.rows[i] ^= other.rows[k];
  return out;
}

BitRow BitMatrix::apply(const BitRow& x) const {
  if (x.ncols() != ncols) throw DimensionMismatch("vector length differs from column count");
  BitRow y(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    Word acc = 0;
    auto a = rows[i].words();
    auto b = x.words();
    for (std::size_t w = 0; w < a.size(); ++w) acc ^= a[w] & b[w];
    if (std::popcount(acc) & 1) y.set(i);
  }
  return y;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (nrows != other.nrows || ncols != other.ncols) throw DimensionMismatch("matrix shapes differ");
  for (std::size_t i = 0; i < nrows; ++i) rows[i] ^= other.rows[i];
  return *this;
}

EchelonBasis::EchelonBasis(std::size_t ncols)
    : ncols_(ncols),
      nwords_(words_for(ncols)),
      pivot_row_(ncols, -1),
      block_words_(std::max<std::size_t>(std::size_t{1} << 20, nwords_)),
      block_fill_(block_words_) {}

std::span<const Word> EchelonBasis::row_words(std::size_t i) const {
  const std::size_t lead = pivots_[i] / kWordBits;
  const std::size_t off = offsets_[i];
  return {blocks_[off / block_words_].get() + off % block_words_, nwords_ - lead};
}

std::span<Word> EchelonBasis::row_words_mut(std::size_t i) {
  const std::size_t lead = pivots_[i] / kWordBits;
  const std::size_t off = offsets_[i];
  return {blocks_[off / block_words_].get() + off % block_words_, nwords_ - lead};
}

std::vector<std::uint32_t> EchelonBasis::sorted_pivots() const {
  auto p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<std::uint32_t> EchelonBasis::free_columns() const {
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_row_[c] < 0) out.push_back(static_cast<std::uint32_t>(c));
  return out;
}

BitRow EchelonBasis::row(std::size_t i) const {
  BitRow r(ncols_);
  auto src = row_words(i);
  std::copy(src.begin(), src.end(), r.words().begin() + static_cast<std::ptrdiff_t>(pivots_[i] / kWordBits));
  return r;
}

std::int64_t EchelonBasis::semi_reduce(Word* buf, std::size_t from_word) const {
  std::size_t w = from_word;
  while (w < nwords_) {
    if (buf[w] == 0) {
      ++w;
      continue;
    }
    const std::size_t col = w * kWordBits + static_cast<std::size_t>(std::countr_zero(buf[w]));
    const std::int32_t r = pivot_row_[col];
    if (r < 0) return static_cast<std::int64_t>(col);
    auto src = row_words(static_cast<std::size_t>(r));
    xor_words(buf + w, src.data(), src.size());
  }
  return -1;
}

void EchelonBasis::store(const Word* buf, std::size_t lead) {
  const std::size_t lw = lead / kWordBits;
  const std::size_t len = nwords_ - lw;
  if (block_fill_ + len > block_words_) {
    blocks_.push_back(std::make_unique_for_overwrite<Word[]>(block_words_));
    block_fill_ = 0;
  }
  const std::size_t off = (blocks_.size() - 1) * block_words_ + block_fill_;
  std::memcpy(blocks_.back().get() + block_fill_, buf + lw, len * sizeof(Word));
  block_fill_ += len;
  pivot_row_[lead] = static_cast<std::int32_t>(pivots_.size());
  pivots_.push_back(static_cast<std::uint32_t>(lead));
  offsets_.push_back(off);
  reduced_ = pivots_.size() <= 1;
}

bool EchelonBasis::insert(const BitRow& row) {
  if (row.ncols() != ncols_) throw DimensionMismatch("row width differs from basis width");
  std::vector<Word> buf(row.words().begin(), row.words().end());
  const auto lead = semi_reduce(buf.data(), 0);
  if (lead < 0) return false;
  store(buf.data(), static_cast<std::size_t>(lead));
  return true;
}

bool EchelonBasis::insert_sparse(std::span<const std::uint32_t> cols) {
  std::vector<Word> buf(nwords_, 0);
  std::size_t first = nwords_;
  for (auto c : cols) {
    if (c >= ncols_) throw DimensionMismatch("column index out of range");
    buf[c / kWordBits] ^= Word{1} << (c % kWordBits);
    first = std::min<std::size_t>(first, c / kWordBits);
  }
  const auto lead = semi_reduce(buf.data(), first);
  if (lead < 0) return false;
  store(buf.data(), static_cast<std::size_t>(lead));
  return true;
}

std::size_t EchelonBasis::insert_batch_serial(std::span<const std::vector<std::uint32_t>> rows) {
  std::size_t added = 0;
  for (const auto& r : rows) added += insert_sparse(r) ? 1 : 0;
  return added;
}

std::size_t EchelonBasis::insert_batch_parallel(std::span<const std::vector<std::uint32_t>> rows,
                                                int threads) {
  const std::size_t count = rows.size();
  std::vector<Word> bufs(count * nwords_, 0);
  std::vector<std::int64_t> leads(count, -1);
  for (std::size_t i = 0; i < count; ++i)
    for (auto c : rows[i])
      if (c >= ncols_) throw DimensionMismatch("column index out of range");

  // Snapshot phase: the pivot table is read-only here.
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4) if (threads > 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
    Word* buf = bufs.data() + static_cast<std::size_t>(i) * nwords_;
    std::size_t first = nwords_;
    for (auto c : rows[static_cast<std::size_t>(i)]) {
      buf[c / kWordBits] ^= Word{1} << (c % kWordBits);
      first = std::min<std::size_t>(first, c / kWordBits);
    }
    leads[static_cast<std::size_t>(i)] = semi_reduce(buf, first);
  }

  // Commit phase, in input order.
  std::size_t added = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (leads[i] < 0) continue;
    Word* buf = bufs.data() + i * nwords_;
    const auto lead = semi_reduce(buf, static_cast<std::size_t>(leads[i]) / kWordBits);
    if (lead < 0) continue;
    store(buf, static_cast<std::size_t>(lead));
    ++added;
  }
  return added;
}

BitRow EchelonBasis::reduce(const BitRow& row) const {
  if (row.ncols() != ncols_) throw DimensionMismatch("row width differs from basis width");
  BitRow out = row;
  Word* buf = out.words().data();
  for (std::size_t w = 0; w < nwords_; ++w) {
    Word pending = buf[w];
    while (pending) {
      const unsigned b = static_cast<unsigned>(std::countr_zero(pending));
      const std::size_t col = w * kWordBits + b;
      const std::int32_t r = pivot_row_[col];
      if (r >= 0) {
        auto src = row_words(static_cast<std::size_t>(r));
        xor_words(buf + w, src.data(), src.size());
      }
      const Word above = b + 1 < kWordBits ? ~((Word{2} << b) - 1) : 0;
      pending = buf[w] & above;
    }
  }
  return out;
}

void EchelonBasis::make_reduced() {
  if (reduced_) return;
  std::vector<std::size_t> order(pivots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] > pivots_[b]; });
  for (std::size_t i : order) {
    auto dst = row_words_mut(i);
    const std::size_t base = pivots_[i] / kWordBits;
    for (std::size_t w = 0; w < dst.size(); ++w) {
      Word pending = dst[w];
      if (w == 0) pending &= ~((Word{2} << (pivots_[i] % kWordBits)) - 1 );
      while (pending) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(pending));
        const std::size_t col = (base + w) * kWordBits + b;
        const std::int32_t r = pivot_row_[col];
        if (r >= 0) {
          auto src = row_words(static_cast<std::size_t>(r));
          xor_words(dst.data() + w, src.data(), src.size());
        }
        const Word above = b + 1 < kWordBits ? ~((Word{2} << b) - 1) : 0;
        pending = dst[w] & above;
      }
    }
  }
  reduced_ = true;
}

bool EchelonBasis::self_check() const {
  std::vector<bool> seen(ncols_, false);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (p >= ncols_ || seen[p] || pivot_row_[p] != static_cast<std::int32_t>(i)) return false;
    seen[p] = true;
    const BitRow r = row(i);
    if (r.leading() != static_cast<std::int64_t>(p)) return false;
    // Bits past ncols must stay clear.
    if (ncols_ % kWordBits && (r.words().back() >> (ncols_ % kWordBits))) return false;
  }
  for (std::size_t c = 0; c < ncols_; ++c)
    if ((pivot_row_[c] >= 0) != seen[c]) return false;
  if (reduced_) {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const BitRow r = row(i);
      for (auto c : r.indices())
        if (c != pivots_[i] && pivot_row_[c] >= 0) return false;
    }
  }
  return true;
}

std::size_t EchelonBasis::memory_bytes() const {
  return blocks_.size() * block_words_ * sizeof(Word) + pivot_row_.size() * sizeof(std::int32_t) +
         pivots_.size() * (sizeof(std::uint32_t) + sizeof(std::size_t));
}

NormalForm::NormalForm(const EchelonBasis& basis) : ncols_(basis.ncols()) {
  pivots_ = basis.sorted_pivots();
  index_columns();
  table_.assign(pivots_.size() * fwords_, 0);
  // Larger pivots first, so every pivot met to the right is already resolved.
  std::vector<std::pair<std::uint32_t, std::span<const Word>>> rows;
  rows.reserve(pivots_.size());
  basis.for_each_row([&](std::uint32_t p, std::span<const Word> w) { rows.emplace_back(p, w); });
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [p, words] : rows) {
    Word* dst = table_.data() + static_cast<std::size_t>(slot_[p]) * fwords_;
    const std::size_t base = p / kWordBits;
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word x = words[w];
      if (w == 0) x &= ~((Word{2} << (p % kWordBits)) - 1);
      for (; x; x &= x - 1) {
        const std::size_t c = (base + w) * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        const auto s = static_cast<std::size_t>(slot_[c]);
        if (is_free_[c]) {
          dst[s / kWordBits] ^= Word{1} << (s % kWordBits);
        } else {
          xor_words(dst, table_.data() + s * fwords_, fwords_);
        }
      }
    }
  }
}

NormalForm::NormalForm(std::size_t ncols, std::vector<std::uint32_t> pivots, std::vector<Word> table)
    : ncols_(ncols), pivots_(std::move(pivots)), table_(std::move(table)) {
  if (std::adjacent_find(pivots_.begin(), pivots_.end(), std::greater_equal<>()) != pivots_.end())
    throw std::invalid_argument("pivots must be strictly increasing");
  for (auto p : pivots_)
    if (p >= ncols_) throw DimensionMismatch("pivot out of range");
  index_columns();
  if (table_.size() != pivots_.size() * fwords_) throw DimensionMismatch("normal form table has wrong size");
}

void NormalForm::index_columns() {
  slot_.assign(ncols_, -1);
  is_free_.assign(ncols_, true);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    slot_[pivots_[i]] = static_cast<std::int32_t>(i);
    is_free_[pivots_[i]] = false;
  }
  free_.clear();
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (is_free_[c]) {
      slot_[c] = static_cast<std::int32_t>(free_.size());
      free_.push_back(static_cast<std::uint32_t>(c));
    }
  }
  fwords_ = words_for(free_.size());
}

BitRow NormalForm::coordinates(std::span<const std::uint32_t> cols) const {
  BitRow out(free_.size());
  Word* dst = out.words().data();
  for (auto c : cols) {
    if (c >= ncols_) throw DimensionMismatch("column index out of range");
    const auto s = static_cast<std::size_t>(slot_[c]);
    if (is_free_[c]) {
      dst[s / kWordBits] ^= Word{1} << (s % kWordBits);
    } else {
      xor_words(dst, table_.data() + s * fwords_, fwords_);
    }
  }
  return out;
}

BitRow NormalForm::coordinates(const BitRow& row) const {
  if (row.ncols() != ncols_) throw DimensionMismatch("row width differs from basis width");
  const auto idx = row.indices();
  return coordinates(std::span<const std::uint32_t>(idx));
}

std::vector<BitRow> kernel_intersection(const std::vector<BitMatrix>& maps) {
  if (maps.empty()) throw DimensionMismatch("no operators given");
  const std::size_t dim = maps.front().ncols;
  EchelonBasis stacked(dim);
  for (const auto& m : maps) {
    if (m.nrows != dim || m.ncols != dim) throw DimensionMismatch("operators must be square of equal size");
    for (const auto& r : m.rows) stacked.insert(r);
  }
  stacked.make_reduced();
  // Free variable f contributes x_f = 1 and x_p = row_p[f] at each pivot p.
  std::vector<BitRow> pivot_rows;
  for (std::size_t i = 0; i < stacked.rank(); ++i) pivot_rows.push_back(stacked.row(i));
  EchelonBasis kernel(dim);
  for (auto f : stacked.free_columns()) {
    BitRow x(dim);
    x.set(f);
    for (std::size_t i = 0; i < pivot_rows.size(); ++i)
      if (pivot_rows[i].test(f)) x.set(stacked.pivots()[i]);
    kernel.insert(x);
  }
  kernel.make_reduced();
  std::vector<std::pair<std::uint32_t, BitRow>> sorted;
  for (std::size_t i = 0; i < kernel.rank(); ++i) sorted.emplace_back(kernel.pivots()[i], kernel.row(i));
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BitRow> out;
  for (auto& [p, r] : sorted) out.push_back(std::move(r));
  return out;
}

}  // namespace hitcalc
