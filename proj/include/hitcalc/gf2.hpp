#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hitcalc {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t ncols) { return (ncols + kWordBits - 1) / kWordBits; }

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense row over F_2; column c lives in word c / 64, bit c % 64. Bits past
// ncols are always zero.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t ncols) : ncols_(ncols), words_(words_for(ncols), 0) {}
  static BitRow unit(std::size_t ncols, std::size_t col);
  static BitRow from_indices(std::size_t ncols, std::span<const std::uint32_t> cols);

  std::size_t ncols() const { return ncols_; }
  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t c) const { return (words_[c / kWordBits] >> (c % kWordBits)) & 1u; }
  void set(std::size_t c) { words_[c / kWordBits] |= Word{1} << (c % kWordBits); }
  void flip(std::size_t c) { words_[c / kWordBits] ^= Word{1} << (c % kWordBits); }
  void reset(std::size_t c) { words_[c / kWordBits] &= ~(Word{1} << (c % kWordBits)); }

  bool is_zero() const;
  // Lowest set column, or -1 when zero.
  std::int64_t leading() const;
  std::size_t popcount() const;
  std::vector<std::uint32_t> indices() const;

  BitRow& operator^=(const BitRow& other);
  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t ncols_ = 0;
  std::vector<Word> words_;
};

// Row-major matrix; operator convention is y = A x with x, y column vectors.
struct BitMatrix {
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::vector<BitRow> rows;

  BitMatrix() = default;
  BitMatrix(std::size_t r, std::size_t c) : nrows(r), ncols(c), rows(r, BitRow(c)) {}
  static BitMatrix identity(std::size_t n);
  static BitMatrix from_columns(std::size_t nrows, const std::vector<BitRow>& cols);

  bool get(std::size_t r, std::size_t c) const { return rows[r].test(c); }
  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& other) const;
  BitRow apply(const BitRow& x) const;
  BitMatrix& operator+=(const BitMatrix& other);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

// Online row-echelon basis over a fixed column count. Each stored row is
// kept from the word holding its pivot onward; earlier words are zero.
//
// Rows are inserted in semi-reduced form (leading bit not an existing pivot);
// make_reduced() back-substitutes so every pivot column is clear in all
// other rows, and normal_form() builds the same reduced form compressed to
// the free columns.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t ncols);

  std::size_t ncols() const { return ncols_; }
  std::size_t nwords() const { return nwords_; }
  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  // Pivot columns in insertion order.
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  std::vector<std::uint32_t> sorted_pivots() const;
  std::vector<std::uint32_t> free_columns() const;
  BitRow row(std::size_t i) const;
  bool is_reduced() const { return reduced_; }

  bool insert(const BitRow& row);
  bool insert_sparse(std::span<const std::uint32_t> cols);

  // Serial reference for batched insertion.
  std::size_t insert_batch_serial(std::span<const std::vector<std::uint32_t>> rows);
  // Reduces every candidate against a frozen snapshot in parallel, then
  // commits in order. Stored rows are identical to insert_batch_serial.
  std::size_t insert_batch_parallel(std::span<const std::vector<std::uint32_t>> rows, int threads);

  BitRow reduce(const BitRow& row) const;
  bool member(const BitRow& row) const { return reduce(row).is_zero(); }

  void make_reduced();
  // Checks the echelon invariants; reducedness is checked when flagged.
  bool self_check() const;

  std::size_t memory_bytes() const;

  // Hands over stored-row data in pivot order to a visitor (pivot, words
  // starting at the pivot's word).
  template <class Visit>
  void for_each_row(Visit&& visit) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) visit(pivots_[i], row_words(i));
  }

 private:
  std::span<const Word> row_words(std::size_t i) const;
  std::span<Word> row_words_mut(std::size_t i);
  // Semi-reduction of buf (full width) starting at from_word. Returns the
  // leading column, or -1 when buf reduced to zero.
  std::int64_t semi_reduce(Word* buf, std::size_t from_word) const;
  void store(const Word* buf, std::size_t lead);

  std::size_t ncols_ = 0;
  std::size_t nwords_ = 0;
  std::vector<std::int32_t> pivot_row_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::size_t> offsets_;
  std::vector<std::unique_ptr<Word[]>> blocks_;
  std::size_t block_words_ = 0;
  std::size_t block_fill_ = 0;
  bool reduced_ = true;
};

// Reduced form of an echelon basis expressed over its free columns: for each
// pivot p, the free-column coordinates f with e_p = f (mod the row space).
class NormalForm {
 public:
  NormalForm() = default;
  explicit NormalForm(const EchelonBasis& basis);
  NormalForm(std::size_t ncols, std::vector<std::uint32_t> pivots, std::vector<Word> table);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t nfree() const { return free_.size(); }
  std::size_t free_words() const { return fwords_; }
  const std::vector<std::uint32_t>& free_columns() const { return free_; }
  const std::vector<std::uint32_t>& pivot_columns() const { return pivots_; }
  bool is_pivot(std::size_t col) const { return slot_[col] >= 0 && !is_free_[col]; }
  std::span<const Word> pivot_image(std::size_t pivot_slot) const {
    return {table_.data() + pivot_slot * fwords_, fwords_};
  }
  const std::vector<Word>& table() const { return table_; }

  // Coordinates over the free columns of the class of the given columns
  // (repeats cancel).
  BitRow coordinates(std::span<const std::uint32_t> cols) const;
  BitRow coordinates(const BitRow& row) const;

 private:
  void index_columns();
  std::size_t ncols_ = 0;
  std::size_t fwords_ = 0;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::uint32_t> free_;
  std::vector<std::int32_t> slot_;
  std::vector<bool> is_free_;
  std::vector<Word> table_;
};

// Basis of the common kernel of square operators, in reduced echelon form.
std::vector<BitRow> kernel_intersection(const std::vector<BitMatrix>& maps);

}  // namespace hitcalc
