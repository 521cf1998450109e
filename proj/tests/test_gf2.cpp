#include "doctest.h"

#include <algorithm>
#include <random>

#include "hitcalc/gf2.hpp"

using namespace hitcalc;

namespace {

// Rank by textbook elimination on a byte matrix.
std::size_t byte_rank(std::vector<std::vector<char>> m, std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < ncols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint32_t>> random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution bit(density);
  std::vector<std::vector<std::uint32_t>> out(rows);
  for (auto& r : out)
    for (std::uint32_t c = 0; c < cols; ++c)
      if (bit(rng)) r.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("echelon rank matches a byte-matrix oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 200);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const double density = trial % 3 == 0 ? 0.02 : 0.3;
    const auto rows = random_rows(rng, r, c, density);
    std::vector<std::vector<char>> dense(r, std::vector<char>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (auto x : rows[i]) dense[i][x] = 1;
    EchelonBasis e(c);
    e.insert_batch_serial(rows);
    CHECK(e.rank() == byte_rank(dense, c));
    CHECK(e.self_check());
    CHECK(e.sorted_pivots().size() + e.free_columns().size() == c);
  }
}

TEST_CASE("rank and row space do not depend on insertion order") {
  std::mt19937_64 rng(11);
  auto rows = random_rows(rng, 150, 180, 0.05);
  EchelonBasis a(180);
  a.insert_batch_serial(rows);
  std::shuffle(rows.begin(), rows.end(), rng);
  EchelonBasis b(180);
  b.insert_batch_serial(rows);
  CHECK(a.rank() == b.rank());
  const NormalForm na(a), nb(b);
  CHECK(na.pivot_columns() == nb.pivot_columns());
  CHECK(na.table() == nb.table());
}

TEST_CASE("parallel batches store the same rows as serial insertion") {
  std::mt19937_64 rng(5);
  const auto rows = random_rows(rng, 900, 700, 0.03);
  EchelonBasis s(700), p(700);
  for (std::size_t i = 0; i < rows.size(); i += 128) {
    const std::span<const std::vector<std::uint32_t>> chunk(rows.data() + i, std::min<std::size_t>(128, rows.size() - i));
    s.insert_batch_serial(chunk);
    p.insert_batch_parallel(chunk, 4);
  }
  REQUIRE(s.rank() == p.rank());
  CHECK(s.pivots() == p.pivots());
  for (std::size_t i = 0; i < s.rank(); ++i) CHECK(s.row(i) == p.row(i));
}

TEST_CASE("reduced form and normal form agree") {
  std::mt19937_64 rng(3);
  const auto rows = random_rows(rng, 60, 90, 0.1);
  EchelonBasis e(90);
  e.insert_batch_serial(rows);
  const NormalForm nf(e);
  // Every inserted row has zero class.
  for (const auto& r : rows) CHECK(nf.coordinates(std::span<const std::uint32_t>(r)).is_zero());
  e.make_reduced();
  CHECK(e.is_reduced());
  CHECK(e.self_check());
  for (const auto& r : rows) CHECK(e.member(BitRow::from_indices(90, r)));
}

TEST_CASE("normal form construction validates its input") {
  CHECK_THROWS(NormalForm(4, {2, 1}, std::vector<Word>(2, 0)));
  CHECK_THROWS(NormalForm(4, {1, 9}, std::vector<Word>(2, 0)));
}

TEST_CASE("bit matrices and kernel intersection") {
  BitMatrix swap(2, 2);
  swap.rows[0].set(1);
  swap.rows[1].set(0);
  CHECK(swap * swap == BitMatrix::identity(2));
  BitMatrix m = swap;
  m += BitMatrix::identity(2);
  const auto ker = kernel_intersection({m});
  REQUIRE(ker.size() == 1);
  CHECK(ker[0].test(0));
  CHECK(ker[0].test(1));
  CHECK(kernel_intersection({m, BitMatrix::identity(2)}).empty());
  CHECK_THROWS_AS(BitRow(3) ^= BitRow(4), DimensionMismatch);
}
