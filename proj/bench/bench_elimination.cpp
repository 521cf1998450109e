// Serial reference vs OpenMP batch insertion on real hit-generator rows.
//   bench_elimination [n d [threads...]]
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <vector>

#include <omp.h>

#include "hitcalc/hit.hpp"
#include "hitcalc/steenrod.hpp"

using namespace hitcalc;

namespace {

std::vector<std::vector<std::uint32_t>> generator_rows(int n, std::uint64_t d, const CohitBasis& shell) {
  std::vector<std::vector<std::uint32_t>> rows;
  hit_generators(n, d, Part::Full, [&](const Polynomial& p) {
    std::vector<std::uint32_t> r;
    for (const auto& t : p.terms())
      if (auto c = shell.column_of(t)) r.push_back(*c);
    if (!r.empty()) rows.push_back(std::move(r));
  });
  return rows;
}

double run(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t ncols, int threads, std::size_t batch,
           std::size_t& rank) {
  const auto t0 = std::chrono::steady_clock::now();
  EchelonBasis e(ncols);
  for (std::size_t i = 0; i < rows.size(); i += batch) {
    const std::span<const std::vector<std::uint32_t>> chunk(rows.data() + i, std::min(batch, rows.size() - i));
    if (threads == 0)
      e.insert_batch_serial(chunk);
    else
      e.insert_batch_parallel(chunk, threads);
  }
  rank = e.rank();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 5;
  const std::uint64_t d = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 24;
  std::vector<int> threads;
  for (int i = 3; i < argc; ++i) threads.push_back(std::atoi(argv[i]));
  if (threads.empty()) threads = {1, 2, 4, omp_get_max_threads()};

  // Only the column list is needed; (n, d) must be small enough to eliminate.
  const auto shell = cohit_basis(n, d);
  const auto rows = generator_rows(n, d, shell);
  const std::size_t ncols = shell.columns().size();
  std::cout << "(n=" << n << ", d=" << d << "): " << ncols << " columns, " << rows.size() << " generator rows, "
            << omp_get_num_procs() << " cpus\n";
  std::size_t rank = 0;
  const double serial = run(rows, ncols, 0, 4096, rank);
  std::cout << std::fixed << std::setprecision(3) << "serial          " << serial << " s  rank " << rank << "\n";
  for (int t : threads) {
    std::size_t r = 0;
    const double secs = run(rows, ncols, t, 4096, r);
    std::cout << "parallel x" << std::setw(3) << t << "   " << secs << " s  rank " << r << "  speedup "
              << std::setprecision(2) << serial / secs << std::setprecision(3) << (r == rank ? "" : "  RANK MISMATCH")
              << "\n";
  }
}
