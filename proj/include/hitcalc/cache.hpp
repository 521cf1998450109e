#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hitcalc/gf2.hpp"
#include "hitcalc/monomial.hpp"

namespace hitcalc {

// On-disk form of a reduced hit basis.
//
//   "HITC1"  magic
//   u32 n, u64 d, u32 len(omega), u32 omega[len], u8 has_omega, u8 part
//   u64 column-order hash, u64 ncols, u64 rank
//   u32 pivot[rank]
//   u64 words[rank * free_words]   (normal-form rows, little endian)
struct CacheKey {
  int n = 0;
  std::uint64_t d = 0;
  std::optional<WeightVector> omega;
  Part part = Part::Full;
  std::uint64_t column_hash = 0;
  std::uint64_t ncols = 0;
};

std::string cache_file_name(const CacheKey& key);

void save_normal_form(const std::string& path, const CacheKey& key, const NormalForm& nf);

// Empty when the file is missing. Throws CacheError when the file exists but
// is corrupt or belongs to a different column order.
std::optional<NormalForm> load_normal_form(const std::string& path, const CacheKey& key);

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hitcalc
