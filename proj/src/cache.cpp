#include "hitcalc/cache.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>

namespace hitcalc {

namespace {

constexpr char kMagic[5] = {'H', 'I', 'T', 'C', '1'};

// Little endian regardless of host.
template <class T>
void put(std::ostream& os, T v) {
  static_assert(std::is_unsigned_v<T>);
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), sizeof buf);
}

template <class T>
T get(std::istream& is) {
  unsigned char buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof buf)) throw CacheError("truncated cache file");
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(static_cast<T>(buf[i]) << (8 * i));
  return v;
}

}  // namespace

std::string cache_file_name(const CacheKey& key) {
  std::string name = "hit_n" + std::to_string(key.n) + "_d" + std::to_string(key.d);
  if (key.omega) {
    name += "_w";
    for (std::size_t i = 0; i < key.omega->size(); ++i) {
      if (i) name += '-';
      name += std::to_string(key.omega->entries()[i]);
    }
  }
  name += '_';
  name += to_string(key.part);
  return name + ".hitc";
}

void save_normal_form(const std::string& path, const CacheKey& key, const NormalForm& nf) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  // Write then rename, so a killed run never leaves half a file behind.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw CacheError("cannot write " + tmp);
    os.write(kMagic, sizeof kMagic);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(key.n));
    put<std::uint64_t>(os, key.d);
    const auto& w = key.omega ? key.omega->entries() : std::vector<std::uint32_t>{};
    put<std::uint32_t>(os, static_cast<std::uint32_t>(w.size()));
    for (auto x : w) put<std::uint32_t>(os, x);
    put<std::uint8_t>(os, static_cast<std::uint8_t>(key.omega ? 1 : 0));
    put<std::uint8_t>(os, static_cast<std::uint8_t>(key.part));
    put<std::uint64_t>(os, key.column_hash);
    put<std::uint64_t>(os, nf.ncols());
    put<std::uint64_t>(os, nf.rank());
    for (auto p : nf.pivot_columns()) put<std::uint32_t>(os, p);
    for (auto word : nf.table()) put<std::uint64_t>(os, word);
    if (!os) throw CacheError("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<NormalForm> load_normal_form(const std::string& path, const CacheKey& key) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[sizeof kMagic];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw CacheError("bad magic in " + path);
  if (get<std::uint32_t>(is) != static_cast<std::uint32_t>(key.n) || get<std::uint64_t>(is) != key.d)
    throw CacheError("cache file is for a different (n, d)");
  std::vector<std::uint32_t> w(get<std::uint32_t>(is));
  if (w.size() > 64) throw CacheError("corrupt weight vector length");
  for (auto& x : w) x = get<std::uint32_t>(is);
  const bool has_omega = get<std::uint8_t>(is) != 0;
  if (has_omega != key.omega.has_value() || (has_omega && WeightVector(w) != *key.omega))
    throw CacheError("cache file is for a different weight vector");
  if (get<std::uint8_t>(is) != static_cast<std::uint8_t>(key.part))
    throw CacheError("cache file is for a different part");
  if (get<std::uint64_t>(is) != key.column_hash) throw CacheError("column-order hash mismatch");
  const auto ncols = get<std::uint64_t>(is);
  if (ncols != key.ncols) throw CacheError("column count mismatch");
  const auto rank = get<std::uint64_t>(is);
  if (rank > ncols) throw CacheError("rank exceeds column count");
  std::vector<std::uint32_t> pivots(rank);
  for (auto& p : pivots) p = get<std::uint32_t>(is);
  const std::size_t fwords = words_for(ncols - rank);
  std::vector<Word> table(rank * fwords);
  for (auto& word : table) word = get<std::uint64_t>(is);
  if (is.peek() != std::char_traits<char>::eof()) throw CacheError("trailing bytes in " + path);
  try {
    return NormalForm(ncols, std::move(pivots), std::move(table));
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("corrupt cache: ") + e.what());
  }
}

}  // namespace hitcalc
