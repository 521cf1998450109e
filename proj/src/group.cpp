#include "hitcalc/group.hpp"

#include <exception>

#include "hitcalc/kameko.hpp"

namespace hitcalc {

const char* to_string(Group g) { return g == Group::Symmetric ? "sigma" : "gl"; }

Group parse_group(const std::string& s) {
  if (s == "sigma" || s == "symmetric") return Group::Symmetric;
  if (s == "gl" || s == "general_linear") return Group::GeneralLinear;
  throw std::invalid_argument("unknown group '" + s + "' (expected sigma or gl)");
}

std::vector<Substitution> standard_generators(int n, Group g) {
  if (n < 2 || n > kMaxVars) throw std::invalid_argument("group actions need 2 <= n <= " + std::to_string(kMaxVars));
  std::vector<Substitution> out;
  for (int j = 0; j + 1 < n; ++j) {
    std::vector<std::uint32_t> img;
    for (int i = 0; i < n; ++i) img.push_back(1u << i);
    std::swap(img[static_cast<std::size_t>(j)], img[static_cast<std::size_t>(j) + 1]);
    out.emplace_back(n, std::move(img));
  }
  if (g == Group::GeneralLinear) {
    std::vector<std::uint32_t> img;
    for (int i = 0; i < n; ++i) img.push_back(1u << i);
    img.back() |= 1u << (n - 2);
    out.emplace_back(n, std::move(img));
  }
  return out;
}

BitMatrix induced_operator(const Substitution& sub, const QuotientSpace& basis, int threads) {
  const auto& ctx = basis.context();
  if (sub.source_vars() != ctx.n || sub.target_vars() != ctx.n)
    throw std::invalid_argument("substitution does not act on P_" + std::to_string(ctx.n));
  if (ctx.part != Part::Full && !sub.is_permutation())
    throw ModeViolation(std::string("only permutations preserve the ") + to_string(ctx.part) + " part");
  const auto& adm = basis.admissibles();
  std::vector<BitRow> cols(adm.size());
  std::exception_ptr error;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16) if (threads > 1)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(adm.size()); ++j) {
    try {
      cols[static_cast<std::size_t>(j)] = basis.reduce(sub.apply(adm[static_cast<std::size_t>(j)]));
    } catch (...) {
#pragma omp critical(induced_operator_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return BitMatrix::from_columns(adm.size(), cols);
}

Invariants invariants(const QuotientSpace& basis, Group g, int threads) {
  Invariants out;
  out.group = g;
  const std::size_t dim = basis.dim();
  if (dim == 0) return out;
  std::vector<BitMatrix> maps;
  const auto gens = standard_generators(basis.context().n, g);
  for (const auto& s : gens) {
    BitMatrix m = induced_operator(s, basis, threads);
    m += BitMatrix::identity(dim);
    maps.push_back(std::move(m));
  }
  out.coordinates = kernel_intersection(maps);
  out.dim = out.coordinates.size();
  for (const auto& c : out.coordinates) out.generators.push_back(basis.representative(c));
  return out;
}

bool verify_invariant_class(const Polynomial& f, const QuotientSpace& basis, Group g) {
  if (f.is_zero()) return true;
  for (const auto& s : standard_generators(basis.context().n, g)) {
    if (!basis.is_hit(f + s.apply(f))) return false;
  }
  return true;
}

bool verify_invariant_class(const Polynomial& f, int n, std::uint64_t d, Group g, const HitOptions& opts) {
  if (f.is_zero()) return true;
  if (f.degree() != d) throw NonHomogeneous("polynomial is not of degree " + std::to_string(d));
  // The odd split gives the same quotient far more cheaply when it applies.
  if (OddSplit::applicable(n, d)) {
    const auto split = OddSplit::build(n, d, opts);
    return verify_invariant_class(f, *split.full(), g);
  }
  return verify_invariant_class(f, cohit_basis(n, d, Part::Full, opts), g);
}

Substitution projection(int n, int l, int l_prime) {
  if (n < 2 || n > kMaxVars || l < 1 || l >= l_prime || l_prime > n)
    throw IndexOutOfRange("projection needs 1 <= l < l' <= n");
  std::vector<std::uint32_t> img;
  for (int j = 1; j <= n; ++j) {
    int target = j < l ? j : (j == l ? l_prime - 1 : j - 1);
    img.push_back(1u << (target - 1));
  }
  return Substitution(n - 1, std::move(img));
}

Polynomial project_p(int l, int l_prime, const Polynomial& f) {
  return projection(f.nvars(), l, l_prime).apply(f);
}

}  // namespace hitcalc
