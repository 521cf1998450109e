#pragma once

#include <vector>

#include "hitcalc/gf2.hpp"
#include "hitcalc/hit.hpp"
#include "hitcalc/steenrod.hpp"

namespace hitcalc {

enum class Group { Symmetric, GeneralLinear };

const char* to_string(Group g);
Group parse_group(const std::string& s);

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Symmetric: adjacent swaps rho_1..rho_{n-1}. GeneralLinear adds
// rho_n: u_n -> u_n + u_{n-1}.
std::vector<Substitution> standard_generators(int n, Group g);

// Column j holds the admissible coordinates of [sub(adm_j)].
BitMatrix induced_operator(const Substitution& sub, const QuotientSpace& basis, int threads = 1);

struct Invariants {
  Group group = Group::Symmetric;
  std::size_t dim = 0;
  // Reduced echelon basis of the fixed subspace in admissible coordinates.
  std::vector<BitRow> coordinates;
  std::vector<Polynomial> generators;
};

Invariants invariants(const QuotientSpace& basis, Group g, int threads = 1);

// f + rho(f) is hit for every generator rho.
bool verify_invariant_class(const Polynomial& f, const QuotientSpace& basis, Group g);
bool verify_invariant_class(const Polynomial& f, int n, std::uint64_t d, Group g, const HitOptions& opts = {});

// P_5 -> P_4 style projection: u_j -> u_j for j < l, u_l -> u_{l'-1},
// u_j -> u_{j-1} for j > l. Requires 1 <= l < l' <= n.
Substitution projection(int n, int l, int l_prime);
Polynomial project_p(int l, int l_prime, const Polynomial& f);

}  // namespace hitcalc
