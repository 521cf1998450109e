#pragma once

// Slow, direct reference computations. Nothing here touches the hitcalc
// library: monomials are plain vectors, binomials come from Pascal's
// triangle and the hit space is spanned by every Sq^i, not only Sq^{2^s}.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mono = std::vector<int>;
// Sparse polynomial: monomials with coefficient 1.
using Poly = std::map<Mono, int>;

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxColumns = 20000;

bool binom_odd(int a, int b);

std::vector<Mono> monomials(int n, int d);
std::vector<int> weight(const Mono& m);
// -1, 0, 1 like a three-way compare, zero-padded lexicographic.
int compare_weights(const std::vector<int>& a, const std::vector<int>& b);

void toggle(Poly& p, const Mono& m);
Poly sq(int k, const Mono& m);
Poly sq(int k, const Poly& f);
Poly multiply(const Poly& f, const Poly& g);
// Image of m under u_j -> sum of u_i over bit i of images[j].
Poly substitute(const Mono& m, const std::vector<unsigned>& images);

enum class Part { Full, Zero, Positive };
enum class Ops { AllSquares, PowersOfTwo };

// dim of the cohit space, or of QP(omega) when omega is given.
std::size_t cohit_dim(int n, int d, Part part = Part::Full, Ops ops = Ops::AllSquares,
                      const std::optional<std::vector<int>>& omega = std::nullopt);

// True when f lies in the span of Sq^i images (i > 0).
bool is_hit(int n, const Poly& f);

// Fixed subspace dimension for the given substitutions, acting on the
// full cohit space or on QP(omega).
std::size_t invariant_dim(int n, int d, const std::vector<std::vector<unsigned>>& gens,
                          const std::optional<std::vector<int>>& omega = std::nullopt);

// Adjacent swaps, plus u_n -> u_n + u_{n-1} when gl is set.
std::vector<std::vector<unsigned>> generators(int n, bool gl);

// Divided-power side: (a^(t)) Sq^k via the dual Cartan formula.
Poly right_sq(int k, const Mono& a);
int pair(const Poly& dual, const Poly& f);

}  // namespace oracle
