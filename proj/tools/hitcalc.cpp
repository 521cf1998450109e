// hitcalc: command-line front end over the hitcalc library.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hitcalc/cache.hpp"
#include "hitcalc/datasets.hpp"
#include "hitcalc/dual.hpp"
#include "hitcalc/group.hpp"
#include "hitcalc/hit.hpp"
#include "hitcalc/kameko.hpp"

using json = nlohmann::ordered_json;
using namespace hitcalc;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitTooLarge = 3;
constexpr std::uint64_t kDefaultMemoryLimit = std::uint64_t{4} << 30;

struct Config {
  int n = 5;
  std::uint64_t d = 0;
  std::string omega;
  std::string part = "full";
  std::string group = "gl";
  std::string format = "json";
  std::string cache_dir;
  int threads = 1;
  std::string file;
  std::vector<std::string> lift;
  std::string with;
  bool allow_large = false;
};

struct Validation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

HitOptions options(const Config& c) {
  HitOptions o;
  o.threads = c.threads;
  o.cache_dir = c.cache_dir;
  o.memory_limit = c.allow_large ? 0 : kDefaultMemoryLimit;
  return o;
}

std::optional<WeightVector> parse_omega(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<std::uint32_t> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long x = std::stol(item, &used);
      if (used != item.size() || x < 0) throw std::invalid_argument("");
      v.push_back(static_cast<std::uint32_t>(x));
    } catch (const std::exception&) {
      throw Validation("bad --omega entry '" + item + "'");
    }
  }
  return WeightVector(std::move(v));
}

// Relative names that do not exist here are looked up in the data directory.
std::string resolve(const std::string& file) {
  if (std::filesystem::exists(file)) return file;
  const auto alt = std::filesystem::path(data_dir()) / file;
  if (std::filesystem::exists(alt)) return alt.string();
  throw Validation("no such file: " + file);
}

Polynomial sum_file(const std::string& file, int n) {
  Polynomial total(n);
  for (const auto& p : read_polynomial_file(resolve(file), n)) total += p;
  return total;
}

// Applies the up map until the degree reaches d.
Polynomial lift_to(Polynomial f, std::uint64_t d) {
  while (!f.is_zero() && f.degree() < d) f = kameko_up(f);
  if (!f.is_zero() && f.degree() != d)
    throw Validation("polynomial cannot be lifted to degree " + std::to_string(d));
  return f;
}

// --file plus every --lift file, lifted to the degree of --file (or --d).
Polynomial input_polynomial(const Config& c) {
  if (c.file.empty()) throw Validation("--file is required");
  Polynomial f = sum_file(c.file, c.n);
  std::uint64_t d = c.d ? c.d : (f.is_zero() ? 0 : f.degree());
  if (d == 0 && !c.lift.empty()) throw Validation("--d is required when --file is zero");
  if (!f.is_zero() && f.degree() != d) f = lift_to(f, d);
  for (const auto& extra : c.lift) f += lift_to(sum_file(extra, c.n), d);
  return f;
}

json exps(const Monomial& m) {
  json a = json::array();
  for (auto e : m.exponents()) a.push_back(e);
  return a;
}

json terms(const Polynomial& p) {
  json a = json::array();
  for (const auto& t : p.terms()) a.push_back(exps(t));
  return a;
}

json omega_json(const std::optional<WeightVector>& w) {
  if (!w) return nullptr;
  return w->entries();
}

// A quotient opened densely when it fits and through the odd split when it
// does not (and the split covers it).
struct Space {
  std::optional<CohitBasis> dense;
  std::unique_ptr<OddSplit> split;
  std::unique_ptr<QuotientSpace> view;
  const QuotientSpace& get() const { return dense ? static_cast<const QuotientSpace&>(*dense) : *view; }
};

Space open_space(const Config& c, const HitContext& ctx) {
  Space s;
  HitOptions o = options(c);
  o.memory_limit = kDefaultMemoryLimit;
  try {
    s.dense = compute_cohit(ctx, o);
    return s;
  } catch (const ComputationTooLarge& e) {
    const bool split_ok = ctx.part == Part::Full && OddSplit::applicable(ctx.n, ctx.d) &&
                          (!ctx.omega || (*ctx.omega)[1] == static_cast<std::uint32_t>(ctx.n - 2));
    if (!c.allow_large && (!split_ok || !ctx.omega)) {
      std::cerr << "estimated memory: " << (e.estimate >> 20) << " MiB; rerun with --allow-large\n";
      throw;
    }
    if (!ctx.omega) std::cerr << "dense estimate " << (e.estimate >> 20) << " MiB; using the odd-exponent split\n";
    if (!split_ok) {
      std::cerr << "estimated memory: " << (e.estimate >> 20) << " MiB\n";
      s.dense = compute_cohit(ctx, options(c));
      return s;
    }
    s.split = std::make_unique<OddSplit>(OddSplit::build(ctx.n, ctx.d, options(c)));
    s.view = ctx.omega ? s.split->piece(*ctx.omega) : s.split->full();
    return s;
  }
}

HitContext context_of(const Config& c) {
  if (c.d == 0) throw Validation("--d is required");
  return HitContext{c.n, c.d, parse_omega(c.omega), parse_part(c.part)};
}

void emit(const Config& c, const json& j, const std::function<void(std::ostream&)>& text) {
  if (c.format == "json")
    std::cout << j.dump() << "\n";
  else
    text(std::cout);
}

int cmd_cohit(const Config& c, bool need_omega) {
  auto ctx = context_of(c);
  if (need_omega && !ctx.omega) throw Validation("--omega is required");
  const auto space = open_space(c, ctx);
  const auto& q = space.get();
  json j;
  j["n"] = ctx.n;
  j["d"] = ctx.d;
  j["omega"] = omega_json(ctx.omega);
  j["part"] = to_string(ctx.part);
  j["dim"] = q.dim();
  json adm = json::array();
  for (const auto& m : q.admissibles()) adm.push_back(exps(m));
  j["admissibles"] = adm;
  emit(c, j, [&](std::ostream& os) {
    os << "cohit " << ctx.describe() << "\ndim " << q.dim() << "\n";
    for (const auto& m : q.admissibles()) os << to_string(m) << "\n";
  });
  return 0;
}

int cmd_kernel(const Config& c) {
  if (c.d == 0) throw Validation("--d is required");
  const auto k = kameko_kernel(c.n, c.d, options(c));
  json j;
  j["n"] = k.n;
  j["d"] = k.degree;
  j["total"] = k.total;
  json pieces = json::array();
  for (const auto& [w, dim] : k.pieces) pieces.push_back(json{{"omega", w.entries()}, {"dim", dim}});
  j["pieces"] = pieces;
  emit(c, j, [&](std::ostream& os) {
    os << "kernel n=" << k.n << " d=" << k.degree << " total " << k.total << "\n";
    for (const auto& [w, dim] : k.pieces) os << w.to_string() << " " << dim << "\n";
  });
  return 0;
}

int cmd_invariants(const Config& c) {
  const auto ctx = context_of(c);
  const Group g = parse_group(c.group);
  const auto space = open_space(c, ctx);
  const auto inv = invariants(space.get(), g, c.threads);
  json j;
  j["group"] = to_string(g);
  j["n"] = ctx.n;
  j["d"] = ctx.d;
  j["omega"] = omega_json(ctx.omega);
  j["dim"] = inv.dim;
  json gens = json::array();
  for (const auto& p : inv.generators) gens.push_back(terms(p));
  j["generators"] = gens;
  emit(c, j, [&](std::ostream& os) {
    os << to_string(g) << "-invariants " << ctx.describe() << "\ndim " << inv.dim << "\n";
    for (const auto& p : inv.generators) os << format_polynomial(p) << "\n";
  });
  return 0;
}

int cmd_verify(const Config& c) {
  const Group g = parse_group(c.group);
  const Polynomial f = input_polynomial(c);
  if (f.is_zero()) throw Validation("the input polynomial is zero");
  Config cc = c;
  cc.d = f.degree();
  const HitContext ctx{c.n, cc.d, std::nullopt, Part::Full};
  const auto space = open_space(cc, ctx);
  const auto& q = space.get();
  const bool hit = q.is_hit(f);
  const bool inv = verify_invariant_class(f, q, g);
  json j;
  j["group"] = to_string(g);
  j["n"] = c.n;
  j["d"] = cc.d;
  j["hit"] = hit;
  j["invariant"] = inv;
  emit(c, j, [&](std::ostream& os) {
    os << "degree " << cc.d << ": " << (hit ? "hit" : "not hit") << ", " << (inv ? "" : "not ") << to_string(g)
       << "-invariant\n";
  });
  return 0;
}

DualPolynomial input_dual(const Config& c) {
  if (c.file.empty()) throw Validation("--file is required");
  DualPolynomial total(c.n);
  for (const auto& p : read_dual_file(resolve(c.file), c.n)) total += p;
  return total;
}

int cmd_annihilated(const Config& c) {
  const auto f = input_dual(c);
  const bool a = is_annihilated(f);
  json j;
  j["n"] = c.n;
  j["d"] = f.degree();
  j["annihilated"] = a;
  emit(c, j, [&](std::ostream& os) { os << (a ? "annihilated" : "not annihilated") << "\n"; });
  return 0;
}

int cmd_pairing(const Config& c) {
  const auto f = input_dual(c);
  if (c.with.empty()) throw Validation("--with is required");
  const Polynomial g = lift_to(sum_file(c.with, c.n), f.degree());
  const bool p = pairing(f, g);
  json j;
  j["n"] = c.n;
  j["d"] = f.degree();
  j["pairing"] = p ? 1 : 0;
  emit(c, j, [&](std::ostream& os) { os << "pairing " << (p ? 1 : 0) << "\n"; });
  return 0;
}

// Table rows: a label, the expected number and how to get the actual one.
struct Row {
  std::string label;
  long expected;
  std::function<long()> actual;
};

int cmd_reproduce(const Config& c) {
  const HitOptions o = options(c);
  const WeightVector w1{3, 1, 1, 1, 1}, w2{3, 1, 1, 3}, w3{3, 3, 2, 2}, w4{3, 3, 4, 1};
  auto dim = [&](int n, std::uint64_t d, std::optional<WeightVector> w, Part p) {
    return static_cast<long>(compute_cohit(HitContext{n, d, std::move(w), p}, o).dim());
  };
  auto inv = [&](int n, std::uint64_t d, std::optional<WeightVector> w, Group g) {
    return static_cast<long>(invariants(compute_cohit(HitContext{n, d, std::move(w), Part::Full}, o), g, c.threads).dim);
  };
  std::vector<Row> rows = {
      {"(5,14) full", 320, [&] { return dim(5, 14, {}, Part::Full); }},
      {"(5,33) full", 1322, [&] { return dim(5, 33, {}, Part::Full); }},
      {"(5,33) zero", 550, [&] { return dim(5, 33, {}, Part::Zero); }},
      {"(5,33,w1) zero", 155, [&] { return dim(5, 33, w1, Part::Zero); }},
      {"(5,33,w3) zero", 395, [&] { return dim(5, 33, w3, Part::Zero); }},
      {"(5,33,w1) positive", 31, [&] { return dim(5, 33, w1, Part::Positive); }},
      {"(5,33,w2) positive", 0, [&] { return dim(5, 33, w2, Part::Positive); }},
      {"(5,33,w3) positive", 421, [&] { return dim(5, 33, w3, Part::Positive); }},
      {"(5,33,w4) positive", 0, [&] { return dim(5, 33, w4, Part::Positive); }},
      {"(5,33,w1) sigma-invariant", 7, [&] { return inv(5, 33, w1, Group::Symmetric); }},
      {"(5,33,w3) sigma-invariant", 18, [&] { return inv(5, 33, w3, Group::Symmetric); }},
      {"(5,33,w1) GL-invariant", 0, [&] { return inv(5, 33, w1, Group::GeneralLinear); }},
      {"(5,33,w3) GL-invariant", 0, [&] { return inv(5, 33, w3, Group::GeneralLinear); }},
      {"(5,33) GL-invariant", 1, [&] { return inv(5, 33, {}, Group::GeneralLinear); }},
      {"(5,14) GL-invariant", 1, [&] { return inv(5, 14, {}, Group::GeneralLinear); }},
      {"(5,14) zeta GL-invariant", 1,
       [&] { return static_cast<long>(verify_invariant_class(zeta(), 5, 14, Group::GeneralLinear, o)); }},
      {"(5,33) phi(zeta)+xi GL-invariant", 1,
       [&] {
         return static_cast<long>(verify_invariant_class(kameko_up(zeta()) + xi(), 5, 33, Group::GeneralLinear, o));
       }},
      {"<zeta0, phi(zeta)>", 1, [&] { return static_cast<long>(pairing(zeta0(), kameko_up(zeta()))); }},
      {"zeta0 annihilated", 1, [&] { return static_cast<long>(is_annihilated(zeta0())); }},
      {"(3,15) full", 13, [&] { return dim(3, 15, {}, Part::Full); }},
      {"(4,33) positive", 84, [&] { return dim(4, 33, {}, Part::Positive); }},
      {"(4,33,w1) positive", 17, [&] { return dim(4, 33, w1, Part::Positive); }},
      {"(4,33,w3) positive", 67, [&] { return dim(4, 33, w3, Part::Positive); }},
  };
  std::unique_ptr<OddSplit> split;
  if (c.allow_large) {
    auto s71 = [&]() -> const OddSplit& {
      if (!split) split = std::make_unique<OddSplit>(OddSplit::build(5, 71, o));
      return *split;
    };
    auto piece = [&](const WeightVector& w) -> long {
      for (const auto& [v, dim] : s71().kernel_pieces())
        if (v == w) return static_cast<long>(dim);
      return 0;
    };
    const std::vector<WeightVector> bars = {{3, 2, 2, 1, 1, 1}, {3, 2, 2, 1, 3}, {3, 2, 2, 3, 2},
                                            {3, 2, 4, 2, 2},    {3, 2, 4, 4, 1}, {3, 4, 1, 1, 1, 1},
                                            {3, 4, 1, 1, 3},    {3, 4, 3, 2, 2}, {3, 4, 3, 4, 1}};
    const long want[] = {1395, 0, 0, 0, 0, 124, 0, 0, 0};
    for (std::size_t j = 0; j < bars.size(); ++j)
      rows.push_back({"(5,71," + bars[j].to_string() + ") kernel piece", want[j], [&, j] { return piece(bars[j]); }});
    rows.push_back({"(5,71) kernel total", 1519, [&] { return static_cast<long>(s71().kernel_dim()); }});
    rows.push_back({"(5,71," + bars[0].to_string() + ") sigma-invariant", 27,
                    [&] { return static_cast<long>(invariants(*s71().piece(bars[0]), Group::Symmetric, c.threads).dim); }});
    rows.push_back({"(5,71," + bars[5].to_string() + ") sigma-invariant", 6,
                    [&] { return static_cast<long>(invariants(*s71().piece(bars[5]), Group::Symmetric, c.threads).dim); }});
    rows.push_back({"(5,71) kernel GL-invariant", 0,
                    [&] { return static_cast<long>(invariants(*s71().kernel(), Group::GeneralLinear, c.threads).dim); }});
    rows.push_back({"(5,71) phi^2(zeta)+phi(xi)+xi~ GL-invariant", 1, [&] {
                      const auto f = kameko_up(kameko_up(zeta())) + kameko_up(xi()) + xi_tilde();
                      return static_cast<long>(verify_invariant_class(f, *s71().full(), Group::GeneralLinear));
                    }});
  }
  bool all = true;
  json out = json::array();
  for (const auto& r : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    long got = -1;
    std::string error;
    try {
      got = r.actual();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = error.empty() && got == r.expected;
    all = all && pass;
    json row{{"row", r.label}, {"expected", r.expected}, {"actual", got}, {"pass", pass}, {"seconds", secs}};
    if (!error.empty()) row["error"] = error;
    out.push_back(row);
    if (c.format == "text") {
      std::cout << (pass ? "PASS " : "FAIL ") << r.label << ": expected " << r.expected << ", got " << got;
      if (!error.empty()) std::cout << " (" << error << ")";
      std::cout << " [" << std::fixed << std::setprecision(2) << secs << " s]\n" << std::flush;
    }
  }
  if (c.format == "json") std::cout << json{{"rows", out}, {"all_pass", all}}.dump() << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohit bases, weight subquotients and invariants of P_n over the Steenrod algebra"};
  app.require_subcommand(1);
  Config c;
  if (const char* env = std::getenv("HITCALC_CACHE")) c.cache_dir = env;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "number of variables")->check(CLI::Range(1, kMaxVars));
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--cache-dir", c.cache_dir, "echelon cache directory (default $HITCALC_CACHE)");
    sub->add_option("--threads", c.threads, "OpenMP threads")->check(CLI::Range(1, 1024));
    sub->add_flag("--allow-large", c.allow_large, "lift the memory guard");
  };
  auto space_opts = [&](CLI::App* sub) {
    sub->add_option("--d", c.d, "degree");
    sub->add_option("--omega", c.omega, "weight vector, e.g. 3,1,1,1,1");
    sub->add_option("--part", c.part, "full, zero or positive")->check(CLI::IsMember({"full", "zero", "positive"}));
  };

  auto* cohit = app.add_subcommand("cohit", "admissible basis of (QP_n)_d or a part of it");
  auto* weight = app.add_subcommand("weight", "weight subquotient QP_n(omega)");
  auto* kernel = app.add_subcommand("kameko-kernel", "weight pieces of the kernel of the down map at degree d");
  auto* inv = app.add_subcommand("invariants", "Sigma_n or GL_n invariants of a cohit space");
  auto* verify = app.add_subcommand("verify-invariant", "check that the class of --file is group-invariant");
  auto* annih = app.add_subcommand("check-annihilated", "check a divided-power element is Steenrod-annihilated");
  auto* pair = app.add_subcommand("pairing", "pair a divided-power element with a polynomial");
  auto* repro = app.add_subcommand("reproduce-paper", "run the reference table and print PASS/FAIL rows");
  for (auto* sub : {cohit, weight, kernel, inv, verify, annih, pair, repro}) common(sub);
  for (auto* sub : {cohit, weight, inv}) space_opts(sub);
  kernel->add_option("--d", c.d, "source degree");
  for (auto* sub : {inv, verify}) sub->add_option("--group", c.group, "sigma or gl")->check(CLI::IsMember({"sigma", "gl"}));
  verify->add_option("--d", c.d, "degree (default: degree of --file)");
  for (auto* sub : {verify, annih, pair}) sub->add_option("--file", c.file, "input file (looked up in the data directory too)");
  verify->add_option("--lift", c.lift, "add a file's polynomial after lifting it to the target degree");
  pair->add_option("--with", c.with, "polynomial file, lifted to the dual element's degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }
  if (repro->parsed() && repro->count("--format") == 0) c.format = "text";

  try {
    if (cohit->parsed()) return cmd_cohit(c, false);
    if (weight->parsed()) return cmd_cohit(c, true);
    if (kernel->parsed()) return cmd_kernel(c);
    if (inv->parsed()) return cmd_invariants(c);
    if (verify->parsed()) return cmd_verify(c);
    if (annih->parsed()) return cmd_annihilated(c);
    if (pair->parsed()) return cmd_pairing(c);
    if (repro->parsed()) return cmd_reproduce(c);
  } catch (const ComputationTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitValidation;
}
