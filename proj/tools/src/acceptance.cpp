#include "cubiclab/app/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "cubiclab/app/cli.hpp"
#include "cubiclab/catalog.hpp"
#include "cubiclab/construct.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/groebner.hpp"
#include "cubiclab/lattice.hpp"

namespace cubiclab::app {

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      passed = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }

  std::string detail() const {
    std::string out;
    for (const auto& n : notes) out += (out.empty() ? "" : "; ") + n;
    return out;
  }
};

std::string join(const std::vector<long long>& values) {
  std::string out;
  for (long long v : values) out += (out.empty() ? "" : ", ") + std::to_string(v);
  return out;
}

Outcome discriminant_table(const AcceptanceOptions&) {
  Outcome o;
  const long long skew = gram_discriminant(skew_planes_lattice());
  std::vector<long long> table;
  for (long long beta = 0; beta <= 3; ++beta) table.push_back(gram_discriminant(surface_plane_lattice(beta)));
  o.expect(skew == 21, "skew-planes discriminant = 21");
  o.expect(table == std::vector<long long>{29, 36, 37, 32}, "beta table = 29, 36, 37, 32");
  o.note("d = " + std::to_string(skew) + ", beta 0..3: " + join(table));
  return o;
}

Outcome excess_multiplicities(const AcceptanceOptions&) {
  Outcome o;
  const auto line = excess_multiplicity(1, 0, -1, -3);
  const auto conic = excess_multiplicity(2, 0, -2, -6);
  o.expect(line.value == 1, "line case = 1");
  o.expect(conic.value == 0, "conic case = 0");
  o.note("line " + std::to_string(line.value) + ", conic " + std::to_string(conic.value));
  return o;
}

Outcome self_intersections(const AcceptanceOptions&) {
  Outcome o;
  const long long scroll = self_int_cubic_fourfold(quartic_scroll_numerics());
  const long long dp = self_int_cubic_fourfold(del_pezzo_quintic_numerics());
  const long long plane = self_int_cubic_fourfold(plane_numerics());
  const long long quadric = self_int_quadric_fourfold(quartic_scroll_numerics());
  o.expect(scroll == 10, "scroll in cubic = 10");
  o.expect(dp == 13, "del Pezzo in cubic = 13");
  o.expect(plane == 3, "plane in cubic = 3");
  o.expect(quadric == 8 && quadric != scroll, "scroll in quadric = 8 != 10");
  o.note("cubic: scroll " + std::to_string(scroll) + ", del Pezzo " + std::to_string(dp) + ", plane " +
         std::to_string(plane) + "; quadric: scroll " + std::to_string(quadric));
  return o;
}

Outcome non_openness(const AcceptanceOptions&) {
  Outcome o;
  const SearchBox wide{-100, 100, -100, 100, -100, 100};
  for (auto [degree, self] : {std::pair{5LL, 13LL}, std::pair{4LL, 10LL}}) {
    const auto derived = obstruction_search(degree, self);
    const auto brute = obstruction_search(degree, self, 0, 3, wide);
    const std::string tag = "(" + std::to_string(degree) + ", " + std::to_string(self) + ")";
    o.expect(derived.solutions.empty(), tag + " empty in derived box");
    o.expect(brute.solutions.empty(), tag + " empty in +-100 box");
    o.note(tag + ": derived box " + derived.box.to_string() + ", " + std::to_string(brute.visited) +
           " points in the wide box, no solutions");
  }
  return o;
}

Outcome del_pezzo_reconstruction(const AcceptanceOptions&) {
  Outcome o;
  const ParamSurface dp = del_pezzo_quintic();
  const Ideal K = kernel(dp.parametrization);
  o.expect(saturate(K) == saturate(dp.ideal), "kernel = five quadrics");
  const HilbertData h = hilbert(K);
  o.expect(h.dimension == 2 && h.degree == 5, "dim 2, degree 5");
  o.note("kernel has " + std::to_string(K.generators().size()) + " generators, dim " + std::to_string(h.dimension) +
         ", degree " + std::to_string(h.degree));
  return o;
}

Outcome scroll_invariants(const AcceptanceOptions&) {
  Outcome o;
  for (auto [kind, name] : {std::pair{ScrollKind::s22, "S(2,2)"}, std::pair{ScrollKind::s13, "S(1,3)"}}) {
    const Ideal S = quartic_scroll(kind);
    const HilbertData h = hilbert(S);
    const std::string tag = std::string(name);
    o.expect(h.polynomial_string() == "2*t^2+3*t+1", tag + " Hilbert polynomial");
    o.expect(h.degree == 4, tag + " degree 4");
    o.expect(is_smooth(S), tag + " smooth");
    o.expect(linear_span_codim(S) == 0, tag + " non-degenerate");
    o.expect(linear_syzygy_test(S.generators()).passed(), tag + " linear syzygies");
    o.note(tag + ": " + h.polynomial_string() + ", degree " + std::to_string(h.degree));
  }
  return o;
}

Outcome quadric_system(const AcceptanceOptions&) {
  Outcome o;
  const RingMap psi = scroll_quadric_map(ScrollKind::s22);
  const Ideal K = kernel(psi);
  o.expect(K.generators().size() == 1, "kernel is principal");
  if (K.generators().size() == 1) {
    const Polynomial& q = K.generators()[0];
    o.expect(q.degree() == 2, "generator has degree 2");
    o.expect(quadratic_rank(q) == 6, "rank 6");
    o.note("kernel = (" + q.to_string() + "), rank " + std::to_string(quadratic_rank(q)));
  }
  return o;
}

Outcome fixture_outcome(const std::string& name, const AcceptanceOptions& options) {
  Outcome o;
  FixtureOptions fo;
  if (options.exact_smoothness) fo.smoothness_prime.reset();
  const auto report = run_fixture(name, fo);
  for (const auto& c : report.checks) {
    o.expect(c.passed, name + "/" + c.name + " (" + c.claim + "): " + c.witness);
  }
  return o;
}

Outcome del_pezzo_fixtures(const AcceptanceOptions& options) {
  Outcome o;
  for (const char* name : {"dp-a", "dp-b", "dp-c", "dp-d", "dp-e"}) {
    const auto start = std::chrono::steady_clock::now();
    FixtureOptions fo;
    if (options.exact_smoothness) fo.smoothness_prime.reset();
    const auto report = run_fixture(name, fo);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string section;
    for (const auto& c : report.checks) {
      o.expect(c.passed, std::string(name) + "/" + c.name + ": " + c.witness);
      if (c.name == "plane-section") section = c.witness;
    }
    o.expect(seconds < 120, std::string(name) + " within 120 s");
    o.note(std::string(name) + ": " + section);
  }
  return o;
}

Outcome skew_planes_fixture(const AcceptanceOptions& options) {
  Outcome o = fixture_outcome("skew-planes", options);
  if (o.passed) o.note("all skew-planes checks pass (residual P1 ∪ P2 ∪ Q, four residual scrolls, rank-4 quadric)");
  return o;
}

Outcome property_suites(const AcceptanceOptions& options) {
  Outcome o;
  const ParamSurface dp = del_pezzo_quintic();
  const RingMap psi = scroll_quadric_map(ScrollKind::s22);
  const std::vector<Ideal> ideals = {dp.ideal,
                                     kernel(dp.parametrization),
                                     kernel(psi),
                                     quartic_scroll(ScrollKind::s22),
                                     quartic_scroll(ScrollKind::s13),
                                     catalog_entry("skew-planes"),
                                     segre_threefold(conic_pencils(dp)[4]),
                                     dp.ideal + standard_plane("a")};
  int bases = 0;
  for (const auto& I : ideals) {
    o.expect(verify_groebner_basis(I.groebner()), "S-pair fixpoint on " + I.to_string());
    const Ideal& sat = saturate(I);
    o.expect(verify_groebner_basis(sat.groebner()), "S-pair fixpoint on a saturation");
    o.expect(saturate(sat) == sat, "saturation idempotent on " + I.to_string());
    bases += 2;
  }
  for (const RingMap* h : {&dp.parametrization, &psi}) {
    const Ideal K = kernel(*h);
    for (const auto& g : K.generators()) o.expect((*h)(g).is_zero(), "kernel generator vanishes");
  }
  o.note(std::to_string(bases) + " bases verified, saturation idempotent, kernel generators vanish");

  const std::string seed = std::to_string(options.seed);
  const std::vector<std::vector<std::string>> runs = {
      {"--seed", seed, "rsci", "delpezzo", "--degree", "3", "--count", "1"},
      {"--seed", seed, "points", "--map", "delpezzo", "--count", "3"},
      {"--seed", seed, "merge-plane", "--map", "delpezzo", "points:2"}};
  for (const auto& args : runs) {
    std::ostringstream first, second, sink;
    const int a = run_cli(args, first, sink);
    const int b = run_cli(args, second, sink);
    o.expect(a == 0 && b == 0, args[2] + " runs succeed");
    o.expect(first.str() == second.str() && !first.str().empty(), args[2] + " reports byte-identical");
  }
  o.note("rsci, points and merge-plane reports byte-identical for seed " + seed);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<Outcome(const AcceptanceOptions&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {1, "discriminant table", 1e-3, discriminant_table},
      {2, "excess multiplicities", 1.0, excess_multiplicities},
      {3, "self-intersections", 1.0, self_intersections},
      {4, "non-openness certificates", 1.0, non_openness},
      {5, "del Pezzo reconstruction", 30.0, del_pezzo_reconstruction},
      {6, "scroll invariants", 60.0, scroll_invariants},
      {7, "quadric system of S(2,2)", 120.0, quadric_system},
      {8, "del Pezzo fixtures dp-a..dp-e", 600.0, del_pezzo_fixtures},
      {9, "skew-planes fixture", 600.0, skew_planes_fixture},
      {10, "property suites", 300.0, property_suites},
  };
  return table;
}

const Criterion& find(int id) {
  for (const auto& c : criteria()) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("unknown acceptance criterion " + std::to_string(id));
}

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> out;
  for (const auto& c : criteria()) out.push_back(c.id);
  return out;
}

std::string criterion_title(int id) { return find(id).title; }

double criterion_budget(int id) { return find(id).budget; }

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  const Criterion& c = find(id);
  CriterionResult result{c.id, c.title, false, "", 0, c.budget};
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.body(options);
  } catch (const std::exception& e) {
    outcome.passed = false;
    outcome.note(std::string("error: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = outcome.passed && result.seconds < c.budget;
  result.detail = outcome.detail();
  if (result.seconds >= c.budget) result.detail += "; FAILED time budget";
  return result;
}

std::vector<CriterionResult> run_acceptance(std::span<const int> ids, const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace cubiclab::app
