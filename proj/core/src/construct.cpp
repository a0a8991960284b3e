#include "cubiclab/construct.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "cubiclab/error.hpp"
#include "cubiclab/parse.hpp"
#include "cubiclab/resources.hpp"

namespace cubiclab {

namespace {

Polynomial random_combination(const std::vector<Polynomial>& basis, const RingPtr& ring, long bound, Rng& rng) {
  Polynomial out(ring);
  for (const auto& b : basis) {
    const long c = rng.uniform(-bound, bound);
    if (c != 0) out = out + b.scaled(Scalar(c, ring->field()));
  }
  return out;
}

std::size_t rank_of(const std::vector<Polynomial>& forms) { return echelon_basis(forms).size(); }

std::vector<Polynomial> all_variables(const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ring->arity(); ++i) out.push_back(Polynomial::variable(ring, i));
  return out;
}

std::vector<Polynomial> monomial_forms(const RingPtr& ring, int d) {
  std::vector<Polynomial> out;
  for (const auto& m : monomials_of_degree(ring, d)) out.push_back(Polynomial::monomial(ring, m, Scalar::one(ring->field())));
  return out;
}

using CheckResult = std::pair<bool, std::string>;

void run_check(VerificationReport& report, std::string name, std::string claim,
               const std::function<CheckResult()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check check{std::move(name), std::move(claim), false, "", 0};
  try {
    auto [ok, witness] = body();
    check.passed = ok;
    check.witness = std::move(witness);
  } catch (const Error& e) {
    check.passed = false;
    check.witness = std::string("error: ") + e.what();
  }
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.checks.push_back(std::move(check));
}

std::string smoothness_witness(const SmoothnessResult& s, const std::optional<std::uint32_t>& prime) {
  std::string out = "singular locus codim " + std::to_string(s.singular_codim) + ", " +
                    std::to_string(s.minors) + " minors";
  if (!s.certified && prime) out += ", filtered mod " + std::to_string(*prime);
  return out;
}

SmoothnessResult fixture_smoothness(const Ideal& I, const FixtureOptions& options) {
  SmoothnessOptions so;
  so.prime = options.smoothness_prime;
  return check_smoothness(I, so);
}

std::string hilbert_witness(const HilbertData& h) {
  return "dim " + std::to_string(h.dimension) + ", degree " + std::to_string(h.degree) + ", Hilbert polynomial " +
         h.polynomial_string();
}

Polynomial single_polynomial(const std::string& resource, const RingPtr& ring) {
  const auto polys = parse_polynomial_list(std::string(fixture_file(resource)), ring);
  if (polys.size() != 1) throw PreconditionError(resource + " must hold exactly one polynomial");
  return polys[0];
}

Ideal resource_ideal(const std::string& resource, const RingPtr& ring) {
  return Ideal(ring, parse_polynomial_list(std::string(fixture_file(resource)), ring));
}

const std::map<std::string, std::string>& expected_sections() {
  static const std::map<std::string, std::string> table = {{"dp-a", "irreducible-conic"},
                                                           {"dp-b", "empty"},
                                                           {"dp-c", "points(1, reduced)"},
                                                           {"dp-d", "points(2, reduced)"},
                                                           {"dp-e", "points(3, reduced)"}};
  return table;
}

VerificationReport run_del_pezzo_fixture(const std::string& name, const FixtureOptions& options) {
  const RingPtr ring = p5_ring();
  const Polynomial cubic = single_polynomial(name + ".cubic", ring);
  const Ideal plane = resource_ideal(name + ".plane", ring);
  const Ideal Z = del_pezzo_quintic().ideal;
  const Ideal X(ring, {cubic});
  const std::string expected = expected_sections().at(name);

  VerificationReport report{name, {}};
  run_check(report, "cubic-form", "the fixture is a single cubic form", [&]() -> CheckResult {
    return {cubic.homogeneous_degree() == 3, "degree " + std::to_string(cubic.degree())};
  });
  run_check(report, "contains-surface", "the cubic contains the del Pezzo quintic Z", [&]() -> CheckResult {
    return {Z.contains(cubic), "cubic reduces to zero modulo I(Z)"};
  });
  run_check(report, "contains-plane", "the cubic contains the plane P", [&]() -> CheckResult {
    return {plane.contains(cubic), "cubic reduces to zero modulo I(P)"};
  });
  run_check(report, "smooth", "the cubic fourfold is smooth", [&]() -> CheckResult {
    const auto s = fixture_smoothness(X, options);
    return {s.smooth, smoothness_witness(s, options.smoothness_prime)};
  });
  run_check(report, "plane-section", "Z meets P in: " + expected, [&]() -> CheckResult {
    const std::string label = classify_plane_section(Z, plane).label();
    return {label == expected, label};
  });
  return report;
}

VerificationReport run_skew_planes_fixture(const FixtureOptions& options) {
  const RingPtr ring = p5_ring();
  const Polynomial cubic = single_polynomial("skew-planes.cubic", ring);
  const Ideal X(ring, {cubic});
  const Ideal P1 = standard_plane("p1");
  const Ideal P2 = standard_plane("p2");
  const ParamSurface dp = del_pezzo_quintic();
  const Ideal& Z = dp.ideal;

  VerificationReport report{"skew-planes", {}};
  run_check(report, "planes-disjoint", "P1 and P2 are disjoint planes", [&]() -> CheckResult {
    const int c = codim(P1 + P2);
    return {c == 6, "codim(P1 + P2) = " + std::to_string(c)};
  });
  run_check(report, "contains-surface", "the cubic contains the del Pezzo quintic Z", [&]() -> CheckResult {
    return {Z.contains(cubic), "cubic reduces to zero modulo I(Z)"};
  });
  run_check(report, "contains-planes", "the cubic contains P1 and P2", [&]() -> CheckResult {
    return {P1.contains(cubic) && P2.contains(cubic), "cubic reduces to zero modulo I(P1) and I(P2)"};
  });
  run_check(report, "smooth", "the cubic fourfold is smooth", [&]() -> CheckResult {
    const auto s = fixture_smoothness(X, options);
    return {s.smooth, smoothness_witness(s, options.smoothness_prime)};
  });

  const auto pencils = conic_pencils(dp);
  std::vector<Ideal> sigmas;
  for (const auto& p : pencils) sigmas.push_back(segre_threefold(p));
  std::optional<std::size_t> first;
  run_check(report, "pencil-through-planes", "exactly one conic pencil sweeps a threefold containing P1 and P2",
            [&]() -> CheckResult {
              std::string labels;
              int count = 0;
              for (std::size_t i = 0; i < sigmas.size(); ++i) {
                if (P1.contains(sigmas[i]) && P2.contains(sigmas[i])) {
                  ++count;
                  if (!first) first = i;
                  labels += (labels.empty() ? "" : ", ") + pencils[i].label;
                }
              }
              return {count == 1, "pencils: " + (labels.empty() ? std::string("none") : labels)};
            });
  if (!first) return report;

  const Ideal total1 = sigmas[*first] + X;
  Ideal residual1 = Ideal::zero(ring);
  run_check(report, "residual-planes-and-quadric",
            "the residual of Z in Sigma1 ∩ X is P1 ∪ P2 ∪ Q with Q a smooth quadric surface",
            [&]() -> CheckResult {
              residual1 = link(total1, Z);
              const Ideal planes = intersect(P1, P2);
              if (!planes.contains(residual1)) return {false, "residual does not contain both planes"};
              const Ideal Q = link(residual1, planes);
              const HilbertData h = hilbert(Q);
              const auto s = fixture_smoothness(Q, options);
              const std::vector<Ideal> parts = {P1, P2, Q};
              const bool union_ok = saturate(intersect(parts)) == residual1;
              const bool quadric = h.dimension == 2 && h.degree == 2 && linear_span_codim(Q) == 2;
              return {union_ok && quadric && s.smooth,
                      "Q: " + hilbert_witness(h) + ", span codim " + std::to_string(linear_span_codim(Q)) +
                          ", " + (s.smooth ? "smooth" : "singular") +
                          (union_ok ? ", residual = P1 ∪ P2 ∪ Q" : ", residual differs from P1 ∪ P2 ∪ Q")};
            });
  run_check(report, "liaison-involution", "linking the residual back inside Sigma1 ∩ X recovers Z",
            [&]() -> CheckResult {
              const bool ok = link(total1, residual1) == saturate(Z);
              return {ok, ok ? "link(total, residual) = Z" : "link(total, residual) differs from Z"};
            });

  std::vector<Ideal> scrolls;
  run_check(report, "residual-scrolls",
            "the residual of Z in Sigma_i ∩ X is a smooth quartic scroll for at least two other pencils",
            [&]() -> CheckResult {
              std::string witness;
              for (std::size_t i = 0; i < sigmas.size(); ++i) {
                if (i == *first) continue;
                const Ideal T = link(sigmas[i] + X, Z);
                const HilbertData h = hilbert(T);
                const bool scroll = h.dimension == 2 && h.degree == 4 && h.polynomial_string() == "2*t^2+3*t+1" &&
                                    fixture_smoothness(T, options).smooth;
                if (scroll) scrolls.push_back(T);
                witness += (witness.empty() ? "" : "; ") + pencils[i].label + ": " + hilbert_witness(h) +
                           (scroll ? ", smooth scroll" : ", not a smooth scroll");
              }
              return {scrolls.size() >= 2, witness};
            });
  if (scrolls.size() < 2) return report;

  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t i = 0; i < scrolls.size() && !pair; ++i) {
    for (std::size_t j = i + 1; j < scrolls.size() && !pair; ++j) {
      if (dim(scrolls[i] + scrolls[j]) <= 0) pair = {i, j};
    }
  }
  if (!pair) pair = {0, 1};
  for (auto& c : verify_rank4_quadric(X, scrolls[pair->first], scrolls[pair->second]).checks) {
    c.name = "rank4-quadric/" + c.name;
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace

SmoothnessResult filtered_smoothness(const Ideal& I, const RsciConfig& cfg) {
  if (I.ring()->field().is_rational() && cfg.filter_prime) {
    SmoothnessOptions mod;
    mod.prime = cfg.filter_prime;
    try {
      const auto filtered = check_smoothness(I, mod);
      if (!filtered.smooth || !cfg.exact_check) return filtered;
    } catch (const PreconditionError&) {
      // Coefficients not defined modulo the prime: fall through to the exact check.
    }
  }
  return check_smoothness(I);
}

RsciResult rsci(const Ideal& I, int d, int e, const RsciConfig& cfg) {
  Rng rng(cfg.seed);
  return rsci(I, d, e, cfg, rng);
}

RsciResult rsci(const Ideal& I, int d, int e, const RsciConfig& cfg, Rng& rng) {
  if (cfg.bound < 1) throw PreconditionError("coefficient bound must be at least 1");
  if (cfg.max_attempts < 1) throw PreconditionError("attempt budget must be at least 1");
  if (e < 0 || d < 1) throw PreconditionError("rsci needs d >= 1 and e >= 0");
  const RingPtr& ring = I.ring();
  if (e == 0) return RsciResult{Ideal::zero(ring), 0, true};
  const auto basis = I.is_zero() ? monomial_forms(ring, d) : graded_basis(I.saturated(), d);
  if (basis.empty()) throw PreconditionError("the ideal has no forms of degree " + std::to_string(d));
  for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < e; ++k) gens.push_back(random_combination(basis, ring, cfg.bound, rng));
    if (rank_of(gens) < static_cast<std::size_t>(e)) continue;
    const Ideal J(ring, gens);
    if (codim(J) != e) continue;
    const auto s = filtered_smoothness(J, cfg);
    if (s.smooth) return RsciResult{J, attempt, s.certified};
  }
  throw RetriesExhausted("no smooth complete intersection of " + std::to_string(e) + " forms of degree " +
                             std::to_string(d),
                         cfg.max_attempts);
}

PointSearch find_points_on_image(const RingMap& h, int i, Rng& rng, long point_bound) {
  const RingPtr& x = h.source();
  const RingPtr& t = h.target();
  if (i < 0 || static_cast<std::size_t>(i) > x->arity()) throw PreconditionError("point count out of range");
  if (point_bound < 1) throw PreconditionError("point bound must be at least 1");
  if (i == 0) return PointSearch{Ideal::unit(x), 0};
  constexpr int kMaxDraws = 32;
  for (int attempt = 1; attempt <= kMaxDraws; ++attempt) {
    std::vector<Ideal> params;
    for (int k = 0; k < i; ++k) {
      std::vector<Scalar> p;
      bool nonzero = false;
      for (std::size_t c = 0; c < t->arity(); ++c) {
        const long v = rng.uniform(-point_bound, point_bound);
        nonzero = nonzero || v != 0;
        p.emplace_back(v, t->field());
      }
      if (!nonzero) break;
      params.push_back(linear_subspace_ideal(t, {p}));
    }
    if (params.size() != static_cast<std::size_t>(i)) continue;
    const Ideal points = saturate(preimage(h, intersect(params)));
    if (points.is_unit()) continue;
    const HilbertData hd = hilbert(points);
    if (hd.dimension != 0 || hd.degree != i) continue;
    if (linear_span_codim(points) != static_cast<int>(x->arity()) - i) continue;
    if (!is_smooth(points)) continue;
    return PointSearch{points, attempt};
  }
  throw RetriesExhausted("no " + std::to_string(i) + " independent reduced points found", kMaxDraws);
}

MergedPlane merge_plane(const RingMap& h, const Ideal& Y, Rng& rng, long bound, int max_attempts) {
  const RingPtr& ring = h.source();
  require_same_ring(ring, Y.ring(), "merge_plane");
  if (bound < 1 || max_attempts < 1) throw PreconditionError("merge_plane needs a positive bound and budget");
  const Ideal Z = saturate(kernel(h));
  const Ideal& target = Y.saturated();
  if (!target.contains(Z)) throw PreconditionError("Y does not lie on the image");
  const std::vector<Polynomial> linear = target.is_unit() ? all_variables(ring) : graded_basis(target, 1);
  const std::size_t needed = ring->arity() - 3;
  if (linear.size() < needed) throw PreconditionError("no plane contains Y");
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Polynomial> forms;
    for (std::size_t k = 0; k < needed; ++k) forms.push_back(random_combination(linear, ring, bound, rng));
    if (rank_of(forms) < needed) continue;
    const Ideal plane(ring, forms);
    if (!scheme_equal(Z + plane, target)) continue;
    return MergedPlane{intersect(Z, plane), plane, attempt};
  }
  throw RetriesExhausted("no plane meets the image exactly in Y", max_attempts);
}

Ideal link(const Ideal& total, const Ideal& part) {
  require_same_ring(total.ring(), part.ring(), "link");
  const Ideal& sat = part.saturated();
  if (!sat.contains(total)) throw PreconditionError("link: the part is not contained in the total scheme");
  return saturate(quotient(total, sat));
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerificationReport verify_rank4_quadric(const Ideal& X, const Ideal& T1, const Ideal& T2) {
  VerificationReport report{"rank4-quadric", {}};
  bool hypotheses = false;
  run_check(report, "hypotheses", "T1, T2 are distinct surfaces in X meeting in finitely many points",
            [&]() -> CheckResult {
              if (saturate(T1) == saturate(T2)) return {false, "T1 = T2"};
              if (!T1.contains(X) || !T2.contains(X)) return {false, "a scroll is not contained in X"};
              const int d = dim(T1 + T2);
              hypotheses = d <= 0;
              return {hypotheses, "dim(T1 ∩ T2) = " + std::to_string(d)};
            });
  if (!hypotheses) return report;

  std::optional<Polynomial> W;
  run_check(report, "unique-quadric", "exactly one quadric contains T1 ∪ T2", [&]() -> CheckResult {
    const auto quadrics = graded_basis(intersect(T1, T2), 2);
    if (quadrics.size() == 1) W = quadrics[0];
    return {quadrics.size() == 1, "h0(I(2)) = " + std::to_string(quadrics.size())};
  });
  if (!W) return report;

  run_check(report, "rank-4", "the quadric has rank 4", [&]() -> CheckResult {
    const std::size_t r = quadratic_rank(*W);
    return {r == 4, "W = " + W->to_string() + ", rank " + std::to_string(r)};
  });
  run_check(report, "vertex-line", "the vertex line of the quadric lies in X and is secant to T1 and T2",
            [&]() -> CheckResult {
              const auto vertex = quadratic_form_matrix(*W).nullspace();
              if (vertex.size() != 2) return {false, "vertex has dimension " + std::to_string(vertex.size())};
              const Ideal L = linear_subspace_ideal(X.ring(), vertex);
              const bool in_x = L.contains(X);
              std::string witness = "L = " + L.to_string() + (in_x ? ", L ⊂ X" : ", L ⊄ X");
              bool secant = true;
              for (const Ideal* T : {&T1, &T2}) {
                const Ideal meet = saturate(*T + L);
                const HilbertData h = meet.is_unit() ? HilbertData{} : hilbert(meet);
                const bool ok = !meet.is_unit() && h.dimension == 0 && h.degree == 2;
                secant = secant && ok;
                witness += ", length " + (meet.is_unit() ? std::string("0") : std::to_string(h.degree)) +
                           (h.dimension > 0 ? " (positive-dimensional)" : "");
              }
              return {in_x && secant, witness};
            });
  return report;
}

std::vector<std::string> fixture_names() { return {"dp-a", "dp-b", "dp-c", "dp-d", "dp-e", "skew-planes"}; }

VerificationReport run_fixture(const std::string& name, const FixtureOptions& options) {
  if (name == "skew-planes") return run_skew_planes_fixture(options);
  if (expected_sections().count(name)) return run_del_pezzo_fixture(name, options);
  throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace cubiclab
