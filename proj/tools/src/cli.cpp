#include "cubiclab/app/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubiclab/app/acceptance.hpp"
#include "cubiclab/catalog.hpp"
#include "cubiclab/construct.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/groebner.hpp"
#include "cubiclab/lattice.hpp"
#include "cubiclab/parse.hpp"
#include "cubiclab/resources.hpp"

namespace cubiclab::app {

namespace {

using json = nlohmann::ordered_json;

/// Bad command-line input; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  json results = json::object();
  std::vector<Check> checks;
  std::vector<std::string> summary;
};

struct Context {
  Field field = Field::rationals();
  std::string field_spec = "q";
  std::uint64_t seed = 0;
  std::string ring_spec = "x:5";
  bool timings = false;
};

Field parse_field(const std::string& spec) {
  if (spec == "q" || spec == "QQ") return Field::rationals();
  if (spec.rfind("fp:", 0) == 0) {
    try {
      return Field::prime(static_cast<std::uint32_t>(std::stoul(spec.substr(3))));
    } catch (const std::logic_error&) {
      throw UsageError("invalid prime in --field " + spec);
    }
  }
  throw UsageError("--field must be q or fp:<prime>");
}

RingPtr parse_ring(const std::string& spec, const Field& field) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0) throw UsageError("ring must be written NAME:N, e.g. x:5");
  try {
    return Ring::projective(std::stoul(spec.substr(colon + 1)), field, spec.substr(0, colon));
  } catch (const std::logic_error&) {
    throw UsageError("invalid ring " + spec);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_catalog_name(const std::string& spec) {
  for (const auto& n : catalog_names()) {
    if (n == spec) return true;
  }
  return false;
}

/// "@file", "fixture:<resource>", a catalog name, or an inline list.
Ideal read_ideal(const std::string& spec, const RingPtr& ring) {
  if (spec.empty()) throw UsageError("empty ideal");
  std::string text;
  if (spec[0] == '@') {
    text = read_file(spec.substr(1));
  } else if (spec.rfind("fixture:", 0) == 0) {
    text = std::string(fixture_file(spec.substr(8)));
  } else if (is_catalog_name(spec)) {
    Ideal I = catalog_entry(spec, ring->field());
    require_same_ring(I.ring(), ring, "catalog entries live in P^5 with variables x_0..x_5");
    return I;
  } else {
    text = spec;
  }
  return Ideal(ring, parse_polynomial_list(text, ring));
}

RingMap read_map(const std::string& spec, const Context& ctx, const std::string& target_spec) {
  if (spec == "delpezzo") return del_pezzo_quintic(ctx.field).parametrization;
  if (spec == "psi:s22") return scroll_quadric_map(ScrollKind::s22, p5_ring(ctx.field));
  if (spec == "psi:s13") return scroll_quadric_map(ScrollKind::s13, p5_ring(ctx.field));
  const RingPtr source = parse_ring(ctx.ring_spec, ctx.field);
  const RingPtr target = parse_ring(target_spec, ctx.field);
  const std::string text = spec[0] == '@' ? read_file(spec.substr(1)) : spec;
  return RingMap(source, target, parse_polynomial_list(text, target));
}

json polys_json(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

json ideal_json(const Ideal& I) { return polys_json(I.generators()); }

// Reduced grevlex basis, so computed ideals print the same way every time.
json canonical_json(const Ideal& I) { return polys_json(I.groebner().elements()); }

json hilbert_json(const HilbertData& h, int values) {
  json out;
  out["numerator"] = h.numerator;
  out["reduced_numerator"] = h.reduced_numerator;
  out["hilbert_polynomial"] = h.polynomial_string();
  out["dimension"] = h.dimension;
  out["degree"] = h.degree;
  out["codimension"] = static_cast<int>(h.arity) - 1 - h.dimension;
  if (values > 0) {
    json v = json::array();
    for (int k = 0; k < values; ++k) v.push_back(h.function(k));
    out["values"] = v;
  }
  return out;
}

json smoothness_json(const SmoothnessResult& s) {
  return json{{"smooth", s.smooth},
              {"certified", s.certified},
              {"codim", s.codim},
              {"minors", s.minors},
              {"singular_codim", s.singular_codim}};
}

TermOrder parse_order(const std::string& spec) {
  if (spec == "grevlex") return TermOrder::grevlex();
  if (spec == "lex") return TermOrder::lex();
  if (spec.rfind("elim:", 0) == 0) {
    try {
      return TermOrder::elimination(std::stoul(spec.substr(5)));
    } catch (const std::logic_error&) {
    }
  }
  throw UsageError("--order must be grevlex, lex or elim:<k>");
}

json checks_json(const std::vector<Check>& checks, bool timings) {
  json out = json::array();
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"claim", c.claim}, {"passed", c.passed}, {"witness", c.witness}};
    if (timings) j["seconds"] = c.seconds;
    out.push_back(j);
  }
  return out;
}

void add_report_checks(Report& report, const VerificationReport& v) {
  for (const auto& c : v.checks) {
    report.checks.push_back(c);
    report.summary.push_back(std::string(c.passed ? "PASS " : "FAIL ") + v.name + "/" + c.name + ": " + c.witness);
  }
}

SurfaceNumerics named_numerics(const std::string& name) {
  if (name == "scroll") return quartic_scroll_numerics();
  if (name == "delpezzo") return del_pezzo_quintic_numerics();
  if (name == "plane") return plane_numerics();
  throw UsageError("--surface must be scroll, delpezzo or plane");
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw UsageError("--only takes a comma-separated list of criterion numbers");
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with ideals, cubic fourfolds and intersection lattices.", "cubiclab"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  if (const char* env = std::getenv("CUBICLAB_SEED")) {
    try {
      ctx.seed = std::stoull(env);
    } catch (const std::logic_error&) {
      err << "error: CUBICLAB_SEED is not an unsigned integer\n";
      return 2;
    }
  }
  app.add_option("--field", ctx.field_spec, "Coefficient field: q or fp:<prime>")->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for randomized commands (default: $CUBICLAB_SEED or 0)");
  app.add_option("--ring", ctx.ring_spec, "Ambient ring NAME:N, variables NAME_0..NAME_N")->capture_default_str();
  app.add_flag("--timings", ctx.timings, "Include wall-clock timings in the report");

  std::string ideal_a, ideal_b, order = "grevlex", by, map_spec, target = "t:2", name, expect;
  int count = 1, degree = 0, values = 10, attempts = 64;
  long bound = 1, point_bound = 10, plane_bound = 10;
  std::uint32_t prime = 0;
  double minor_cap = 1e5;
  bool exact = false, list = false;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("ideal", ideal_a, "Ideal")->required();
  gb->add_option("--order", order, "grevlex, lex or elim:<k>")->capture_default_str();

  auto* sat = app.add_subcommand("saturate", "Saturation by the irrelevant ideal or by another ideal");
  sat->add_option("ideal", ideal_a, "Ideal")->required();
  sat->add_option("--by", by, "Ideal to saturate by");

  auto* elim = app.add_subcommand("eliminate", "Eliminate the first k variables");
  elim->add_option("ideal", ideal_a, "Ideal")->required();
  elim->add_option("--count", count, "Number of leading variables to eliminate")->required();

  auto* ker = app.add_subcommand("kernel", "Kernel of a ring map");
  ker->add_option("--map", map_spec, "delpezzo, psi:s22, psi:s13 or forms in the --target ring")->required();
  ker->add_option("--target", target, "Parameter ring NAME:N for inline forms")->capture_default_str();

  auto* pre = app.add_subcommand("preimage", "Image in P^n of a subscheme of the parameter space");
  pre->add_option("--map", map_spec, "Ring map")->required();
  pre->add_option("--target", target, "Parameter ring NAME:N for inline forms")->capture_default_str();
  pre->add_option("ideal", ideal_a, "Ideal in the parameter ring")->required();

  auto* hil = app.add_subcommand("hilbert", "Hilbert series, polynomial, dimension and degree");
  hil->add_option("ideal", ideal_a, "Ideal")->required();
  hil->add_option("--values", values, "Number of Hilbert function values to list")->capture_default_str();

  auto* dimc = app.add_subcommand("dim", "Projective dimension");
  dimc->add_option("ideal", ideal_a, "Ideal")->required();
  auto* degc = app.add_subcommand("degree", "Degree");
  degc->add_option("ideal", ideal_a, "Ideal")->required();

  auto* smooth = app.add_subcommand("smooth", "Jacobian smoothness criterion");
  smooth->add_option("ideal", ideal_a, "Ideal")->required();
  smooth->add_option("--prime", prime, "Run on the reduction modulo this prime");
  smooth->add_option("--minor-cap", minor_cap, "Largest number of minors")->capture_default_str();

  auto* span = app.add_subcommand("span", "Codimension of the linear span");
  span->add_option("ideal", ideal_a, "Ideal")->required();

  auto* section = app.add_subcommand("section", "Classify the intersection of a surface with a plane");
  section->add_option("surface", ideal_a, "Surface ideal")->required();
  section->add_option("plane", ideal_b, "Plane ideal")->required();
  section->add_option("--expect", expect, "Expected class; adds a check");

  auto* rs = app.add_subcommand("rsci", "Random smooth complete intersection through an ideal");
  rs->add_option("ideal", ideal_a, "Ideal")->required();
  rs->add_option("--degree", degree, "Degree d of the forms")->required();
  rs->add_option("--count", count, "Number e of forms")->capture_default_str();
  rs->add_option("--bound", bound, "Coefficients uniform in [-bound, bound]")->capture_default_str();
  rs->add_option("--attempts", attempts, "Attempt budget")->capture_default_str();
  rs->add_option("--filter-prime", prime, "Prime of the smoothness filter (0 disables it)");
  rs->add_flag("--exact", exact, "Confirm smoothness over the ideal's field");

  auto* pts = app.add_subcommand("points", "Random independent reduced points on the image of a map");
  pts->add_option("--map", map_spec, "Ring map")->required();
  pts->add_option("--target", target, "Parameter ring NAME:N for inline forms")->capture_default_str();
  pts->add_option("--count", count, "Number of points (0..3)")->capture_default_str();
  pts->add_option("--point-bound", point_bound, "Parameter coordinates in [-b, b]")->capture_default_str();

  auto* merge = app.add_subcommand("merge-plane", "Plane P through Y with Z ∩ P = Y, Z the image of a map");
  merge->add_option("--map", map_spec, "Ring map")->required();
  merge->add_option("--target", target, "Parameter ring NAME:N for inline forms")->capture_default_str();
  merge->add_option("subscheme", ideal_a, "Ideal of Y, or points:<i> for i random points")->required();
  merge->add_option("--bound", plane_bound, "Coefficients of the plane's forms in [-b, b]")->capture_default_str();
  merge->add_option("--point-bound", point_bound, "Parameter coordinates of points:<i> in [-b, b]")
      ->capture_default_str();
  merge->add_option("--attempts", attempts, "Plane attempt budget")->capture_default_str();

  auto* lnk = app.add_subcommand("link", "Residual scheme saturate(total : part)");
  lnk->add_option("total", ideal_a, "Ideal of the total scheme")->required();
  lnk->add_option("part", ideal_b, "Ideal of the part")->required();

  auto* cat = app.add_subcommand("catalog", "Show a catalog entry");
  cat->add_option("name", name, "Entry name");
  cat->add_flag("--list", list, "List entry names");

  auto* fix = app.add_subcommand("fixture", "Run the checks of a bundled fixture");
  fix->add_option("name", name, "dp-a..dp-e or skew-planes")->required();
  fix->add_flag("--exact", exact, "Check smoothness over QQ instead of the modular filter");

  auto* lat = app.add_subcommand("lattice", "Intersection-lattice arithmetic");
  lat->require_subcommand(1);
  std::optional<long long> beta;
  long long lat_degree = 0, genus = 0, k1 = 0, k2 = 0, self_int = 0, lo = 0, hi = 3, box = 0;
  std::string surface, preset;
  auto* disc = lat->add_subcommand("disc", "Discriminant of <h^2, P1, P2> or of <h^2, S, P> with S.P = beta");
  disc->add_option("--beta", beta, "S.P");
  auto* excess = lat->add_subcommand("excess", "Excess multiplicity 3d + K1.C + K2.C + 2 - 2g");
  excess->add_option("--case", preset, "line or conic (del Pezzo and plane)");
  excess->add_option("--degree", lat_degree, "Curve degree d");
  excess->add_option("--genus", genus, "Curve genus g");
  excess->add_option("--k1", k1, "K_S1 . C");
  excess->add_option("--k2", k2, "K_S2 . C");
  auto* selfint = lat->add_subcommand("selfint", "Self-intersection in cubic and quadric fourfolds");
  selfint->add_option("--surface", surface, "scroll, delpezzo or plane")->required();
  auto* residual = lat->add_subcommand("residual", "Invariants of T = 3h^2 - S");
  residual->add_option("--beta", beta, "S.P")->required();
  auto* search = lat->add_subcommand("search", "Classes a h^2 + b P1 + c P2 of given degree and self-intersection");
  search->add_option("--degree", lat_degree, "Degree")->required();
  search->add_option("--selfint", self_int, "Self-intersection")->required();
  search->add_option("--lo", lo, "Lower bound of S.Pi")->capture_default_str();
  search->add_option("--hi", hi, "Upper bound of S.Pi")->capture_default_str();
  search->add_option("--box", box, "Search the box [-N, N]^3 instead of the derived bounds");

  auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion");
  verify->add_flag("--exact", exact, "Check fixture smoothness over QQ");
  std::string only;
  verify->add_option("--only", only, "Comma-separated criterion numbers");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  json config;
  int status = 0;
  try {
    ctx.field = parse_field(ctx.field_spec);
    const RingPtr ring = parse_ring(ctx.ring_spec, ctx.field);
    config = json{{"field", ctx.field.name()}, {"seed", ctx.seed}, {"ring", ctx.ring_spec}};
    Rng rng(ctx.seed);
    auto& r = report.results;

    if (gb->parsed()) {
      const Ideal I = read_ideal(ideal_a, ring);
      const GroebnerBasis& basis = I.groebner(parse_order(order));
      r["order"] = basis.order().name();
      r["basis"] = polys_json(basis.elements());
      r["size"] = basis.size();
      report.summary.push_back("gb: " + std::to_string(basis.size()) + " elements in " + basis.order().name());
    } else if (sat->parsed()) {
      const Ideal I = read_ideal(ideal_a, ring);
      const Ideal S = by.empty() ? saturate(I) : saturate(I, read_ideal(by, ring));
      r["ideal"] = canonical_json(S);
      report.summary.push_back("saturate: " + std::to_string(S.groebner().size()) + " basis element(s)");
    } else if (elim->parsed()) {
      const Ideal I = read_ideal(ideal_a, ring);
      if (count < 0) throw UsageError("--count must be non-negative");
      const Ideal E = eliminate(I, static_cast<std::size_t>(count));
      r["variables"] = E.ring()->names();
      r["ideal"] = canonical_json(E);
      report.summary.push_back("eliminate: " + std::to_string(E.groebner().size()) + " basis element(s)");
    } else if (ker->parsed()) {
      const RingMap h = read_map(map_spec, ctx, target);
      const Ideal K = kernel(h);
      r["source"] = h.source()->names();
      r["kernel"] = canonical_json(K);
      report.summary.push_back("kernel: " + std::to_string(K.groebner().size()) + " basis element(s)");
    } else if (pre->parsed()) {
      const RingMap h = read_map(map_spec, ctx, target);
      const Ideal J = read_ideal(ideal_a, h.target());
      const Ideal P = preimage(h, J);
      r["ideal"] = canonical_json(P);
      report.summary.push_back("preimage: " + std::to_string(P.groebner().size()) + " basis element(s)");
    } else if (hil->parsed()) {
      const HilbertData h = hilbert(read_ideal(ideal_a, ring));
      r = hilbert_json(h, values);
      report.summary.push_back("hilbert: " + h.polynomial_string() + ", dim " + std::to_string(h.dimension) +
                               ", degree " + std::to_string(h.degree));
    } else if (dimc->parsed()) {
      const int d = dim(read_ideal(ideal_a, ring));
      r["dimension"] = d;
      report.summary.push_back("dim: " + std::to_string(d));
    } else if (degc->parsed()) {
      const long long d = cubiclab::degree(read_ideal(ideal_a, ring));
      r["degree"] = d;
      report.summary.push_back("degree: " + std::to_string(d));
    } else if (smooth->parsed()) {
      SmoothnessOptions so;
      so.minor_cap = minor_cap;
      if (prime != 0) so.prime = prime;
      const auto s = check_smoothness(read_ideal(ideal_a, ring), so);
      r = smoothness_json(s);
      report.summary.push_back(std::string("smooth: ") + (s.smooth ? "yes" : "no") +
                               (s.certified ? "" : " (modular filter)"));
    } else if (span->parsed()) {
      const int c = linear_span_codim(read_ideal(ideal_a, ring));
      r["span_codim"] = c;
      report.summary.push_back("span codim: " + std::to_string(c));
    } else if (section->parsed()) {
      const auto cls = classify_plane_section(read_ideal(ideal_a, ring), read_ideal(ideal_b, ring));
      r["class"] = cls.label();
      r["dimension"] = cls.dimension;
      r["degree"] = cls.degree;
      report.summary.push_back("section: " + cls.label());
      if (!expect.empty()) {
        report.checks.push_back({"section-class", "the section is " + expect, cls.label() == expect, cls.label(), 0});
      }
    } else if (rs->parsed()) {
      RsciConfig cfg;
      cfg.bound = bound;
      cfg.max_attempts = attempts;
      cfg.seed = ctx.seed;
      cfg.exact_check = exact;
      if (rs->count("--filter-prime") > 0) {
        cfg.filter_prime = prime == 0 ? std::nullopt : std::optional<std::uint32_t>(prime);
      }
      config["bounds"] = json{{"coefficients", bound}};
      config["filter_prime"] = cfg.filter_prime ? json(*cfg.filter_prime) : json(nullptr);
      const auto res = rsci(read_ideal(ideal_a, ring), degree, count, cfg, rng);
      r["generators"] = ideal_json(res.ideal);
      r["attempts"] = res.attempts;
      r["smoothness"] = res.certified ? "certified" : "filtered";
      report.summary.push_back("rsci: found after " + std::to_string(res.attempts) + " attempt(s), smoothness " +
                               (res.certified ? "certified" : "filtered"));
    } else if (pts->parsed()) {
      const RingMap h = read_map(map_spec, ctx, target);
      config["bounds"] = json{{"parameters", point_bound}};
      const auto res = find_points_on_image(h, count, rng, point_bound);
      r["ideal"] = ideal_json(res.points);
      r["attempts"] = res.attempts;
      report.summary.push_back("points: " + std::to_string(count) + " point(s) after " +
                               std::to_string(res.attempts) + " draw(s)");
    } else if (merge->parsed()) {
      const RingMap h = read_map(map_spec, ctx, target);
      config["bounds"] = json{{"parameters", point_bound}, {"plane_coefficients", plane_bound}};
      Ideal Y = Ideal::unit(h.source());
      if (ideal_a.rfind("points:", 0) == 0) {
        Rng point_rng = rng.split(1);
        int i = 0;
        try {
          i = std::stoi(ideal_a.substr(7));
        } catch (const std::logic_error&) {
          throw UsageError("points:<i> needs an integer");
        }
        Y = find_points_on_image(h, i, point_rng, point_bound).points;
        r["subscheme"] = ideal_json(Y);
      } else {
        Y = read_ideal(ideal_a, h.source());
      }
      Rng plane_rng = rng.split(2);
      const auto res = merge_plane(h, Y, plane_rng, plane_bound, attempts);
      r["plane"] = ideal_json(res.plane);
      r["merged"] = canonical_json(res.merged);
      r["attempts"] = res.attempts;
      report.summary.push_back("merge-plane: plane found after " + std::to_string(res.attempts) + " attempt(s)");
    } else if (lnk->parsed()) {
      const Ideal R = link(read_ideal(ideal_a, ring), read_ideal(ideal_b, ring));
      r["residual"] = canonical_json(R);
      if (!R.is_unit()) {
        const HilbertData h = hilbert(R);
        r["hilbert"] = hilbert_json(h, 0);
        report.summary.push_back("link: residual of dim " + std::to_string(h.dimension) + ", degree " +
                                 std::to_string(h.degree) + ", Hilbert polynomial " + h.polynomial_string());
      } else {
        report.summary.push_back("link: empty residual");
      }
    } else if (cat->parsed()) {
      if (list || name.empty()) {
        r["names"] = catalog_names();
        report.summary.push_back("catalog: " + std::to_string(catalog_names().size()) + " entries");
      } else {
        const Ideal I = catalog_entry(name, ctx.field);
        const SchemeSummary s = summarize(I);
        r["name"] = name;
        r["generators"] = ideal_json(I);
        r["dimension"] = s.dimension;
        r["degree"] = s.degree;
        r["codim"] = s.codim;
        r["smooth"] = s.smooth;
        r["span_codim"] = s.span_codim;
        r["hilbert_polynomial"] = hilbert(I.saturated()).polynomial_string();
        report.summary.push_back("catalog " + name + ": dim " + std::to_string(s.dimension) + ", degree " +
                                 std::to_string(s.degree));
      }
    } else if (fix->parsed()) {
      FixtureOptions fo;
      if (exact) fo.smoothness_prime.reset();
      const auto v = run_fixture(name, fo);
      r["fixture"] = name;
      for (const auto& c : v.checks) {
        if (c.name == "plane-section") r["section_class"] = c.witness;
      }
      add_report_checks(report, v);
      report.summary.push_back("fixture " + name + ": " + (v.passed() ? "pass" : "FAIL"));
    } else if (lat->parsed()) {
      if (disc->parsed()) {
        if (beta) {
          const long long d = gram_discriminant(surface_plane_lattice(*beta));
          r["beta"] = *beta;
          r["discriminant"] = d;
          report.summary.push_back("discriminant (beta = " + std::to_string(*beta) + "): " + std::to_string(d));
        } else {
          const long long d = gram_discriminant(skew_planes_lattice());
          r["lattice"] = "h^2, P1, P2";
          r["discriminant"] = d;
          report.summary.push_back("discriminant of <h^2, P1, P2>: " + std::to_string(d));
        }
      } else if (excess->parsed()) {
        if (preset == "line") {
          lat_degree = 1, genus = 0, k1 = -1, k2 = -3;
        } else if (preset == "conic") {
          lat_degree = 2, genus = 0, k1 = -2, k2 = -6;
        } else if (!preset.empty()) {
          throw UsageError("--case must be line or conic");
        }
        const auto e = excess_multiplicity(lat_degree, genus, k1, k2);
        r = json{{"degree", lat_degree}, {"genus", genus}, {"k1", k1}, {"k2", k2}, {"value", e.value},
                 {"out_of_domain", e.out_of_domain}};
        report.summary.push_back("excess multiplicity: " + std::to_string(e.value) +
                                 (e.out_of_domain ? " (curve degree not positive)" : ""));
      } else if (selfint->parsed()) {
        const SurfaceNumerics n = named_numerics(surface);
        r = json{{"surface", surface},
                 {"numerics", {{"h2", n.h2}, {"hK", n.hK}, {"K2", n.K2}, {"chi_top", n.chi_top}, {"chi_O", n.chi_O}}},
                 {"cubic_fourfold", self_int_cubic_fourfold(n)},
                 {"quadric_fourfold", self_int_quadric_fourfold(n)}};
        report.summary.push_back("self-intersection of " + surface + ": " +
                                 std::to_string(self_int_cubic_fourfold(n)) + " in a cubic, " +
                                 std::to_string(self_int_quadric_fourfold(n)) + " in a quadric");
      } else if (residual->parsed()) {
        const auto t = residual_class(*beta);
        r = json{{"beta", *beta},
                 {"coordinates", t.T.coordinates},
                 {"degree", t.T.degree},
                 {"self_intersection", t.T.self_intersection},
                 {"dot_plane", t.dot_plane}};
        report.summary.push_back("T = 3h^2 - S: T.h^2 = " + std::to_string(t.T.degree) + ", T^2 = " +
                                 std::to_string(t.T.self_intersection) + ", T.P = " + std::to_string(t.dot_plane));
      } else if (search->parsed()) {
        const ObstructionSearch s =
            box > 0 ? obstruction_search(lat_degree, self_int, lo, hi, SearchBox{-box, box, -box, box, -box, box})
                    : obstruction_search(lat_degree, self_int, lo, hi);
        auto triples = [](const std::vector<std::array<long long, 3>>& v) {
          json out = json::array();
          for (const auto& t : v) out.push_back(json{{"a", t[0]}, {"b", t[1]}, {"c", t[2]}});
          return out;
        };
        r["degree"] = lat_degree;
        r["self_intersection"] = self_int;
        r["plane_bounds"] = {lo, hi};
        r["box"] = json{{"a", {s.box.a_lo, s.box.a_hi}}, {"b", {s.box.b_lo, s.box.b_hi}},
                        {"c", {s.box.c_lo, s.box.c_hi}}};
        r["box_source"] = box > 0 ? "explicit" : "derived";
        r["visited"] = s.visited;
        r["linear_solutions"] = triples(s.linear_solutions);
        r["solutions"] = triples(s.solutions);
        report.summary.push_back("search box: " + s.box.to_string());
        report.summary.push_back(std::to_string(s.linear_solutions.size()) + " class(es) meet the linear constraints, " +
                                 std::to_string(s.solutions.size()) + " also the self-intersection");
      }
    } else if (verify->parsed()) {
      AcceptanceOptions ao;
      ao.seed = ctx.seed;
      ao.exact_smoothness = exact;
      const std::vector<int> ids = only.empty() ? criterion_ids() : parse_id_list(only);
      json criteria = json::array();
      for (int id : ids) {
        CriterionResult c;
        try {
          c = run_criterion(id, ao);
        } catch (const std::out_of_range& e) {
          throw UsageError(e.what());
        }
        criteria.push_back(json{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
        report.checks.push_back({"criterion-" + std::to_string(c.id), c.title, c.passed, c.detail, c.seconds});
        report.summary.push_back(std::string(c.passed ? "PASS " : "FAIL ") + std::to_string(c.id) + " " + c.title +
                                 ": " + c.detail);
      }
      r["criteria"] = criteria;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json j;
  j["schema"] = 1;
  j["command"] = args;
  j["config"] = config;
  j["results"] = report.results;
  if (!report.checks.empty()) {
    bool passed = true;
    for (const auto& c : report.checks) passed = passed && c.passed;
    j["checks"] = checks_json(report.checks, ctx.timings);
    j["passed"] = passed;
    if (!passed) status = 1;
  }
  if (ctx.timings) j["timings"] = json{{"total_seconds", seconds}};
  out << j.dump(2) << "\n";

  for (const auto& line : report.summary) err << line << "\n";
  for (const auto& c : report.checks) {
    if (!c.passed) err << "FAILED: " << c.name << " (" << c.claim << ")\n";
  }
  return status;
}

}  // namespace cubiclab::app
