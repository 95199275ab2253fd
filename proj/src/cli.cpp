#include "stiefel/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <optional>
#include <string>
#include <vector>

#include "stiefel/atlas.hpp"
#include "stiefel/bounds.hpp"
#include "stiefel/designs.hpp"
#include "stiefel/errors.hpp"
#include "stiefel/io.hpp"
#include "stiefel/optimizer.hpp"
#include "stiefel/orthoplex_codes.hpp"
#include "stiefel/simplex_codes.hpp"
#include "stiefel/verifier.hpp"

namespace stiefel::cli {

namespace {

using io::json;

struct Shape {
  std::string field;  // empty: R, or whatever the construction yields
  std::optional<int> d, r, n;

  Field parsed() const { return field.empty() ? Field::R : parse_field(field); }
};

void add_shape(CLI::App* cmd, Shape& s, bool need_n) {
  cmd->add_option("--field", s.field, "R or C")->check(CLI::IsMember({"R", "C"}));
  cmd->add_option("--d", s.d, "rows")->check(CLI::PositiveNumber);
  cmd->add_option("--r", s.r, "columns")->check(CLI::PositiveNumber);
  auto* n = cmd->add_option("--n", s.n, "code size")->check(CLI::Range(2, 1 << 30));
  if (need_n) n->required();
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidParameter(std::string(flag) + " is required here");
  return *v;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void summarize(std::ostream& err, const CodeReport& rep) {
  err << "field " << to_string(rep.field) << "  d " << rep.d << "  r " << rep.r << "  n "
      << rep.n << '\n'
      << "classification  " << to_string(rep.classification) << '\n'
      << "min distance    " << fmt(rep.min_distance) << "  (squared " << fmt(rep.min_distance_sq)
      << ", pair " << rep.argmin_pair.first << "," << rep.argmin_pair.second << ")\n"
      << "simplex bound   " << fmt(rep.simplex_bound) << "  gap " << fmt(rep.simplex_gap) << '\n'
      << "orthoplex bound " << fmt(rep.orthoplex_bound) << "  gap " << fmt(rep.orthoplex_gap)
      << '\n';
}

void emit(std::ostream& out, const std::string& path, const json& j) {
  const std::string text = io::dump(j);
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text_file(path, text);
  }
}

StiefelCode load_code(const std::string& path) { return io::code_from_json(io::read_json_file(path)).code; }

ResolvableDesign load_design(const std::string& source) {
  static const std::string scheme = "builtin:";
  if (source.rfind(scheme, 0) == 0) return builtin_design(source.substr(scheme.size()));
  io::DesignFile f = io::design_from_json(io::read_json_file(source));
  if (auto ok = verify_bibd(f.design); !ok) throw InvalidParameter("not a BIBD: " + ok.diagnostic);
  if (!f.resolution) {
    f.resolution = find_resolution(f.design);
    if (!f.resolution) throw InfeasibleParameters("design has no resolution");
  }
  return {f.design, *f.resolution};
}

void check_shape(const StiefelCode& code, const Shape& s) {
  const auto mismatch = [](const char* what, int want, Index got) {
    throw ParameterMismatch(std::string("requested ") + what + "=" + std::to_string(want) +
                            " but the construction gives " + std::to_string(got));
  };
  if (!s.field.empty() && to_string(code.field()) != s.field) {
    throw ParameterMismatch("requested field " + s.field + " but the construction gives " +
                            std::string(to_string(code.field())));
  }
  if (s.d && *s.d != code.d()) mismatch("d", *s.d, code.d());
  if (s.r && *s.r != code.r()) mismatch("r", *s.r, code.r());
  if (s.n && *s.n != code.n()) mismatch("n", *s.n, code.n());
}

// ---- construct ----

struct ConstructArgs {
  Shape shape;
  std::string method;
  std::string design;
  std::string seed_code;
  std::string hr_family;
  std::optional<int> k;
  std::string out;
};

Candidate build(const ConstructArgs& a) {
  const Field f = a.shape.parsed();
  const Shape& s = a.shape;
  const auto ssc = [](std::string prov, StiefelCode code) {
    const int n = static_cast<int>(code.n());
    const double sq = 2.0 * static_cast<double>(code.r()) * n / (n - 1);
    return Candidate{std::move(prov), std::move(code), sq, Classification::SSC};
  };
  const auto soc = [](std::string prov, StiefelCode code) {
    const double sq = 2.0 * static_cast<double>(code.r());
    return Candidate{std::move(prov), std::move(code), sq, Classification::SOC};
  };
  const auto seed = [&] {
    if (a.seed_code.empty()) throw InvalidParameter("--seed-code is required for " + a.method);
    return load_code(a.seed_code);
  };

  if (a.method == "sphere") {
    if (s.r && *s.r != 1) throw ParameterMismatch("sphere codes have r = 1");
    return ssc("ssc_sphere", ssc_sphere(f, need(s.d, "--d"), need(s.n, "--n")));
  }
  if (a.method == "radon-hurwitz") {
    const int n = need(s.n, "--n");
    if (!a.hr_family.empty()) {
      const auto family = io::hr_family_from_json(io::read_json_file(a.hr_family));
      validate_hr_family(family, f);
      return ssc("ssc_radon_hurwitz(file)", ssc_radon_hurwitz(f, n, family));
    }
    return ssc("ssc_radon_hurwitz", ssc_radon_hurwitz(f, need(s.d, "--d"), n));
  }
  if (a.method == "regular-rep") {
    if (f != Field::R) throw WrongField("regular-rep builds real codes");
    return ssc("ssc_regular_representation", ssc_regular_representation(need(s.d, "--d")));
  }
  if (a.method == "symplectic") {
    return ssc("ssc_symplectic_lift", ssc_symplectic_lift(f, need(s.d, "--d"), need(s.n, "--n")));
  }
  if (a.method == "bibd") {
    if (a.design.empty()) throw InvalidParameter("--design is required for bibd");
    const ResolvableDesign rd = load_design(a.design);
    const std::string shown =
        a.design.rfind("builtin:", 0) == 0 ? a.design.substr(8) : std::string("file");
    std::string prov = "ssc_from_bibd(" + shown;
    std::optional<StiefelCode> sc;
    if (!a.seed_code.empty()) {
      sc = load_code(a.seed_code);
      prov += ", file)";
    } else {
      const int d = need(s.d, "--d");
      const int r = need(s.r, "--r");
      if (d % rd.design.b != 0 || r % rd.design.rep != 0) {
        throw ParameterMismatch("d must be a multiple of b and r a multiple of the replication");
      }
      auto found = find_ssc(f, d / rd.design.b, r / rd.design.rep, rd.design.k);
      if (!found) throw NoKnownConstruction("no seed code for this design");
      sc = std::move(found->code);
      prov += ", " + found->provenance + ")";
    }
    return ssc(prov, ssc_from_bibd(*sc, rd.design, rd.resolution));
  }
  if (a.method == "orbit") {
    if (f != Field::C) throw WrongField("orbit codes are complex");
    return soc("soc_complex_orbit", soc_complex_orbit(need(s.d, "--d"), need(s.r, "--r"), need(s.n, "--n")));
  }
  if (a.method == "hadamard") {
    if (f != Field::R) throw WrongField("hadamard codes are real");
    return soc("soc_real_hadamard", soc_real_hadamard(need(s.d, "--d"), need(s.r, "--r")));
  }
  if (a.method == "orthoplex") {
    if (f != Field::R) throw WrongField("orthoplex codes are real");
    if (s.r && *s.r != 1) throw ParameterMismatch("orthoplex codes have r = 1");
    return soc("soc_sphere_real", soc_sphere_real(need(s.d, "--d"), need(s.n, "--n")));
  }
  if (a.method == "pad") return ssc("ssc_pad_row(file)", ssc_pad_row(seed()));
  if (a.method == "kronecker") {
    const int k = need(a.k, "--k");
    return ssc("ssc_kronecker(file, " + std::to_string(k) + ")", ssc_kronecker(seed(), k));
  }
  if (a.method == "realify") return ssc("ssc_realify(file)", ssc_realify(seed()));
  if (a.method == "complexify") return ssc("ssc_complexify(file)", ssc_complexify(seed()));
  if (a.method == "auto") {
    const int d = need(s.d, "--d");
    const int r = need(s.r, "--r");
    const int n = need(s.n, "--n");
    if (n > orthoplex_cap(f, d, r)) {
      throw InfeasibleParameters("n=" + std::to_string(n) + " exceeds the orthoplex cap " +
                                 std::to_string(orthoplex_cap(f, d, r)));
    }
    std::optional<Candidate> best;
    double best_sq = -1.0;
    for (auto& c : exact_candidates(f, d, r, n)) {
      const CodeReport rep = certify(c.code);
      if (!matches_claim(c, rep)) continue;
      if (rep.min_distance_sq > best_sq + 1e-9) {
        best_sq = rep.min_distance_sq;
        best = std::move(c);
      }
    }
    if (!best) throw NoKnownConstruction("no exact construction for these parameters");
    return std::move(*best);
  }
  throw InvalidParameter("unknown method " + a.method);
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const Candidate c = build(a);
  check_shape(c.code, a.shape);
  const CodeReport rep = certify(c.code);
  json meta = json::object();
  meta["provenance"] = c.provenance;
  meta["method"] = a.method;
  if (!a.design.empty()) meta["design"] = a.design;
  if (a.k) meta["k"] = *a.k;
  emit(out, a.out, io::code_to_json(c.code, meta));
  summarize(err, rep);
  const bool ok = matches_claim(c, rep);
  err << "construction    " << c.provenance << '\n'
      << "claim           "
      << (c.claimed_class ? std::string(to_string(*c.claimed_class)) : std::string("distance"))
      << (ok ? " (met)" : " (NOT met)") << '\n';
  return ok ? kOk : kVerifyFailed;
}

// ---- verify ----

int cmd_verify(const std::string& path, bool as_json, std::ostream& out) {
  const CodeReport rep = certify(io::code_from_json(io::read_json_file(path)).code);
  if (as_json) {
    out << io::dump(io::report_to_json(rep));
  } else {
    const json j = io::report_to_json(rep);
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      out << std::left << std::setw(17) << it.key()
          << (v.is_number_float() ? fmt(v.get<double>()) : v.is_string() ? v.get<std::string>() : v.dump())
          << '\n';
    }
  }
  return rep.classification == Classification::SSC || rep.classification == Classification::SOC
             ? kOk
             : kVerifyFailed;
}

// ---- bound ----

struct BoundArgs {
  Shape shape;
  std::string n_range;
  bool json = false;
};

std::string sqrt_text(const Rational& q) {
  return q.den == 1 ? "sqrt(" + std::to_string(q.num) + ")"
                    : "sqrt(" + std::to_string(q.num) + "/" + std::to_string(q.den) + ")";
}

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const Field f = a.shape.parsed();
  const int d = need(a.shape.d, "--d");
  const int r = a.shape.r.value_or(1);
  if (r > d) throw InvalidParameter("need r <= d");
  std::vector<int> ns;
  if (a.shape.n) ns.push_back(*a.shape.n);
  if (!a.n_range.empty()) {
    const auto sep = a.n_range.find(':');
    try {
      if (sep == std::string::npos) throw std::invalid_argument("sep");
      const int lo = std::stoi(a.n_range.substr(0, sep));
      const int hi = std::stoi(a.n_range.substr(sep + 1));
      if (lo < 2 || hi < lo) throw std::invalid_argument("range");
      for (int n = lo; n <= hi; ++n) ns.push_back(n);
    } catch (const std::logic_error&) {
      throw InvalidParameter("--n-range wants LO:HI with 2 <= LO <= HI");
    }
  }
  const auto rho = radon_hurwitz(f, d);
  const auto scap = simplex_cap(f, d, r);
  const auto ocap = orthoplex_cap(f, d, r);
  const auto osq = orthoplex_bound_sq(r);

  if (a.json) {
    json j = json::object();
    j["field"] = std::string(to_string(f));
    j["d"] = d;
    j["r"] = r;
    j["radon_hurwitz"] = rho;
    j["simplex_cap"] = scap;
    j["orthoplex_cap"] = ocap;
    j["orthoplex_bound"] = orthoplex_bound(r);
    j["orthoplex_bound_sq"] = {osq.num, osq.den};
    json rows = json::array();
    for (int n : ns) {
      const auto q = simplex_bound_sq(r, n);
      rows.push_back({{"n", n},
                      {"simplex_bound", simplex_bound(r, n)},
                      {"simplex_bound_sq", {q.num, q.den}},
                      {"applicable", applicable_bound(f, d, r, n).kind == BoundKind::Simplex
                                         ? "simplex"
                                         : "orthoplex"}});
    }
    j["rows"] = std::move(rows);
    out << io::dump(j);
    return kOk;
  }
  out << "field " << to_string(f) << "  d " << d << "  r " << r << '\n'
      << "radon-hurwitz   " << rho << '\n'
      << "simplex cap     " << scap << '\n'
      << "orthoplex bound " << sqrt_text(osq) << " = " << fmt(orthoplex_bound(r)) << '\n'
      << "orthoplex cap   " << ocap << '\n';
  if (!ns.empty()) {
    out << std::left << std::setw(6) << "n" << std::setw(16) << "simplex" << std::setw(18)
        << "" << "applicable\n";
    for (int n : ns) {
      const auto q = simplex_bound_sq(r, n);
      out << std::setw(6) << n << std::setw(16) << sqrt_text(q) << std::setw(18)
          << ("= " + fmt(simplex_bound(r, n)))
          << (applicable_bound(f, d, r, n).kind == BoundKind::Simplex ? "simplex" : "orthoplex")
          << '\n';
    }
  }
  return kOk;
}

// ---- optimize ----

struct OptimizeArgs {
  Shape shape;
  OptimizerConfig config;
  std::string out;
};

json config_json(const OptimizerConfig& c) {
  return {{"restarts", c.restarts},     {"max_iters", c.max_iters},
          {"seed", c.seed},             {"beta_start", c.beta_start},
          {"beta_end", c.beta_end},     {"growth", c.growth},
          {"step_size", c.step_size},   {"backtrack", c.backtrack},
          {"grad_tol", c.grad_tol},     {"distance_tol", c.distance_tol}};
}

int cmd_optimize(const OptimizeArgs& a, std::ostream& out, std::ostream& err) {
  const Field f = a.shape.parsed();
  const int d = need(a.shape.d, "--d");
  const int r = need(a.shape.r, "--r");
  const int n = need(a.shape.n, "--n");
  const OptimizeResult res = optimize(f, d, r, n, a.config);
  json meta = json::object();
  meta["provenance"] = "optimize";
  meta["putative"] = true;
  meta["config"] = config_json(a.config);
  meta["best_restart"] = res.best_restart;
  meta["restart_min_distances"] = res.restart_min_distances;
  emit(out, a.out, io::code_to_json(res.code, meta));
  summarize(err, res.report);
  return kOk;
}

// ---- atlas ----

struct AtlasArgs {
  int n = 0;
  int max_n = 0;
  Shape shape;
  std::string out;
};

int emit_code(std::ostream& out, std::ostream& err, const std::string& path,
              const StiefelCode& code, const std::string& provenance) {
  emit(out, path, io::code_to_json(code, json{{"provenance", provenance}}));
  summarize(err, certify(code));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stiefel manifold codes: construct, verify, bound, optimize, atlas"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a code with an exact construction");
  add_shape(construct, ca.shape, false);
  construct->add_option("--method", ca.method, "construction")
      ->required()
      ->check(CLI::IsMember({"sphere", "radon-hurwitz", "regular-rep", "symplectic", "bibd",
                             "orbit", "hadamard", "pad", "kronecker", "realify", "complexify",
                             "orthoplex", "auto"}));
  construct->add_option("--design", ca.design, "design file or builtin:NAME");
  construct->add_option("--seed-code", ca.seed_code, "seed code file");
  construct->add_option("--hr-family", ca.hr_family, "Hurwitz-Radon generator file");
  construct->add_option("--k", ca.k, "Kronecker factor")->check(CLI::PositiveNumber);
  construct->add_option("--out", ca.out, "output file (default stdout)");

  std::string verify_path;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "certify a code file");
  verify->add_option("file", verify_path, "code file")->required();
  verify->add_flag("--json", verify_json, "machine-readable report");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "simplex and orthoplex bounds");
  add_shape(bound, ba.shape, false);
  bound->add_option("--n-range", ba.n_range, "LO:HI");
  bound->add_flag("--json", ba.json, "machine-readable output");

  OptimizeArgs oa;
  auto* opt = app.add_subcommand("optimize", "numerical search for a putative optimum");
  add_shape(opt, oa.shape, true);
  opt->add_option("--seed", oa.config.seed, "master seed")->capture_default_str();
  opt->add_option("--restarts", oa.config.restarts, "restarts")->capture_default_str();
  opt->add_option("--max-iters", oa.config.max_iters, "iterations per restart")->capture_default_str();
  opt->add_option("--beta-start", oa.config.beta_start)->capture_default_str();
  opt->add_option("--beta-end", oa.config.beta_end)->capture_default_str();
  opt->add_option("--beta-growth", oa.config.growth)->capture_default_str();
  opt->add_option("--step-size", oa.config.step_size)->capture_default_str();
  opt->add_option("--backtrack", oa.config.backtrack)->capture_default_str();
  opt->add_option("--grad-tol", oa.config.grad_tol)->capture_default_str();
  opt->add_option("--threads", oa.config.threads, "workers (0 = auto)")->capture_default_str();
  opt->add_option("--out", oa.out, "output file (default stdout)");

  AtlasArgs aa;
  auto* atlas = app.add_subcommand("atlas", "closed-form and best-known codes");
  atlas->require_subcommand(1);
  auto* o2 = atlas->add_subcommand("o2", "optimal code in O(2)");
  o2->add_option("--n", aa.n)->required()->check(CLI::Range(2, 1 << 20));
  o2->add_option("--out", aa.out);
  auto* o2_table = atlas->add_subcommand("o2-table", "k_n table for O(2)");
  o2_table->add_option("--max-n", aa.max_n)->required()->check(CLI::Range(2, 1 << 16));
  auto* circle = atlas->add_subcommand("circle", "regular polygon on the circle");
  circle->add_option("--n", aa.n)->required()->check(CLI::Range(2, 1 << 20));
  circle->add_option("--out", aa.out);
  auto* best = atlas->add_subcommand("best", "best known code");
  add_shape(best, aa.shape, true);
  best->add_option("--out", aa.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*construct) return cmd_construct(ca, out, err);
    if (*verify) return cmd_verify(verify_path, verify_json, out);
    if (*bound) return cmd_bound(ba, out);
    if (*opt) return cmd_optimize(oa, out, err);
    if (*o2) {
      const O2Solution s = o2_solution(aa.n);
      err << "k_n " << s.k_n << "  rotations " << s.a << "  reflections " << s.b << '\n';
      return emit_code(out, err, aa.out, o2_code(aa.n), "o2_code");
    }
    if (*o2_table) {
      out << std::left << std::setw(6) << "n" << std::setw(6) << "k_n" << std::setw(6) << "a"
          << std::setw(6) << "b" << "distance\n";
      for (int n = 2; n <= aa.max_n; ++n) {
        const O2Solution s = o2_solution(n);
        out << std::setw(6) << n << std::setw(6) << s.k_n << std::setw(6) << s.a << std::setw(6)
            << s.b << fmt(s.min_distance) << '\n';
      }
      return kOk;
    }
    if (*circle) return emit_code(out, err, aa.out, circle_code(aa.n), "circle_code");
    if (*best) {
      const Field f = aa.shape.parsed();
      const BestKnown bk = best_known(f, need(aa.shape.d, "--d"), need(aa.shape.r, "--r"),
                                      need(aa.shape.n, "--n"));
      json meta{{"provenance", bk.provenance}, {"putative", bk.putative}};
      emit(out, aa.out, io::code_to_json(bk.code, meta));
      summarize(err, bk.report);
      err << "construction    " << bk.provenance << (bk.putative ? " (putative)" : "") << '\n';
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kBadInput;
}

}  // namespace stiefel::cli
