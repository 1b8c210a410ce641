#include "ultrametric/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ultrametric/certificates.hpp"
#include "ultrametric/errors.hpp"
#include "ultrametric/fixtures.hpp"
#include "ultrametric/json_io.hpp"
#include "ultrametric/polynomials.hpp"
#include "ultrametric/regions.hpp"
#include "ultrametric/sampling.hpp"

namespace ultrametric::cli {

namespace {

using io::json;

constexpr std::uint64_t kDefaultSeed = 20250101;

struct Options {
  std::string input;
  std::string p;
  std::string axis = "rows";
  std::string lambda;
  std::string kind = "brauer";
  std::string format = "json";
  std::size_t iters = 100;
};

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::optional<Valuation> valuation_flag(const Options& opt) {
  if (opt.p.empty()) {
    return std::nullopt;
  }
  if (opt.p == "trivial") {
    return Valuation::trivial();
  }
  std::uint64_t p = 0;
  const auto* end = opt.p.data() + opt.p.size();
  const auto [ptr, ec] = std::from_chars(opt.p.data(), end, p);
  if (ec != std::errc() || ptr != end) {
    throw InputError("invalid --p \"" + opt.p + "\"");
  }
  return Valuation::p_adic(p);
}

Rational lambda_flag(const Options& opt) {
  if (opt.lambda.empty()) {
    throw InputError("--lambda is required for this command");
  }
  return Rational::parse(opt.lambda);
}

Axis axis_flag(const Options& opt) { return parse_axis(opt.axis); }

json membership_json(const RegionUnion& r, const Rational& z) {
  json out = io::to_json(r, r.contains(z));
  out["lambda"] = io::to_json(z);
  out["kind"] = to_string(r.kind());
  out["axis"] = to_string(r.axis());
  return out;
}

// ------------------------------------------------------------- commands

using Handler = std::function<json(const Options&, const json&)>;

json cmd_region(const Options& opt, const json& in, RegionKind kind) {
  const Matrix a = io::matrix_from_json(in, valuation_flag(opt));
  const Axis axis = axis_flag(opt);
  switch (kind) {
    case RegionKind::kGershgorin:
      return io::to_json(gershgorin(a, axis));
    case RegionKind::kBrauer:
      return io::to_json(brauer(a, axis));
    case RegionKind::kTriOval:
      return io::to_json(tri_oval(a, axis));
  }
  return nullptr;
}

json cmd_contains(const Options& opt, const json& in) {
  const Rational z = lambda_flag(opt);
  if (in.is_object() && in.contains("kind")) {
    return membership_json(io::region_from_json(in, valuation_flag(opt)), z);
  }
  const Matrix a = io::matrix_from_json(in, valuation_flag(opt));
  const Axis axis = axis_flag(opt);
  switch (parse_region_kind(opt.kind)) {
    case RegionKind::kGershgorin:
      return membership_json(gershgorin(a, axis), z);
    case RegionKind::kBrauer:
      return membership_json(brauer(a, axis), z);
    case RegionKind::kTriOval:
      return membership_json(tri_oval(a, axis), z);
  }
  return nullptr;
}

json cmd_root_cases(const Options& opt, const json& in) {
  const MonicPoly p = io::poly_from_json(in, valuation_flag(opt));
  const Rational lambda = lambda_flag(opt);
  json out = {{"lambda", io::to_json(lambda)}, {"gershgorin", io::to_json(gershgorin_root_cases(p, lambda))}};
  out["brauer"] = p.degree() >= 2 ? io::to_json(brauer_root_cases(p, lambda)) : json(nullptr);
  const bool reciprocal_defined = !p.coeffs()[0].is_zero() && !lambda.is_zero();
  out["reciprocal"] = reciprocal_defined ? io::to_json(reciprocal_root_cases(p, lambda)) : json(nullptr);
  return out;
}

json cmd_fixture(const Options& opt) {
  const Valuation val = valuation_flag(opt).value_or(Valuation::p_adic(3));
  if (val.is_trivial()) {
    throw InputError("fixture-counterexample needs a prime p");
  }
  const Matrix a = fixtures::counterexample(val);
  const auto spectrum = fixtures::counterexample_spectrum();
  const RegionUnion g = gershgorin(a, Axis::kRows);
  const RegionUnion b = brauer(a, Axis::kRows);
  const RegionUnion t = tri_oval(a, Axis::kRows);

  json probes = json::object();
  bool g_all = true;
  bool b_all = true;
  std::vector<std::string> excluded;
  for (const Rational z : {Rational(0), Rational(1), Rational(2)}) {
    const Membership gm = g.contains(z);
    const Membership bm = b.contains(z);
    const Membership tm = t.contains(z);
    g_all = g_all && gm.member;
    b_all = b_all && bm.member;
    if (!tm.member) {
      excluded.push_back(z.to_string());
    }
    probes[z.to_string()] = {{"gershgorin", io::to_json(g, gm)},
                             {"brauer", io::to_json(b, bm)},
                             {"tri_oval", io::to_json(t, tm)}};
  }
  json spectrum_json = json::array();
  bool spectrum_ok = true;
  const MonicPoly chi = char_poly(a);
  for (const Rational& e : spectrum) {
    spectrum_json.push_back(io::to_json(e));
    spectrum_ok = spectrum_ok && chi.evaluate(e).is_zero();
  }
  json h = json::array();
  for (const AbsExp r : radii(a, Axis::kRows)) {
    h.push_back(io::to_json(r));
  }
  return {{"p", io::to_json(val)},
          {"matrix", io::to_json(a)},
          {"spectrum", std::move(spectrum_json)},
          {"spectrum_verified", spectrum_ok},
          {"row_radii", std::move(h)},
          {"regions", {{"gershgorin", io::to_json(g)}, {"brauer", io::to_json(b)}, {"tri_oval", io::to_json(t)}}},
          {"probes", std::move(probes)},
          {"claims",
           {{"gershgorin_contains_all", g_all},
            {"brauer_contains_all", b_all},
            {"tri_oval_excludes", excluded},
            {"tri_oval_misses_spectrum", !excluded.empty()}}}};
}

// -------------------------------------------------------------- selftest

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  void check(bool ok) {
    ++cases;
    failures += ok ? 0 : 1;
  }
};

std::uint64_t seed_from_env() {
  const char* env = std::getenv("ULTRAMETRIC_SEED");
  if (env == nullptr || *env == '\0') {
    return kDefaultSeed;
  }
  const std::string_view s(env);
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("invalid ULTRAMETRIC_SEED \"" + std::string(s) + "\"");
  }
  return seed;
}

json cmd_selftest(const Options& opt, bool& passed) {
  const std::uint64_t seed = seed_from_env();
  Rng rng(seed);
  const std::array<std::uint64_t, 3> primes{2, 3, 5};
  std::map<std::string, Tally> tallies;
  std::uniform_int_distribution<std::size_t> dim(2, 6);
  std::uniform_int_distribution<std::size_t> deg(1, 8);
  std::uniform_int_distribution<std::size_t> prime_index(0, primes.size() - 1);

  for (std::size_t it = 0; it < opt.iters; ++it) {
    const Valuation val = Valuation::p_adic(primes[prime_index(rng)]);
    const std::size_t n = dim(rng);

    const PlantedMatrix pm = planted_spectrum(rng, n, val, {-3, 3});
    for (const Axis ax : {Axis::kRows, Axis::kColumns}) {
      const RegionUnion g = gershgorin(pm.a, ax);
      const RegionUnion b = brauer(pm.a, ax);
      for (const Rational& e : pm.eigenvalues) {
        tallies["inclusion"].check(g.contains(e).member && b.contains(e).member);
      }
    }
    for (const Rational& e : pm.eigenvalues) {
      tallies["frobenius"].check(val.abs(e) <= spectral_abs_bound(pm.a));
    }
    tallies["frobenius"].check(det_abs_bound(pm.a).holds);

    const Matrix a = random_matrix(rng, n, val, {-3, 3});
    const Rational z = a(0, 0) + random_entry(rng, val, {-3, 3}, 0.2);
    for (const Axis ax : {Axis::kRows, Axis::kColumns}) {
      tallies["containment"].check(!brauer(a, ax).contains(z).member || gershgorin(a, ax).contains(z).member);
      tallies["equivalence"].check(all_hold(check_ostrowski(a, ax)) == !brauer(a, ax).contains(0).member);
      tallies["equivalence"].check(all_hold(check_dominance(a, ax)) == !gershgorin(a, ax).contains(0).member);
    }
    const Certificate cert = certify(a);
    tallies["soundness"].check(cert.verdict == Verdict::kInconclusive || !det(a).is_zero());
    tallies["soundness"].check(certify(singular_matrix(rng, n, val, {-3, 3})).verdict == Verdict::kInconclusive);

    const MonicPoly p = random_poly(rng, deg(rng), val, {-4, 4});
    const PolygonBoundReport br = verify_bounds_via_polygon(p);
    tallies["poly_bounds"].check(br.upper_ok && br.lower_ok.value_or(true));

    const PlantedPoly pp = random_factorable(rng, deg(rng), val, {-3, 3});
    for (const Rational& root : pp.roots) {
      bool ok = gershgorin_root_cases(pp.poly, root).all_theorems_satisfied();
      if (pp.poly.degree() >= 2) {
        ok = ok && brauer_root_cases(pp.poly, root).all_theorems_satisfied();
      }
      if (!root.is_zero() && !pp.poly.coeffs()[0].is_zero()) {
        ok = ok && reciprocal_root_cases(pp.poly, root).all_theorems_satisfied();
      }
      tallies["disjunctions"].check(ok);
    }
  }

  json checks = json::object();
  passed = true;
  for (const auto& [name, t] : tallies) {
    checks[name] = {{"cases", t.cases}, {"failures", t.failures}};
    passed = passed && t.failures == 0;
  }
  return {{"seed", seed}, {"iters", opt.iters}, {"checks", std::move(checks)}, {"passed", passed}};
}

const std::map<std::string, Handler>& input_commands() {
  static const std::map<std::string, Handler> table = {
      {"gershgorin", [](const Options& o, const json& in) { return cmd_region(o, in, RegionKind::kGershgorin); }},
      {"brauer", [](const Options& o, const json& in) { return cmd_region(o, in, RegionKind::kBrauer); }},
      {"tri-oval", [](const Options& o, const json& in) { return cmd_region(o, in, RegionKind::kTriOval); }},
      {"contains", cmd_contains},
      {"certify",
       [](const Options& o, const json& in) { return io::to_json(certify(io::matrix_from_json(in, valuation_flag(o)))); }},
      {"spectral-bound",
       [](const Options& o, const json& in) {
         return json{{"bound", io::to_json(spectral_abs_bound(io::matrix_from_json(in, valuation_flag(o))))}};
       }},
      {"det-bound",
       [](const Options& o, const json& in) {
         const Matrix a = io::matrix_from_json(in, valuation_flag(o));
         return io::to_json(det_abs_bound(a), det(a));
       }},
      {"char-poly",
       [](const Options& o, const json& in) { return io::to_json(char_poly(io::matrix_from_json(in, valuation_flag(o)))); }},
      {"companion",
       [](const Options& o, const json& in) { return io::to_json(companion(io::poly_from_json(in, valuation_flag(o)))); }},
      {"reciprocal",
       [](const Options& o, const json& in) { return io::to_json(reciprocal(io::poly_from_json(in, valuation_flag(o)))); }},
      {"poly-bounds",
       [](const Options& o, const json& in) {
         const MonicPoly p = io::poly_from_json(in, valuation_flag(o));
         const bool has_lower = !p.coeffs()[0].is_zero();
         return json{{"upper", io::to_json(root_upper_bound(p))},
                     {"lower", has_lower ? io::to_json(root_lower_bound(p)) : json(nullptr)}};
       }},
      {"root-cases", cmd_root_cases},
      {"newton",
       [](const Options& o, const json& in) { return io::to_json(newton_polygon(io::poly_from_json(in, valuation_flag(o)))); }},
      {"verify-poly",
       [](const Options& o, const json& in) {
         return io::to_json(verify_bounds_via_polygon(io::poly_from_json(in, valuation_flag(o))));
       }},
  };
  return table;
}

std::string read_input(const Options& opt, std::istream& in) {
  if (!opt.input.empty()) {
    std::ifstream file(opt.input, std::ios::binary);
    if (!file) {
      throw InputError("cannot open input file \"" + opt.input + "\"");
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

json error_report(const std::string& command, const std::string& digest, const char* kind, const std::string& msg) {
  return {{"command", command},
          {"input_digest", digest},
          {"result", nullptr},
          {"status", "error"},
          {"error", {{"kind", kind}, {"message", msg}}}};
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out) {
  CLI::App app{"Exact p-adic eigenvalue regions, nonsingularity certificates and root bounds"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Read JSON input from FILE instead of stdin");
    sub->add_option("--p", opt.p, "Prime p (or \"trivial\"); overrides the input's \"p\"");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json"}));
  };

  std::vector<std::string> names;
  for (const auto& [name, handler] : input_commands()) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    sub->add_option("--axis", opt.axis, "rows or columns");
    if (name == "contains" || name == "root-cases") {
      sub->add_option("--lambda", opt.lambda, "Point / root as a rational");
    }
    if (name == "contains") {
      sub->add_option("--kind", opt.kind, "gershgorin, brauer or tri-oval (matrix input)");
    }
  }
  add_common(app.add_subcommand("fixture-counterexample"));
  CLI::App* selftest = app.add_subcommand("selftest");
  selftest->add_option("--iters", opt.iters, "Randomised iterations (seed from ULTRAMETRIC_SEED)");

  std::string command = argv.size() > 1 ? argv[1] : "";
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    if (!reversed.empty()) {
      reversed.pop_back();
    }
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit(out, error_report(command, sha256_hex(""), "input", e.what()));
    return kInputError;
  }
  command = app.get_subcommands().front()->get_name();

  std::string digest = sha256_hex("");
  try {
    json result;
    bool passed = true;
    if (command == "selftest") {
      result = cmd_selftest(opt, passed);
    } else if (command == "fixture-counterexample") {
      const std::string bytes = opt.input.empty() ? std::string() : read_input(opt, in);
      digest = sha256_hex(bytes);
      result = cmd_fixture(opt);
    } else {
      const std::string bytes = read_input(opt, in);
      digest = sha256_hex(bytes);
      json input;
      try {
        input = json::parse(bytes);
      } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
      }
      result = input_commands().at(command)(opt, input);
    }
    json report = {{"command", command}, {"input_digest", digest}, {"result", std::move(result)}, {"status", "ok"}};
    if (!passed) {
      report["status"] = "error";
      report["error"] = {{"kind", "selftest"}, {"message", "property check failures"}};
    }
    emit(out, report);
    return passed ? kOk : kSelftestFailure;
  } catch (const PreconditionError& e) {
    emit(out, error_report(command, digest, "precondition", e.what()));
    return kPreconditionError;
  } catch (const std::exception& e) {
    emit(out, error_report(command, digest, "input", e.what()));
    return kInputError;
  }
}

}  // namespace ultrametric::cli
