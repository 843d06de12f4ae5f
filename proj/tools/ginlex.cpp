// Command-line front end. See README.md for the file format and subcommands.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ginlex.hpp"

using namespace ginlex;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string file;
  std::string field;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> seed2;
  std::uint64_t bound = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

/// --field, then GINLEX_FIELD, then the file's own declaration.
FieldSpec choose_field(const Common& c, const FieldSpec& declared) {
  if (!c.field.empty()) return parse_field_spec(c.field);
  if (auto e = env("GINLEX_FIELD")) return parse_field_spec(*e);
  return declared;
}

/// --seed, then GINLEX_SEED, then 1; the second seed defaults to the first plus one.
GinOptions gin_options(const Common& c) {
  GinOptions o;
  if (c.seed) {
    o.seed1 = *c.seed;
  } else if (auto e = env("GINLEX_SEED")) {
    try {
      o.seed1 = std::stoull(*e);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "GINLEX_SEED must be a natural number");
    }
  }
  o.seed2 = c.seed2 ? *c.seed2 : o.seed1 + 1;
  o.bound = c.bound;
  return o;
}

std::vector<std::string> sorted_strings(const MonomialIdeal& ideal) {
  auto out = ideal.to_strings();
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

template <CoefficientField F>
void print_ideal_file(std::ostream& out, const Ideal<F>& ideal, const FieldSpec& spec) {
  out << "ring";
  for (const auto& n : ideal.ring().names) out << ' ' << n;
  out << "\nfield " << spec.to_string() << "\norder glex\nideal\n";
  for (const auto& g : ideal.generators()) out << g.to_string() << '\n';
  out << "end\n";
}

// Subcommands, instantiated per field.

template <CoefficientField F>
int cmd_gb(const Ideal<F>& ideal, const std::string& order_name) {
  auto gb = buchberger(ideal, parse_order(order_name));
  for (const auto& g : gb.basis) std::cout << g.to_string() << '\n';
  return 0;
}

template <CoefficientField F>
int cmd_gin(const Ideal<F>& ideal, const GinOptions& options) {
  auto result = gin(ideal, TermOrder::GradedLex, options);
  for (const auto& m : sorted_strings(result.ideal)) std::cout << m << '\n';
  std::cout << "M " << result.ideal.max_degree().value_or(0) << '\n';
  return 0;
}

template <CoefficientField F>
int cmd_pei(const Ideal<F>& ideal, Exponent level, bool generic, const GinOptions& options) {
  Ideal<F> k(ideal.ring_ptr());
  if (generic) {
    auto frame = gin(ideal, TermOrder::GradedLex, options);
    k = partial_elim_generic(frame.frame.basis, level, options.limits);
  } else {
    k = partial_elim_general(ideal, level, options.limits);
  }
  auto gb = buchberger(k, TermOrder::GradedLex, options.limits);
  for (const auto& g : gb.basis) std::cout << g.to_string() << '\n';
  auto data = hilbert_polynomial(MonomialIdeal(k.nvars(), gb.leading_monomials()));
  std::cout << "degree " << data.projective_degree() << '\n';
  return 0;
}

template <CoefficientField F>
int cmd_hilbert(const Ideal<F>& ideal, Exponent upto, bool oracle) {
  auto gb = buchberger(ideal, TermOrder::GradedRevLex);
  MonomialIdeal initial(ideal.nvars(), gb.leading_monomials());
  std::vector<std::uint64_t> row;
  for (Exponent m = 0; m <= upto; ++m) row.push_back(hilbert_function(initial, m));
  std::cout << join(row) << '\n';
  if (oracle) {
    row.clear();
    for (Exponent m = 0; m <= upto; ++m) row.push_back(hilbert_value_oracle(ideal, m));
    std::cout << join(row) << '\n';
  }
  return 0;
}

template <CoefficientField F>
int cmd_report(const Ideal<F>& ideal, const std::vector<std::string>& points, bool as_json, const GinOptions& options) {
  const F& field = ideal.ring().field;
  std::vector<Point<F>> parsed;
  for (const auto& p : points) parsed.push_back(parse_point(field, p));
  ReportOptions ro;
  ro.gin = options;
  auto r = curve_report(ideal, parsed, ro);
  std::vector<std::size_t> dims;
  for (const auto& t : r.tangent_checks) dims.push_back(t.dimension);
  if (as_json) {
    json j;
    j["degree"] = r.invariants.degree;
    j["genus"] = r.invariants.genus;
    j["M"] = r.M_actual;
    j["predicted_M"] = r.M_predicted;
    j["gin"] = sorted_strings(r.gin);
    j["k1_degree"] = r.k1_degree;
    j["k1_degree_formula"] = r.k1_degree_formula;
    j["witnesses"] = {{"power_witness", r.power_witness}, {"mixed_witness", r.mixed_witness}};
    j["tangent_dims"] = dims;
    j["verdict"] = r.verdict;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "ambient " << r.input_ambient;
  if (r.ambient != r.input_ambient) std::cout << " (analyzed in P^" << r.ambient << ")";
  std::cout << "\ndegree " << r.invariants.degree << "\ngenus " << r.invariants.genus << "\nM " << r.M_actual
            << "\nM_ladder " << r.M_ladder << "\npredicted_M " << r.M_predicted << "\nk1_degree " << r.k1_degree
            << "\nk1_degree_formula " << r.k1_degree_formula << '\n';
  if (r.k1_saturated) std::cout << "k1_saturated " << (*r.k1_saturated ? "yes" : "no") << '\n';
  std::cout << "power_witness " << (r.power_witness ? "yes" : "no") << "\nmixed_witness "
            << (r.mixed_witness ? "yes" : "no") << '\n';
  for (const auto& t : r.tangent_checks) std::cout << "tangent_dim " << t.point << ' ' << t.dimension << '\n';
  std::cout << "gin";
  for (const auto& m : sorted_strings(r.gin)) std::cout << ' ' << m;
  std::cout << "\nverdict " << r.verdict << '\n';
  return 0;
}

template <CoefficientField F>
int cmd_rnc(const F& field, const FieldSpec& spec, std::size_t r, const std::vector<std::string>& secants,
            bool to_space, std::uint64_t seed) {
  std::vector<SecantSpec<F>> centers;
  auto param = [&](const std::string& s) -> std::optional<typename F::Elem> {
    if (s == "inf") return std::nullopt;
    return parse_point(field, s).at(0);
  };
  for (const auto& spec_text : secants) {
    std::vector<std::string> parts;
    std::stringstream ss(spec_text);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 3) throw Error(ErrorKind::Parse, "--project-secant expects s1,s2,t");
    centers.push_back({param(parts[0]), param(parts[1]), parse_point(field, parts[2]).at(0)});
  }
  auto ideal = project_rnc(field, r, centers);
  if (to_space) ideal = project_to_space(ideal, seed);
  print_ideal_file(std::cout, ideal, spec);
  return 0;
}

template <CoefficientField F>
int dispatch_file(CLI::App& app, const F& field, const IdealFile& file, const Common& c, const std::string& order,
                  Exponent level, bool generic, Exponent upto, bool oracle, const std::vector<std::string>& points,
                  bool as_json) {
  auto ideal = build_ideal(file, field);
  auto options = gin_options(c);
  if (app.got_subcommand("gb")) return cmd_gb(ideal, order.empty() ? to_string(file.order) : order);
  if (app.got_subcommand("gin")) return cmd_gin(ideal, options);
  if (app.got_subcommand("pei")) return cmd_pei(ideal, level, generic, options);
  if (app.got_subcommand("hilbert")) return cmd_hilbert(ideal, upto, oracle);
  return cmd_report(ideal, points, as_json, options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic initial ideals, partial elimination ideals and regularity of curves"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", c.file, "ideal file")->required();
    sub->add_option("--field", c.field, "'gf <prime>' or 'qq'; overrides the file");
    sub->add_option("--seed", c.seed, "first gin seed");
    sub->add_option("--seed2", c.seed2, "second gin seed");
    sub->add_option("--bound", c.bound, "entry bound of the random changes (0 = field default)");
  };

  std::string order;
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(gb, true);
  gb->add_option("--order", order, "glex or grevlex (default: the file's order)");

  auto* gin_cmd = app.add_subcommand("gin", "generic initial ideal for glex");
  add_common(gin_cmd, true);

  Exponent level = 0;
  bool generic = false;
  auto* pei = app.add_subcommand("pei", "partial elimination ideal K_i");
  add_common(pei, true);
  pei->add_option("--level", level, "i")->required();
  pei->add_flag("--generic", generic, "use the d0 = i slice in the accepted gin frame");

  Exponent upto = 0;
  bool oracle = false;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function values H(0..m)");
  add_common(hilbert, true);
  hilbert->add_option("--upto", upto, "m")->required();
  hilbert->add_flag("--oracle", oracle, "also print the values from the rank oracle");

  std::vector<std::string> points;
  bool as_json = false;
  auto* report = app.add_subcommand("report", "curve report");
  add_common(report, true);
  report->add_option("--tangent-point", points, "comma-separated coordinates")->take_all();
  report->add_flag("--json", as_json, "JSON output");

  std::size_t dim = 3;
  std::vector<std::string> secants;
  bool to_space = false;
  auto* rnc = app.add_subcommand("rnc", "rational normal curve, optionally projected");
  add_common(rnc, false);
  rnc->add_option("--dim", dim, "r")->required()->check(CLI::Range(2, static_cast<int>(kMaxVariables) - 1));
  rnc->add_option("--project-secant", secants, "s1,s2,t: center p(s1) + t p(s2); s may be 'inf'")->take_all();
  rnc->add_flag("--to-space", to_space, "then project from random centers down to P^3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("rnc")) {
      FieldSpec spec = choose_field(c, FieldSpec{});
      auto seed = gin_options(c).seed1;
      if (spec.rational) return cmd_rnc(RationalField(), spec, dim, secants, to_space, seed);
      return cmd_rnc(PrimeField(spec.prime), spec, dim, secants, to_space, seed);
    }
    auto file = parse_ideal_file(read_file(c.file));
    FieldSpec spec = choose_field(c, file.field);
    if (spec.rational) {
      return dispatch_file(app, RationalField(), file, c, order, level, generic, upto, oracle, points, as_json);
    }
    return dispatch_file(app, PrimeField(spec.prime), file, c, order, level, generic, upto, oracle, points, as_json);
  } catch (const Error& e) {
    std::cerr << "ginlex: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ginlex: " << e.what() << '\n';
    return 1;
  }
}
