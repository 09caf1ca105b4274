#include "sympl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

#include "sympl/error.hpp"
#include "sympl/json.hpp"

namespace sympl {
namespace {

// A malformed flag value; exit code 2, message names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  Json result;
  std::string table;
};

template <typename F>
auto from_flag(std::string_view flag, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const Error& e) {
    if (e.code() == Errc::Parse) throw UsageError(std::string(flag) + ": " + e.what());
    throw;
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string set_text(const std::vector<std::int64_t>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + "}";
}

std::string row_text(std::span<const Rational> row) {
  std::string out;
  for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + to_string(row[k]);
  return out;
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Shared flag storage; each subcommand binds the subset it uses.
struct Flags {
  std::string weight;
  std::string other;
  std::string inner;
  std::string satake;
  std::string character;
  std::string at;
  std::string shift = "0";
  std::string file;
  std::string matrix;
  std::string h;
  std::string poly;
  std::string bounds;
  std::string primes;
  std::size_t n = 0;
  std::size_t d = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  std::int64_t upper = -1;
  std::uint64_t level = 0;
};

Weight weight_flag(const Flags& f) {
  return from_flag("--weight", [&] { return Weight::parse(f.weight); });
}

RationalVector single_row(const Flags& f) {
  const Weight w = weight_flag(f);
  if (w.places() != 1) throw UsageError("--weight: this command takes a single place");
  const auto row = w.row(0);
  return {row.begin(), row.end()};
}

SatakeDatum satake_flags(const Flags& f, const CLI::App& sub) {
  SatakeDatum s;
  if (sub.count("--satake") > 0) {
    std::stringstream in(f.satake);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item == "*" || item == "b") {
        s.params.emplace_back(std::nullopt);
      } else {
        s.params.emplace_back(from_flag("--satake", [&] { return parse_rational(item); }));
      }
    }
    if (sub.count("--m") > 0 && s.params.size() != f.m) {
      throw UsageError("--satake: expected " + std::to_string(f.m) + " parameters to match --m");
    }
  } else {
    s = SatakeDatum::symbolic(f.m);
  }
  if (sub.count("--char") > 0) {
    if (f.character == "1" || f.character == "+1") {
      s.character = 1;
    } else if (f.character == "-1") {
      s.character = -1;
    } else {
      throw UsageError("--char: expected +1 or -1");
    }
  }
  return s;
}

std::optional<int> sign_flag(const Flags& f, const CLI::App& sub) {
  if (sub.count("--char") == 0) return std::nullopt;
  if (f.character == "1" || f.character == "+1") return 1;
  if (f.character == "-1") return -1;
  throw UsageError("--char: expected +1 or -1");
}

std::map<std::string, Rational> assignment_flag(const std::string& text) {
  std::map<std::string, Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--at: expected name=value pairs, got '" + item + "'");
    out[item.substr(0, eq)] = from_flag("--at", [&] { return parse_rational(item.substr(eq + 1)); });
  }
  return out;
}

DegreeBounds bounds_flags(const Flags& f, const CLI::App& sub) {
  if (f.n < 1) throw UsageError("--n: must be positive");
  if (sub.count("--bounds") > 0) {
    DegreeBounds b{f.n, {}};
    std::stringstream in(f.bounds);
    std::string place;
    while (std::getline(in, place, ';')) {
      std::vector<std::uint32_t> row;
      for (const auto& x : from_flag("--bounds", [&] { return parse_rational_list(place); })) {
        if (!is_integer(x) || x < 1) throw UsageError("--bounds: entries must be positive integers");
        row.push_back(static_cast<std::uint32_t>(x.get_num().get_ui()));
      }
      if (row.size() != f.n * (f.n + 1) / 2) {
        throw UsageError("--bounds: each place needs " + std::to_string(f.n * (f.n + 1) / 2) + " entries");
      }
      b.per_place.push_back(std::move(row));
    }
    return b;
  }
  if (sub.count("--t") == 0) throw UsageError("--t: give --t or --bounds");
  if (f.t < 1) throw UsageError("--t: must be positive");
  if (f.d < 1) throw UsageError("--d: must be positive");
  return DegreeBounds::uniform(f.n, f.d, static_cast<std::uint32_t>(f.t));
}

FourierExpansion expansion_flag(const Flags& f) {
  const std::string text = read_file("--file", f.file);
  return from_flag("--file", [&] { return FourierExpansion::parse(text); });
}

std::string grid_table(const PdGrid& g) {
  std::ostringstream t;
  t << "n: " << g.n << "\nd: " << g.d << "\ndiagonal offsets:";
  for (auto o : g.diagonal_offsets) t << " " << o;
  t << "\npoints: " << g.points.size() << "\n";
  for (const auto& dev : g.deviations) {
    t << "deviation: place " << dev.place + 1 << " literal offset " << dev.literal_offset << " admits non-PD point "
      << dev.witness.to_string() << "; applied offset " << dev.applied_offset << "\n";
  }
  return t.str();
}

using Handler = std::function<Output(const Flags&, const CLI::App&)>;

Output cmd_orbit(const Flags& f, const CLI::App&) {
  const Weight w = weight_flag(f);
  const auto group = enumerate_weyl(w.rank(), orbit_cap_from_env());
  Json orbits = Json::array();
  std::ostringstream t;
  for (std::size_t v = 0; v < w.places(); ++v) {
    std::vector<RationalVector> orbit;
    for (const auto& g : group) orbit.push_back(dot_act(g, w.row(v)));
    std::sort(orbit.begin(), orbit.end(), std::greater<>());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    t << "place " << v + 1 << ": " << orbit.size() << " elements\n";
    for (const auto& o : orbit) t << "  " << to_string(o) << "\n";
    orbits.push_back(orbit);
  }
  const bool regular = is_regular(w);
  t << "regular: " << yes_no(regular) << "\n";
  return {Json{{"orbits", orbits}, {"regular", regular}}, t.str()};
}

Output cmd_infchar(const Flags& f, const CLI::App& sub) {
  const Weight w = weight_flag(f);
  const InfChar c = infchar_canonical(w);
  std::ostringstream t;
  for (std::size_t v = 0; v < c.d; ++v) t << "place " << v + 1 << ": " << to_string(c.canonical[v]) << "\n";
  const bool regular = is_regular(w);
  t << "regular: " << yes_no(regular) << "\n";
  Json equal = nullptr;
  if (sub.count("--other") > 0) {
    const Weight other = from_flag("--other", [&] { return Weight::parse(f.other); });
    equal = infchar_equal(w, other);
    t << "equal: " << yes_no(equal.get<bool>()) << "\n";
  }
  return {Json{{"infchar", c}, {"regular", regular}, {"equal", equal}}, t.str()};
}

Output cmd_dominant(const Flags& f, const CLI::App& sub) {
  const Weight w = weight_flag(f);
  const std::size_t cap = orbit_cap_from_env();
  const auto elements = sub.count("--i") > 0 ? theorem_main_necessary(w, f.i, cap) : dominant_orbit_elements(w, cap);
  std::ostringstream t;
  for (const auto& e : elements) t << e.to_string() << "\n";
  t << "count: " << elements.size() << "\n";
  return {Json{{"elements", elements}}, t.str()};
}

Output cmd_suffreg(const Flags& f, const CLI::App&) {
  const Weight w = weight_flag(f);
  const bool ok = is_sufficiently_regular(w, f.i, orbit_cap_from_env());
  return {Json{{"sufficiently_regular", ok}}, "sufficiently regular: " + yes_no(ok) + "\n"};
}

Output cmd_embed(const Flags& f, const CLI::App& sub) {
  if (sub.count("--weight") > 0) {
    const InductionDatum datum = klingen_embedding_datum(single_row(f), f.i);
    std::ostringstream t;
    t << "n: " << datum.n << "\ni: " << datum.i << "\ncharacter: " << datum.character.to_string()
      << "\ninner weight: " << to_string(datum.inner_weight) << "\n";
    return {Json{{"datum", datum}}, t.str()};
  }
  if (sub.count("--n") == 0 || sub.count("--char") == 0) throw UsageError("--weight: give --weight, or --n with --char");
  const auto parts = from_flag("--char", [&] { return parse_rational_list(f.character); });
  if (parts.size() != 2 || !is_integer(parts[0])) throw UsageError("--char: expected 'parity,exponent'");
  const CharacterDatum mu(static_cast<int>(to_int64(parts[0])), parts[1]);
  const auto inner = from_flag("--inner", [&] { return parse_rational_list(f.inner); });
  const auto lambda = klingen_embedding_inverse(f.n, f.i, mu, inner);
  Json result = lambda ? Json(*lambda) : Json(nullptr);
  return {Json{{"weight", result}}, "weight: " + (lambda ? row_text(*lambda) : std::string("none")) + "\n"};
}

Output cmd_principal(const Flags& f, const CLI::App&) {
  const auto data = principal_series_datum(single_row(f));
  std::ostringstream t;
  for (std::size_t k = 0; k < data.size(); ++k) t << k + 1 << ": " << data[k].to_string() << "\n";
  return {Json{{"characters", data}}, t.str()};
}

Output cmd_degenerate(const Flags& f, const CLI::App&) {
  const CharacterDatum c = siegel_degenerate_datum(single_row(f));
  return {Json{{"character", c}}, "character: " + c.to_string() + "\n"};
}

Output cmd_reduction_point(const Flags& f, const CLI::App&) {
  const Rational r = first_reduction_point(single_row(f));
  return {Json{{"value", r}}, to_string(r) + "\n"};
}

Output cmd_unitary(const Flags& f, const CLI::App&) {
  const auto row = single_row(f);
  const EhwProfile p = ehw_normalize(row);
  const bool unitary = is_unitary_highest_weight(row);
  std::ostringstream t;
  t << "base: " << to_string(p.base) << "\np: " << p.p << "\nq: " << p.q << "\nr: " << to_string(p.r)
    << "\nunitary: " << yes_no(unitary) << "\n";
  return {Json{{"profile", p}, {"unitary", unitary}}, t.str()};
}

Output cmd_classify_levels(const Flags& f, const CLI::App& sub) {
  const auto inner = from_flag("--inner", [&] { return parse_rational_list(f.inner); });
  const OrbitClassification c = sub.count("--upper") > 0 ? classify_levels_up_to(inner, f.n, f.i, f.upper)
                                                         : classify_levels(inner, f.n, f.i);
  std::ostringstream t;
  t << "n: " << c.n << "\ni: " << c.i << "\nX: " << set_text(c.x) << "\nY: " << set_text(c.y) << "\nclasses: {";
  for (std::size_t k = 0; k < c.classes.size(); ++k) t << (k ? "," : "") << set_text(c.classes[k]);
  t << "}\nbijective: " << yes_no(c.bijective) << "\n";
  return {Json(c), t.str()};
}

Output cmd_report(const Flags& f, const CLI::App& sub) {
  const DecompositionReport r = decomposition_report(weight_flag(f), f.i, sign_flag(f, sub), orbit_cap_from_env());
  std::ostringstream t;
  t << "weight: " << r.weight.to_string() << "\ni: " << r.i << "\n";
  for (const auto& h : r.hypotheses) t << "hypothesis " << h.name << ": " << (h.passed ? "passed" : "failed") << "\n";
  if (r.parity_class) t << "parity class: " << (*r.parity_class > 0 ? "+1" : "-1") << "\n";
  if (r.exponent) t << "exponent: " << to_string(*r.exponent) << "\n";
  for (std::size_t v = 0; v < r.inner_weights.size(); ++v) {
    t << "inner weight " << v + 1 << ": " << to_string(r.inner_weights[v]) << "\n";
  }
  for (const auto& a : r.assumptions) t << "assumption: " << a << "\n";
  t << "conclusion: " << to_string(r.conclusion) << "\n";
  return {Json(r), t.str()};
}

Output cmd_surjectivity(const Flags& f, const CLI::App& sub) {
  const Weight w = weight_flag(f);
  SurjectivityVerdict v;
  if (sub.count("--primes") > 0) {
    std::vector<std::uint64_t> primes;
    for (const auto& p : from_flag("--primes", [&] { return parse_rational_list(f.primes); })) {
      if (!is_integer(p) || p < 1) throw UsageError("--primes: entries must be positive integers");
      primes.push_back(static_cast<std::uint64_t>(to_int64(p)));
    }
    v = siegel_surjectivity_check(w, primes);
  } else {
    if (sub.count("--level") == 0 || f.level == 0) throw UsageError("--level: a positive level is required");
    v = siegel_surjectivity_check(w, f.level);
  }
  std::string t = "verdict: " + std::string(to_string(v.tag)) + "\n";
  for (const auto& c : v.failed_conditions) t += "failed: " + c + "\n";
  return {Json(v), t};
}

Output cmd_xi(const Flags& f, const CLI::App& sub) {
  const Rational shift = from_flag("--shift", [&] { return parse_rational(f.shift); });
  const RationalFunction r = xi(f.i, satake_flags(f, sub), shift);
  return {Json{{"function", r}}, r.to_string() + "\n"};
}

Output cmd_gk(const Flags& f, const CLI::App& sub) {
  const RationalFunction r = gk_value(f.i, f.j, satake_flags(f, sub));
  return {Json{{"function", r}}, r.to_string() + "\n"};
}

Output cmd_eval(const Flags& f, const CLI::App& sub) {
  const SatakeDatum s = satake_flags(f, sub);
  const RationalFunction r = sub.count("--j") > 0 ? gk_value(f.i, f.j, s) : xi(f.i, s);
  const Rational value = evaluate(r, assignment_flag(f.at));
  return {Json{{"function", r}, {"value", value}}, "function: " + r.to_string() + "\nvalue: " + to_string(value) + "\n"};
}

Output cmd_fourier(const Flags& f, const CLI::App& sub) {
  std::ostringstream t;
  if (sub.count("--sym") > 0) {
    const SymMatrix h = from_flag("--sym", [&] { return SymMatrix(Matrix::parse(f.h)); });
    Json result{{"h", h}, {"rank", h.rank()}, {"psd", is_psd(h)}, {"pd", is_pd(h)}};
    t << "h: " << h.to_string() << "\nrank: " << h.rank() << "\npsd: " << yes_no(is_psd(h))
      << "\npd: " << yes_no(is_pd(h)) << "\n";
    result["in_sym_j"] = nullptr;
    result["transformed"] = nullptr;
    if (sub.count("--j") > 0) {
      result["in_sym_j"] = in_sym_j(h, f.j);
      t << "in Sym^(" << f.j << "): " << yes_no(result["in_sym_j"].get<bool>()) << "\n";
    }
    if (sub.count("--a") > 0) {
      const Matrix a = from_flag("--a", [&] { return Matrix::parse(f.matrix); });
      const SymMatrix g = gl_transform(h, a);
      result["transformed"] = g;
      t << "transformed: " << g.to_string() << "\n";
    }
    return {result, t.str()};
  }
  if (sub.count("--file") == 0) throw UsageError("--file: give --file or --sym");
  const FourierExpansion e = expansion_flag(f);
  Json result{{"expansion", e},
              {"cusp_condition", cusp_condition_check(e)},
              {"cuspidal", is_cuspidal(e)},
              {"filtration_index", filtration_index(e)},
              {"rigidity", nullptr},
              {"slash_invariant", nullptr}};
  t << "n: " << e.size() << "\nk: " << e.weight() << "\nsupport: " << e.support().size()
    << "\ncusp condition: " << yes_no(cusp_condition_check(e)) << "\ncuspidal: " << yes_no(is_cuspidal(e))
    << "\nfiltration index: " << filtration_index(e) << "\n";
  if (sub.count("--weight") > 0) {
    if (sub.count("--j") == 0) throw UsageError("--j: rigidity needs --j");
    const bool ok = rigidity_check(weight_flag(f), e, f.j);
    result["rigidity"] = ok;
    t << "rigidity: " << yes_no(ok) << "\n";
  }
  if (sub.count("--a") > 0) {
    const bool ok = slash_invariance_check(e, from_flag("--a", [&] { return Matrix::parse(f.matrix); }));
    result["slash_invariant"] = ok;
    t << "slash invariant: " << yes_no(ok) << "\n";
  }
  return {result, t.str()};
}

Output cmd_phi(const Flags& f, const CLI::App&) {
  const FourierExpansion e = siegel_phi(expansion_flag(f));
  return {Json{{"expansion", e}}, e.serialize()};
}

Output cmd_grid(const Flags& f, const CLI::App& sub) {
  const PdGrid g = build_pd_grid(f.n, bounds_flags(f, sub));
  return {Json(g), grid_table(g)};
}

Output cmd_pit(const Flags& f, const CLI::App& sub) {
  const PdGrid g = build_pd_grid(f.n, bounds_flags(f, sub));
  const LaurentPoly p = from_flag("--poly", [&] { return parse_poly(f.poly); });
  const bool vanishes = pit_vanishes(p, g);
  Json result{{"vanishes", vanishes}, {"points", g.points.size()}, {"deviations", g.deviations}};
  return {result, "vanishes: " + yes_no(vanishes) + "\n" + grid_table(g)};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight, orbit, L-factor and Fourier-expansion computations for Sp(2n)", "sympl"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of a table");

  Flags f;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto command = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto weight_opt = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--weight", f.weight, "Weight, e.g. 5,3;5,4");
    if (required) o->required();
  };

  auto* orbit = command("orbit", "Dot orbit of the weight at each place", cmd_orbit);
  weight_opt(orbit);

  auto* infchar = command("infchar", "Canonical infinitesimal character", cmd_infchar);
  weight_opt(infchar);
  infchar->add_option("--other", f.other, "Second weight to compare with");

  auto* dominant = command("dominant", "k-dominant weights with the same infinitesimal character", cmd_dominant);
  weight_opt(dominant);
  dominant->add_option("--i", f.i, "Keep elements with constant bottom i entries");

  auto* suffreg = command("suffreg", "Sufficient regularity relative to i", cmd_suffreg);
  weight_opt(suffreg);
  suffreg->add_option("--i", f.i)->required();

  auto* embed = command("embed", "Klingen induction datum, or its inverse with --n/--char/--inner", cmd_embed);
  weight_opt(embed, false);
  embed->add_option("--i", f.i)->required();
  embed->add_option("--n", f.n);
  embed->add_option("--char", f.character, "parity,exponent");
  embed->add_option("--inner", f.inner);

  auto* principal = command("principal", "Principal series datum", cmd_principal);
  weight_opt(principal);

  auto* degenerate = command("degenerate", "Siegel degenerate principal series datum", cmd_degenerate);
  weight_opt(degenerate);

  auto* reduction = command("reduction-point", "First reduction point (p+q+1)/2", cmd_reduction_point);
  weight_opt(reduction);

  auto* unitary = command("unitary", "Unitarity of the highest weight module", cmd_unitary);
  weight_opt(unitary);

  auto* classify = command("classify-levels", "Induction levels grouped by infinitesimal character", cmd_classify_levels);
  classify->add_option("--n", f.n)->required();
  classify->add_option("--i", f.i)->required();
  classify->add_option("--inner", f.inner, "Inner weight, comma separated");
  classify->add_option("--upper", f.upper, "Explicit upper end of X (needed for i = n)");

  auto* report = command("report", "Hypothesis-checked decomposition report", cmd_report);
  weight_opt(report);
  report->add_option("--i", f.i)->required();
  report->add_option("--char", f.character, "Archimedean sign of the character, +1 or -1");

  auto* surj = command("surjectivity", "Siegel operator surjectivity hypotheses", cmd_surjectivity);
  weight_opt(surj);
  surj->add_option("--level", f.level, "Level N");
  surj->add_option("--primes", f.primes, "Level as a list of primes");

  auto satake_opts = [&](CLI::App* s) {
    s->add_option("--m", f.m, "Number of Satake parameters");
    s->add_option("--satake", f.satake, "Parameter values, '*' for symbolic");
    s->add_option("--char", f.character, "Character value +1 or -1 (symbolic X when absent)");
  };
  auto* xi_cmd = command("xi", "Product of L-factors xi_i", cmd_xi);
  xi_cmd->add_option("--i", f.i)->required();
  xi_cmd->add_option("--shift", f.shift);
  satake_opts(xi_cmd);

  auto* gk = command("gk", "Gindikin-Karpelevich ratio", cmd_gk);
  gk->add_option("--i", f.i)->required();
  gk->add_option("--j", f.j)->required();
  satake_opts(gk);

  auto* eval = command("eval", "Evaluate xi_i, or the ratio when --j is given", cmd_eval);
  eval->add_option("--i", f.i)->required();
  eval->add_option("--j", f.j);
  eval->add_option("--at", f.at, "Assignment, e.g. X=1,Q=2,T=1/16")->required();
  satake_opts(eval);

  auto* fourier = command("fourier", "Predicates on an expansion file or a single matrix", cmd_fourier);
  fourier->add_option("--file", f.file, "Expansion file");
  fourier->add_option("--sym", f.h, "Symmetric matrix, rows separated by ';'");
  fourier->add_option("--a", f.matrix, "GL_n matrix for gl_transform / slash invariance");
  fourier->add_option("--j", f.j);
  weight_opt(fourier, false);

  auto* phi = command("phi", "Siegel operator on an expansion file", cmd_phi);
  phi->add_option("--file", f.file)->required();

  auto grid_opts = [&](CLI::App* s) {
    s->add_option("--n", f.n)->required();
    s->add_option("--d", f.d);
    s->add_option("--t", f.t, "Uniform degree bound");
    s->add_option("--bounds", f.bounds, "Per place upper-triangle bounds, places separated by ';'");
  };
  auto* grid = command("grid", "Positive definite evaluation grid", cmd_grid);
  grid_opts(grid);

  auto* pit = command("pit", "Polynomial identity test on the grid", cmd_pit);
  grid_opts(pit);
  pit->add_option("--poly", f.poly, "Polynomial in x_i_j_k")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      Output o = handler(f, *sub);
      if (json) {
        out << Json{{"command", sub->get_name()}, {"result", std::move(o.result)}}.dump(2) << "\n";
      } else {
        out << o.table;
      }
      return kExitOk;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const Error& e) {
      if (json) out << Json{{"command", sub->get_name()}, {"error", e.name()}, {"message", e.what()}}.dump(2) << "\n";
      err << "error: " << e.name() << ": " << e.what() << "\n";
      return kExitDomain;
    }
  }
  err << "usage error: no command given\n";
  return kExitUsage;
}

}  // namespace sympl
