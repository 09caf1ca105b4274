#include "sympl/json.hpp"

#include "sympl/error.hpp"

namespace nlohmann {

using sympl::Rational;
using sympl::RationalVector;

void adl_serializer<sympl::Weight>::to_json(json& j, const sympl::Weight& w) { j = w.rows(); }

sympl::Weight adl_serializer<sympl::Weight>::from_json(const json& j) {
  return sympl::Weight(j.get<std::vector<RationalVector>>());
}

void adl_serializer<sympl::WeylElement>::to_json(json& j, const sympl::WeylElement& w) {
  j = json{{"perm", w.perm()}, {"signs", w.signs()}};
}

sympl::WeylElement adl_serializer<sympl::WeylElement>::from_json(const json& j) {
  return {j.at("perm").get<std::vector<std::size_t>>(), j.at("signs").get<std::vector<int>>()};
}

void adl_serializer<sympl::Monomial>::to_json(json& j, const sympl::Monomial& m) {
  j = json::array();
  for (const auto& [s, e] : m.powers()) j.push_back(json::array({s, e}));
}

sympl::Monomial adl_serializer<sympl::Monomial>::from_json(const json& j) {
  sympl::Monomial m;
  for (const auto& p : j) m = m * sympl::Monomial::symbol(p.at(0).get<std::string>(), p.at(1).get<int>());
  return m;
}

void adl_serializer<sympl::LaurentPoly>::to_json(json& j, const sympl::LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(json{{"coefficient", c}, {"monomial", m}});
  j = json{{"text", p.to_string()}, {"terms", std::move(terms)}};
}

sympl::LaurentPoly adl_serializer<sympl::LaurentPoly>::from_json(const json& j) {
  sympl::LaurentPoly p;
  for (const auto& t : j.at("terms")) {
    p += sympl::LaurentPoly(t.at("monomial").get<sympl::Monomial>(), t.at("coefficient").get<Rational>());
  }
  return p;
}

void adl_serializer<sympl::RationalFunction>::to_json(json& j, const sympl::RationalFunction& f) {
  j = json{{"text", f.to_string()},
           {"scale", f.scale()},
           {"numerator", f.numerator_factors()},
           {"denominator", f.denominator_factors()}};
}

sympl::RationalFunction adl_serializer<sympl::RationalFunction>::from_json(const json& j) {
  return {j.at("numerator").get<std::vector<sympl::LaurentPoly>>(),
          j.at("denominator").get<std::vector<sympl::LaurentPoly>>(), j.at("scale").get<Rational>()};
}

void adl_serializer<sympl::Matrix>::to_json(json& j, const sympl::Matrix& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(std::move(row));
  }
}

sympl::Matrix adl_serializer<sympl::Matrix>::from_json(const json& j) {
  const auto rows = j.get<std::vector<RationalVector>>();
  if (rows.empty()) return {};
  RationalVector data;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw sympl::Error(sympl::Errc::Parse, "ragged matrix in JSON");
    data.insert(data.end(), r.begin(), r.end());
  }
  return {rows.size(), rows.front().size(), std::move(data)};
}

void adl_serializer<sympl::SymMatrix>::to_json(json& j, const sympl::SymMatrix& h) { j = h.matrix(); }

sympl::SymMatrix adl_serializer<sympl::SymMatrix>::from_json(const json& j) {
  return sympl::SymMatrix(j.get<sympl::Matrix>());
}

void adl_serializer<sympl::FourierExpansion>::to_json(json& j, const sympl::FourierExpansion& f) {
  json support = json::array();
  for (const auto& [h, c] : f.support()) support.push_back(json{{"h", h}, {"coefficient", c}});
  j = json{{"n", f.size()}, {"k", f.weight()}, {"support", std::move(support)}};
}

sympl::FourierExpansion adl_serializer<sympl::FourierExpansion>::from_json(const json& j) {
  sympl::FourierExpansion f(j.at("n").get<std::size_t>(), j.at("k").get<std::int64_t>());
  for (const auto& t : j.at("support")) f.add(t.at("h").get<sympl::SymMatrix>(), t.at("coefficient").get<Rational>());
  return f;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> json_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

void adl_serializer<sympl::DecompositionReport>::to_json(json& j, const sympl::DecompositionReport& r) {
  j = json{{"n", r.n},
           {"d", r.d},
           {"i", r.i},
           {"weight", r.weight},
           {"hypotheses", r.hypotheses},
           {"parity_class", optional_json(r.parity_class)},
           {"exponent", optional_json(r.exponent)},
           {"inner_weights", r.inner_weights},
           {"character_sign", optional_json(r.character_sign)},
           {"assumptions", r.assumptions},
           {"conclusion", r.conclusion}};
}

sympl::DecompositionReport adl_serializer<sympl::DecompositionReport>::from_json(const json& j) {
  sympl::DecompositionReport r(j.at("weight").get<sympl::Weight>());
  r.n = j.at("n").get<std::size_t>();
  r.d = j.at("d").get<std::size_t>();
  r.i = j.at("i").get<std::size_t>();
  r.hypotheses = j.at("hypotheses").get<std::vector<sympl::HypothesisCheck>>();
  r.parity_class = json_optional<int>(j.at("parity_class"));
  r.exponent = json_optional<Rational>(j.at("exponent"));
  r.inner_weights = j.at("inner_weights").get<std::vector<RationalVector>>();
  r.character_sign = json_optional<int>(j.at("character_sign"));
  r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  r.conclusion = j.at("conclusion").get<sympl::Conclusion>();
  return r;
}

}  // namespace nlohmann

namespace sympl {

void to_json(Json& j, const InfChar& c) { j = Json{{"n", c.n}, {"d", c.d}, {"canonical", c.canonical}}; }

void from_json(const Json& j, InfChar& c) {
  j.at("n").get_to(c.n);
  j.at("d").get_to(c.d);
  j.at("canonical").get_to(c.canonical);
}

void to_json(Json& j, const CharacterDatum& c) {
  j = Json{{"parity", c.parity}, {"exponent", c.exponent}, {"text", c.to_string()}};
}

void from_json(const Json& j, CharacterDatum& c) {
  c = CharacterDatum(j.at("parity").get<int>(), j.at("exponent").get<Rational>());
}

void to_json(Json& j, const InductionDatum& d) {
  j = Json{{"n", d.n}, {"i", d.i}, {"character", d.character}, {"inner_weight", d.inner_weight}};
}

void from_json(const Json& j, InductionDatum& d) {
  j.at("n").get_to(d.n);
  j.at("i").get_to(d.i);
  j.at("character").get_to(d.character);
  j.at("inner_weight").get_to(d.inner_weight);
}

void to_json(Json& j, const EhwProfile& p) { j = Json{{"base", p.base}, {"p", p.p}, {"q", p.q}, {"r", p.r}}; }

void from_json(const Json& j, EhwProfile& p) {
  j.at("base").get_to(p.base);
  j.at("p").get_to(p.p);
  j.at("q").get_to(p.q);
  j.at("r").get_to(p.r);
}

void to_json(Json& j, const OrbitClassification& c) {
  j = Json{{"n", c.n}, {"i", c.i}, {"x", c.x}, {"y", c.y}, {"classes", c.classes}, {"bijective", c.bijective}};
}

void from_json(const Json& j, OrbitClassification& c) {
  j.at("n").get_to(c.n);
  j.at("i").get_to(c.i);
  j.at("x").get_to(c.x);
  j.at("y").get_to(c.y);
  j.at("classes").get_to(c.classes);
  j.at("bijective").get_to(c.bijective);
}

void to_json(Json& j, const HypothesisCheck& h) { j = Json{{"name", h.name}, {"passed", h.passed}}; }

void from_json(const Json& j, HypothesisCheck& h) {
  j.at("name").get_to(h.name);
  j.at("passed").get_to(h.passed);
}

void to_json(Json& j, const SurjectivityVerdict& v) {
  j = Json{{"tag", v.tag}, {"failed_conditions", v.failed_conditions}};
}

void from_json(const Json& j, SurjectivityVerdict& v) {
  j.at("tag").get_to(v.tag);
  j.at("failed_conditions").get_to(v.failed_conditions);
}

void to_json(Json& j, const SatakeDatum& s) {
  Json params = Json::array();
  for (const auto& p : s.params) params.push_back(p ? Json(*p) : Json(nullptr));
  j = Json{{"params", std::move(params)}, {"character", s.character ? Json(*s.character) : Json(nullptr)}};
}

void from_json(const Json& j, SatakeDatum& s) {
  s.params.clear();
  for (const auto& p : j.at("params")) {
    s.params.push_back(p.is_null() ? std::nullopt : std::optional<Rational>(p.get<Rational>()));
  }
  const auto& c = j.at("character");
  s.character = c.is_null() ? std::nullopt : std::optional<int>(c.get<int>());
}

void to_json(Json& j, const DegreeBounds& b) { j = Json{{"n", b.n}, {"per_place", b.per_place}}; }

void from_json(const Json& j, DegreeBounds& b) {
  j.at("n").get_to(b.n);
  j.at("per_place").get_to(b.per_place);
}

void to_json(Json& j, const GridDeviation& g) {
  j = Json{{"place", g.place},
           {"literal_offset", g.literal_offset},
           {"applied_offset", g.applied_offset},
           {"witness", g.witness}};
}

void from_json(const Json& j, GridDeviation& g) {
  j.at("place").get_to(g.place);
  j.at("literal_offset").get_to(g.literal_offset);
  j.at("applied_offset").get_to(g.applied_offset);
  g.witness = j.at("witness").get<SymMatrix>();
}

void to_json(Json& j, const PdGrid& g) {
  j = Json{{"n", g.n},
           {"d", g.d},
           {"bounds", g.bounds},
           {"diagonal_offsets", g.diagonal_offsets},
           {"deviations", g.deviations},
           {"points", g.points}};
}

void from_json(const Json& j, PdGrid& g) {
  j.at("n").get_to(g.n);
  j.at("d").get_to(g.d);
  j.at("bounds").get_to(g.bounds);
  j.at("diagonal_offsets").get_to(g.diagonal_offsets);
  j.at("deviations").get_to(g.deviations);
  g.points = j.at("points").get<std::vector<std::vector<SymMatrix>>>();
}

namespace {

template <typename E, std::size_t N>
E enum_from(const Json& j, const E (&values)[N]) {
  const auto text = j.get<std::string>();
  for (E v : values) {
    if (to_string(v) == text) return v;
  }
  throw Error(Errc::Parse, "unknown enumerator '" + text + "'");
}

}  // namespace

void to_json(Json& j, VanishingVerdict v) { j = std::string(to_string(v)); }

void from_json(const Json& j, VanishingVerdict& v) {
  constexpr VanishingVerdict all[] = {VanishingVerdict::NearlyHolomorphicSpaceVanishes,
                                      VanishingVerdict::HolomorphicZeroOrConstant, VanishingVerdict::NoConclusion};
  v = enum_from(j, all);
}

void to_json(Json& j, Conclusion c) { j = std::string(to_string(c)); }

void from_json(const Json& j, Conclusion& c) {
  constexpr Conclusion all[] = {Conclusion::IsotypicDescription, Conclusion::VanishesWrongParity,
                                Conclusion::HypothesesFail};
  c = enum_from(j, all);
}

void to_json(Json& j, SurjectivityTag t) { j = std::string(to_string(t)); }

void from_json(const Json& j, SurjectivityTag& t) {
  constexpr SurjectivityTag all[] = {SurjectivityTag::SurjectiveByTheorem, SurjectivityTag::NotCovered};
  t = enum_from(j, all);
}

}  // namespace sympl
