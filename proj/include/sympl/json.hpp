#pragma once

#include <json.hpp>

#include "sympl/ehw.hpp"
#include "sympl/embeddings.hpp"
#include "sympl/fourier.hpp"
#include "sympl/lfactors.hpp"
#include "sympl/orbitclassify.hpp"
#include "sympl/poly.hpp"
#include "sympl/rational.hpp"
#include "sympl/weights.hpp"
#include "sympl/weyl.hpp"

// Rationals travel as "p/q" strings; everything else as plain objects.
// Field names are listed in docs/json-schemas.md.

namespace nlohmann {

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = q.get_str(); }
  static mpq_class from_json(const json& j) { return sympl::parse_rational(j.get<std::string>()); }
  static void from_json(const json& j, mpq_class& q) { q = from_json(j); }
};

template <>
struct adl_serializer<sympl::Weight> {
  static void to_json(json& j, const sympl::Weight& w);
  static sympl::Weight from_json(const json& j);
};

template <>
struct adl_serializer<sympl::WeylElement> {
  static void to_json(json& j, const sympl::WeylElement& w);
  static sympl::WeylElement from_json(const json& j);
};

template <>
struct adl_serializer<sympl::Monomial> {
  static void to_json(json& j, const sympl::Monomial& m);
  static sympl::Monomial from_json(const json& j);
};

template <>
struct adl_serializer<sympl::LaurentPoly> {
  static void to_json(json& j, const sympl::LaurentPoly& p);
  static sympl::LaurentPoly from_json(const json& j);
};

template <>
struct adl_serializer<sympl::RationalFunction> {
  static void to_json(json& j, const sympl::RationalFunction& f);
  static sympl::RationalFunction from_json(const json& j);
};

template <>
struct adl_serializer<sympl::Matrix> {
  static void to_json(json& j, const sympl::Matrix& m);
  static sympl::Matrix from_json(const json& j);
};

template <>
struct adl_serializer<sympl::SymMatrix> {
  static void to_json(json& j, const sympl::SymMatrix& h);
  static sympl::SymMatrix from_json(const json& j);
};

template <>
struct adl_serializer<sympl::FourierExpansion> {
  static void to_json(json& j, const sympl::FourierExpansion& f);
  static sympl::FourierExpansion from_json(const json& j);
};

template <>
struct adl_serializer<sympl::DecompositionReport> {
  static void to_json(json& j, const sympl::DecompositionReport& r);
  static sympl::DecompositionReport from_json(const json& j);
};

}  // namespace nlohmann

namespace sympl {

using Json = nlohmann::json;

void to_json(Json& j, const InfChar& c);
void from_json(const Json& j, InfChar& c);
void to_json(Json& j, const CharacterDatum& c);
void from_json(const Json& j, CharacterDatum& c);
void to_json(Json& j, const InductionDatum& d);
void from_json(const Json& j, InductionDatum& d);
void to_json(Json& j, const EhwProfile& p);
void from_json(const Json& j, EhwProfile& p);
void to_json(Json& j, const OrbitClassification& c);
void from_json(const Json& j, OrbitClassification& c);
void to_json(Json& j, const HypothesisCheck& h);
void from_json(const Json& j, HypothesisCheck& h);
void to_json(Json& j, const SurjectivityVerdict& v);
void from_json(const Json& j, SurjectivityVerdict& v);
void to_json(Json& j, const SatakeDatum& s);
void from_json(const Json& j, SatakeDatum& s);
void to_json(Json& j, const DegreeBounds& b);
void from_json(const Json& j, DegreeBounds& b);
void to_json(Json& j, const GridDeviation& g);
void from_json(const Json& j, GridDeviation& g);
void to_json(Json& j, const PdGrid& g);
void from_json(const Json& j, PdGrid& g);

void to_json(Json& j, VanishingVerdict v);
void from_json(const Json& j, VanishingVerdict& v);
void to_json(Json& j, Conclusion c);
void from_json(const Json& j, Conclusion& c);
void to_json(Json& j, SurjectivityTag t);
void from_json(const Json& j, SurjectivityTag& t);

}  // namespace sympl
